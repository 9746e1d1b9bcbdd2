#pragma once

#include "e8/verify/suites_common.hpp"

namespace e8::verify::wedge_suites {

using namespace e8::wedge_model;

/// Per-case generator, so inputs do not depend on how cases are split across workers.
inline Sampler case_sampler(std::uint64_t seed, std::size_t c)
{
    return Sampler(seed ^ (0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(c) + 1)));
}

template <Field S>
Coords<S> flat(const Matrix9<S>& m)
{
    return Coords<S>(m.data().begin(), m.data().end());
}

template <Field S>
Wedge<S> e3(std::size_t p)
{
    return Wedge<S>::basis_index(3, static_cast<int>(p));
}

template <Field S>
Coords<S> residual(const Element<S>& a, const Element<S>& b)
{
    return difference(coords(a), coords(b));
}

/// i^n
template <ComplexField S>
S i_power(int n)
{
    S z(1);
    for (int k = 0; k < ((n % 4) + 4) % 4; ++k) z *= imag_unit<S>();
    return z;
}

/// w4 written down directly as a diagonal map: with A4 = diag(1, i, ..., i), E_kl scales by
/// i^([k>1] - [l>1]), (0, e_I, 0) by i^|I - {1}| and (0, 0, e_I) by i^-|I - {1}|.
template <ComplexField S>
LinearMap<S> w4_diagonal()
{
    std::vector<S> d(kDim, S(1));
    for (std::size_t k = 0; k < 72; ++k) {
        const auto b = basis<Rational>(k);
        for (int r = 0; r < 9; ++r)
            for (int c = 0; c < 9; ++c)
                if (r != c && !b.D(r, c).is_zero()) d[k] = i_power<S>((r > 0) - (c > 0));
    }
    for (std::size_t p = 0; p < 84; ++p) {
        int n = 0;
        for (int j : subset_at(3, static_cast<int>(p))) n += j > 1;
        d[80 + p] = i_power<S>(n);
        d[164 + p] = i_power<S>(-n);
    }
    return LinearMap<S>::diagonal(d);
}

// ---- bookkeeping ----

template <Field S>
void run_dims(Report& rep)
{
    auto& t = rep.tally;
    const double tol = rep.spec.tolerance;
    t.check_bool(ix(0), binomial9(3) == 84, "Lambda^3 has " + std::to_string(binomial9(3)) + " basis elements");
    Echelon<Rational> gens(81);
    for (int g = 0; g < 80; ++g) {
        const auto m = sl9_generator<Rational>(g);
        gens.insert(std::vector<Rational>(m.data().begin(), m.data().end()));
    }
    t.check_bool(ix(1), gens.rank() == 80, "sl9 generators span " + std::to_string(gens.rank()));
    for (std::size_t k = 0; k < kDim; ++k) {
        const Coords<S> c = coords(basis<S>(k));
        t.check(ix(2, k), difference(c, unit_coords<S>(kDim, k)), tol);
        t.check(ix(3, k), residual(element(c), basis<S>(k)), tol);
    }
    // the derived algebra is everything
    const auto& table = structure_table();
    Echelon<Rational> span(kDim);
    for (std::size_t i = 0; i < kDim && span.rank() < kDim; ++i)
        for (std::size_t j = i + 1; j < kDim && span.rank() < kDim; ++j)
            if (!table(i, j).empty()) span.insert(dense_from_sparse(table(i, j), kDim));
    t.check_bool(ix(4), span.rank() == kDim, "brackets span " + std::to_string(span.rank()));
    rep.extra("sl9", std::to_string(gens.rank()));
    rep.extra("lambda3", std::to_string(binomial9(3)));
    rep.extra("dimension", std::to_string(kDim));
    rep.extra("bracket-span", std::to_string(span.rank()));
    rep.extra("structure-constants", std::to_string(table.nonzeros_upper()));
}

// ---- Killing form ----

/// ad-trace against 60(tr(D1 D2) + (u1, v2) + (u2, v1)) on pairs drawn from each of the nine block combinations.
template <Field S>
void run_killing_vs_adtrace(Report& rep)
{
    const auto& spec = rep.spec;
    const auto& table = wedge_model::table<S>();
    std::vector<std::array<std::size_t, 2>> pairs;
    if (spec.mode == "exhaustive") {
        for (std::size_t i = 0; i < kDim; ++i)
            for (std::size_t j = 0; j < kDim; ++j) pairs.push_back({i, j});
    } else {
        const std::size_t lo[3] = {0, 80, 164}, len[3] = {80, 84, 84};
        const std::size_t per = std::max<std::size_t>(1, (spec.samples + 8) / 9);
        Sampler s(spec.seed);
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) {
                std::set<std::array<std::size_t, 2>> seen;
                while (seen.size() < per) {
                    std::array<std::size_t, 2> p{lo[a] + s.index(len[a]), lo[b] + s.index(len[b])};
                    if (seen.insert(p).second) pairs.push_back(p);
                }
            }
    }
    rep.tally = sweep(pairs.size(), spec.workers, [&](std::size_t c, Tally& t) {
        const auto [i, j] = pairs[c];
        t.check_scalar(ix(i, j), S(killing_adtrace(table, i, j) - killing(basis<S>(i), basis<S>(j))), spec.tolerance);
    });
    // the constant itself, read off from tr(ad x ad y) / (tr(D1 D2) + ...) on the first pair where it is defined
    for (const auto& [i, j] : pairs) {
        const auto a = basis<S>(i), b = basis<S>(j);
        const S raw = (a.D * b.D).trace() + inner(a.u, b.v) + inner(b.u, a.v);
        if (!negligible(raw, spec.tolerance)) {
            rep.extra("killing-constant", literal(S(killing_adtrace(table, i, j) / raw)));
            break;
        }
    }
    rep.extra("pairs", std::to_string(pairs.size()));
}

/// B([x, y], z) + B(y, [x, z]) = 0 on sampled ordered basis triples.
template <Field S>
void run_ad_invariance(Report& rep)
{
    const auto& spec = rep.spec;
    const auto triples = sample_triples(spec.seed, spec.samples, kDim);
    rep.tally = sweep(triples.size(), spec.workers, [&](std::size_t c, Tally& t) {
        auto [i, j, k] = triples[c];
        Sampler s = case_sampler(spec.seed, c);
        // any of the six orders
        std::array<std::size_t, 3> p{i, j, k};
        std::swap(p[0], p[s.index(3)]);
        std::swap(p[1], p[1 + s.index(2)]);
        const auto x = basis<S>(p[0]), y = basis<S>(p[1]), z = basis<S>(p[2]);
        t.check_scalar(ix(p[0], p[1], p[2]), S(killing(bracket(x, y), z) + killing(y, bracket(x, z))), spec.tolerance);
    });
}

// ---- exterior algebra ----

/// ** = id on Lambda^3 and (*u, v) = (u ^ v, e_1...9) in every degree.
template <Field S>
void run_star_involution(Report& rep)
{
    auto& t = rep.tally;
    const double tol = rep.spec.tolerance;
    for (std::size_t p = 0; p < 84; ++p) t.check(ix(3, p), (hodge_star(hodge_star(e3<S>(p))) - e3<S>(p)).coeffs(), tol);
    const Wedge<S> top = Wedge<S>::basis_index(9, 0);
    for (int k = 0; k <= 9; ++k)
        for (int a = 0; a < binomial9(k); ++a) {
            const auto u = Wedge<S>::basis_index(k, a), su = hodge_star(u);
            for (int b = 0; b < binomial9(9 - k); ++b) {
                const auto v = Wedge<S>::basis_index(9 - k, b);
                t.check_scalar(ix(k, a, b), S(inner(su, v) - inner(wedge(u, v), top)), tol);
            }
        }
}

/// u ^ v = (-1)^kl v ^ u on all basis pairs, plus sampled associativity.
template <Field S>
void run_wedge_graded(Report& rep)
{
    const auto& spec = rep.spec;
    Tally graded = sweep(10, spec.workers, [&](std::size_t kk, Tally& t) {
        const int k = static_cast<int>(kk);
        for (int l = 0; k + l <= 9; ++l) {
            const S sign = (k * l) % 2 == 0 ? S(1) : S(-1);
            for (int a = 0; a < binomial9(k); ++a)
                for (int b = 0; b < binomial9(l); ++b) {
                    const auto u = Wedge<S>::basis_index(k, a), v = Wedge<S>::basis_index(l, b);
                    t.check(ix(k, l, a, b), (wedge(u, v) - sign * wedge(v, u)).coeffs(), spec.tolerance);
                }
        }
    });
    Tally assoc = sweep(spec.samples, spec.workers, [&](std::size_t c, Tally& t) {
        Sampler s = case_sampler(spec.seed, c);
        const int k = static_cast<int>(s.index(10));
        const int l = static_cast<int>(s.index(static_cast<std::uint64_t>(10 - k)));
        const int m = static_cast<int>(s.index(static_cast<std::uint64_t>(10 - k - l)));
        auto pick = [&](int deg) {
            Wedge<S> w(deg);
            for (int n = 0; n < 2; ++n) w[s.index(w.size())] += lift<S>(random_nonzero_gaussian(s));
            return w;
        };
        const auto u = pick(k), v = pick(l), w = pick(m);
        t.check(ix(c, k, l, m), (wedge(wedge(u, v), w) - wedge(u, wedge(v, w))).coeffs(), spec.tolerance);
    });
    rep.tally = graded;
    rep.tally.merge(assoc);
}

/// (Du, v) = (u, tD v) and *(Du) = -tD(*u) for the 80 generators and all basis u, v.
template <Field S>
void run_sl9_transpose(Report& rep)
{
    const auto& spec = rep.spec;
    rep.tally = sweep(80, spec.workers, [&](std::size_t g, Tally& t) {
        const auto d = sl9_generator<S>(static_cast<int>(g)), dt = d.transpose();
        std::vector<Wedge<S>> du(84), dtv(84);
        for (std::size_t a = 0; a < 84; ++a) {
            du[a] = sl9_act(d, e3<S>(a));
            dtv[a] = sl9_act(dt, e3<S>(a));
        }
        for (std::size_t a = 0; a < 84; ++a)
            for (std::size_t b = 0; b < 84; ++b) t.check_scalar(ix(0, g, a, b), S(du[a][b] - dtv[b][a]), spec.tolerance);
        for (std::size_t a = 0; a < 84; ++a)
            t.check(ix(1, g, a), (hodge_star(du[a]) + sl9_act(dt, hodge_star(e3<S>(a)))).coeffs(), spec.tolerance);
    });
}

// ---- cross product ----

/// tr(u x v) = 0 on all basis pairs; the tabulated product agrees with the definition.
template <Field S>
void run_cross_trace(Report& rep)
{
    const auto& spec = rep.spec;
    rep.tally = sweep(84, spec.workers, [&](std::size_t a, Tally& t) {
        for (std::size_t b = 0; b < 84; ++b) {
            const auto r = cross_reference(e3<S>(a), e3<S>(b));
            t.check_scalar(ix(0, a, b), r.trace(), spec.tolerance);
            t.check(ix(1, a, b), flat(r - cross(e3<S>(a), e3<S>(b))), spec.tolerance);
        }
    });
}

/// t(u x v) = v x u on all basis pairs and on sampled complex pairs.
template <Field S>
void run_cross_transpose(Report& rep)
{
    const auto& spec = rep.spec;
    Tally basis_pairs = sweep(84, spec.workers, [&](std::size_t a, Tally& t) {
        for (std::size_t b = 0; b < 84; ++b)
            t.check(ix(0, a, b), flat(cross_reference(e3<S>(a), e3<S>(b)).transpose() - cross_reference(e3<S>(b), e3<S>(a))),
                    spec.tolerance);
    });
    Tally sampled = sweep(spec.samples, spec.workers, [&](std::size_t c, Tally& t) {
        Sampler s = case_sampler(spec.seed, c);
        const auto u = random_wedge3<S>(s), v = random_wedge3<S>(s);
        t.check(ix(1, c), flat(cross(u, v).transpose() - cross(v, u)), spec.tolerance);
    });
    rep.tally = basis_pairs;
    rep.tally.merge(sampled);
}

/// [D, u x v] = Du x v + u x (-tD v)
template <Field S>
void run_cross_equivariance(Report& rep)
{
    const auto& spec = rep.spec;
    rep.tally = sweep(spec.samples, spec.workers, [&](std::size_t c, Tally& t) {
        Sampler s = case_sampler(spec.seed, c);
        const auto d = random_traceless<S>(s);
        const auto u = random_wedge3<S>(s), v = random_wedge3<S>(s);
        const auto lhs = commutator(d, cross(u, v));
        const auto rhs = cross(sl9_act(d, u), v) + cross(u, -sl9_act(d.transpose(), v));
        t.check(ix(c), flat(lhs - rhs), spec.tolerance);
    });
}

/// tau(u x v) = tau u x tau v
template <Field S>
void run_cross_conjugation(Report& rep)
{
    const auto& spec = rep.spec;
    rep.tally = sweep(spec.samples, spec.workers, [&](std::size_t c, Tally& t) {
        Sampler s = case_sampler(spec.seed, c);
        const auto u = random_wedge3<S>(s), v = random_wedge3<S>(s);
        t.check(ix(c), flat(cross(u, v).conj() - cross(u.conj(), v.conj())), spec.tolerance);
    });
}

/// tr(D (u x v)) = (Du, v)
template <Field S>
void run_cross_trace_pairing(Report& rep)
{
    const auto& spec = rep.spec;
    rep.tally = sweep(spec.samples, spec.workers, [&](std::size_t c, Tally& t) {
        Sampler s = case_sampler(spec.seed, c);
        const auto d = random_traceless<S>(s);
        const auto u = random_wedge3<S>(s), v = random_wedge3<S>(s);
        t.check_scalar(ix(c), S((d * cross(u, v)).trace() - inner(sl9_act(d, u), v)), spec.tolerance);
    });
}

/// u x *(v ^ w) + v x *(w ^ u) + w x *(u ^ v) = 0
template <Field S>
void run_cross_cyclic(Report& rep)
{
    const auto& spec = rep.spec;
    const auto triples = sample_triples(spec.seed, spec.samples, 84);
    rep.tally = sweep(triples.size(), spec.workers, [&](std::size_t c, Tally& t) {
        const auto [a, b, d] = triples[c];
        const auto u = e3<S>(a), v = e3<S>(b), w = e3<S>(d);
        const auto r = cross(u, hodge_star(wedge(v, w))) + cross(v, hodge_star(wedge(w, u))) + cross(w, hodge_star(wedge(u, v)));
        t.check(ix(a, b, d), flat(r), spec.tolerance);
    });
}

/// (u x w) v - (v x w) u + *(*(u ^ v) ^ w) = 0
template <Field S>
void run_cross_action(Report& rep)
{
    const auto& spec = rep.spec;
    const auto triples = sample_triples(spec.seed, spec.samples, 84);
    rep.tally = sweep(triples.size(), spec.workers, [&](std::size_t c, Tally& t) {
        Sampler s = case_sampler(spec.seed, c);
        std::array<std::size_t, 3> p = triples[c];
        std::swap(p[0], p[s.index(3)]);
        std::swap(p[1], p[1 + s.index(2)]);
        const auto u = e3<S>(p[0]), v = e3<S>(p[1]), w = e3<S>(p[2]);
        const auto r = sl9_act(cross(u, w), v) - sl9_act(cross(v, w), u) + hodge_star(wedge(hodge_star(wedge(u, v)), w));
        t.check(ix(p[0], p[1], p[2]), r.coeffs(), spec.tolerance);
    });
}

// ---- compact form ----

template <Field S>
void run_hermitian(Report& rep)
{
    const auto& spec = rep.spec;
    Tally basis_part;
    for (std::size_t k = 0; k < kDim; ++k) {
        const auto b = basis<S>(k);
        const S h = hermitian(b, b);
        basis_part.check_bool(ix(0, k), positive_real(h, spec.tolerance), "<b, b> = " + literal(h));
    }
    Tally sampled = sweep(spec.samples, spec.workers, [&](std::size_t c, Tally& t) {
        Sampler s = case_sampler(spec.seed, c);
        const auto a = random_wedge_element<S>(s), b = random_wedge_element<S>(s);
        const S hab = hermitian(a, b);
        t.check_scalar(ix(1, c), S(hab - hermitian_expanded(a, b)), spec.tolerance);
        t.check_scalar(ix(2, c), S(hab - tau(hermitian(b, a))), spec.tolerance);
        const S haa = hermitian(a, a);
        t.check_bool(ix(3, c), positive_real(haa, spec.tolerance), "<R, R> = " + literal(haa));
    });
    rep.tally = basis_part;
    rep.tally.merge(sampled);
}

/// tau lambda~ is an involution; the real basis lies in the compact form, which is closed under the bracket.
inline void run_compact_closure(Report& rep)
{
    const auto& spec = rep.spec;
    auto& t = rep.tally;
    Echelon<Rational> span(kDim);
    for (std::size_t k = 0; k < kDim; ++k) {
        const auto b = basis<Gaussian>(k);
        t.check(ix(0, k), residual(tau_lambda_tilde(tau_lambda_tilde(b)), b), 0);
        const auto r = real_form_basis(k);
        t.check_bool(ix(1, k), in_compact_form(r), "real basis element outside the compact form");
        if (in_compact_form(r)) {
            auto x = to_real(r);
            t.check(ix(2, k), difference(x, unit_coords<Rational>(kDim, k)), 0);
            span.insert(std::move(x));
        }
    }
    rep.extra("real-dimension", std::to_string(span.rank()));
    t.check_bool(ix(3), span.rank() == kDim, "real span " + std::to_string(span.rank()));
    Tally closure;
    if (spec.mode == "exhaustive") {
        closure = sweep(kDim, spec.workers, [&](std::size_t i, Tally& tt) {
            for (std::size_t j = i + 1; j < kDim; ++j)
                tt.check_bool(ix(4, i, j), in_compact_form(bracket(real_form_basis(i), real_form_basis(j))), "bracket leaves the compact form");
        });
    } else {
        const auto pairs = sample_pairs(spec.seed, spec.samples, kDim);
        closure = sweep(pairs.size(), spec.workers, [&](std::size_t c, Tally& tt) {
            const auto [i, j] = pairs[c];
            tt.check_bool(ix(4, i, j), in_compact_form(bracket(real_form_basis(i), real_form_basis(j))), "bracket leaves the compact form");
        });
    }
    t.merge(closure);
}

// ---- w4 ----

template <ComplexField S>
LinearMap<S> w4_map()
{
    return matrix_of<S>([](const Element<S>& r) { return w4_apply(r); });
}

template <ComplexField S>
void run_automorphism_w4(Report& rep)
{
    const auto& spec = rep.spec;
    const auto& table = wedge_model::table<S>();
    const auto alpha = w4_map<S>();
    rep.tally = spec.mode == "exhaustive" ? automorphism_exhaustive(table, alpha, spec, 0)
                                          : automorphism_sampled(table, alpha, spec, spec.samples, spec.seed, 0);
    std::vector<Element<S>> b, wb;
    for (std::size_t k = 0; k < kDim; ++k) {
        b.push_back(basis<S>(k));
        wb.push_back(w4_apply(b.back()));
        rep.tally.check(ix(1, k), residual(w4_apply(tau_lambda_tilde(b[k])), tau_lambda_tilde(wb[k])), spec.tolerance);
    }
    Tally iso = sweep(kDim, spec.workers, [&](std::size_t i, Tally& t) {
        for (std::size_t j = i; j < kDim; ++j) {
            t.check_scalar(ix(2, i, j), S(killing(wb[i], wb[j]) - killing(b[i], b[j])), spec.tolerance);
            t.check_scalar(ix(3, i, j), S(hermitian(wb[i], wb[j]) - hermitian(b[i], b[j])), spec.tolerance);
        }
    });
    rep.tally.merge(iso);
}

/// phi_w4(A) for random invertible block-diagonal A: automorphism, commutes with w4.
template <ComplexField S>
void run_automorphism_phi_w4(Report& rep)
{
    const auto& spec = rep.spec;
    const auto& table = wedge_model::table<S>();
    const auto w4 = w4_map<S>();
    Sampler s(spec.seed);
    constexpr int kMatrices = 4;
    for (int m = 0; m < kMatrices; ++m) {
        const auto a = random_block_matrix<S>(s);
        const auto alpha = matrix_of<S>([&](const Element<S>& r) { return phi_w4_apply(a, r); });
        const std::size_t share = std::max<std::size_t>(1, spec.samples / kMatrices);
        rep.tally.merge(spec.mode == "exhaustive" ? automorphism_exhaustive(table, alpha, spec, m)
                                                  : automorphism_sampled(table, alpha, spec, share, spec.seed + m + 1, m));
        check_maps_equal(rep.tally, alpha.compose(w4), w4.compose(alpha), spec.tolerance, 100 + m);
    }
}

template <ComplexField S>
void run_order_w4(Report& rep)
{
    const auto& spec = rep.spec;
    const auto alpha = w4_map<S>();
    const auto id = LinearMap<S>::identity(kDim);
    int order = 0;
    LinearMap<S> p = alpha;
    for (int k = 1; k <= 8; ++k, p = alpha.compose(p))
        if (p.first_difference(id, spec.tolerance) == kDim) {
            order = k;
            break;
        }
    rep.extra("order", order ? std::to_string(order) : "none up to 8");
    check_maps_equal(rep.tally, alpha.power(4), id, spec.tolerance, 4);
    rep.tally.check_bool(ix(2), alpha.power(2).first_difference(id, spec.tolerance) != kDim, "w4^2 is the identity");
}

/// Fixed subalgebras of the compact form: w4 (with its expected shape), w4^2 and id.
inline void run_fixed_dim(Report& rep)
{
    const auto& a = rep.spec.automorphism;
    std::function<Element<Gaussian>(const Element<Gaussian>&)> alpha;
    std::size_t expected = 0;
    if (a == "w4") {
        alpha = [](const Element<Gaussian>& r) { return w4_apply(r); };
        expected = 64;
    } else if (a == "w4-squared") {
        alpha = [](const Element<Gaussian>& r) { return w4_apply(w4_apply(r)); };
        expected = 120;
    } else {
        alpha = [](const Element<Gaussian>& r) { return r; };
        expected = 248;
    }
    const auto fixed = fixed_subalgebra(alpha);
    rep.extra("dimension", std::to_string(fixed.size()));
    rep.tally.check_bool(ix(0), fixed.size() == expected,
                         "dimension " + std::to_string(fixed.size()) + ", expected " + std::to_string(expected));
    for (std::size_t k = 0; k < fixed.size(); ++k) {
        const auto& r = fixed[k];
        rep.tally.check(ix(1, k), residual(alpha(r), r), 0);
        rep.tally.check_bool(ix(2, k), in_compact_form(r), "fixed vector outside the compact form");
        if (a != "w4") continue;
        // (D, 0, 0) with D block-diagonal (1, 8)
        bool shape = r.u.is_zero() && r.v.is_zero();
        for (int j = 1; j < 9; ++j) shape = shape && r.D(0, j).is_zero() && r.D(j, 0).is_zero();
        rep.tally.check_bool(ix(3, k), shape, "fixed vector not of block shape: " + r.to_string());
    }
}

/// Elements that phi_w4 sends to the identity: cube roots of unity times E, the Z24 family through
/// embed_f, and A4 giving w4 itself.
template <ComplexField S>
void run_kernel_elements(Report& rep)
{
    const auto& spec = rep.spec;
    const auto id = LinearMap<S>::identity(kDim);
    auto phi = [](const Matrix9<S>& a) { return matrix_of<S>([&](const Element<S>& r) { return phi_w4_apply(a, r); }); };
    std::size_t count = 0;
    for (int k = 0; k < 3; ++k, ++count)
        check_maps_equal(rep.tally, phi(root_of_unity24<S>(8 * k) * Matrix9<S>::identity()), id, spec.tolerance, k);
    // (b, B) = (z^3k, z^-3k E), (z^(3k+1), z^(-3(k-5)) E), (z^(3k+2), z^(-3(k-2)) E), z = zeta_24
    const auto e8 = lower_identity<S>();
    for (int type = 0; type < 3; ++type)
        for (int k = 0; k < 8; ++k, ++count) {
            const int shift[3] = {0, -5, -2};
            const S b = root_of_unity24<S>(3 * k + type);
            const S c = root_of_unity24<S>(((-3 * (k + shift[type])) % 24 + 24) % 24);
            const auto a = embed_f(b, c * e8);
            const long long tag = 10 + 8 * type + k;
            rep.tally.check_scalar(ix(tag), S(a.det() - S(1)), spec.tolerance);
            check_maps_equal(rep.tally, phi(a), id, spec.tolerance, tag);
        }
    check_maps_equal(rep.tally, phi(a4<S>()), w4_diagonal<S>(), spec.tolerance, 99);
    rep.extra("kernel-elements", std::to_string(count));
}

}  // namespace e8::verify::wedge_suites
