#pragma once

#include "e8/verify/suites_common.hpp"

namespace e8::verify::freudenthal_suites {

using namespace e8::freudenthal;

template <Field S>
Coords<S> freud_coords(const Freud<S>& p)
{
    return Coords<S>(p.begin(), p.end());
}

template <Field S>
Coords<S> freud_residual(const Freud<S>& a, const Freud<S>& b)
{
    return difference(freud_coords(a), freud_coords(b));
}

/// Unit thetas used for phi_upsilon: eight seeded Pythagorean units.
inline std::vector<Gaussian> sampled_thetas(std::uint64_t seed, std::size_t n = 8)
{
    Sampler s(seed);
    std::vector<Gaussian> out;
    for (std::size_t k = 0; k < n; ++k) out.push_back(random_unit_gaussian(s));
    return out;
}

template <ComplexField S>
LinearMap<S> upsilon4_map()
{
    return matrix_of<S>([](const Element<S>& e) { return upsilon4_apply(e); });
}

template <Field S>
LinearMap<S> upsilon_map()
{
    return matrix_of<S>([](const Element<S>& e) { return upsilon_apply(e); });
}

template <Field S>
LinearMap<S> mu4_map()
{
    return matrix_of<S>([](const Element<S>& e) { return mu4_apply(e); });
}

template <ComplexField S>
LinearMap<S> phi_upsilon_map(const S& theta)
{
    return matrix_of<S>([&](const Element<S>& e) { return phi_upsilon_apply(theta, e); });
}

template <ComplexField S>
LinearMap<S> named_map(const std::string& name)
{
    if (name == "upsilon4") return upsilon4_map<S>();
    if (name == "mu4") return mu4_map<S>();
    if (name == "upsilon") return upsilon_map<S>();
    if (name == "id") return LinearMap<S>::identity(kDim);
    throw UsageError("unknown Freudenthal-model automorphism: " + name);
}

// ---- bookkeeping ----

/// Span ranks 52 / 78 / 133 from the bootstrap, the symplectic invariance of e7, the e7 slice of the
/// e8 table, and the span of all brackets.
inline void run_dims(Report& rep)
{
    auto& t = rep.tally;
    const E7& e7 = E7::get();
    const auto& r = e7.ranks();
    t.check_bool(ix(0), r.f4 == 52, "f4 rank " + std::to_string(r.f4));
    t.check_bool(ix(1), r.e6 == kE6, "e6 rank " + std::to_string(r.e6));
    t.check_bool(ix(2), r.e7 == kE7, "e7 rank " + std::to_string(r.e7));

    const auto e = jordan_identity<Rational>();
    for (std::size_t k = 0; k < kJ; ++k) {
        const auto x = jordan_unit<Rational>(k), y = jordan_mul(e, x);
        t.check(ix(3, k), difference(Coords<Rational>(y.begin(), y.end()), Coords<Rational>(x.begin(), x.end())), 0);
    }
    const auto ee = freudenthal_cross(e, e);
    t.check(ix(4), difference(Coords<Rational>(ee.begin(), ee.end()), Coords<Rational>(e.begin(), e.end())), 0);

    Tally sym = sweep(kE7, rep.spec.workers, [&](std::size_t k, Tally& tt) {
        std::vector<Freud<Rational>> img(kP);
        for (std::size_t m = 0; m < kP; ++m) img[m] = e7.basis(k).apply<Rational>(freud_unit<Rational>(m));
        for (std::size_t m = 0; m < kP; ++m)
            for (std::size_t n = 0; n < kP; ++n)
                tt.check_scalar(ix(5, k, m, n),
                                Rational(symplectic(img[m], freud_unit<Rational>(n)) + symplectic(freud_unit<Rational>(m), img[n])), 0);
    });
    t.merge(sym);

    const auto& table = structure_table();
    for (std::size_t i = 0; i < kE7; ++i)
        for (std::size_t j = 0; j < kE7; ++j) t.check_bool(ix(6, i, j), table(i, j) == e7.table()(i, j), "e7 slice differs");

    Echelon<Rational> span(kDim);
    for (std::size_t i = 0; i < kDim && span.rank() < kDim; ++i)
        for (std::size_t j = i + 1; j < kDim && span.rank() < kDim; ++j)
            if (!table(i, j).empty()) span.insert(dense_from_sparse(table(i, j), kDim));
    t.check_bool(ix(7), span.rank() == kDim, "brackets span " + std::to_string(span.rank()));

    rep.extra("f4", std::to_string(r.f4));
    rep.extra("e6", std::to_string(r.e6));
    rep.extra("e7", std::to_string(r.e7));
    rep.extra("e8", std::to_string(span.rank()));
    rep.extra("structure-constants", std::to_string(table.nonzeros_upper()));
}

// ---- lambda, gamma ----

inline void run_lambda_gamma(Report& rep)
{
    auto& t = rep.tally;
    const E7& e7 = E7::get();
    std::vector<Freud<Rational>> u(kP), l(kP), g(kP);
    for (std::size_t m = 0; m < kP; ++m) {
        u[m] = freud_unit<Rational>(m);
        l[m] = lambda_apply(u[m]);
        g[m] = gamma_apply(u[m]);
    }
    for (std::size_t m = 0; m < kP; ++m) {
        t.check(ix(0, m), freud_residual(lambda_apply(l[m]), scale(Rational(-1), u[m])), 0);
        t.check(ix(1, m), freud_residual(gamma_apply(g[m]), u[m]), 0);
        t.check(ix(2, m), freud_residual(lambda_apply(g[m]), gamma_apply(l[m])), 0);
        t.check(ix(3, m), freud_residual(e7.lambda().apply<Rational>(u[m]), l[m]), 0);
        t.check(ix(4, m), freud_residual(e7.gamma().apply<Rational>(u[m]), g[m]), 0);
        for (std::size_t n = 0; n < kP; ++n) {
            const Rational s = symplectic(u[m], u[n]);
            t.check_scalar(ix(5, m, n), Rational(symplectic(l[m], l[n]) - s), 0);
            t.check_scalar(ix(6, m, n), Rational(symplectic(g[m], g[n]) - s), 0);
        }
    }
    const SpMat& lg = lambda_gamma();
    const SpMat lg_inv = Rational(-1) * lg;
    for (std::size_t k = 0; k < kE7; ++k)
        t.check_bool(ix(7, k), e7.try_coords(lg * e7.basis(k) * lg_inv).has_value(), "conjugate leaves e7");
    const auto fixed = e7_lambda_gamma_fixed();
    rep.extra("dimension", std::to_string(fixed.size()));
    t.check_bool(ix(8), fixed.size() == 63, "(e7)^lambda-gamma has dimension " + std::to_string(fixed.size()));
    for (std::size_t k = 0; k < fixed.size(); ++k)
        t.check(ix(9, k), difference(apply_rational(lambda_gamma_conjugation(), fixed[k]), fixed[k]), 0);
}

// ---- compact form ----

/// sigma is a conjugate-linear involutive automorphism with a 248-dimensional real form,
/// commuting with upsilon4, mu4 and upsilon.
inline void run_compact_closure(Report& rep)
{
    const auto& spec = rep.spec;
    const auto& sigma = sigma_map();
    const auto& table = freudenthal::table<Gaussian>();
    auto& t = rep.tally;
    check_maps_equal(t, sigma.compose(sigma), LinearMap<Gaussian>::identity(kDim), 0, 0);
    t.merge(spec.mode == "exhaustive" ? automorphism_exhaustive(table, sigma, spec, 1)
                                      : automorphism_sampled(table, sigma, spec, spec.samples, spec.seed, 1));
    const auto real = real_fixed_space({&sigma});
    rep.extra("real-dimension", std::to_string(real.size()));
    t.check_bool(ix(2), real.size() == kDim, "real form has dimension " + std::to_string(real.size()));
    long long tag = 3;
    for (const auto& name : {"upsilon4", "mu4", "upsilon"}) {
        const auto a = named_map<Gaussian>(name);
        check_maps_equal(t, sigma.compose(a), a.compose(sigma), 0, tag++);
    }
}

// ---- automorphisms ----

template <ComplexField S>
void run_automorphism(Report& rep)
{
    const auto& spec = rep.spec;
    const auto& table = freudenthal::table<S>();
    auto check = [&](const LinearMap<S>& alpha, long long tag) {
        rep.tally.merge(spec.mode == "exhaustive" ? automorphism_exhaustive(table, alpha, spec, tag)
                                                  : automorphism_sampled(table, alpha, spec, spec.samples, spec.seed + tag, tag));
    };
    const auto& a = spec.automorphism;
    if (a != "phi_upsilon") {
        check(named_map<S>(a), 0);
        return;
    }
    const auto thetas = sampled_thetas(spec.seed);
    std::vector<LinearMap<S>> maps;
    for (std::size_t k = 0; k < thetas.size(); ++k) {
        maps.push_back(phi_upsilon_map<S>(lift<S>(thetas[k])));
        check(maps.back(), static_cast<long long>(k));
    }
    rep.extra("thetas", std::to_string(thetas.size()));
    check_maps_equal(rep.tally, phi_upsilon_map<S>(imag_unit<S>()), upsilon4_map<S>(), spec.tolerance, 100);
    check_maps_equal(rep.tally, phi_upsilon_map<S>(S(-1)), upsilon_map<S>(), spec.tolerance, 101);
    check_maps_equal(rep.tally, phi_upsilon_map<S>(S(1)), LinearMap<S>::identity(kDim), spec.tolerance, 102);
    for (std::size_t k = 0; k + 1 < thetas.size(); ++k)
        check_maps_equal(rep.tally, maps[k].compose(maps[k + 1]), phi_upsilon_map<S>(lift<S>(thetas[k] * thetas[k + 1])),
                         spec.tolerance, static_cast<long long>(200 + k));
}

template <ComplexField S>
void run_order(Report& rep)
{
    const auto& spec = rep.spec;
    const auto alpha = named_map<S>(spec.automorphism);
    const auto id = LinearMap<S>::identity(kDim);
    int order = 0;
    LinearMap<S> p = alpha;
    for (int k = 1; k <= 8; ++k, p = alpha.compose(p))
        if (p.first_difference(id, spec.tolerance) == kDim) {
            order = k;
            break;
        }
    rep.extra("order", order ? std::to_string(order) : "none up to 8");
    const int want = spec.automorphism == "upsilon" ? 2 : 4;
    check_maps_equal(rep.tally, alpha.power(want), id, spec.tolerance, want);
    rep.tally.check_bool(ix(want / 2), alpha.power(want / 2).first_difference(id, spec.tolerance) != kDim,
                         spec.automorphism + "^" + std::to_string(want / 2) + " is the identity");
    if (want == 4) check_maps_equal(rep.tally, alpha.power(2), upsilon_map<S>(), spec.tolerance, 10);
}

/// Fixed subalgebra of the compact form; each vector re-checked against sigma and alpha.
inline void run_fixed_dim(Report& rep)
{
    const auto& a = rep.spec.automorphism;
    const std::size_t expected = a == "upsilon4" ? 134 : a == "mu4" ? 66 : a == "upsilon" ? 136 : 248;
    const auto alpha = named_map<Gaussian>(a);
    const auto fixed = fixed_subalgebra(alpha);
    rep.extra("dimension", std::to_string(fixed.size()));
    rep.tally.check_bool(ix(0), fixed.size() == expected,
                         "dimension " + std::to_string(fixed.size()) + ", expected " + std::to_string(expected));
    for (std::size_t k = 0; k < fixed.size(); ++k) {
        rep.tally.check(ix(1, k), difference(alpha(fixed[k]), fixed[k]), 0);
        rep.tally.check(ix(2, k), difference(sigma_map()(fixed[k]), fixed[k]), 0);
    }
}

/// phi_upsilon(-1) composed with the action of -1 in E7 (which is upsilon) is the identity.
template <ComplexField S>
void run_kernel_elements(Report& rep)
{
    const auto& spec = rep.spec;
    const auto minus = phi_upsilon_map<S>(S(-1));
    check_maps_equal(rep.tally, minus.compose(upsilon_map<S>()), LinearMap<S>::identity(kDim), spec.tolerance, 0);
    check_maps_equal(rep.tally, minus, upsilon_map<S>(), spec.tolerance, 1);
    rep.extra("kernel-elements", "1");
}

/// mu4 commutes with phi_upsilon(theta) and with ad of every element of (e7)^lambda-gamma.
template <ComplexField S>
void run_commutation(Report& rep)
{
    const auto& spec = rep.spec;
    const auto mu = mu4_map<S>();
    auto thetas = sampled_thetas(spec.seed);
    thetas.insert(thetas.begin(), Gaussian::i());
    for (std::size_t k = 0; k < thetas.size(); ++k) {
        const auto p = phi_upsilon_map<S>(lift<S>(thetas[k]));
        check_maps_equal(rep.tally, mu.compose(p), p.compose(mu), spec.tolerance, static_cast<long long>(k));
    }
    const auto fixed = e7_lambda_gamma_fixed();
    const auto& table = freudenthal::table<S>();
    Tally ads = sweep(fixed.size(), spec.workers, [&](std::size_t k, Tally& t) {
        Coords<S> x(kDim, S(0));
        for (std::size_t c = 0; c < kE7; ++c) x[c] = lift<S>(fixed[k][c]);
        const auto a = ad(table, x);
        check_maps_equal(t, mu.compose(a), a.compose(mu), spec.tolerance, static_cast<long long>(100 + k));
    });
    rep.tally.merge(ads);
    rep.extra("thetas", std::to_string(thetas.size()));
    rep.extra("ad-elements", std::to_string(fixed.size()));
}

}  // namespace e8::verify::freudenthal_suites
