#pragma once

#include <cmath>
#include <string>

#include "e8/freudenthal/model.hpp"
#include "e8/verify/random.hpp"
#include "e8/verify/report.hpp"
#include "e8/verify/sampler.hpp"
#include "e8/wedge/model.hpp"

namespace e8::verify {

template <class... T>
std::vector<long long> ix(T... v)
{
    return {static_cast<long long>(v)...};
}

template <Field S>
Coords<S> difference(Coords<S> a, const Coords<S>& b)
{
    for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
    return a;
}

/// Compares two maps on every basis vector, one case per vector.
template <Field S>
void check_maps_equal(Tally& t, const LinearMap<S>& a, const LinearMap<S>& b, double tolerance, long long tag = 0)
{
    if (a.conjugate_linear() != b.conjugate_linear()) {
        t.check_bool(ix(tag), false, "linear vs conjugate-linear");
        return;
    }
    for (std::size_t k = 0; k < a.dim(); ++k) t.check(ix(tag, k), difference(a.image_of_basis(k), b.image_of_basis(k)), tolerance);
}

/// alpha is a bracket automorphism on every ordered basis pair.
template <Field S>
Tally automorphism_exhaustive(const StructureTable<S>& table, const LinearMap<S>& alpha, const SuiteSpec& spec, long long tag = 0)
{
    const std::size_t n = table.dim();
    return sweep(n, spec.workers, [&](std::size_t i, Tally& t) {
        for (std::size_t j = 0; j < n; ++j) t.check(ix(tag, i, j), automorphism_residual(table, alpha, i, j), spec.tolerance);
    });
}

template <Field S>
Tally automorphism_sampled(const StructureTable<S>& table, const LinearMap<S>& alpha, const SuiteSpec& spec, std::size_t count,
                           std::uint64_t seed, long long tag = 0)
{
    const auto pairs = sample_pairs(seed, count, table.dim());
    return sweep(pairs.size(), spec.workers, [&](std::size_t c, Tally& t) {
        const auto [i, j] = pairs[c];
        t.check(ix(tag, i, j), automorphism_residual(table, alpha, i, j), spec.tolerance);
    });
}

/// Wraps what the generic suites need from a model.
struct WedgeModel {
    static constexpr const char* name = "wedge";
    static constexpr const char* basis_version = wedge_model::kBasisVersion;
    static constexpr int blocks = 3;

    template <Field S>
    static const StructureTable<S>& table()
    {
        return wedge_model::table<S>();
    }

    /// [b_i, b_j] evaluated from the bracket formula rather than the table.
    template <Field S>
    static Coords<S> bracket_basis(std::size_t i, std::size_t j)
    {
        return wedge_model::coords(wedge_model::bracket(wedge_model::basis<S>(i), wedge_model::basis<S>(j)));
    }

    static int block_of(std::size_t i) { return wedge_model::block_of(i); }
};

struct FreudenthalModel {
    static constexpr const char* name = "freudenthal";
    static constexpr const char* basis_version = freudenthal::kBasisVersion;
    static constexpr int blocks = 4;

    template <Field S>
    static const StructureTable<S>& table()
    {
        return freudenthal::table<S>();
    }

    template <Field S>
    static Coords<S> bracket_basis(std::size_t i, std::size_t j)
    {
        return freudenthal::coords(freudenthal::bracket(freudenthal::basis<S>(i), freudenthal::basis<S>(j)));
    }

    static int block_of(std::size_t i) { return freudenthal::block_of(i); }
};

// ---- suites shared by both models ----

/// [b_i, b_j] + [b_j, b_i] = 0 from the element-level bracket.
template <class M, Field S>
void run_antisymmetry(Report& rep)
{
    const auto& spec = rep.spec;
    constexpr std::size_t n = 248;
    if (spec.mode == "exhaustive") {
        rep.tally = sweep(n, spec.workers, [&](std::size_t i, Tally& t) {
            for (std::size_t j = i; j < n; ++j) {
                Coords<S> a = M::template bracket_basis<S>(i, j), b = M::template bracket_basis<S>(j, i);
                for (std::size_t k = 0; k < n; ++k) a[k] += b[k];
                t.check(ix(i, j), a, spec.tolerance);
                if (i != j) t.check(ix(j, i), a, spec.tolerance);
            }
        });
        return;
    }
    const auto pairs = sample_pairs(spec.seed, spec.samples, n);
    rep.tally = sweep(pairs.size(), spec.workers, [&](std::size_t c, Tally& t) {
        const auto [i, j] = pairs[c];
        Coords<S> a = M::template bracket_basis<S>(i, j), b = M::template bracket_basis<S>(j, i);
        for (std::size_t k = 0; k < n; ++k) a[k] += b[k];
        t.check(ix(i, j), a, spec.tolerance);
    });
}

/// Jacobi identity on basis triples i < j < k.
template <class M, Field S>
void run_jacobi(Report& rep)
{
    const auto& spec = rep.spec;
    const auto& table = M::template table<S>();
    const std::size_t n = table.dim();
    if (spec.mode == "exhaustive") {
        // zigzag over the first index so contiguous worker ranges carry similar work
        rep.tally = sweep(n, spec.workers, [&](std::size_t q, Tally& t) {
            const std::size_t i = q % 2 == 0 ? q / 2 : n - 1 - q / 2;
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k) t.check(ix(i, j, k), jacobi_residual(table, i, j, k), spec.tolerance);
        });
        return;
    }
    const auto triples = sample_triples(spec.seed, spec.samples, n);
    rep.tally = sweep(triples.size(), spec.workers, [&](std::size_t c, Tally& t) {
        const auto [i, j, k] = triples[c];
        t.check(ix(i, j, k), jacobi_residual(table, i, j, k), spec.tolerance);
    });
}

/// Rank of the Killing Gram matrix must be 248.
template <class M, Field S>
void run_killing_rank(Report& rep)
{
    Matrix<S> g(248, 248);
    if constexpr (std::same_as<M, WedgeModel>) {
        std::vector<wedge_model::Element<S>> b;
        for (std::size_t k = 0; k < 248; ++k) b.push_back(wedge_model::basis<S>(k));
        for (std::size_t i = 0; i < 248; ++i)
            for (std::size_t j = i; j < 248; ++j) g(i, j) = g(j, i) = wedge_model::killing(b[i], b[j]);
    } else {
        g = killing_gram_adtrace(M::template table<S>());
    }
    std::size_t r;
    if constexpr (scalar_traits<S>::exact)
        r = rank(g);
    else
        r = rank(g, rep.spec.tolerance);
    rep.extra("rank", std::to_string(r));
    rep.tally.check_bool(ix(r), r == 248, "Killing Gram rank " + std::to_string(r));
}

/// Center from the stacked ad null space must be trivial.
template <class M, Field S>
void run_center(Report& rep)
{
    const auto z = center(M::template table<S>());
    rep.extra("center-dimension", std::to_string(z.size()));
    rep.tally.check_bool(ix(z.size()), z.empty(), "center has dimension " + std::to_string(z.size()));
}

}  // namespace e8::verify
