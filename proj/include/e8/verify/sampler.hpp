#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <random>
#include <set>
#include <thread>
#include <vector>

#include "e8/verify/report.hpp"

namespace e8::verify {

/// Platform-stable draws: std::mt19937_64 (fully specified by the standard) plus
/// modulo-rejection to get an unbiased index, so no library distribution is involved.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : gen_(seed) {}

    /// Uniform integer in [0, n).
    std::uint64_t index(std::uint64_t n)
    {
        if (n == 0) throw DomainError("empty sampling range");
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
        std::uint64_t x;
        do x = gen_();
        while (x >= limit);
        return x % n;
    }

    /// Uniform integer in [lo, hi].
    long long range(long long lo, long long hi) { return lo + static_cast<long long>(index(static_cast<std::uint64_t>(hi - lo + 1))); }

private:
    std::mt19937_64 gen_;
};

/// `count` distinct sorted triples i < j < k from [0, dim), reproducible from the seed.
inline std::vector<std::array<std::size_t, 3>> sample_triples(std::uint64_t seed, std::size_t count, std::size_t dim)
{
    if (count < 1) throw DomainError("sample count must be at least 1");
    const long double total = static_cast<long double>(dim) * (dim - 1) * (dim - 2) / 6.0L;
    if (dim < 3 || static_cast<long double>(count) > total) throw DomainError("more triples requested than exist");
    Sampler s(seed);
    std::set<std::array<std::size_t, 3>> seen;
    std::vector<std::array<std::size_t, 3>> out;
    while (out.size() < count) {
        std::array<std::size_t, 3> t{s.index(dim), s.index(dim), s.index(dim)};
        if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) continue;
        std::sort(t.begin(), t.end());
        if (seen.insert(t).second) out.push_back(t);
    }
    return out;
}

/// `count` distinct ordered pairs (i, j), i != j, from [0, dim).
inline std::vector<std::array<std::size_t, 2>> sample_pairs(std::uint64_t seed, std::size_t count, std::size_t dim)
{
    if (count < 1) throw DomainError("sample count must be at least 1");
    if (static_cast<long double>(count) > static_cast<long double>(dim) * (dim - 1)) throw DomainError("more pairs requested than exist");
    Sampler s(seed);
    std::set<std::array<std::size_t, 2>> seen;
    std::vector<std::array<std::size_t, 2>> out;
    while (out.size() < count) {
        std::array<std::size_t, 2> p{s.index(dim), s.index(dim)};
        if (p[0] == p[1]) continue;
        if (seen.insert(p).second) out.push_back(p);
    }
    return out;
}

/// Runs check(case_index, tally) over [0, n) split into contiguous ranges, one per worker,
/// and merges the tallies in range order so the result does not depend on scheduling.
template <class F>
Tally sweep(std::size_t n, unsigned workers, F&& check)
{
    workers = std::max(1u, workers);
    if (workers == 1 || n < 2) {
        Tally t;
        for (std::size_t k = 0; k < n; ++k) check(k, t);
        return t;
    }
    std::vector<Tally> parts(workers);
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t lo = n * w / workers, hi = n * (w + 1) / workers;
        threads.emplace_back([&, w, lo, hi] {
            try {
                for (std::size_t k = lo; k < hi; ++k) check(k, parts[w]);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    Tally total;
    for (const auto& p : parts) total.merge(p);
    return total;
}

}  // namespace e8::verify
