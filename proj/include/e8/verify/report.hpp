#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "e8/lie/table.hpp"
#include "e8/scalar/traits.hpp"

namespace e8::verify {

/// Bad suite name, flag combination or backend for the requested suite.
struct UsageError : Error {
    using Error::Error;
};

struct SuiteSpec {
    std::string suite;
    std::string model = "auto";   ///< wedge | freudenthal | auto (from the automorphism or suite)
    std::string mode = "auto";     ///< exhaustive | sample | auto (suite default)
    std::string backend = "auto";  ///< qi | zeta24 | f64 | auto (suite default)
    std::size_t samples = 0;       ///< 0 selects the suite default
    std::uint64_t seed = 0;
    unsigned workers = 1;
    double tolerance = 1e-9;
    std::string automorphism;      ///< for automorphism, order and fixed-dim
    std::size_t max_exact_cases = 2'000'000;
};

struct Failure {
    std::vector<long long> indices;
    std::string residual;
};

/// Running count of checked cases; keeps the first `kKeep` failures.
struct Tally {
    static constexpr std::size_t kKeep = 64;

    std::size_t cases = 0;
    std::size_t failures = 0;
    double max_residual = 0;
    std::vector<Failure> kept;

    void fail(std::vector<long long> idx, std::string residual)
    {
        ++failures;
        if (kept.size() < kKeep) kept.push_back({std::move(idx), std::move(residual)});
    }

    /// One case whose residual vector must vanish.
    template <Field S>
    void check(std::vector<long long> idx, const Coords<S>& residual, double tolerance)
    {
        ++cases;
        std::size_t bad = residual.size();
        for (std::size_t k = 0; k < residual.size(); ++k) {
            const double m = scalar_traits<S>::magnitude(residual[k]);
            if (m > max_residual) max_residual = m;
            if (bad == residual.size() && !negligible(residual[k], tolerance)) bad = k;
        }
        if (bad != residual.size()) fail(std::move(idx), "coord " + std::to_string(bad) + " = " + literal(residual[bad]));
    }

    /// One case whose scalar residual must vanish.
    template <Field S>
    void check_scalar(std::vector<long long> idx, const S& residual, double tolerance)
    {
        ++cases;
        max_residual = std::max(max_residual, scalar_traits<S>::magnitude(residual));
        if (!negligible(residual, tolerance)) fail(std::move(idx), literal(residual));
    }

    /// One case decided by a predicate.
    void check_bool(std::vector<long long> idx, bool ok, const std::string& what)
    {
        ++cases;
        if (!ok) fail(std::move(idx), what);
    }

    void merge(const Tally& o)
    {
        cases += o.cases;
        failures += o.failures;
        max_residual = std::max(max_residual, o.max_residual);
        for (const auto& f : o.kept)
            if (kept.size() < kKeep) kept.push_back(f);
    }
};

struct Report {
    SuiteSpec spec;
    std::string basis_version;
    std::string code_version;
    Tally tally;
    std::vector<std::pair<std::string, std::string>> extras;

    bool passed() const { return tally.failures == 0; }

    void extra(const std::string& key, const std::string& value)
    {
        for (auto& [k, v] : extras)
            if (k == key) {
                v = value;
                return;
            }
        extras.emplace_back(key, value);
    }

    std::string extra_value(const std::string& key) const
    {
        for (const auto& [k, v] : extras)
            if (k == key) return v;
        return {};
    }

    /// Line-oriented form: key: value header then one `failure:` line per kept failure.
    std::string to_text() const
    {
        std::ostringstream os;
        os << "suite: " << spec.suite << "\n";
        os << "model: " << spec.model << "\n";
        os << "mode: " << spec.mode << "\n";
        os << "backend: " << spec.backend << "\n";
        os << "samples: " << spec.samples << "\n";
        os << "seed: " << spec.seed << "\n";
        os << "workers: " << spec.workers << "\n";
        os << "tolerance: " << format_double(spec.tolerance) << "\n";
        os << "auto: " << (spec.automorphism.empty() ? "-" : spec.automorphism) << "\n";
        os << "code-version: " << code_version << "\n";
        os << "basis-version: " << basis_version << "\n";
        for (const auto& [k, v] : extras) os << k << ": " << v << "\n";
        os << "cases: " << tally.cases << "\n";
        os << "failures: " << tally.failures << "\n";
        os << "max-residual: " << format_double(tally.max_residual) << "\n";
        os << "status: " << (passed() ? "pass" : "fail") << "\n";
        for (const auto& f : tally.kept) {
            os << "failure:";
            for (auto i : f.indices) os << " " << i;
            os << " | " << f.residual << "\n";
        }
        return os.str();
    }

    /// Single-document form; field names are stable.
    nlohmann::ordered_json to_json() const
    {
        nlohmann::ordered_json j;
        j["suite"] = spec.suite;
        j["model"] = spec.model;
        j["mode"] = spec.mode;
        j["backend"] = spec.backend;
        j["samples"] = spec.samples;
        j["seed"] = spec.seed;
        j["workers"] = spec.workers;
        j["tolerance"] = spec.tolerance;
        j["auto"] = spec.automorphism;
        j["code_version"] = code_version;
        j["basis_version"] = basis_version;
        nlohmann::ordered_json ex = nlohmann::ordered_json::object();
        for (const auto& [k, v] : extras) ex[k] = v;
        j["extras"] = ex;
        j["cases"] = tally.cases;
        j["failure_count"] = tally.failures;
        j["max_residual"] = tally.max_residual;
        j["status"] = passed() ? "pass" : "fail";
        nlohmann::ordered_json fs = nlohmann::ordered_json::array();
        for (const auto& f : tally.kept) fs.push_back({{"indices", f.indices}, {"residual", f.residual}});
        j["failures"] = fs;
        return j;
    }

    static std::string format_double(double x)
    {
        std::ostringstream os;
        os.precision(6);
        os << std::scientific << x;
        return os.str();
    }
};

}  // namespace e8::verify
