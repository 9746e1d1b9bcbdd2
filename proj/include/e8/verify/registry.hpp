#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "e8/verify/suites_freudenthal.hpp"
#include "e8/verify/suites_wedge.hpp"
#include "e8/version.hpp"

namespace e8::verify {

/// One runnable (suite, model) pair with its defaults and the identities it claims.
struct SuiteEntry {
    std::string suite;
    std::string model;
    std::vector<std::string> modes;     ///< first is the default
    std::vector<std::string> backends;  ///< first is the default
    std::string exhaustive_backend;     ///< default backend in exhaustive mode, when it differs
    std::size_t default_samples = 0;
    std::size_t exhaustive_cases = 0;   ///< cost estimate checked against max_exact_cases
    std::vector<std::string> autos;     ///< first is the default; empty when the suite takes none
    std::vector<std::string> claims;
    void (*run)(Report&) = nullptr;
};

template <Field S>
constexpr const char* backend_name()
{
    return scalar_traits<S>::name;
}

/// Calls f.template operator()<S>() for the S among Ss whose name is `backend`.
template <Field... Ss, class F>
void dispatch(const std::string& backend, F&& f)
{
    const bool done = ((backend == backend_name<Ss>() ? (f.template operator()<Ss>(), true) : false) || ...);
    if (!done) throw UsageError("backend " + backend + " not supported here");
}

#define E8_RUN(...) +[](Report& rep) { dispatch<__VA_ARGS__>(rep.spec.backend, [&]<class S>() {
#define E8_END \
    });        \
    }

inline const std::vector<SuiteEntry>& registry()
{
    namespace ws = wedge_suites;
    namespace fs = freudenthal_suites;
    using W = WedgeModel;
    using F = FreudenthalModel;
    static const std::vector<SuiteEntry> r = {
        // ---- wedge model ----
        {"dims", "wedge", {"exhaustive"}, {"qi", "zeta24", "f64"}, "", 0, 0, {},
         {"wedge.basis-dimension", "wedge.bracket-span"},
         E8_RUN(Gaussian, Cyclotomic24, F64) ws::run_dims<S>(rep); E8_END},
        {"antisymmetry", "wedge", {"exhaustive", "sample"}, {"qi", "zeta24", "f64"}, "", 1000, 248 * 248, {},
         {"wedge.bracket-antisymmetry"},
         E8_RUN(Gaussian, Cyclotomic24, F64) run_antisymmetry<W, S>(rep); E8_END},
        {"jacobi", "wedge", {"sample", "exhaustive"}, {"qi", "zeta24", "f64"}, "f64", 10000, 2511496, {},
         {"wedge.jacobi"},
         E8_RUN(Gaussian, Cyclotomic24, F64) run_jacobi<W, S>(rep); E8_END},
        {"killing-vs-adtrace", "wedge", {"sample", "exhaustive"}, {"qi", "zeta24", "f64"}, "", 54, 248 * 248, {},
         {"wedge.killing-closed-form"},
         E8_RUN(Gaussian, Cyclotomic24, F64) ws::run_killing_vs_adtrace<S>(rep); E8_END},
        {"ad-invariance", "wedge", {"sample"}, {"qi", "zeta24", "f64"}, "", 1000, 0, {},
         {"wedge.killing-invariance"},
         E8_RUN(Gaussian, Cyclotomic24, F64) ws::run_ad_invariance<S>(rep); E8_END},
        {"killing-rank", "wedge", {"exhaustive"}, {"qi", "f64"}, "", 0, 0, {},
         {"wedge.killing-nondegenerate"},
         E8_RUN(Gaussian, F64) run_killing_rank<W, S>(rep); E8_END},
        {"center", "wedge", {"exhaustive"}, {"qi"}, "", 0, 0, {},
         {"wedge.center-trivial"},
         E8_RUN(Gaussian) run_center<W, S>(rep); E8_END},
        {"star-involution", "wedge", {"exhaustive"}, {"qi", "zeta24", "f64"}, "", 0, 0, {},
         {"exterior.star-squared", "exterior.star-definition"},
         E8_RUN(Gaussian, Cyclotomic24, F64) ws::run_star_involution<S>(rep); E8_END},
        {"wedge-graded", "wedge", {"exhaustive"}, {"qi", "zeta24", "f64"}, "", 1000, 0, {},
         {"exterior.graded-commutativity", "exterior.associativity"},
         E8_RUN(Gaussian, Cyclotomic24, F64) ws::run_wedge_graded<S>(rep); E8_END},
        {"sl9-transpose", "wedge", {"exhaustive"}, {"qi", "zeta24", "f64"}, "", 0, 0, {},
         {"exterior.action-transpose", "exterior.action-star"},
         E8_RUN(Gaussian, Cyclotomic24, F64) ws::run_sl9_transpose<S>(rep); E8_END},
        {"cross-trace", "wedge", {"exhaustive"}, {"qi", "zeta24", "f64"}, "", 0, 0, {},
         {"cross.traceless", "cross.table-matches-definition"},
         E8_RUN(Gaussian, Cyclotomic24, F64) ws::run_cross_trace<S>(rep); E8_END},
        {"cross-transpose", "wedge", {"exhaustive"}, {"qi", "zeta24", "f64"}, "", 1000, 0, {},
         {"cross.transpose"},
         E8_RUN(Gaussian, Cyclotomic24, F64) ws::run_cross_transpose<S>(rep); E8_END},
        {"cross-equivariance", "wedge", {"sample"}, {"qi", "zeta24", "f64"}, "", 1000, 0, {},
         {"cross.equivariance"},
         E8_RUN(Gaussian, Cyclotomic24, F64) ws::run_cross_equivariance<S>(rep); E8_END},
        {"cross-conjugation", "wedge", {"sample"}, {"qi", "zeta24", "f64"}, "", 1000, 0, {},
         {"cross.conjugation"},
         E8_RUN(Gaussian, Cyclotomic24, F64) ws::run_cross_conjugation<S>(rep); E8_END},
        {"cross-trace-pairing", "wedge", {"sample"}, {"qi", "zeta24", "f64"}, "", 1000, 0, {},
         {"cross.trace-pairing"},
         E8_RUN(Gaussian, Cyclotomic24, F64) ws::run_cross_trace_pairing<S>(rep); E8_END},
        {"cross-cyclic", "wedge", {"sample"}, {"qi", "zeta24", "f64"}, "", 1000, 0, {},
         {"cross.cyclic-sum"},
         E8_RUN(Gaussian, Cyclotomic24, F64) ws::run_cross_cyclic<S>(rep); E8_END},
        {"cross-action", "wedge", {"sample"}, {"qi", "zeta24", "f64"}, "", 1000, 0, {},
         {"cross.action-identity"},
         E8_RUN(Gaussian, Cyclotomic24, F64) ws::run_cross_action<S>(rep); E8_END},
        {"hermitian", "wedge", {"sample"}, {"qi", "zeta24", "f64"}, "", 1000, 0, {},
         {"compact.hermitian-expansion", "compact.hermitian-symmetry", "compact.hermitian-positive"},
         E8_RUN(Gaussian, Cyclotomic24, F64) ws::run_hermitian<S>(rep); E8_END},
        {"compact-closure", "wedge", {"sample", "exhaustive"}, {"qi"}, "", 1000, 248 * 247 / 2, {},
         {"compact.involution", "compact.closure"},
         E8_RUN(Gaussian) ws::run_compact_closure(rep); E8_END},
        {"automorphism", "wedge", {"exhaustive", "sample"}, {"qi", "zeta24", "f64"}, "", 2000, 4 * 248 * 248, {"w4", "phi_w4"},
         {"w4.automorphism", "w4.commutes-with-compact-involution", "w4.isometry", "phi_w4.automorphism",
          "phi_w4.commutes-with-w4"},
         E8_RUN(Gaussian, Cyclotomic24, F64) if (rep.spec.automorphism == "w4") ws::run_automorphism_w4<S>(rep);
         else ws::run_automorphism_phi_w4<S>(rep); E8_END},
        {"order", "wedge", {"exhaustive"}, {"qi", "zeta24", "f64"}, "", 0, 0, {"w4"},
         {"w4.order-four"},
         E8_RUN(Gaussian, Cyclotomic24, F64) ws::run_order_w4<S>(rep); E8_END},
        {"fixed-dim", "wedge", {"exhaustive"}, {"qi"}, "", 0, 0, {"w4", "w4-squared", "id"},
         {"w4.fixed-dimension", "w4.fixed-shape"},
         E8_RUN(Gaussian) ws::run_fixed_dim(rep); E8_END},
        {"kernel-elements", "wedge", {"exhaustive"}, {"zeta24", "f64"}, "", 0, 0, {},
         {"phi_w4.kernel-cube-roots", "phi_w4.kernel-z24", "embed_f.determinant", "phi_w4.at-a4"},
         E8_RUN(Cyclotomic24, F64) ws::run_kernel_elements<S>(rep); E8_END},

        // ---- Freudenthal model ----
        {"dims", "freudenthal", {"exhaustive"}, {"qi"}, "", 0, 0, {},
         {"freudenthal.span-ranks", "freudenthal.jordan-unit", "freudenthal.e7-symplectic", "freudenthal.e7-slice"},
         E8_RUN(Gaussian) fs::run_dims(rep); E8_END},
        {"antisymmetry", "freudenthal", {"exhaustive", "sample"}, {"qi", "zeta24", "f64"}, "", 1000, 248 * 248, {},
         {"freudenthal.bracket-antisymmetry"},
         E8_RUN(Gaussian, Cyclotomic24, F64) run_antisymmetry<F, S>(rep); E8_END},
        {"jacobi", "freudenthal", {"sample", "exhaustive"}, {"qi", "zeta24", "f64"}, "f64", 10000, 2511496, {},
         {"freudenthal.jacobi"},
         E8_RUN(Gaussian, Cyclotomic24, F64) run_jacobi<F, S>(rep); E8_END},
        {"killing-rank", "freudenthal", {"exhaustive"}, {"qi", "f64"}, "", 0, 0, {},
         {"freudenthal.killing-nondegenerate"},
         E8_RUN(Gaussian, F64) run_killing_rank<F, S>(rep); E8_END},
        {"center", "freudenthal", {"exhaustive"}, {"qi"}, "", 0, 0, {},
         {"freudenthal.center-trivial"},
         E8_RUN(Gaussian) run_center<F, S>(rep); E8_END},
        {"lambda-gamma", "freudenthal", {"exhaustive"}, {"qi"}, "", 0, 0, {},
         {"lambda-gamma.relations", "lambda-gamma.symplectic", "lambda-gamma.preserves-e7", "lambda-gamma.e7-fixed-dimension"},
         E8_RUN(Gaussian) fs::run_lambda_gamma(rep); E8_END},
        {"compact-closure", "freudenthal", {"exhaustive", "sample"}, {"qi"}, "", 1000, 248 * 248, {},
         {"sigma.involutive-automorphism", "sigma.real-dimension", "sigma.commutes"},
         E8_RUN(Gaussian) fs::run_compact_closure(rep); E8_END},
        {"automorphism", "freudenthal", {"exhaustive", "sample"}, {"qi", "zeta24", "f64"}, "", 2000, 8 * 248 * 248,
         {"upsilon4", "mu4", "phi_upsilon", "upsilon"},
         {"upsilon4.automorphism", "mu4.automorphism", "upsilon.automorphism", "phi_upsilon.automorphism", "phi_upsilon.at-i",
          "phi_upsilon.at-minus-one", "phi_upsilon.homomorphism"},
         E8_RUN(Gaussian, Cyclotomic24, F64) fs::run_automorphism<S>(rep); E8_END},
        {"order", "freudenthal", {"exhaustive"}, {"qi", "zeta24", "f64"}, "", 0, 0, {"mu4", "upsilon4", "upsilon"},
         {"upsilon4.order-four", "mu4.order-four", "upsilon4.square", "mu4.square"},
         E8_RUN(Gaussian, Cyclotomic24, F64) fs::run_order<S>(rep); E8_END},
        {"fixed-dim", "freudenthal", {"exhaustive"}, {"qi"}, "", 0, 0, {"mu4", "upsilon4", "upsilon", "id"},
         {"upsilon4.fixed-dimension", "mu4.fixed-dimension", "upsilon.fixed-dimension"},
         E8_RUN(Gaussian) fs::run_fixed_dim(rep); E8_END},
        {"kernel-elements", "freudenthal", {"exhaustive"}, {"qi", "zeta24", "f64"}, "", 0, 0, {},
         {"phi_upsilon.kernel"},
         E8_RUN(Gaussian, Cyclotomic24, F64) fs::run_kernel_elements<S>(rep); E8_END},
        {"commutation", "freudenthal", {"exhaustive"}, {"qi", "zeta24", "f64"}, "", 0, 0, {},
         {"mu4.commutes-with-phi_upsilon", "mu4.commutes-with-e7-lambda-gamma"},
         E8_RUN(Gaussian, Cyclotomic24, F64) fs::run_commutation<S>(rep); E8_END},
    };
    return r;
}

#undef E8_RUN
#undef E8_END

/// Identities the suites must cover between them, each exactly once.
inline const std::vector<std::string>& in_scope_identities()
{
    static const std::vector<std::string> ids = {
        "wedge.basis-dimension", "wedge.bracket-span", "wedge.bracket-antisymmetry", "wedge.jacobi",
        "wedge.killing-closed-form", "wedge.killing-invariance", "wedge.killing-nondegenerate", "wedge.center-trivial",
        "exterior.star-squared", "exterior.star-definition", "exterior.graded-commutativity", "exterior.associativity",
        "exterior.action-transpose", "exterior.action-star",
        "cross.traceless", "cross.table-matches-definition", "cross.transpose", "cross.equivariance", "cross.conjugation",
        "cross.trace-pairing", "cross.cyclic-sum", "cross.action-identity",
        "compact.hermitian-expansion", "compact.hermitian-symmetry", "compact.hermitian-positive", "compact.involution",
        "compact.closure",
        "w4.automorphism", "w4.commutes-with-compact-involution", "w4.isometry", "w4.order-four", "w4.fixed-dimension",
        "w4.fixed-shape", "phi_w4.automorphism", "phi_w4.commutes-with-w4", "phi_w4.kernel-cube-roots", "phi_w4.kernel-z24",
        "phi_w4.at-a4", "embed_f.determinant",
        "freudenthal.span-ranks", "freudenthal.jordan-unit", "freudenthal.e7-symplectic", "freudenthal.e7-slice",
        "freudenthal.bracket-antisymmetry", "freudenthal.jacobi", "freudenthal.killing-nondegenerate",
        "freudenthal.center-trivial",
        "lambda-gamma.relations", "lambda-gamma.symplectic", "lambda-gamma.preserves-e7", "lambda-gamma.e7-fixed-dimension",
        "sigma.involutive-automorphism", "sigma.real-dimension", "sigma.commutes",
        "upsilon4.automorphism", "upsilon4.order-four", "upsilon4.square", "upsilon4.fixed-dimension",
        "upsilon.automorphism", "upsilon.fixed-dimension",
        "mu4.automorphism", "mu4.order-four", "mu4.square", "mu4.fixed-dimension", "mu4.commutes-with-phi_upsilon",
        "mu4.commutes-with-e7-lambda-gamma",
        "phi_upsilon.automorphism", "phi_upsilon.at-i", "phi_upsilon.at-minus-one", "phi_upsilon.homomorphism",
        "phi_upsilon.kernel",
    };
    return ids;
}

inline const SuiteEntry& find_entry(const std::string& suite, const std::string& model)
{
    bool known = false;
    for (const auto& e : registry()) {
        if (e.suite != suite) continue;
        known = true;
        if (e.model == model) return e;
    }
    if (!known) throw UsageError("unknown suite: " + suite);
    throw UsageError("suite " + suite + " is not available for model " + model);
}

template <class T>
bool contains(const std::vector<T>& v, const T& x)
{
    return std::find(v.begin(), v.end(), x) != v.end();
}

/// Fills in defaults and rejects combinations the suite does not support.
inline SuiteSpec resolve(SuiteSpec spec)
{
    // "automorphism:w4" is shorthand for --suite automorphism --auto w4
    if (auto colon = spec.suite.find(':'); colon != std::string::npos) {
        const std::string a = spec.suite.substr(colon + 1);
        if (!spec.automorphism.empty() && spec.automorphism != a) throw UsageError("conflicting automorphism names");
        spec.automorphism = a;
        spec.suite.resize(colon);
    }
    if (spec.model == "auto") {
        const bool f = contains<std::string>({"upsilon4", "mu4", "upsilon", "phi_upsilon"}, spec.automorphism) ||
                       spec.suite == "lambda-gamma" || spec.suite == "commutation";
        spec.model = f ? "freudenthal" : "wedge";
    }
    if (spec.model != "wedge" && spec.model != "freudenthal") throw UsageError("unknown model: " + spec.model);
    const SuiteEntry& e = find_entry(spec.suite, spec.model);
    if (spec.mode == "auto") spec.mode = e.modes.front();
    if (!contains(e.modes, spec.mode)) throw UsageError("mode " + spec.mode + " not supported by " + spec.suite);
    if (spec.backend == "auto")
        spec.backend = spec.mode == "exhaustive" && !e.exhaustive_backend.empty() ? e.exhaustive_backend : e.backends.front();
    if (!contains(e.backends, spec.backend)) throw UsageError("backend " + spec.backend + " not supported by " + spec.suite);
    if (e.autos.empty()) {
        if (!spec.automorphism.empty()) throw UsageError("suite " + spec.suite + " takes no automorphism");
    } else {
        if (spec.automorphism.empty()) spec.automorphism = e.autos.front();
        if (!contains(e.autos, spec.automorphism))
            throw UsageError("automorphism " + spec.automorphism + " not available for " + spec.suite + " on " + spec.model);
    }
    if (spec.samples == 0) spec.samples = e.default_samples;
    if (spec.workers == 0) throw UsageError("workers must be at least 1");
    if (!(spec.tolerance >= 0)) throw UsageError("tolerance must be non-negative");
    const bool exact = spec.backend != "f64";
    if (exact && spec.mode == "exhaustive" && e.exhaustive_cases > spec.max_exact_cases)
        throw UsageError("exhaustive exact " + spec.suite + " needs " + std::to_string(e.exhaustive_cases) +
                         " cases, above the ceiling of " + std::to_string(spec.max_exact_cases));
    return spec;
}

inline Report run_suite(const SuiteSpec& requested)
{
    Report rep;
    rep.spec = resolve(requested);
    rep.code_version = kCodeVersion;
    rep.basis_version = rep.spec.model == "wedge" ? wedge_model::kBasisVersion : freudenthal::kBasisVersion;
    find_entry(rep.spec.suite, rep.spec.model).run(rep);
    return rep;
}

}  // namespace e8::verify
