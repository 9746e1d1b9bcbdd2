#include <gtest/gtest.h>

#include <map>
#include <set>
#include <random>

#include "e8/verify/registry.hpp"

using namespace e8;
using namespace e8::verify;

namespace {

SuiteSpec spec_of(std::string suite, std::string model = "auto", std::string backend = "auto", std::string mode = "auto")
{
    SuiteSpec s;
    s.suite = std::move(suite);
    s.model = std::move(model);
    s.backend = std::move(backend);
    s.mode = std::move(mode);
    return s;
}

}  // namespace

TEST(Sampler, FrozenTriples)
{
    // std::mt19937_64 is fully specified, so these hold on every platform
    std::mt19937_64 g;
    g.discard(9999);
    EXPECT_EQ(g(), 9981545732273789042ULL);
    const auto t = sample_triples(0, 1, 248);
    ASSERT_EQ(t.size(), 1u);
    EXPECT_EQ(t[0], (std::array<std::size_t, 3>{11, 145, 198}));
    EXPECT_EQ(sample_triples(0, 3, 248)[2], (std::array<std::size_t, 3>{32, 166, 191}));
    EXPECT_EQ(sample_triples(1, 1, 248)[0], (std::array<std::size_t, 3>{34, 78, 80}));
}

TEST(Sampler, Errors)
{
    EXPECT_THROW(sample_triples(0, 5, 4), DomainError);
    EXPECT_THROW(sample_triples(0, 0, 248), DomainError);
    EXPECT_EQ(sample_triples(0, 4, 4).size(), 4u);
    EXPECT_THROW(sample_pairs(0, 13, 4), DomainError);
}

TEST(Sampler, SameSeedSameList)
{
    EXPECT_EQ(sample_triples(42, 500, 248), sample_triples(42, 500, 248));
    EXPECT_NE(sample_triples(42, 50, 248), sample_triples(43, 50, 248));
    for (const auto& t : sample_triples(7, 1000, 248)) {
        EXPECT_LT(t[0], t[1]);
        EXPECT_LT(t[1], t[2]);
        EXPECT_LT(t[2], 248u);
    }
}

TEST(Sweep, MergeIsScheduleIndependent)
{
    auto check = [](std::size_t c, Tally& t) { t.check_bool({static_cast<long long>(c)}, c % 97 != 3, "bad"); };
    const Tally one = sweep(10000, 1, check), many = sweep(10000, 7, check);
    EXPECT_EQ(one.cases, 10000u);
    EXPECT_EQ(one.failures, many.failures);
    ASSERT_EQ(one.kept.size(), many.kept.size());
    for (std::size_t k = 0; k < one.kept.size(); ++k) EXPECT_EQ(one.kept[k].indices, many.kept[k].indices);
}

TEST(Registry, EachIdentityClaimedOnce)
{
    std::map<std::string, int> claimed;
    for (const auto& e : registry())
        for (const auto& c : e.claims) ++claimed[c];
    for (const auto& id : in_scope_identities()) EXPECT_EQ(claimed[id], 1) << id;
    for (const auto& [c, n] : claimed) EXPECT_TRUE(contains(in_scope_identities(), c)) << c << " is not in scope";
}

TEST(Registry, EntriesAreWellFormed)
{
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& e : registry()) {
        EXPECT_TRUE(seen.insert({e.suite, e.model}).second) << e.suite;
        EXPECT_FALSE(e.modes.empty());
        EXPECT_FALSE(e.backends.empty());
        EXPECT_NE(e.run, nullptr);
        // every exact suite has a float twin unless it is an exact-only computation
        if (!contains<std::string>(e.backends, "f64")) {
            EXPECT_TRUE(contains<std::string>({"center", "compact-closure", "fixed-dim", "dims", "lambda-gamma"}, e.suite))
                << e.suite;
        }
    }
}

TEST(Resolve, DefaultsAndInference)
{
    auto s = resolve(spec_of("jacobi", "wedge"));
    EXPECT_EQ(s.mode, "sample");
    EXPECT_EQ(s.backend, "qi");
    EXPECT_EQ(s.samples, 10000u);
    s = resolve(spec_of("jacobi", "wedge", "auto", "exhaustive"));
    EXPECT_EQ(s.backend, "f64");
    s = resolve(spec_of("order"));
    EXPECT_EQ(s.model, "wedge");
    EXPECT_EQ(s.automorphism, "w4");
    auto m = spec_of("order");
    m.automorphism = "mu4";
    EXPECT_EQ(resolve(m).model, "freudenthal");
    s = resolve(spec_of("automorphism:phi_w4"));
    EXPECT_EQ(s.suite, "automorphism");
    EXPECT_EQ(s.automorphism, "phi_w4");
}

TEST(Resolve, Errors)
{
    EXPECT_THROW(resolve(spec_of("nope")), UsageError);
    EXPECT_THROW(resolve(spec_of("center", "wedge", "f64")), UsageError);
    EXPECT_THROW(resolve(spec_of("center", "wedge", "q")), UsageError);
    EXPECT_THROW(resolve(spec_of("dims", "wedge", "auto", "sample")), UsageError);
    EXPECT_THROW(resolve(spec_of("lambda-gamma", "wedge")), UsageError);
    EXPECT_THROW(resolve(spec_of("jacobi", "octonion")), UsageError);
    auto a = spec_of("order");
    a.automorphism = "w5";
    EXPECT_THROW(resolve(a), UsageError);
    auto d = spec_of("dims", "wedge");
    d.automorphism = "w4";
    EXPECT_THROW(resolve(d), UsageError);
    // the exact exhaustive Jacobi sweep is above the default ceiling
    EXPECT_THROW(resolve(spec_of("jacobi", "wedge", "qi", "exhaustive")), UsageError);
    auto raised = spec_of("jacobi", "wedge", "qi", "exhaustive");
    raised.max_exact_cases = 3'000'000;
    EXPECT_NO_THROW(resolve(raised));
    auto w = spec_of("dims", "wedge");
    w.workers = 0;
    EXPECT_THROW(resolve(w), UsageError);
    EXPECT_THROW(dispatch<Gaussian>("f64", []<class S>() {}), UsageError);
}

TEST(Suites, Examples)
{
    auto j = spec_of("jacobi", "wedge", "f64", "exhaustive");
    j.workers = 4;
    const auto rj = run_suite(j);
    EXPECT_TRUE(rj.passed()) << rj.to_text();
    EXPECT_EQ(rj.tally.cases, 2511496u);
    EXPECT_LT(rj.tally.max_residual, 1e-9);

    auto f = spec_of("fixed-dim");
    f.automorphism = "w4";
    const auto rf = run_suite(f);
    EXPECT_TRUE(rf.passed());
    EXPECT_NE(rf.to_text().find("dimension: 64\n"), std::string::npos);

    auto o = spec_of("order");
    o.automorphism = "mu4";
    const auto ro = run_suite(o);
    EXPECT_TRUE(ro.passed());
    EXPECT_NE(ro.to_text().find("order: 4\n"), std::string::npos);

    const auto rk = run_suite(spec_of("killing-rank", "wedge"));
    EXPECT_TRUE(rk.passed());
    EXPECT_EQ(rk.extra_value("rank"), "248");

    const auto rc = run_suite(spec_of("killing-vs-adtrace", "wedge"));
    EXPECT_TRUE(rc.passed());
    EXPECT_EQ(rc.extra_value("killing-constant"), "60");
    EXPECT_GE(rc.tally.cases, 50u);
}

TEST(Suites, FloatTwinPassesWhenExactPasses)
{
    for (const char* suite : {"antisymmetry", "star-involution", "cross-trace", "order", "killing-rank"}) {
        auto exact = spec_of(suite, "wedge", "qi");
        auto flt = spec_of(suite, "wedge", "f64");
        const auto re = run_suite(exact), rf = run_suite(flt);
        EXPECT_TRUE(re.passed()) << suite;
        EXPECT_TRUE(rf.passed()) << suite;
        EXPECT_LT(rf.tally.max_residual, 1e-9) << suite;
        EXPECT_EQ(re.tally.max_residual, 0.0) << suite;
    }
    auto ex = spec_of("jacobi", "freudenthal", "qi");
    ex.samples = 300;
    auto fl = ex;
    fl.backend = "f64";
    EXPECT_TRUE(run_suite(ex).passed());
    EXPECT_TRUE(run_suite(fl).passed());
}

TEST(Suites, InjectedFailureIsReported)
{
    // tolerance below float noise turns the float twin into a failing run
    auto s = spec_of("automorphism", "wedge", "f64", "sample");
    s.automorphism = "phi_w4";
    s.samples = 50;
    s.tolerance = 0;
    const auto r = run_suite(s);
    EXPECT_FALSE(r.passed());
    EXPECT_NE(r.to_text().find("failure:"), std::string::npos);
    EXPECT_EQ(r.to_json()["status"], "fail");
}

TEST(Report, Deterministic)
{
    for (unsigned workers : {1u, 3u}) {
        auto s = spec_of("jacobi", "wedge", "qi", "sample");
        s.samples = 500;
        s.seed = 9;
        s.workers = workers;
        const auto a = run_suite(s), b = run_suite(s);
        EXPECT_EQ(a.to_text(), b.to_text());
        EXPECT_EQ(a.to_json().dump(), b.to_json().dump());
    }
    auto s1 = spec_of("jacobi", "wedge", "f64", "sample");
    s1.samples = 2000;
    auto s4 = s1;
    s4.workers = 4;
    const auto r1 = run_suite(s1), r4 = run_suite(s4);
    EXPECT_EQ(r1.tally.cases, r4.tally.cases);
    EXPECT_EQ(r1.tally.max_residual, r4.tally.max_residual);
}

TEST(Report, JsonSchema)
{
    const auto r = run_suite(spec_of("dims", "wedge"));
    const auto j = r.to_json();
    for (const char* key : {"suite", "model", "mode", "backend", "samples", "seed", "workers", "tolerance", "auto", "code_version",
                            "basis_version", "extras", "cases", "failure_count", "max_residual", "status", "failures"})
        EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_EQ(j["extras"]["dimension"], "248");
    EXPECT_EQ(j["basis_version"], "wedge-v1");
}
