#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "e8/io/files.hpp"
#include "e8/verify/registry.hpp"

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "")
{
    const std::string cmd = env + (env.empty() ? "" : " ") + std::string(E8TOOL_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
    const int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path temp_path(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("e8tool-test-" + std::to_string(::getpid()) + "-" + name);
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream f(p);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST(Cli, VerifyExamples)
{
    const auto j = run("verify --suite jacobi --model wedge --mode exhaustive --backend f64 --workers 4");
    EXPECT_EQ(j.code, 0);
    EXPECT_NE(j.out.find("status: pass"), std::string::npos);

    const auto f = run("verify --suite fixed-dim --auto w4");
    EXPECT_EQ(f.code, 0);
    EXPECT_NE(f.out.find("dimension: 64\n"), std::string::npos);

    const auto o = run("verify --suite order --auto mu4");
    EXPECT_EQ(o.code, 0);
    EXPECT_NE(o.out.find("order: 4\n"), std::string::npos);
}

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("verify").code, 2);
    EXPECT_EQ(run("verify --suite nope").code, 2);
    EXPECT_EQ(run("verify --suite center --backend f64").code, 2);
    EXPECT_EQ(run("verify --suite jacobi --backend qi --mode exhaustive").code, 2);
    EXPECT_EQ(run("gen-sc --model octonion").code, 2);
    EXPECT_EQ(run("load-sc --in /nonexistent/file").code, 2);
    EXPECT_EQ(run("--help").code, 0);
    EXPECT_EQ(run("--version").out, std::string(e8::kCodeVersion) + "\n");
    // zero tolerance on a float run gives a verification failure
    EXPECT_EQ(run("verify --suite automorphism --auto phi_w4 --backend f64 --mode sample --samples 20 --tolerance 0").code, 1);
}

TEST(Cli, MatchesLibraryCall)
{
    e8::verify::SuiteSpec s;
    s.suite = "jacobi";
    s.model = "freudenthal";
    s.samples = 200;
    s.seed = 5;
    const std::string lib = e8::verify::run_suite(s).to_text();
    EXPECT_EQ(run("verify --suite jacobi --model freudenthal --samples 200 --seed 5").out, lib);
    const std::string json = e8::verify::run_suite(s).to_json().dump(2) + "\n";
    EXPECT_EQ(run("verify --suite jacobi --model freudenthal --samples 200 --seed 5 --format json").out, json);
}

TEST(Cli, EnvironmentOverrides)
{
    const auto r = run("verify --suite jacobi", "E8_MODEL=freudenthal E8_SAMPLES=50 E8_SEED=3");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("model: freudenthal\n"), std::string::npos);
    EXPECT_NE(r.out.find("samples: 50\n"), std::string::npos);
    EXPECT_NE(r.out.find("seed: 3\n"), std::string::npos);
    // a flag beats the environment
    const auto f = run("verify --suite jacobi --samples 40", "E8_SAMPLES=50");
    EXPECT_NE(f.out.find("samples: 40\n"), std::string::npos);
}

TEST(Cli, ReportFile)
{
    const auto path = temp_path("report.txt");
    const auto r = run("verify --suite dims --out " + path.string());
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "status: pass\n");
    EXPECT_NE(slurp(path).find("dimension: 248\n"), std::string::npos);
    std::filesystem::remove(path);
}

TEST(Cli, StructureConstantsRoundTrip)
{
    for (const std::string model : {"wedge", "freudenthal"})
        for (const std::string backend : {"qi", "zeta24", "f64"}) {
            const auto path = temp_path(model + "-" + backend + ".sc");
            EXPECT_EQ(run("gen-sc --model " + model + " --backend " + backend + " --out " + path.string()).code, 0);
            const auto r = run("load-sc --in " + path.string());
            EXPECT_EQ(r.code, 0) << model << " " << backend;
            EXPECT_NE(r.out.find("matches-model: yes"), std::string::npos);
            std::filesystem::remove(path);
        }
    // a changed coefficient is detected
    const auto path = temp_path("edited.sc");
    run("gen-sc --model wedge --out " + path.string());
    std::string text = slurp(path);
    const auto at = text.find("72\t80\t80\t1\n");
    ASSERT_NE(at, std::string::npos);
    text.replace(at, 11, "72\t80\t80\t2\n");
    std::ofstream(path) << text;
    EXPECT_EQ(run("load-sc --in " + path.string()).code, 1);
    std::ofstream(path) << "#model=wedge\n#basis-version=wedge-v1\n#field=qi\n#dimension=248\n0\t1\n";
    EXPECT_EQ(run("load-sc --in " + path.string()).code, 2);
    std::filesystem::remove(path);
}

TEST(Cli, FixedBases)
{
    const std::pair<std::string, std::size_t> cases[] = {
        {"--model wedge --auto w4", 64}, {"--model freudenthal --auto upsilon4", 134}, {"--model freudenthal --auto mu4", 66}};
    for (const auto& [args, dim] : cases) {
        const auto path = temp_path("basis.txt");
        EXPECT_EQ(run("fixed " + args + " --out " + path.string()).code, 0);
        std::ifstream f(path);
        const auto b = e8::io::read_basis(f);
        EXPECT_EQ(b.vectors.size(), dim) << args;
        const auto c = run("check-basis --in " + path.string());
        EXPECT_EQ(c.code, 0);
        EXPECT_NE(c.out.find("vectors: " + std::to_string(dim)), std::string::npos);
        std::filesystem::remove(path);
    }
    EXPECT_EQ(run("fixed --model wedge --auto mu4").code, 2);
}
