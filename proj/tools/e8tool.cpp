// e8tool: build the two models, export structure constants, run verification suites,
// compute fixed subalgebras.
//
// exit codes: 0 pass, 1 verification failure, 2 usage or I/O error, 3 model gate failure

#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "e8/io/files.hpp"
#include "e8/verify/registry.hpp"

namespace {

using namespace e8;

constexpr int kPass = 0, kFail = 1, kUsage = 2, kGate = 3;

std::ofstream open_out(const std::string& path)
{
    std::ofstream f(path);
    if (!f) throw verify::UsageError("cannot write " + path);
    return f;
}

std::ifstream open_in(const std::string& path)
{
    std::ifstream f(path);
    if (!f) throw verify::UsageError("cannot read " + path);
    return f;
}

template <Field S>
void gen_sc(const std::string& model, std::ostream& out)
{
    io::write_structure_constants(out, model, io::model_table<S>(model));
}

/// Reloads a file and compares it with the table built in memory.
template <Field S>
bool load_sc(std::istream& in, std::ostream& msg)
{
    const auto loaded = io::read_structure_constants<S>(in);
    const std::string& model = loaded.header.get("model");
    std::size_t lines = loaded.table.nonzeros_upper();
    const bool same = loaded.table == io::model_table<S>(model);
    msg << "model: " << model << "\nfield: " << scalar_traits<S>::name << "\nentries: " << lines
        << "\nmatches-model: " << (same ? "yes" : "no") << "\n";
    return same;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact and floating-point checks of two models of complex e8"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kCodeVersion));

    std::string model = "wedge", backend = "qi", out_path, in_path;
    auto add_model = [&](CLI::App* c) {
        c->add_option("--model", model, "wedge | freudenthal")
            ->envname("E8_MODEL")
            ->check(CLI::IsMember({"wedge", "freudenthal"}))
            ->capture_default_str();
    };

    auto* gen = app.add_subcommand("gen-sc", "write the structure constants of a model");
    add_model(gen);
    gen->add_option("--backend", backend, "qi | zeta24 | f64")->envname("E8_BACKEND")->capture_default_str();
    gen->add_option("--out", out_path, "output path (stdout when omitted)")->envname("E8_OUT");

    auto* load = app.add_subcommand("load-sc", "reload a structure-constant file and compare it with the model");
    load->add_option("--in", in_path, "structure-constant file")->required();

    verify::SuiteSpec spec;
    std::string format = "text";
    auto* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("--suite", spec.suite, "suite name")->required()->envname("E8_SUITE");
    ver->add_option("--model", spec.model, "wedge | freudenthal")->envname("E8_MODEL")->capture_default_str();
    ver->add_option("--mode", spec.mode, "exhaustive | sample | auto")->envname("E8_MODE")->capture_default_str();
    ver->add_option("--backend", spec.backend, "qi | zeta24 | f64 | auto")->envname("E8_BACKEND")->capture_default_str();
    ver->add_option("--samples", spec.samples, "sample count (0: suite default)")->envname("E8_SAMPLES")->capture_default_str();
    ver->add_option("--seed", spec.seed, "sampler seed")->envname("E8_SEED")->capture_default_str();
    ver->add_option("--workers", spec.workers, "worker threads")->envname("E8_WORKERS")->capture_default_str();
    ver->add_option("--tolerance", spec.tolerance, "float residual tolerance")->envname("E8_TOLERANCE")->capture_default_str();
    ver->add_option("--auto", spec.automorphism, "automorphism for automorphism / order / fixed-dim")->envname("E8_AUTO");
    ver->add_option("--max-exact-cases", spec.max_exact_cases, "ceiling for exhaustive exact runs")
        ->envname("E8_MAX_EXACT_CASES")
        ->capture_default_str();
    ver->add_option("--format", format, "text | json")->envname("E8_FORMAT")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    ver->add_option("--out", out_path, "report path (stdout when omitted)")->envname("E8_OUT");

    std::string automorphism;
    auto* fix = app.add_subcommand("fixed", "write a basis of the fixed subalgebra of the compact form");
    add_model(fix);
    fix->add_option("--auto", automorphism, "w4 | w4-squared | id (wedge); upsilon4 | mu4 | upsilon | id (freudenthal)")
        ->required()
        ->envname("E8_AUTO");
    fix->add_option("--out", out_path, "output path (stdout when omitted)")->envname("E8_OUT");

    auto* chk = app.add_subcommand("check-basis", "reload a basis file and re-check that every vector is fixed");
    chk->add_option("--in", in_path, "basis file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (*gen) {
            std::ofstream f;
            if (!out_path.empty()) f = open_out(out_path);
            std::ostream& out = out_path.empty() ? std::cout : f;
            verify::dispatch<Gaussian, Cyclotomic24, F64>(backend, [&]<class S>() { gen_sc<S>(model, out); });
            return kPass;
        }
        if (*load) {
            auto f = open_in(in_path);
            io::Header h;
            io::read_header(f, h);
            f.seekg(0);
            bool same = false;
            verify::dispatch<Gaussian, Cyclotomic24, F64>(h.get("field"), [&]<class S>() { same = load_sc<S>(f, std::cout); });
            return same ? kPass : kFail;
        }
        if (*ver) {
            const auto rep = verify::run_suite(spec);
            const std::string text = format == "json" ? rep.to_json().dump(2) + "\n" : rep.to_text();
            if (out_path.empty()) {
                std::cout << text;
            } else {
                open_out(out_path) << text;
                std::cout << "status: " << (rep.passed() ? "pass" : "fail") << "\n";
            }
            return rep.passed() ? kPass : kFail;
        }
        if (*fix) {
            const auto b = io::compute_fixed(model, automorphism);
            if (out_path.empty()) {
                io::write_basis(std::cout, b);
            } else {
                auto f = open_out(out_path);
                io::write_basis(f, b);
            }
            std::cerr << "dimension: " << b.vectors.size() << "\n";
            return kPass;
        }
        if (*chk) {
            auto f = open_in(in_path);
            try {
                const auto b = io::read_basis(f);
                std::cout << "vectors: " << b.vectors.size() << "\nfixed: yes\n";
                return kPass;
            } catch (const DomainError& e) {
                std::cout << "fixed: no (" << e.what() << ")\n";
                return kFail;
            }
        }
    } catch (const GateFailure& e) {
        std::cerr << "model gate failure: " << e.what() << "\n";
        return kGate;
    } catch (const verify::UsageError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
