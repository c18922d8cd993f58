// rml: invariants, duality, generalized weights and q-polymatroids of linear
// rank-metric codes, with an exhaustive theorem-verification runner.

#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "rml/report.hpp"
#include "rml/verify.hpp"

namespace {

struct CommonOpts {
    std::string format = "json";
    long long budget = rml::kDefaultBudget;
    bool timing = false;
};

void emit(rml::Report& rep, const CommonOpts& opts, double elapsed_ms) {
    if (opts.timing) rep.body["elapsed_ms"] = elapsed_ms;
    if (opts.format == "json")
        std::cout << rep.to_json();
    else
        std::cout << rep.to_text();
}

std::optional<rml::FieldBasis> parse_basis_flag(const std::string& flag, const rml::LoadedCode& lc) {
    if (flag.empty()) return std::nullopt;
    rml::detail::require(!lc.is_matrix(), "--basis applies to vector-kind codes");
    const rml::Field& f = lc.vector().field();
    nlohmann::json j = nlohmann::json::parse(flag);
    rml::detail::require(j.is_array() && static_cast<int>(j.size()) == f.degree(),
                         "--basis: expected a JSON array of m elements");
    std::vector<rml::FieldElement> el;
    for (const auto& e : j) el.push_back(f.element(rml::detail::parse_entry(e, f, "--basis")));
    return rml::FieldBasis(f, std::move(el));
}

rml::GridSpec parse_grid_flag(const std::string& flag) {
    rml::GridSpec g;
    if (flag.empty()) return g;
    std::stringstream ss(flag);
    std::string item;
    while (std::getline(ss, item, ';')) {
        auto eq = item.find('=');
        rml::detail::require(eq != std::string::npos, "--grid: expected key=value pairs separated by ';'");
        std::string key = item.substr(0, eq), val = item.substr(eq + 1);
        if (key == "q") {
            g.qs.clear();
            std::stringstream qs(val);
            std::string q;
            while (std::getline(qs, q, ',')) g.qs.push_back(std::stoll(q));
        } else if (key == "nmax") {
            g.nmax = std::stoi(val);
        } else if (key == "mmax") {
            g.mmax = std::stoi(val);
        } else if (key == "extmax") {
            g.extmax = std::stoi(val);
        } else if (key == "samples") {
            g.samples = std::stoi(val);
        } else if (key == "deep_samples") {
            g.deep_samples = std::stoi(val);
        } else if (key == "seed") {
            g.seed = std::stoull(val);
        } else {
            throw std::invalid_argument("--grid: unknown key \"" + key + "\"");
        }
    }
    return g;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of linear rank-metric codes"};
    app.require_subcommand(1);
    app.fallthrough();

    CommonOpts opts;
    app.add_option("--format", opts.format, "output format: json or text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--budget", opts.budget, "enumeration budget (hard error when exceeded)");
    app.add_flag("--timing", opts.timing, "attach wall-clock timing to reports (off by default: reports are "
                                          "byte-identical across runs)");

    std::string file_a, file_b, basis_flag, kind_flag = "d", definition_flag, sub_flag, grid_flag, only_flag,
                                            mutant_flag;

    auto* info = app.add_subcommand("info", "dimensions, distances, distribution and classification flags");
    info->add_option("file", file_a, "code file")->required();

    auto* dual = app.add_subcommand("dual", "canonical generators of the dual code");
    dual->add_option("file", file_a, "code file")->required();

    auto* expand = app.add_subcommand("expand", "matrix code associated with a vector code");
    expand->add_option("file", file_a, "vector-kind code file")->required();
    expand->add_option("--basis", basis_flag, "expansion basis as a JSON array (default: the power basis)");

    auto* weights = app.add_subcommand("weights", "weight distribution and its duality transform");
    weights->add_option("file", file_a, "code file")->required();

    auto* genw = app.add_subcommand("genweights", "generalized weight hierarchies");
    genw->add_option("file", file_a, "code file")->required();
    genw->add_option("--kind", kind_flag, "profile kind: d (anticode), delta (column-space), w (vector)");
    genw->add_option("--definition", definition_flag, "for --kind=w: oggier|ducoat|support|anticode");
    genw->add_option("--sub", sub_flag, "subcode file for relative profiles");

    auto* poly = app.add_subcommand("polymatroid", "the q-polymatroid(s) associated with a matrix code");
    poly->add_option("file", file_a, "matrix-kind code file")->required();

    auto* equiv = app.add_subcommand("equiv", "exhaustive equivalence test between two codes");
    equiv->add_option("fileA", file_a, "first code file")->required();
    equiv->add_option("fileB", file_b, "second code file")->required();

    auto* verify = app.add_subcommand("verify", "run the theorem-verification suites over a grid");
    verify->add_option("--grid", grid_flag, "grid spec, e.g. \"q=2,3;nmax=3;mmax=3;extmax=3;samples=200\"");
    verify->add_option("--only", only_flag, "run only suites whose name contains this substring");
    verify->add_option("--inject-mutant", mutant_flag,
                       "negative control: run with a deliberately wrong formula (macwilliams_exponent)")
        ->check(CLI::IsMember({"macwilliams_exponent"}));

    CLI11_PARSE(app, argc, argv);

    try {
        auto t0 = std::chrono::steady_clock::now();
        auto elapsed = [&] {
            return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        };
        if (*info) {
            auto lc = rml::load_code_file(file_a);
            auto rep = rml::build_info_report(lc, opts.budget);
            emit(rep, opts, elapsed());
        } else if (*dual) {
            auto lc = rml::load_code_file(file_a);
            auto rep = rml::build_dual_report(lc);
            emit(rep, opts, elapsed());
        } else if (*expand) {
            auto lc = rml::load_code_file(file_a);
            auto rep = rml::build_expand_report(lc, parse_basis_flag(basis_flag, lc));
            emit(rep, opts, elapsed());
        } else if (*weights) {
            auto lc = rml::load_code_file(file_a);
            auto rep = rml::build_weights_report(lc, opts.budget);
            emit(rep, opts, elapsed());
        } else if (*genw) {
            auto lc = rml::load_code_file(file_a);
            std::optional<rml::LoadedCode> sub;
            if (!sub_flag.empty()) sub = rml::load_code_file(sub_flag);
            auto rep = rml::build_genweights_report(lc, kind_flag, definition_flag, sub, opts.budget);
            emit(rep, opts, elapsed());
        } else if (*poly) {
            auto lc = rml::load_code_file(file_a);
            auto rep = rml::build_polymatroid_report(lc, opts.budget);
            emit(rep, opts, elapsed());
        } else if (*equiv) {
            auto a = rml::load_code_file(file_a);
            auto b = rml::load_code_file(file_b);
            auto rep = rml::build_equiv_report(a, b, opts.budget);
            emit(rep, opts, elapsed());
        } else if (*verify) {
            rml::GridSpec g = parse_grid_flag(grid_flag);
            g.budget = opts.budget;
            std::vector<std::string> only;
            if (!only_flag.empty()) only.push_back(only_flag);
            rml::Mutant mutant =
                mutant_flag == "macwilliams_exponent" ? rml::Mutant::macwilliams_exponent : rml::Mutant::none;
            auto results = rml::run_verification(g, only, mutant);
            rml::Report rep;
            rep.body["command"] = "verify";
            if (mutant != rml::Mutant::none) rep.body["injected_mutant"] = mutant_flag;
            bool all_pass = true;
            auto suites = nlohmann::ordered_json::array();
            for (const auto& s : results) {
                nlohmann::ordered_json sj;
                sj["suite"] = s.suite;
                sj["pass"] = s.pass();
                auto checks = nlohmann::ordered_json::array();
                for (const auto& c : s.checks) {
                    nlohmann::ordered_json cj;
                    cj["name"] = c.name;
                    cj["pass"] = c.pass;
                    if (!c.detail.empty()) cj["detail"] = c.detail;
                    checks.push_back(std::move(cj));
                    all_pass = all_pass && c.pass;
                }
                sj["checks"] = std::move(checks);
                suites.push_back(std::move(sj));
            }
            rep.body["suites"] = std::move(suites);
            rep.body["pass"] = all_pass;
            emit(rep, opts, elapsed());
            return all_pass ? 0 : 1;
        }
        return 0;
    } catch (const rml::BudgetExceeded& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
