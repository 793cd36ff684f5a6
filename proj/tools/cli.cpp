// Batch front end: every subcommand reads JSON channel descriptions and/or
// flags, writes CSV or JSON to stdout or --out, and derives all randomness
// from --seed. Exit codes: 0 success, 2 input/validation error, 3 a checked
// inequality failed.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "avwc/bounds.hpp"
#include "avwc/canonical.hpp"
#include "avwc/capacity.hpp"
#include "avwc/codes.hpp"
#include "avwc/errors.hpp"
#include "avwc/io.hpp"
#include "avwc/suites.hpp"
#include "avwc/symmetrize.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 7;

struct PropertyViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<double> parse_grid(const std::string& spec) {
    double a = 0.0, b = 1.0, step = 0.02;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%lf", &a, &b, &step) != 3 || step <= 0.0 || b < a)
        avwc::fail("BadArguments", "grid must be a:b:step with step > 0, got '" + spec + "'");
    std::vector<double> grid;
    for (int k = 0;; ++k) {
        const double value = a + k * step;
        if (value > b + 1e-12) break;
        grid.push_back(std::min(value, b));
    }
    return grid;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        avwc::write_text_file(out_path, text);
}

void emit_json(const nlohmann::json& j, const std::string& out_path) { emit(j.dump(2) + "\n", out_path); }

nlohmann::json interval_json(const avwc::ValueInterval& v) {
    return nlohmann::json{{"lo", v.lo}, {"hi", v.hi}, {"exact", v.exact()}};
}

int run_distance(const std::string& path_a, const std::string& path_b, const std::string& out_path) {
    const nlohmann::json ja = avwc::load_json_file(path_a);
    const nlohmann::json jb = avwc::load_json_file(path_b);
    nlohmann::json result{{"schema_version", 1}};
    if (ja.contains("legitimate") && jb.contains("legitimate")) {
        const avwc::WiretapUncertainty a = avwc::wiretap_from_json(ja);
        const avwc::WiretapUncertainty b = avwc::wiretap_from_json(jb);
        result["kind"] = "wiretap";
        result["distance"] = avwc::uncertainty_distance(a, b);
        result["legitimate_into_a"] = avwc::directed_family_distance(a.legitimate, b.legitimate);
        result["legitimate_into_b"] = avwc::directed_family_distance(b.legitimate, a.legitimate);
        result["eavesdropper_into_a"] = avwc::directed_family_distance(a.eavesdropper, b.eavesdropper);
        result["eavesdropper_into_b"] = avwc::directed_family_distance(b.eavesdropper, a.eavesdropper);
    } else {
        const avwc::ChannelFamily a = avwc::family_from_json(ja);
        const avwc::ChannelFamily b = avwc::family_from_json(jb);
        const double d1 = avwc::directed_family_distance(a, b);
        const double d2 = avwc::directed_family_distance(b, a);
        result["kind"] = "family";
        result["distance"] = std::max(d1, d2);
        result["into_a"] = d1;
        result["into_b"] = d2;
    }
    emit_json(result, out_path);
    return 0;
}

int run_symcheck(const std::string& path, const std::string& out_path) {
    const avwc::ChannelFamily family = avwc::family_from_json(avwc::load_json_file(path));
    const avwc::SymmetryVerdict verdict = avwc::min_f(family);
    nlohmann::json result{{"schema_version", 1},
                          {"min_f", verdict.min_f},
                          {"symmetrizable", verdict.symmetrizable}};
    if (verdict.certificate) {
        result["certificate"] = verdict.certificate->rows;
        result["residual"] = verdict.residual;
        result["radius"] = nullptr;
    } else {
        result["certificate"] = nullptr;
        result["residual"] = nullptr;
        result["radius"] = verdict.min_f / 4.0;
    }
    emit_json(result, out_path);
    return 0;
}

int run_capacity(const std::string& path, double tol, const std::string& out_path) {
    const nlohmann::json j = avwc::load_json_file(path);
    nlohmann::json result{{"schema_version", 1}};
    if (j.contains("legitimate")) {
        const avwc::WiretapUncertainty u = avwc::wiretap_from_json(j);
        avwc::DichotomyOptions opts;
        opts.capacity_tol = tol;
        const avwc::SecrecyVerdict verdict = avwc::secrecy_capacity_dichotomy(u, opts);
        result["kind"] = "wiretap";
        result["regime"] = avwc::to_string(verdict.regime);
        result["cs_bits"] = interval_json(verdict.cs_value);
        result["cs_cr_bits"] = interval_json(verdict.cs_cr_value);
    } else {
        const avwc::ChannelFamily family = avwc::family_from_json(j);
        const avwc::CapacityResult r = avwc::cr_capacity_avc(family, tol);
        result["kind"] = "family";
        result["value_bits"] = r.value;
        result["worst_q"] = *r.worst_q;
        result["duality_gap"] = r.duality_gap;
        result["iterations"] = r.iterations;
    }
    emit_json(result, out_path);
    return 0;
}

int run_sweep(const std::string& grid_spec, double tol, bool serial, const std::string& format,
              const std::string& out_path) {
    avwc::SweepOptions opts;
    opts.capacity_tol = tol;
    opts.parallel = !serial;
    const std::vector<avwc::SweepRow> rows = avwc::discontinuity_sweep(parse_grid(grid_spec), opts);

    // Row invariants plus the adjacent-point continuity bound on the
    // CR capacity (measured grid distance 2 * step).
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].symmetrizable && rows[i].cs_capacity != 0.0)
            throw PropertyViolation("symmetrizable row must carry zero secrecy capacity");
        if (!rows[i].symmetrizable && rows[i].cs_capacity != rows[i].cr_capacity)
            throw PropertyViolation("non-symmetrizable row must carry cs = cr");
        if (i > 0) {
            const double d = 2.0 * (rows[i].lambda - rows[i - 1].lambda);
            const double bound = avwc::delta_secrecy_extended(d, 3, 2) + 2.0 * tol;
            if (std::abs(rows[i].cr_capacity - rows[i - 1].cr_capacity) > bound)
                throw PropertyViolation("adjacent cr values violate the continuity bound");
        }
    }
    if (format == "json")
        emit_json(avwc::sweep_to_json(rows), out_path);
    else
        emit(avwc::render_sweep_csv(rows), out_path);
    return 0;
}

int run_verify(const std::string& suite_name_arg, int trials, std::uint64_t seed, bool serial,
               const std::string& format, const std::string& out_path) {
    std::vector<avwc::Suite> suites;
    if (suite_name_arg == "all")
        suites = avwc::all_suites();
    else
        suites.push_back(avwc::suite_from_name(suite_name_arg));

    std::vector<avwc::TrialRow> rows;
    for (avwc::Suite suite : suites) {
        const std::vector<avwc::TrialRow> part = avwc::run_suite(suite, trials, seed, !serial);
        rows.insert(rows.end(), part.begin(), part.end());
    }
    if (format == "json")
        emit_json(avwc::trials_to_json(rows), out_path);
    else
        emit(avwc::render_trials_csv(rows), out_path);
    for (const avwc::TrialRow& row : rows)
        if (!row.holds)
            throw PropertyViolation(std::string("suite ") + avwc::suite_name(row.suite) + " trial " +
                                    std::to_string(row.trial) + " violated its inequality");
    return 0;
}

int run_robustness(const std::string& code_path, const std::string& v_path,
                   const std::string& v_star_path, std::int64_t cap, const std::string& out_path) {
    const avwc::WiretapCode code = avwc::code_from_json(avwc::load_json_file(code_path));
    const avwc::ChannelFamily v = avwc::family_from_json(avwc::load_json_file(v_path));
    const avwc::ChannelFamily v_star = avwc::family_from_json(avwc::load_json_file(v_star_path));
    const avwc::RobustnessReport report =
        avwc::robustness_check(code, v, v_star, avwc::kStateSequenceCap, cap);
    emit_json(nlohmann::json{{"schema_version", 1},
                             {"epsilon", report.bound.epsilon},
                             {"d_symmetric", report.d_symmetric},
                             {"lhs_rate_bits", report.bound.lhs},
                             {"rhs_rate_bits", report.bound.rhs},
                             {"slack", report.bound.slack},
                             {"holds", report.bound.holds},
                             {"base_rate_leakage", report.base_rate_leakage},
                             {"base_max_leakage", report.base_max_leakage},
                             {"perturbed_max_leakage", report.perturbed_max_leakage}},
              out_path);
    if (!report.bound.holds) throw PropertyViolation("perturbed leakage violated the robustness bound");
    return 0;
}

int run_examples(const std::string& out_path) {
    const avwc::ChannelFamily blackwell = avwc::blackwell_family();
    const avwc::SymmetrizableInstance star = avwc::robustly_symmetrizable_instance();
    const avwc::SymmetryVerdict blackwell_verdict = avwc::min_f(blackwell);
    nlohmann::json result{
        {"schema_version", 1},
        {"blackwell",
         {{"family", avwc::to_json(blackwell)},
          {"min_f", blackwell_verdict.min_f},
          {"certificate_residual", blackwell_verdict.residual}}},
        {"noiseless_blend_target", avwc::to_json(avwc::noiseless_channel_2x3())},
        {"useless_eavesdropper", avwc::to_json(avwc::useless_binary_channel())},
        {"symmetrizable_showcase",
         {{"uncertainty", avwc::to_json(star.uncertainty)},
          {"sigma", star.sigma.rows},
          {"residual", avwc::verify_symmetrizer(star.uncertainty.legitimate, star.sigma)}}},
        {"blend_at_half", avwc::to_json(avwc::lambda_family(0.5))}};
    emit_json(result, out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite channel-uncertainty toolkit: distances, continuity bounds, symmetrizability, "
                 "minimax capacities and leakage checks"};
    app.require_subcommand(1);

    std::uint64_t seed = kDefaultSeed;
    double tol = 1e-5;
    std::string out_path;
    std::string format = "csv";
    std::int64_t cap = avwc::kCodeJointCap;
    bool serial = false;
    app.add_option("--seed", seed, "Seed for all randomized work (default 7)");
    app.add_option("--tol", tol, "Capacity tolerance in bits (default 1e-5)");
    app.add_option("--out", out_path, "Write output to this path instead of stdout");
    app.add_option("--cap", cap, "Enumeration cap for code evaluations");
    app.add_flag("--serial", serial, "Disable parallel fan-out (same results, one thread)");

    auto* distance = app.add_subcommand("distance", "Distance between two families or uncertainties");
    std::string path_a, path_b;
    distance->add_option("a", path_a, "First JSON file")->required();
    distance->add_option("b", path_b, "Second JSON file")->required();

    auto* symcheck = app.add_subcommand("symcheck", "Symmetrizability verdict for a family");
    std::string sym_path;
    symcheck->add_option("family", sym_path, "Family JSON file")->required();

    auto* capacity = app.add_subcommand("capacity", "CR capacity of a family or secrecy verdict");
    std::string cap_path;
    capacity->add_option("input", cap_path, "Family or wiretap JSON file")->required();

    auto* sweep = app.add_subcommand("sweep", "Blend-parameter sweep of the discontinuity example");
    std::string grid_spec = "0:1:0.02";
    sweep->add_option("--grid", grid_spec, "Grid as a:b:step (default 0:1:0.02)");
    sweep->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    auto* verify = app.add_subcommand("verify", "Randomized inequality suites");
    std::string suite = "all";
    int trials = 1000;
    verify->add_option("--suite", suite, "lemma1, lemma2, timevarying, theorem3, robustness, or all");
    verify->add_option("--trials", trials, "Trials per suite (default 1000)");
    verify->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    auto* robustness = app.add_subcommand(
        "robustness", "Leakage robustness of a code under a perturbed eavesdropper family");
    std::string code_path, v_path, v_star_path;
    robustness->add_option("code", code_path, "Code JSON file")->required();
    robustness->add_option("v", v_path, "Base eavesdropper family JSON")->required();
    robustness->add_option("v_star", v_star_path, "Perturbed eavesdropper family JSON")->required();

    auto* examples = app.add_subcommand("examples", "Print the canonical channels and residuals");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "ERROR BadArguments: " << e.what() << "\n";
        return 2;
    }

    try {
        if (distance->parsed()) return run_distance(path_a, path_b, out_path);
        if (symcheck->parsed()) return run_symcheck(sym_path, out_path);
        if (capacity->parsed()) return run_capacity(cap_path, tol, out_path);
        if (sweep->parsed()) return run_sweep(grid_spec, tol, serial, format, out_path);
        if (verify->parsed()) return run_verify(suite, trials, seed, serial, format, out_path);
        if (robustness->parsed()) return run_robustness(code_path, v_path, v_star_path, cap, out_path);
        if (examples->parsed()) return run_examples(out_path);
    } catch (const PropertyViolation& e) {
        std::cerr << "ERROR PropertyViolation: " << e.what() << "\n";
        return 3;
    } catch (const avwc::Error& e) {
        std::cerr << "ERROR " << e.code() << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "ERROR Internal: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
