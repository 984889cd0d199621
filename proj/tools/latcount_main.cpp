// command-line front end: count / oracle / verify / spectrum / profile
#include "latcount/counter.hpp"
#include "latcount/errors.hpp"
#include "latcount/oracle.hpp"
#include "latcount/relaxation.hpp"
#include "latcount/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#ifdef LATCOUNT_HAVE_OPENMP
#include <omp.h>
#endif

namespace {

using namespace latcount;

struct RunConfig {
    std::string command;
    std::string input;
    ReportFormat format = ReportFormat::Json;
    std::string output; // empty = stdout
    bool include_timing = true;

    // count/verify options
    std::string preset = "exp1";
    std::optional<int> axes;
    std::optional<double> u, p, v, h;
    std::string multiplier = "auto"; // auto | minimal | integer
    std::optional<std::int64_t> modulus;
    double tolerance = 1e-6;
    std::int64_t budget = 1000000000;
    bool force = false;
    bool serial = false;
    int scan_limit = 16;
    int threads = 0;

    // oracle options
    bool with_expansion = false;

    // spectrum options
    int n_from = 2;
    int n_to = 12;

    // profile options
    int profile_n = 6;
    std::string signs; // empty = scan argmin
    double t_from = 0.0;
    double t_to = 3.14159265358979;
    int samples = 101;
};

SchemePreset parse_preset(const std::string& name) {
    if (name == "exp1") return SchemePreset::Exp1;
    if (name == "exp2") return SchemePreset::Exp2;
    if (name == "twovar") return SchemePreset::TwoAxis;
    if (name == "onevar") return SchemePreset::OneAxis;
    throw Error("unknown preset '" + name + "' (expected exp1, exp2, twovar, onevar)");
}

CountOptions count_options(const RunConfig& cfg) {
    CountOptions opts;
    opts.preset = parse_preset(cfg.preset);
    opts.axes = cfg.axes;
    opts.u = cfg.u;
    opts.p = cfg.p;
    opts.v = cfg.v;
    opts.h = cfg.h;
    if (cfg.multiplier == "auto") {
        opts.multiplier_mode = MultiplierMode::Auto;
    } else if (cfg.multiplier == "minimal") {
        opts.multiplier_mode = MultiplierMode::Minimal;
    } else {
        opts.multiplier_mode = MultiplierMode::Explicit;
        try {
            opts.multiplier = std::stoll(cfg.multiplier);
        } catch (const std::exception&) {
            throw Error("bad --multiplier value '" + cfg.multiplier + "'");
        }
    }
    opts.modulus = cfg.modulus;
    opts.tolerance = cfg.tolerance;
    opts.budget_points = cfg.budget;
    opts.force = cfg.force;
    opts.parallel = !cfg.serial;
    opts.scan_limit = cfg.scan_limit;
    return opts;
}

void write_out(const RunConfig& cfg, const std::string& text) {
    if (cfg.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.output);
    if (!out) throw Error("cannot write to " + cfg.output);
    out << text;
}

SignVector parse_signs(const std::string& text) {
    SignVector e;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ';')) {
        if (tok.empty()) continue;
        int s = std::stoi(tok);
        if (s < -1 || s > 1) throw Error("sign entries must be -1, 0, or 1");
        e.push_back(s);
    }
    if (e.empty()) throw Error("empty sign vector");
    return e;
}

int run_count(const RunConfig& cfg) {
    CnfFormula f = parse_dimacs_file(cfg.input);
    CountOutcome outcome = count(f, count_options(cfg));
    write_out(cfg, emit_report(outcome, cfg.format, cfg.include_timing));
    return outcome.result.satisfiable ? 0 : 20;
}

int run_oracle(const RunConfig& cfg) {
    CnfFormula f = parse_dimacs_file(cfg.input);
    OracleResult r = count_by_enumeration(f);
    if (!cfg.with_expansion) {
        write_out(cfg, emit_report(r, cfg.format));
    } else {
        AlgebraicFormula af = apply_inverse_relaxation(encode(relax(f)));
        SparsePolynomial poly = expand(af);
        Rational c = constant_of_inverse_expansion(poly);
        std::ostringstream out;
        const std::string exact =
            r.constant_term.get_num().get_str() + "/" + r.constant_term.get_den().get_str();
        const std::string expansion_exact =
            c.get_num().get_str() + "/" + c.get_den().get_str();
        out << "{\n";
        out << "  \"count\": " << r.count << ",\n";
        out << "  \"total_assignments\": " << r.total_assignments << ",\n";
        out << "  \"constant_term\": " << format_float(r.constant_term.get_d()) << ",\n";
        out << "  \"constant_term_exact\": \"" << exact << "\",\n";
        out << "  \"expansion_constant\": \"" << expansion_exact << "\",\n";
        out << "  \"expansion_terms\": " << poly.num_terms() << "\n";
        out << "}\n";
        write_out(cfg, out.str());
    }
    return r.count >= 1 ? 0 : 20;
}

int run_verify(const RunConfig& cfg) {
    CnfFormula f = parse_dimacs_file(cfg.input);
    CountOutcome outcome = count(f, count_options(cfg));
    OracleResult oracle = count_by_enumeration(f);
    VerifyReport rep;
    rep.lattice_count = outcome.model_count;
    rep.enumeration_count = oracle.count;
    rep.agree = rep.lattice_count == rep.enumeration_count;
    // expansion route: exact constant of the inverse-relaxed expansion, scaled
    // back to a model count over the declared variables
    const int n = f.num_occurrences();
    if (!f.clauses.empty() && n <= 16) {
        AlgebraicFormula af = apply_inverse_relaxation(encode(relax(f)));
        Rational c = constant_of_inverse_expansion(expand(af));
        rep.expansion_ran = true;
        rep.expansion_constant = c.get_num().get_str() + "/" + c.get_den().get_str();
        Rational k = c + 1; // k = (C+1) * 2^(n-1)
        for (int i = 1; i < n; ++i) k *= 2;
        if (k.get_den() != 1) throw MismatchDetected("expansion constant is not on the count lattice: " + rep.expansion_constant);
        std::int64_t kk = std::int64_t(k.get_num().get_si());
        const int free_vars = f.num_variables - outcome.diag.num_occurring_variables;
        rep.expansion_count = kk << free_vars;
        rep.agree = rep.agree && rep.expansion_count == rep.enumeration_count;
    }
    write_out(cfg, emit_report(rep, cfg.format));
    if (!rep.agree) {
        std::ostringstream msg;
        msg << "counts disagree: lattice " << rep.lattice_count << ", enumeration "
            << rep.enumeration_count;
        if (rep.expansion_ran) msg << ", expansion " << rep.expansion_count;
        throw MismatchDetected(msg.str());
    }
    return 0;
}

int run_spectrum(const RunConfig& cfg) {
    ScanOptions opts;
    opts.limit = cfg.scan_limit;
    opts.parallel = !cfg.serial;
    auto rows = spectrum_table(parse_preset(cfg.preset), cfg.n_from, cfg.n_to, opts);
    write_out(cfg, emit_report(rows, cfg.format));
    return 0;
}

int run_profile(const RunConfig& cfg) {
    const int n = cfg.profile_n;
    FrequencyScheme scheme = make_preset(parse_preset(cfg.preset), n);
    if (cfg.u) scheme = make_scheme(scheme.axes, *cfg.u);
    SignVector signs;
    if (!cfg.signs.empty()) {
        signs = parse_signs(cfg.signs);
        if (static_cast<int>(signs.size()) != n)
            throw Error("sign vector length does not match --n");
    } else {
        ScanOptions opts;
        opts.limit = cfg.scan_limit;
        opts.parallel = !cfg.serial;
        signs = min_max_frequency(build_frequencies(n, scheme), opts).argmin;
    }
    auto rows = axis_profile(scheme.u, signs, cfg.t_from, cfg.t_to, cfg.samples);
    write_out(cfg, emit_profile(rows, cfg.format));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    if (const char* env = std::getenv("LATCOUNT_MAX_POINTS")) {
        try {
            cfg.budget = std::stoll(env);
        } catch (const std::exception&) {
            std::cerr << "error: bad LATCOUNT_MAX_POINTS value '" << env << "'\n";
            return 1;
        }
    }

    CLI::App app{"model counter for uniform 2-/3-SAT via algebraic lattice summation"};
    app.require_subcommand(1);
    app.fallthrough(); // allow the global report flags after the subcommand
    std::string format = "json";
    app.add_option("--format", format, "report format: json or csv")->capture_default_str();
    app.add_option("--output", cfg.output, "write the report to a file instead of stdout");
    app.add_flag("--no-timing", "omit wall-clock diagnostics for byte-stable reports");
    app.add_option("--threads", cfg.threads, "OpenMP thread count (0 = library default)");

    auto add_scan_opts = [&](CLI::App* cmd) {
        cmd->add_option("--scan-limit", cfg.scan_limit,
                        "largest row count the 3^n sign scan accepts")
            ->capture_default_str();
        cmd->add_flag("--serial", cfg.serial, "single-threaded kernels");
    };
    auto add_count_opts = [&](CLI::App* cmd) {
        cmd->add_option("--preset", cfg.preset, "frequency preset: exp1, exp2, twovar, onevar")
            ->capture_default_str();
        cmd->add_option("--axes", [&cfg](const CLI::results_t& r) {
            cfg.axes = std::stoi(r[0]);
            return true;
        }, "override axis count (1, 2, or 4)");
        cmd->add_option("--u", [&cfg](const CLI::results_t& r) {
            cfg.u = std::stod(r[0]);
            return true;
        }, "override bias u");
        cmd->add_option("--p", [&cfg](const CLI::results_t& r) {
            cfg.p = std::stod(r[0]);
            return true;
        }, "override base point p");
        cmd->add_option("--v", [&cfg](const CLI::results_t& r) {
            cfg.v = std::stod(r[0]);
            return true;
        }, "override pair offset v");
        cmd->add_option("--h-offset", [&cfg](const CLI::results_t& r) {
            cfg.h = std::stod(r[0]);
            return true;
        }, "override quarter offset h");
        cmd->add_option("--multiplier", cfg.multiplier,
                        "integerization multiplier: auto, minimal, or an integer")
            ->capture_default_str();
        cmd->add_option("--modulus", [&cfg](const CLI::results_t& r) {
            cfg.modulus = std::stoll(r[0]);
            return true;
        }, "override lattice modulus l");
        cmd->add_option("--tolerance", cfg.tolerance, "residual tolerance")
            ->capture_default_str();
        cmd->add_option("--budget", cfg.budget,
                        "largest lattice point count accepted without --force");
        cmd->add_flag("--force", cfg.force, "run even when the budget is exceeded");
        add_scan_opts(cmd);
    };

    CLI::App* c_count = app.add_subcommand("count", "count models via the lattice pipeline");
    c_count->add_option("input", cfg.input, "DIMACS cnf file")->required();
    add_count_opts(c_count);

    CLI::App* c_oracle = app.add_subcommand("oracle", "brute-force enumeration count");
    c_oracle->add_option("input", cfg.input, "DIMACS cnf file")->required();
    c_oracle->add_flag("--expand", cfg.with_expansion,
                       "also expand the inverse-relaxed product form exactly");

    CLI::App* c_verify =
        app.add_subcommand("verify", "cross-check lattice, enumeration, and expansion counts");
    c_verify->add_option("input", cfg.input, "DIMACS cnf file")->required();
    add_count_opts(c_verify);

    CLI::App* c_spectrum = app.add_subcommand("spectrum", "min-max frequency survey table");
    c_spectrum->add_option("--preset", cfg.preset, "frequency preset")->capture_default_str();
    c_spectrum->add_option("--n-from", cfg.n_from, "first row count")->capture_default_str();
    c_spectrum->add_option("--n-to", cfg.n_to, "last row count")->capture_default_str();
    add_scan_opts(c_spectrum);

    CLI::App* c_profile =
        app.add_subcommand("profile", "axis-sum profile of one sign combination");
    c_profile->add_option("--n", cfg.profile_n, "row count")->capture_default_str();
    c_profile->add_option("--preset", cfg.preset, "frequency preset")->capture_default_str();
    c_profile->add_option("--u", [&cfg](const CLI::results_t& r) {
        cfg.u = std::stod(r[0]);
        return true;
    }, "override bias u");
    c_profile->add_option("--signs", cfg.signs, "sign vector like -1;1;0;... (default: scan argmin)");
    c_profile->add_option("--t-from", cfg.t_from, "sweep start")->capture_default_str();
    c_profile->add_option("--t-to", cfg.t_to, "sweep end")->capture_default_str();
    c_profile->add_option("--samples", cfg.samples, "sample count")->capture_default_str();
    add_scan_opts(c_profile);

    CLI11_PARSE(app, argc, argv);

    try {
        if (format == "json")
            cfg.format = ReportFormat::Json;
        else if (format == "csv")
            cfg.format = ReportFormat::Csv;
        else
            throw Error("unknown format '" + format + "'");
        cfg.include_timing = app.count("--no-timing") == 0;
#ifdef LATCOUNT_HAVE_OPENMP
        if (cfg.threads > 0) omp_set_num_threads(cfg.threads);
#endif
        if (c_count->parsed()) return run_count(cfg);
        if (c_oracle->parsed()) return run_oracle(cfg);
        if (c_verify->parsed()) return run_verify(cfg);
        if (c_spectrum->parsed()) return run_spectrum(cfg);
        if (c_profile->parsed()) return run_profile(cfg);
        std::cerr << "error: no command\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
