#include "turing_cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <numbers>

namespace turing::cli {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

int default_threads() {
    if (const char* env = std::getenv("TURING_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    return 1;
}

double need(const RunConfig& cfg, const std::string& key) {
    const auto it = cfg.params.find(key);
    if (it == cfg.params.end())
        throw validation_error("missing required parameter --" + key + " for this command/family");
    return it->second;
}

double get_or(const RunConfig& cfg, const std::string& key, double fallback) {
    const auto it = cfg.params.find(key);
    return it == cfg.params.end() ? fallback : it->second;
}

bool has(const RunConfig& cfg, const std::string& key) { return cfg.params.count(key) > 0; }

GrowthBound growth_from(const RunConfig& cfg) {
    GrowthBound g;
    g.K = get_or(cfg, "K", g.K);
    g.theta = get_or(cfg, "theta", g.theta);
    g.t_min = get_or(cfg, "tmin", g.t_min);
    return g;
}

double need_gp(const RunConfig& cfg) {
    if (has(cfg, "gp")) return need(cfg, "gp");
    if (has(cfg, "gp_over_2pi")) return kTwoPi * need(cfg, "gp_over_2pi");
    throw validation_error("missing --gp or --gp-over-2pi");
}

DedekindShape shape_from(const RunConfig& cfg) {
    DedekindShape s;
    s.degree = static_cast<int>(need(cfg, "degree"));
    s.r1 = static_cast<int>(need(cfg, "r1"));
    s.r2 = static_cast<int>(need(cfg, "r2"));
    s.abs_discriminant = need(cfg, "disc");
    return s;
}

TuringConstants constants_from(const RunConfig& cfg, Family family) {
    if (has(cfg, "a") && has(cfg, "b")) {
        TuringConstants c;
        c.a = need(cfg, "a");
        c.b = need(cfg, "b");
        if (has(cfg, "g")) c.g = need(cfg, "g");
        c.family = family;
        c.t0 = get_or(cfg, "t0", family == Family::zeta ? 168.0 * std::numbers::pi
                                 : family == Family::dirichlet ? 50.0 : 40.0);
        return c;
    }
    const ConvexityParams p{need(cfg, "c"), need(cfg, "d")};
    switch (family) {
        case Family::zeta: return zeta_constants(p, growth_from(cfg), cfg.quadrature);
        case Family::dirichlet:
            return dirichlet_constants(p, get_or(cfg, "t0", 50.0), cfg.quadrature);
        case Family::dedekind:
            return dedekind_constants(p, get_or(cfg, "t0", 40.0), cfg.quadrature);
    }
    throw validation_error("unreachable family");
}

FamilyContext context_from(const RunConfig& cfg) {
    switch (cfg.family) {
        case Family::zeta: return ZetaContext{growth_from(cfg), need_gp(cfg)};
        case Family::dirichlet:
            return DirichletContext{static_cast<long>(need(cfg, "Q")), need(cfg, "t2"),
                                    get_or(cfg, "t0", 50.0)};
        case Family::dedekind:
            return DedekindContext{shape_from(cfg), need(cfg, "t2"), get_or(cfg, "t0", 40.0)};
    }
    throw validation_error("unreachable family");
}

io::json inputs_echo(const RunConfig& cfg) {
    io::json j;
    j["family"] = family_name(cfg.family);
    for (const auto& [k, v] : cfg.params) j[k] = v;
    return j;
}

int emit_report(const RunConfig& cfg, const std::string& type, const io::json& as_json,
                const std::string& as_csv, const std::string& as_text) {
    std::string body;
    switch (cfg.format) {
        case io::Format::json:
            body = io::envelope(type, as_json, inputs_echo(cfg)).dump(2) + "\n";
            break;
        case io::Format::csv: body = as_csv; break;
        case io::Format::text: body = as_text; break;
    }
    io::emit(body, cfg.output_path);
    return 0;
}

int run_constants(const RunConfig& cfg) {
    const TuringConstants c = constants_from(cfg, cfg.family);
    const io::Style st{cfg.sig_digits};
    return emit_report(cfg, "turing_constants", io::to_json(c), io::to_csv(c, st),
                       io::to_text(c, st));
}

int run_optimize(const RunConfig& cfg) {
    const FamilyContext ctx = context_from(cfg);
    SearchResult result;
    if (cfg.refine_mode) {
        const ConvexityParams seed{need(cfg, "seed_c"), need(cfg, "seed_d")};
        result = refine(cfg.family, seed, need(cfg, "radius"), need(cfg, "step"), ctx,
                        cfg.quadrature, cfg.threads);
    } else {
        LatticeSpec lattice;
        lattice.c_start = need(cfg, "c_start");
        lattice.d_start = need(cfg, "d_start");
        lattice.c_step = need(cfg, "c_step");
        lattice.d_step = need(cfg, "d_step");
        lattice.count = static_cast<int>(need(cfg, "count"));
        lattice.coupling = cfg.coupling.value_or(Coupling::full_grid);
        result = grid_minimize(cfg.family, lattice, ctx, cfg.quadrature, cfg.threads);
    }
    const io::Style st{cfg.sig_digits};
    return emit_report(cfg, "search_result", io::to_json(result), io::to_csv(result, st),
                       io::to_text(result, st));
}

int run_budget(const RunConfig& cfg) {
    const TuringConstants c = constants_from(cfg, cfg.family);
    double value = 0.0;
    switch (cfg.family) {
        case Family::zeta: value = zeta_objective(c, need_gp(cfg)); break;
        case Family::dirichlet:
            value = dirichlet_budget(c, static_cast<long>(need(cfg, "Q")), need(cfg, "t2"));
            break;
        case Family::dedekind:
            value = dedekind_budget(c, shape_from(cfg), need(cfg, "t2"));
            break;
    }
    io::json j;
    j["family"] = family_name(cfg.family);
    j["value"] = value;
    j["constants"] = io::to_json(c);
    const std::string num = io::format_number(value, cfg.sig_digits);
    return emit_report(cfg, "budget", j, "family,value\n" + std::string(family_name(cfg.family)) +
                                             "," + num + "\n",
                       "budget : " + num + "\n");
}

int run_blocks_required(const RunConfig& cfg) {
    const TuringConstants c = constants_from(cfg, Family::zeta);
    const double gp = need_gp(cfg);
    const long required = gram_block_requirement(c, gp);
    io::json j;
    j["g_p"] = gp;
    j["required_blocks"] = required;
    j["constants"] = io::to_json(c);
    return emit_report(cfg, "blocks_required", j,
                       "g_p,required_blocks\n" + io::format_number(gp, cfg.sig_digits) + "," +
                           std::to_string(required) + "\n",
                       std::to_string(required) + "\n");
}

int run_growth_check(const RunConfig& cfg) {
    const GrowthReport report = growth_check(need(cfg, "t_lo"), need(cfg, "t_hi"),
                                             static_cast<long>(need(cfg, "samples")));
    const io::Style st{cfg.sig_digits};
    emit_report(cfg, "growth_report", io::to_json(report), io::to_csv(report, st),
                io::to_text(report, st));
    return report.pass ? 0 : 4;
}

ScanPolicy policy_from(const RunConfig& cfg) {
    ScanPolicy policy;
    policy.z_order = static_cast<int>(get_or(cfg, "order", policy.z_order));
    policy.refine_factor = static_cast<int>(get_or(cfg, "refine_factor", policy.refine_factor));
    policy.max_depth = static_cast<int>(get_or(cfg, "max_depth", policy.max_depth));
    policy.step_fraction = get_or(cfg, "step_fraction", policy.step_fraction);
    return policy;
}

int run_certify(const RunConfig& cfg) {
    long n = static_cast<long>(need(cfg, "n"));
    long p = static_cast<long>(need(cfg, "p"));
    CertifyOptions options;
    options.policy = policy_from(cfg);
    options.scan_from = get_or(cfg, "scan_from", options.scan_from);
    if (cfg.auto_align) {
        while (!is_good_gram_point(n, options.policy)) ++n;
        while (!is_good_gram_point(p, options.policy)) ++p;
    }
    const TuringConstants consts = constants_from(cfg, Family::zeta);
    const CertificationReport report = certify(n, p, consts, options);
    const io::Style st{cfg.sig_digits};
    if (cfg.format == io::Format::csv) {
        // Machine format carries the Gram-block table of the certified run.
        const BlockClassification cls = classify_blocks(n, p, options.policy);
        return emit_report(cfg, "certification", io::to_json(report), io::to_csv(cls, st),
                           io::to_text(report, st));
    }
    return emit_report(cfg, "certification", io::to_json(report), "", io::to_text(report, st));
}

}  // namespace

std::optional<RunConfig> parse(int argc, const char* const* argv) {
    RunConfig cfg;
    cfg.threads = default_threads();

    CLI::App app{"Turing-method constants, parameter optimization and zero-count "
                 "certification for zeta, Dirichlet L and Dedekind zeta families"};
    app.fallthrough();
    app.require_subcommand(1);

    std::string format = "text", family = "zeta", coupling;
    app.add_option("--format,-f", format, "Output format: text, json or csv");
    app.add_option("--out,-o", cfg.output_path, "Write the report to this path");
    app.add_option("--threads", cfg.threads, "Worker threads (default $TURING_THREADS or 1)");
    app.add_option("--sig-digits", cfg.sig_digits, "Significant digits in text/csv output");
    app.add_option("--prime-cutoff", cfg.quadrature.prime_cutoff, "Largest explicit prime");
    app.add_option("--power-cutoff", cfg.quadrature.power_cutoff, "Largest prime-power exponent");
    app.add_option("--em-terms", cfg.quadrature.em_terms, "Euler-Maclaurin correction order");
    app.add_option("--tail-tol", cfg.quadrature.tail_tol, "Truncation tail bound");

    const auto opt = [&cfg](CLI::App* cmd, const std::string& flag, const std::string& key,
                            const std::string& help, bool required = false) {
        auto* o = cmd->add_option_function<double>(
            flag, [&cfg, key](double v) { cfg.params[key] = v; }, help);
        if (required) o->required();
        return o;
    };

    auto* constants = app.add_subcommand("constants", "Evaluate (a, b[, g]) at given (c, d)");
    constants->add_option("--family", family, "zeta, dirichlet or dedekind");
    opt(constants, "--c", "c", "convexity abscissa in (1, 5/4]", true);
    opt(constants, "--d", "d", "shift parameter in (1/2, 1]", true);
    opt(constants, "--K", "K", "growth-bound coefficient (zeta)");
    opt(constants, "--theta", "theta", "growth-bound exponent (zeta)");
    opt(constants, "--tmin", "tmin", "growth-bound validity threshold (zeta)");
    opt(constants, "--t0", "t0", "height threshold (dirichlet/dedekind)");

    auto* optimize = app.add_subcommand("optimize", "Minimize the family objective over a lattice");
    optimize->add_option("--family", family, "zeta, dirichlet or dedekind");
    optimize->add_option("--coupling", coupling, "stage1, stage2 or grid");
    optimize->add_flag("--refine", cfg.refine_mode, "Refine around a seed instead of a lattice");
    opt(optimize, "--c-start", "c_start", "first c value");
    opt(optimize, "--d-start", "d_start", "first d value");
    opt(optimize, "--c-step", "c_step", "c step");
    opt(optimize, "--d-step", "d_step", "d step");
    opt(optimize, "--count", "count", "points per axis");
    opt(optimize, "--seed-c", "seed_c", "refine: seed c");
    opt(optimize, "--seed-d", "seed_d", "refine: seed d");
    opt(optimize, "--radius", "radius", "refine: box half-width");
    opt(optimize, "--step", "step", "refine: grid step");
    opt(optimize, "--gp", "gp", "zeta: Gram-block height g_p");
    opt(optimize, "--gp-over-2pi", "gp_over_2pi", "zeta: g_p as a multiple of 2 pi");
    opt(optimize, "--K", "K", "zeta growth-bound coefficient");
    opt(optimize, "--theta", "theta", "zeta growth-bound exponent");
    opt(optimize, "--tmin", "tmin", "zeta growth-bound threshold");
    opt(optimize, "--Q", "Q", "dirichlet: conductor");
    opt(optimize, "--t2", "t2", "upper height t2");
    opt(optimize, "--t0", "t0", "height threshold");
    opt(optimize, "--degree", "degree", "dedekind: field degree N");
    opt(optimize, "--r1", "r1", "dedekind: real embeddings");
    opt(optimize, "--r2", "r2", "dedekind: complex pairs");
    opt(optimize, "--disc", "disc", "dedekind: |D_K|");

    auto* budget = app.add_subcommand("budget", "Evaluate the objective/budget at given constants");
    budget->add_option("--family", family, "zeta, dirichlet or dedekind");
    opt(budget, "--a", "a", "constant a");
    opt(budget, "--b", "b", "constant b");
    opt(budget, "--g", "g", "constant g (dedekind)");
    opt(budget, "--c", "c", "or derive constants from c");
    opt(budget, "--d", "d", "and d");
    opt(budget, "--gp", "gp", "zeta: height g_p");
    opt(budget, "--gp-over-2pi", "gp_over_2pi", "zeta: g_p as a multiple of 2 pi");
    opt(budget, "--Q", "Q", "dirichlet: conductor");
    opt(budget, "--t2", "t2", "upper height t2");
    opt(budget, "--t0", "t0", "height threshold");
    opt(budget, "--degree", "degree", "dedekind: field degree N");
    opt(budget, "--r1", "r1", "dedekind: real embeddings");
    opt(budget, "--r2", "r2", "dedekind: complex pairs");
    opt(budget, "--disc", "disc", "dedekind: |D_K|");

    auto* blocks = app.add_subcommand("blocks-required",
                                      "Gram blocks needed by the Lehman-Brent criterion");
    blocks->add_option("--family", family, "must be zeta");
    opt(blocks, "--a", "a", "constant a");
    opt(blocks, "--b", "b", "constant b");
    opt(blocks, "--c", "c", "or derive constants from c");
    opt(blocks, "--d", "d", "and d");
    opt(blocks, "--gp", "gp", "height g_p");
    opt(blocks, "--gp-over-2pi", "gp_over_2pi", "g_p as a multiple of 2 pi");

    auto* growth = app.add_subcommand("growth-check",
                                      "Check max |Z(t)| / t^(1/4) against 2.53");
    opt(growth, "--t-lo", "t_lo", "lower sample height", true);
    opt(growth, "--t-hi", "t_hi", "upper sample height", true);
    opt(growth, "--samples", "samples", "number of uniform samples", true);

    auto* certify = app.add_subcommand("certify",
                                       "Certify the exact zero count N(g_p) = p + 1");
    opt(certify, "--n", "n", "start Gram index (g_n > 168 pi)", true);
    opt(certify, "--p", "p", "end Gram index", true);
    opt(certify, "--a", "a", "constant a");
    opt(certify, "--b", "b", "constant b");
    opt(certify, "--c", "c", "or derive constants from c");
    opt(certify, "--d", "d", "and d");
    certify->add_flag("--auto-align", cfg.auto_align,
                      "advance n and p to the next good Gram points");
    opt(certify, "--scan-from", "scan_from", "bottom-scan start height (default 10)");
    opt(certify, "--order", "order", "Riemann-Siegel correction order (default 2)");
    opt(certify, "--refine-factor", "refine_factor", "scan density multiplier (default 4)");
    opt(certify, "--max-depth", "max_depth", "scan refinement depth (default 8)");
    opt(certify, "--step-fraction", "step_fraction", "scan step as a gap fraction (default 1/4)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        throw validation_error(e.what());
    }

    if (constants->parsed()) cfg.command = Command::constants;
    else if (optimize->parsed()) cfg.command = Command::optimize;
    else if (budget->parsed()) cfg.command = Command::budget;
    else if (blocks->parsed()) cfg.command = Command::blocks_required;
    else if (growth->parsed()) cfg.command = Command::growth_check;
    else cfg.command = Command::certify;

    cfg.format = io::parse_format(format);
    if (family == "zeta") cfg.family = Family::zeta;
    else if (family == "dirichlet") cfg.family = Family::dirichlet;
    else if (family == "dedekind") cfg.family = Family::dedekind;
    else throw validation_error("unknown family '" + family + "'");

    if (!coupling.empty()) {
        if (coupling == "stage1") cfg.coupling = Coupling::stage1;
        else if (coupling == "stage2") cfg.coupling = Coupling::stage2;
        else if (coupling == "grid") cfg.coupling = Coupling::full_grid;
        else throw validation_error("unknown coupling '" + coupling + "'");
    }
    if (cfg.sig_digits < 1 || cfg.sig_digits > 17)
        throw validation_error("--sig-digits must lie in [1, 17]");
    if (cfg.threads < 1) throw validation_error("--threads must be positive");
    cfg.quadrature.validate();
    return cfg;
}

int run(const RunConfig& cfg) {
    switch (cfg.command) {
        case Command::constants: return run_constants(cfg);
        case Command::optimize: return run_optimize(cfg);
        case Command::budget: return run_budget(cfg);
        case Command::blocks_required: return run_blocks_required(cfg);
        case Command::growth_check: return run_growth_check(cfg);
        case Command::certify: return run_certify(cfg);
    }
    return 2;
}

int main_entry(int argc, const char* const* argv) {
    const auto emit_error = [](const char* type, const std::string& message) {
        io::json j;
        j["schema"] = "turing-error/1";
        j["error"] = {{"type", type}, {"message", message}};
        std::cerr << j.dump() << std::endl;
    };
    try {
        const auto cfg = parse(argc, argv);
        if (!cfg) return 0;
        return run(*cfg);
    } catch (const validation_error& e) {
        emit_error("validation", e.what());
        return 2;
    } catch (const convergence_error& e) {
        emit_error("convergence", e.what());
        return 3;
    } catch (const certification_error& e) {
        emit_error("certification", e.what());
        return 4;
    } catch (const io_error& e) {
        emit_error("io", e.what());
        return 5;
    }
}

}  // namespace turing::cli
