#include "qes/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <sstream>

#include "qes/analytic.hpp"
#include "qes/cross_solver.hpp"
#include "qes/format.hpp"
#include "qes/oracle.hpp"

namespace qes::cli {

using nlohmann::json;

namespace {

CliResult error_result(ErrorKind kind, const std::string& message)
{
    json rec = {{"error", std::string(to_string(kind))}, {"message", message}};
    return {InvalidOrUnsolvable, rec.dump() + "\n", message + "\n"};
}

/// Sends the payload to --output when given, otherwise leaves it on the result.
CliResult emit(const RunConfig& cfg, int code, std::string payload)
{
    if (cfg.output_path) {
        std::ofstream f(*cfg.output_path, std::ios::binary);
        if (!f) {
            return error_result(ErrorKind::InvalidInput, "cannot open output file " + *cfg.output_path);
        }
        f << payload;
        return {code, "", ""};
    }
    return {code, std::move(payload), ""};
}

ProblemSpec spec_of(const RunConfig& cfg)
{
    ProblemSpec spec{cfg.dimension, cfg.ell, cfg.ell_prime};
    validate(spec);
    return spec;
}

struct Resolved
{
    PotentialParams params;
    bool user_supplied = false;
};

Resolved resolve_params(const RunConfig& cfg, const ProblemSpec& spec)
{
    if (cfg.b.has_value() != cfg.c.has_value()) {
        throw Error(ErrorKind::InvalidInput, "--b and --c must be given together");
    }
    if (cfg.b) {
        PotentialParams p{cfg.a, *cfg.b, *cfg.c};
        validate(p);
        return {p, true};
    }
    if (spec.ell_prime) {
        return {solve_cross_l(cfg.a, spec.ell, *spec.ell_prime).params, false};
    }
    return {solve_same_qn(cfg.a, spec), false};
}

double build_tolerance(const RunConfig& cfg, bool user_supplied)
{
    if (cfg.tolerance) {
        return *cfg.tolerance;
    }
    return user_supplied ? rounded_tolerance : exact_tolerance;
}

json params_json(const PotentialParams& p)
{
    return {{"a", json_number(p.a)}, {"b", json_number(p.b)}, {"c", json_number(p.c)}};
}

json ell_prime_json(const ProblemSpec& spec)
{
    return spec.ell_prime ? json(*spec.ell_prime) : json(nullptr);
}

double max_abs(const std::array<double, 5>& v)
{
    double m = 0.0;
    for (double x : v) {
        m = std::max(m, std::abs(x));
    }
    return m;
}

json solution_record(const PotentialParams& params, const ProblemSpec& spec)
{
    auto ground = make_ground_state(params, spec);
    auto excited = make_excited_state(params, spec);
    auto rep = check_constraints(params, spec, exact_tolerance);
    double match = std::max(max_abs(coefficient_match_residuals(ground, params, spec)),
                            max_abs(coefficient_match_residuals(excited, params, spec)));
    return {
        {"a", json_number(params.a)},
        {"b", json_number(params.b)},
        {"c", json_number(params.c)},
        {"dimension", static_cast<int>(spec.dimension)},
        {"ell", spec.ell},
        {"ell_prime", ell_prime_json(spec)},
        {"kappa0", json_number(ground.kappa)},
        {"kappa1", json_number(excited.kappa)},
        {"E0", json_number(ground.energy)},
        {"E1", json_number(excited.energy)},
        {"alpha", json_number(excited.alpha)},
        {"beta", json_number(excited.beta)},
        {"gamma", json_number(excited.gamma)},
        {"residuals",
         {{"ground", json_number(rep.ground_residual)},
          {"excited", json_number(rep.excited_residual)},
          {"eta_form", spec.cross() ? json(nullptr) : json_number(rep.eta_constraint_residual)},
          {"coefficient_match_max", json_number(match)}}},
    };
}

template <class F>
CliResult guarded(F&& body)
{
    try {
        return body();
    } catch (const Error& e) {
        return error_result(e.kind(), e.what());
    }
}

} // namespace

CliResult cmd_solve(const RunConfig& cfg)
{
    return guarded([&] {
        if (cfg.b || cfg.c) {
            throw Error(ErrorKind::InvalidInput, "solve derives b and c; use check or verify for given couplings");
        }
        auto spec = spec_of(cfg);
        auto resolved = resolve_params(cfg, spec);
        return emit(cfg, Success, solution_record(resolved.params, spec).dump(2) + "\n");
    });
}

namespace {

std::string pass_fail(bool ok) { return ok ? "pass" : "FAIL"; }

} // namespace

CliResult cmd_check(const RunConfig& cfg)
{
    return guarded([&] {
        if (!cfg.b || !cfg.c) {
            throw Error(ErrorKind::InvalidInput, "check needs --b and --c");
        }
        auto spec = spec_of(cfg);
        PotentialParams params{cfg.a, *cfg.b, *cfg.c};
        double tol = cfg.tolerance.value_or(rounded_tolerance);
        auto rep = check_constraints(params, spec, tol);
        int code = rep.satisfied() ? Success : CheckFailed;

        if (cfg.format == OutputFormat::Json) {
            json out = {
                {"params", params_json(params)},
                {"dimension", static_cast<int>(spec.dimension)},
                {"ell", spec.ell},
                {"ell_prime", ell_prime_json(spec)},
                {"tolerance", tol},
                {"ground", {{"residual", json_number(rep.ground_residual)}, {"satisfied", rep.ground_satisfied}}},
                {"excited", {{"residual", json_number(rep.excited_residual)}, {"satisfied", rep.excited_satisfied}}},
                {"eta_form",
                 spec.cross() ? json(nullptr)
                              : json{{"residual", json_number(rep.eta_constraint_residual)},
                                     {"relative",
                                      json_number(std::abs(rep.eta_constraint_residual) / rep.eta_constraint_scale)},
                                     {"satisfied", rep.eta_constraint_satisfied}}},
                {"satisfied", rep.satisfied()},
            };
            return emit(cfg, code, out.dump(2) + "\n");
        }
        std::ostringstream os;
        os << "a=" << format_number(params.a) << " b=" << format_number(params.b) << " c=" << format_number(params.c)
           << " dimension=" << static_cast<int>(spec.dimension) << (spec.dimension == Dimension::ThreeD ? " ell=" : " m=")
           << spec.ell;
        if (spec.ell_prime) {
            os << " ell_prime=" << *spec.ell_prime;
        }
        os << " tolerance=" << format_number(tol) << "\n";
        os << "ground constraint   residual=" << format_number(rep.ground_residual) << "  "
           << pass_fail(rep.ground_satisfied) << "\n";
        os << (spec.ell_prime ? "cross constraint    residual=" : "excited constraint  residual=")
           << format_number(rep.excited_residual) << "  " << pass_fail(rep.excited_satisfied) << "\n";
        if (!spec.cross()) {
            os << "eta form            residual=" << format_number(rep.eta_constraint_residual)
               << "  relative=" << format_number(std::abs(rep.eta_constraint_residual) / rep.eta_constraint_scale)
               << "  " << pass_fail(rep.eta_constraint_satisfied) << "\n";
        }
        return emit(cfg, code, os.str());
    });
}

namespace {

json report_json(const VerificationReport& r)
{
    json nodes_numeric = json::array();
    for (double x : r.node_positions_numeric) {
        nodes_numeric.push_back(json_number(x));
    }
    json nodes_analytic = json::array();
    for (double x : r.node_positions_analytic) {
        nodes_analytic.push_back(json_number(x));
    }
    return {
        {"state", std::string(to_string(r.state))},
        {"verdict", r.pass ? "pass" : "fail"},
        {"residual_max", json_number(r.residual_max)},
        {"residual_ok", r.residual_ok},
        {"energy_analytic", json_number(r.energy_analytic)},
        {"energy_numeric", json_number(r.energy_numeric)},
        {"energy_delta", json_number(r.energy_delta)},
        {"energy_error_estimate", json_number(r.energy_error_estimate)},
        {"energy_ok", r.energy_ok},
        {"nodes_analytic", r.nodes_analytic},
        {"nodes_numeric", r.nodes_numeric},
        {"node_positions_analytic", nodes_analytic},
        {"node_positions_numeric", nodes_numeric},
        {"node_check", r.node_check},
        {"normalization",
         {{"N", json_number(r.norm)},
          {"integral", json_number(r.norm_integral)},
          {"error", json_number(r.norm_error)},
          {"ok", r.normalization_ok}}},
        {"tolerances",
         {{"residual", r.tolerances.residual},
          {"energy", r.tolerances.energy},
          {"normalization", r.tolerances.normalization}}},
        {"errors", r.errors},
    };
}

VerificationReport failed_report(State state, ToleranceTier tier, const std::string& why)
{
    VerificationReport r;
    r.state = state;
    r.tier = tier;
    r.tolerances = tolerances_for(tier);
    r.errors.push_back(why);
    return r;
}

bool has_candidate(const RunConfig& cfg)
{
    return cfg.alpha || cfg.beta || cfg.gamma || cfg.kappa || cfg.energy;
}

AnsatzSolution candidate_state(const RunConfig& cfg, const PotentialParams& params, const ProblemSpec& spec)
{
    auto closed = kappa_and_energy(params, State::FirstExcited);
    AnsatzSolution sol;
    sol.state = State::FirstExcited;
    sol.alpha = cfg.alpha.value_or(1.0);
    sol.beta = cfg.beta.value_or(0.0);
    sol.gamma = cfg.gamma.value_or(0.0);
    sol.kappa = cfg.kappa.value_or(closed.kappa);
    sol.energy = cfg.energy.value_or(closed.energy);
    sol.params = params;
    sol.spec = spec;
    return sol;
}

RadialGrid grid_of(const RunConfig& cfg, const PotentialParams& params)
{
    RadialGrid g = default_grid(params, cfg.grid_n);
    if (cfg.r_min) {
        g.r_min = *cfg.r_min;
    }
    if (cfg.r_max) {
        g.r_max = *cfg.r_max;
    }
    validate(g);
    return g;
}

} // namespace

CliResult cmd_verify(const RunConfig& cfg)
{
    return guarded([&] {
        auto spec = spec_of(cfg);
        auto resolved = resolve_params(cfg, spec);
        const auto& params = resolved.params;
        auto tier = resolved.user_supplied ? ToleranceTier::Rounded : ToleranceTier::Exact;
        double tol = build_tolerance(cfg, resolved.user_supplied);
        auto grid = grid_of(cfg, params);

        auto run_state = [&](State state) {
            try {
                AnsatzSolution sol;
                if (state == State::Ground) {
                    sol = make_ground_state(params, spec, tol);
                } else if (has_candidate(cfg)) {
                    sol = candidate_state(cfg, params, spec);
                } else {
                    sol = make_excited_state(params, spec, tol);
                }
                return verify(sol, grid, tier);
            } catch (const Error& e) {
                return failed_report(state, tier, std::string(to_string(e.kind())) + ": " + e.what());
            }
        };

        std::vector<State> states;
        if (cfg.state) {
            states.push_back(*cfg.state);
        } else {
            states = {State::Ground, State::FirstExcited};
        }
        std::vector<std::future<VerificationReport>> jobs;
        for (State s : states) {
            jobs.push_back(std::async(std::launch::async, run_state, s));
        }
        json reports = json::array();
        bool pass = true;
        for (auto& j : jobs) {
            auto r = j.get();
            pass = pass && r.pass;
            reports.push_back(report_json(r));
        }

        json out = {
            {"verdict", pass ? "pass" : "fail"},
            {"tier", std::string(to_string(tier))},
            {"params", params_json(params)},
            {"dimension", static_cast<int>(spec.dimension)},
            {"ell", spec.ell},
            {"ell_prime", ell_prime_json(spec)},
            {"grid", {{"r_min", json_number(grid.r_min)}, {"r_max", json_number(grid.r_max)}, {"n", grid.n}}},
            {"states", reports},
        };
        return emit(cfg, pass ? Success : CheckFailed, out.dump(2) + "\n");
    });
}

CliResult cmd_radial(const RunConfig& cfg)
{
    return guarded([&] {
        if (cfg.samples < 2) {
            throw Error(ErrorKind::InvalidInput, "--samples must be at least 2");
        }
        auto spec = spec_of(cfg);
        auto resolved = resolve_params(cfg, spec);
        const auto& params = resolved.params;
        double tol = build_tolerance(cfg, resolved.user_supplied);
        State state = cfg.state.value_or(State::Ground);
        AnsatzSolution sol =
            state == State::Ground ? make_ground_state(params, spec, tol) : make_excited_state(params, spec, tol);
        auto window = integration_window(sol);
        if (cfg.normalized) {
            sol.norm = normalize(sol);
        }

        // Flags exactly as `check` would report them for the printed couplings.
        PotentialParams printed{round_significant(params.a), round_significant(params.b),
                                round_significant(params.c)};
        auto rep = check_constraints(printed, spec, rounded_tolerance);

        std::ostringstream os;
        os << "# qes radial table\n";
        os << "# dimension=" << static_cast<int>(spec.dimension) << "\n";
        os << "# a=" << format_number(params.a) << "\n";
        os << "# b=" << format_number(params.b) << "\n";
        os << "# c=" << format_number(params.c) << "\n";
        os << (spec.dimension == Dimension::ThreeD ? "# ell=" : "# m=") << spec.ell << "\n";
        os << "# ell_prime=" << (spec.ell_prime ? std::to_string(*spec.ell_prime) : std::string("none")) << "\n";
        os << "# state=" << to_string(state) << "\n";
        os << "# kappa=" << format_number(sol.kappa) << "\n";
        os << "# E=" << format_number(sol.energy) << "\n";
        os << "# alpha=" << format_number(sol.alpha) << "\n";
        os << "# beta=" << format_number(sol.beta) << "\n";
        os << "# gamma=" << format_number(sol.gamma) << "\n";
        os << "# normalized=" << (cfg.normalized ? "true" : "false") << "\n";
        if (sol.norm) {
            os << "# N=" << format_number(*sol.norm) << "\n";
        }
        os << "# check_tolerance=" << format_number(rounded_tolerance) << "\n";
        os << "# ground_constraint=" << (rep.ground_satisfied ? "pass" : "fail") << "\n";
        os << "# excited_constraint=" << (rep.excited_satisfied ? "pass" : "fail") << "\n";
        os << "r,R\n";
        for (int i = 0; i < cfg.samples; ++i) {
            double r = window.lo * std::pow(window.hi / window.lo, static_cast<double>(i) / (cfg.samples - 1));
            if (i == cfg.samples - 1) {
                r = window.hi;
            }
            os << format_number(r) << "," << format_number(radial_eval(sol, r)) << "\n";
        }
        return emit(cfg, Success, os.str());
    });
}

namespace {

// Published parameter set whose ground state is exact but whose excited candidate is not.
constexpr double reference_b = 0.04082;
constexpr double reference_c = 0.18;
constexpr double reference_beta = -0.1787;
constexpr double reference_gamma = 0.8485;
constexpr double reference_e1 = 12.09621;

} // namespace

CliResult cmd_critique(const RunConfig& cfg)
{
    return guarded([&] {
        const ProblemSpec spec{Dimension::ThreeD, 0, std::nullopt};
        const PotentialParams params{1.0, reference_b, reference_c};
        auto rep = check_constraints(params, spec, rounded_tolerance);
        auto ground = kappa_and_energy(params, State::Ground);

        AnsatzSolution candidate;
        candidate.state = State::FirstExcited;
        candidate.alpha = 1.0;
        candidate.beta = reference_beta;
        candidate.gamma = reference_gamma;
        candidate.kappa = kappa_and_energy(params, State::FirstExcited).kappa;
        candidate.energy = reference_e1;
        candidate.params = params;
        candidate.spec = spec;
        auto match = coefficient_match_residuals(candidate, params, spec);
        auto ode = ode_residual(candidate, 1.0);

        const auto corrected = solve_same_qn(1.0, spec);
        json fixed = solution_record(corrected, spec);

        if (cfg.format == OutputFormat::Json) {
            json matches = json::array();
            for (double x : match) {
                matches.push_back(json_number(x));
            }
            json out = {
                {"reference_params", {{"a", 1.0}, {"b", reference_b}, {"c", reference_c}, {"ell", 0}}},
                {"tolerance", rounded_tolerance},
                {"ground",
                 {{"residual", json_number(rep.ground_residual)},
                  {"satisfied", rep.ground_satisfied},
                  {"kappa0", json_number(ground.kappa)},
                  {"E0", json_number(ground.energy)}}},
                {"excited",
                 {{"same_l_residual", json_number(rep.excited_residual)},
                  {"same_l_satisfied", rep.excited_satisfied},
                  {"eta_form_residual", json_number(rep.eta_constraint_residual)},
                  {"eta_form_satisfied", rep.eta_constraint_satisfied}}},
                {"candidate",
                 {{"alpha", 1.0},
                  {"beta", reference_beta},
                  {"gamma", reference_gamma},
                  {"kappa", json_number(candidate.kappa)},
                  {"energy", reference_e1},
                  {"coefficient_residuals", matches},
                  {"max_coefficient_residual", json_number(max_abs(match))},
                  {"ode_residual_r1", {{"raw", json_number(ode.raw)}, {"relative", json_number(ode.relative)}}}}},
                {"corrected", fixed},
            };
            return emit(cfg, Success, out.dump(2) + "\n");
        }

        std::ostringstream os;
        os << "Reference couplings a=1 b=" << format_number(reference_b) << " c=" << format_number(reference_c)
           << " l=0\n\n";
        os << "(i) ground state\n";
        os << "    ground constraint residual " << format_number(rep.ground_residual) << "  "
           << pass_fail(rep.ground_satisfied) << " at tolerance " << format_number(rounded_tolerance) << "\n";
        os << "    kappa0 = " << format_number(ground.kappa) << "  E0 = " << format_number(ground.energy) << "\n\n";
        os << "(ii) excited-state constraints\n";
        os << "    b + 6 sqrt(c) = " << format_number(rep.excited_residual) << "  "
           << pass_fail(rep.excited_satisfied) << "\n";
        os << "    eta form residual = " << format_number(rep.eta_constraint_residual) << "  "
           << pass_fail(rep.eta_constraint_satisfied) << "\n\n";
        os << "(iii) published excited candidate alpha=1 beta=" << format_number(reference_beta)
           << " gamma=" << format_number(reference_gamma) << " E1=" << format_number(reference_e1) << "\n";
        os << "    coefficient-matching residuals:";
        for (double x : match) {
            os << " " << format_number(x);
        }
        os << "\n    max |residual| = " << format_number(max_abs(match)) << "\n";
        os << "    ODE residual at r=1: raw " << format_number(ode.raw) << ", relative " << format_number(ode.relative)
           << "\n    -> not a solution of the radial equation\n\n";
        os << "(iv) exact same-l family at a=1, l=0\n";
        os << "    b = " << format_number(corrected.b) << "  sqrt(c) = " << format_number(corrected.sqrt_c())
           << "  c = " << format_number(corrected.c) << "\n";
        os << "    kappa0 = " << fixed["kappa0"].get<double>() << "  kappa1 = " << fixed["kappa1"].get<double>()
           << "  E0 = " << fixed["E0"].get<double>() << "  E1 = " << fixed["E1"].get<double>() << "\n";
        os << "    alpha = 0  gamma/beta = " << format_number(fixed["gamma"].get<double>()) << "\n";
        return emit(cfg, Success, os.str());
    });
}

CliResult run(const std::vector<std::string>& args)
{
    RunConfig cfg;
    CLI::App app{"Exact ground and first-excited states for V(r) = a r^2 + b r^-4 + c r^-6", "qes"};
    app.require_subcommand(1);

    int dim = 3;
    int ell = 0;
    int m = 0;
    int ell_prime = 0;
    double b = 0.0;
    double c = 0.0;
    double tol = 0.0;
    double r_min = 0.0;
    double r_max = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double kappa = 0.0;
    double energy = 0.0;
    std::string state;
    std::string output;
    bool as_json = false;

    struct Sub
    {
        CLI::App* app;
        Command command;
    };
    std::vector<Sub> subs;
    auto add = [&](const std::string& name, const std::string& help, Command cmd) {
        auto* s = app.add_subcommand(name, help);
        s->add_option("--dim", dim, "Dimension (2 or 3)")->check(CLI::IsMember({2, 3}));
        s->add_option("--a", cfg.a, "Coupling of r^2 (a > 0)");
        s->add_option("--ell", ell, "Angular momentum l (3-D) of the ground state")->check(CLI::NonNegativeNumber);
        s->add_option("--m", m, "Magnetic quantum number m (2-D)")->check(CLI::NonNegativeNumber);
        s->add_option("--ell-prime", ell_prime, "Angular momentum l' of the excited state (3-D)")
            ->check(CLI::NonNegativeNumber);
        s->add_option("--b", b, "Coupling of r^-4");
        s->add_option("--c", c, "Coupling of r^-6 (c > 0)");
        s->add_option("--state", state, "ground or excited")->check(CLI::IsMember({"ground", "excited"}));
        s->add_flag("--normalized", cfg.normalized, "Apply the normalisation factor");
        s->add_option("--samples", cfg.samples, "Rows of the radial table");
        s->add_option("--grid-n", cfg.grid_n, "Interior points of the base finite-difference grid");
        s->add_option("--r-min", r_min, "Inner wall of the finite-difference grid");
        s->add_option("--r-max", r_max, "Outer wall of the finite-difference grid");
        s->add_option("--tol", tol, "Constraint tolerance");
        s->add_option("--alpha", alpha, "Excited candidate coefficient alpha (verify)");
        s->add_option("--beta", beta, "Excited candidate coefficient beta (verify)");
        s->add_option("--gamma", gamma, "Excited candidate coefficient gamma (verify)");
        s->add_option("--kappa", kappa, "Excited candidate exponent (verify)");
        s->add_option("--energy", energy, "Excited candidate energy (verify)");
        s->add_option("--output", output, "Write to this file instead of standard output");
        s->add_flag("--json", as_json, "Structured output");
        subs.push_back({s, cmd});
    };
    add("solve", "Solve the parameter constraints and print the exact solution", Command::Solve);
    add("check", "Evaluate the constraint residuals for given couplings", Command::Check);
    add("verify", "Check analytic solutions against the numerical oracle", Command::Verify);
    add("radial", "Emit a sampled radial-function table as CSV", Command::Radial);
    add("critique", "Re-examine the published parameter set and its excited candidate", Command::Critique);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        return {Success, app.help(), ""};
    } catch (const CLI::CallForAllHelp&) {
        return {Success, app.help("", CLI::AppFormatMode::All), ""};
    } catch (const CLI::ParseError& e) {
        return error_result(ErrorKind::InvalidInput, e.what());
    }

    const Sub* chosen = nullptr;
    for (const auto& s : subs) {
        if (s.app->parsed()) {
            chosen = &s;
        }
    }
    if (chosen == nullptr) {
        return error_result(ErrorKind::InvalidInput, "no command given");
    }
    auto* s = chosen->app;
    cfg.command = chosen->command;
    cfg.dimension = dim == 2 ? Dimension::TwoD : Dimension::ThreeD;

    if (s->count("--m") && s->count("--ell")) {
        return error_result(ErrorKind::InvalidInput, "give either --ell or --m");
    }
    if (s->count("--m") && cfg.dimension != Dimension::TwoD) {
        return error_result(ErrorKind::InvalidInput, "--m applies to --dim 2");
    }
    cfg.ell = s->count("--m") ? m : ell;
    auto opt = [s](const char* name, auto value) {
        return s->count(name) ? std::optional<decltype(value)>(value) : std::nullopt;
    };
    cfg.ell_prime = opt("--ell-prime", ell_prime);
    cfg.b = opt("--b", b);
    cfg.c = opt("--c", c);
    cfg.tolerance = opt("--tol", tol);
    cfg.r_min = opt("--r-min", r_min);
    cfg.r_max = opt("--r-max", r_max);
    cfg.alpha = opt("--alpha", alpha);
    cfg.beta = opt("--beta", beta);
    cfg.gamma = opt("--gamma", gamma);
    cfg.kappa = opt("--kappa", kappa);
    cfg.energy = opt("--energy", energy);
    if (s->count("--output")) {
        cfg.output_path = output;
    }
    if (s->count("--state")) {
        cfg.state = state == "excited" ? State::FirstExcited : State::Ground;
    }
    switch (cfg.command) {
        case Command::Radial: cfg.format = OutputFormat::Csv; break;
        case Command::Check:
        case Command::Critique: cfg.format = as_json ? OutputFormat::Json : OutputFormat::Text; break;
        default: cfg.format = OutputFormat::Json; break;
    }

    switch (cfg.command) {
        case Command::Solve: return cmd_solve(cfg);
        case Command::Check: return cmd_check(cfg);
        case Command::Verify: return cmd_verify(cfg);
        case Command::Radial: return cmd_radial(cfg);
        case Command::Critique: return cmd_critique(cfg);
    }
    return error_result(ErrorKind::InvalidInput, "unknown command");
}

} // namespace qes::cli
