#include "qes/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>

#include "qes/tridiagonal.hpp"

namespace qes {

void validate(const RadialGrid& grid)
{
    if (!(grid.r_min > 0.0) || !(grid.r_max > grid.r_min) || !std::isfinite(grid.r_max)) {
        throw Error(ErrorKind::InvalidInput, "grid requires 0 < r_min < r_max");
    }
    if (grid.n < 16) {
        throw Error(ErrorKind::InvalidInput, "grid requires at least 16 interior points");
    }
}

RadialGrid default_grid(const PotentialParams& params, int n)
{
    validate(params);
    return RadialGrid{std::sqrt(params.sqrt_c() / 92.0), std::sqrt(92.0 / params.sqrt_a()), n};
}

OdeResidual ode_residual(const AnsatzSolution& sol, double r)
{
    const double value = radial_eval(sol, r);
    const auto d2 = radial_second_derivative_terms(sol, r);
    const double l = centrifugal_coefficient(
        sol.spec, sol.state == State::Ground ? QuantumNumber::Ground : QuantumNumber::Excited);
    const double v = sol.params.potential(r);
    const double raw = d2.value + (sol.energy - v - l / (r * r)) * value;
    const double scale = std::max({std::abs(d2.value), std::abs(sol.energy * value), d2.term_scale,
                                   std::numeric_limits<double>::min()});
    return {raw, std::abs(raw) / scale};
}

SymTridiagonal assemble_operator(const PotentialParams& params, double centrifugal, const RadialGrid& grid,
                                 kernels::Isa isa)
{
    validate(grid);
    const double h = grid.spacing();
    SymTridiagonal t;
    t.diag.resize(grid.n);
    t.offdiag.assign(grid.n - 1, -1.0 / (h * h));
    kernels::assemble_diagonal(isa, {grid.r_min, h, params.a, params.b, params.c, centrifugal}, t.diag);
    return t;
}

namespace {

// Mass of |R|^2 cut off by a wall is estimated from exp(-sqrt(c)/r_min^2) and exp(-sqrt(a) r_max^2).
constexpr double window_log_limit = 23.025850929940457; // ln(1e10)

void check_window(const PotentialParams& params, const RadialGrid& grid)
{
    if (params.sqrt_c() / (grid.r_min * grid.r_min) < window_log_limit) {
        throw Error(ErrorKind::InvalidWindow, "r_min truncates more than 1e-10 of the bound-state mass");
    }
    if (params.sqrt_a() * grid.r_max * grid.r_max < window_log_limit) {
        throw Error(ErrorKind::InvalidWindow, "r_max truncates more than 1e-10 of the bound-state mass");
    }
}

struct NodeScan
{
    int count;
    std::vector<double> locations;
};

NodeScan scan_nodes(const std::vector<double>& v, const RadialGrid& grid)
{
    double big = 0.0;
    for (double x : v) {
        big = std::max(big, std::abs(x));
    }
    const double floor = 1e-8 * big;
    NodeScan out{0, {}};
    int last = -1;
    for (int i = 0; i < static_cast<int>(v.size()); ++i) {
        if (std::abs(v[i]) <= floor) {
            continue;
        }
        if (last >= 0 && std::signbit(v[i]) != std::signbit(v[last])) {
            double r0 = grid.point(last);
            double r1 = grid.point(i);
            double t = v[last] / (v[last] - v[i]);
            out.locations.push_back(r0 + t * (r1 - r0));
            ++out.count;
        }
        last = i;
    }
    return out;
}

} // namespace

EigenResult fd_eigensolve_channel(const PotentialParams& params, double centrifugal, const RadialGrid& grid, int k,
                                  const EigenOptions& opts)
{
    validate(params);
    validate(grid);
    if (k < 1 || k > grid.n) {
        throw Error(ErrorKind::InvalidInput, "eigenvalue count must lie in [1, n]");
    }
    if (opts.refinements < 0 || opts.refinements > 6) {
        throw Error(ErrorKind::InvalidInput, "refinements must lie in [0, 6]");
    }
    check_window(params, grid);

    std::vector<RadialGrid> grids{grid};
    for (int j = 0; j < opts.refinements; ++j) {
        RadialGrid g = grids.back();
        g.n = 2 * g.n + 1;
        grids.push_back(g);
    }

    // Levels are independent; each owns its matrix.
    std::vector<std::future<std::vector<double>>> jobs;
    for (const auto& g : grids) {
        jobs.push_back(std::async(std::launch::async, [&params, centrifugal, g, k, &opts] {
            auto t = assemble_operator(params, centrifugal, g, opts.isa);
            return lowest_eigenvalues(t, k, opts.bisection_tol, opts.isa);
        }));
    }
    EigenResult res;
    res.grid = grid;
    for (auto& j : jobs) {
        res.levels.push_back(j.get());
    }

    const std::size_t m = res.levels.size();
    res.eigenvalues = res.levels.back();
    res.error_estimates.assign(k, 0.0);
    res.convergence_ratios.assign(k, std::numeric_limits<double>::quiet_NaN());
    if (m >= 2) {
        for (int i = 0; i < k; ++i) {
            double fine = res.levels[m - 1][i];
            double mid = res.levels[m - 2][i];
            double d_last = fine - mid;
            res.eigenvalues[i] = fine + d_last / 3.0;
            res.error_estimates[i] = std::abs(d_last) / 3.0;
            if (m >= 3) {
                double d_prev = mid - res.levels[m - 3][i];
                double previous_extrapolation = mid + d_prev / 3.0;
                res.error_estimates[i] = std::abs(res.eigenvalues[i] - previous_extrapolation);
                res.convergence_ratios[i] = d_prev / d_last;
                double noise = 1e-9 * std::max(1.0, std::abs(fine));
                if (std::abs(d_prev) > noise &&
                    (std::signbit(d_prev) != std::signbit(d_last) || std::abs(d_last) >= std::abs(d_prev))) {
                    throw Error(ErrorKind::GridTooCoarse,
                                "eigenvalue " + std::to_string(i) + " does not converge monotonically under refinement");
                }
            }
        }
    }

    auto base = assemble_operator(params, centrifugal, grid, opts.isa);
    for (int i = 0; i < k; ++i) {
        auto vec = inverse_iteration(base, res.levels.front()[i]);
        auto nodes = scan_nodes(vec, grid);
        res.node_counts.push_back(nodes.count);
        res.node_locations.push_back(std::move(nodes.locations));
        res.eigenvectors.push_back(std::move(vec));
    }
    return res;
}

EigenResult fd_eigensolve(const PotentialParams& params, const ProblemSpec& spec, const RadialGrid& grid, int k,
                          const EigenOptions& opts)
{
    validate(spec);
    return fd_eigensolve_channel(params, centrifugal_coefficient(spec, QuantumNumber::Ground), grid, k, opts);
}

namespace {

AnsatzSolution unnormalised(const AnsatzSolution& sol)
{
    AnsatzSolution copy = sol;
    copy.norm.reset();
    return copy;
}

/// log of the envelope |alpha| + |beta| r^2 + |gamma| r^-2 times r^kappa exp(-phi), squared.
double log_envelope_sq(const AnsatzSolution& sol, double r)
{
    double r2 = r * r;
    double poly = std::abs(sol.alpha) + std::abs(sol.beta) * r2 + std::abs(sol.gamma) / r2;
    double phi = 0.5 * (sol.params.sqrt_a() * r2 + sol.params.sqrt_c() / r2);
    return 2.0 * (sol.kappa * std::log(r) - phi + std::log(poly));
}

} // namespace

Window integration_window(const AnsatzSolution& sol, double depth)
{
    if (!(sol.params.a > 0.0) || !(sol.params.c > 0.0)) {
        throw Error(ErrorKind::NonIntegrable, "radial function does not decay without a > 0 and c > 0");
    }
    const double sa = sol.params.sqrt_a();
    const double sc = sol.params.sqrt_c();
    // Stationary point of kappa ln r - phi(r): sqrt(a) x^2 - kappa x - sqrt(c) = 0, x = r^2.
    const double x = (sol.kappa + std::sqrt(sol.kappa * sol.kappa + 4.0 * sa * sc)) / (2.0 * sa);
    const double r_peak_guess = std::sqrt(x);

    double r_peak = r_peak_guess;
    double peak = -std::numeric_limits<double>::infinity();
    const int samples = 2001;
    for (int i = 0; i < samples; ++i) {
        double r = r_peak_guess * std::pow(10.0, -2.0 + 4.0 * i / (samples - 1));
        double g = log_envelope_sq(sol, r);
        if (g > peak) {
            peak = g;
            r_peak = r;
        }
    }
    const double target = peak - depth;

    auto march = [&](double factor) {
        double inner = r_peak;
        double outer = r_peak;
        for (int i = 0; i < 100000; ++i) {
            outer = inner * factor;
            if (log_envelope_sq(sol, outer) < target) {
                // Bisect the crossing in log r.
                for (int j = 0; j < 100; ++j) {
                    double m = std::sqrt(inner * outer);
                    if (log_envelope_sq(sol, m) < target) {
                        outer = m;
                    } else {
                        inner = m;
                    }
                }
                return outer;
            }
            inner = outer;
        }
        throw Error(ErrorKind::NonIntegrable, "radial function does not decay");
    };
    return {march(1.0 / 1.05), march(1.05)};
}

namespace {

Normalization finish(const QuadratureResult& q)
{
    if (!std::isfinite(q.value) || !(q.value > 0.0)) {
        throw Error(ErrorKind::NonIntegrable, "normalisation integral is not positive and finite");
    }
    return {1.0 / std::sqrt(q.value), q.value, q.error};
}

} // namespace

Normalization normalization(const AnsatzSolution& sol, double tol, double depth)
{
    auto bare = unnormalised(sol);
    auto w = integration_window(bare, depth);
    QuadratureOptions opts;
    opts.rel_tol = tol;
    auto q = integrate_gauss_kronrod(
        [&bare](double r) {
            double v = radial_eval(bare, r);
            return v * v;
        },
        w.lo, w.hi, opts);
    return finish(q);
}

Normalization normalization_cross_check(const AnsatzSolution& sol, double tol, double depth)
{
    auto bare = unnormalised(sol);
    auto w = integration_window(bare, depth);
    QuadratureOptions opts;
    opts.rel_tol = tol;
    auto q = integrate_gauss_legendre(
        [&bare](double r) {
            double v = radial_eval(bare, r);
            return v * v;
        },
        w.lo, w.hi, opts);
    return finish(q);
}

double normalize(const AnsatzSolution& sol, double tol)
{
    return normalization(sol, tol).norm;
}

std::string_view to_string(ToleranceTier tier)
{
    return tier == ToleranceTier::Exact ? "exact" : "rounded";
}

VerifyTolerances tolerances_for(ToleranceTier tier)
{
    if (tier == ToleranceTier::Exact) {
        return {1e-10, 1e-3, 1e-10};
    }
    return {1e-3, 1e-3, 1e-10};
}

VerificationReport verify(const AnsatzSolution& sol, const RadialGrid& grid, ToleranceTier tier,
                          const EigenOptions& opts)
{
    VerificationReport rep;
    rep.state = sol.state;
    rep.tier = tier;
    rep.tolerances = tolerances_for(tier);
    rep.energy_analytic = sol.energy;
    rep.node_positions_analytic = node_positions(sol);
    rep.nodes_analytic = static_cast<int>(rep.node_positions_analytic.size());

    auto record = [&rep](const char* check, const std::exception& e) {
        rep.errors.push_back(std::string(check) + ": " + e.what());
    };

    try {
        auto w = integration_window(sol);
        const int samples = 64;
        for (int i = 0; i < samples; ++i) {
            double r = w.lo * std::pow(w.hi / w.lo, static_cast<double>(i) / (samples - 1));
            rep.residual_max = std::max(rep.residual_max, ode_residual(sol, r).relative);
        }
        rep.residual_ok = rep.residual_max <= rep.tolerances.residual;
    } catch (const std::exception& e) {
        record("residual", e);
    }

    try {
        const double l = centrifugal_coefficient(
            sol.spec, sol.state == State::Ground ? QuantumNumber::Ground : QuantumNumber::Excited);
        const int index = rep.nodes_analytic;
        auto eig = fd_eigensolve_channel(sol.params, l, grid, std::max(2, index + 1), opts);
        rep.energy_numeric = eig.eigenvalues[index];
        rep.energy_delta = rep.energy_numeric - rep.energy_analytic;
        rep.energy_error_estimate = eig.error_estimates[index];
        rep.energy_ok = std::abs(rep.energy_delta) <= rep.tolerances.energy;
        rep.nodes_numeric = eig.node_counts[index];
        rep.node_positions_numeric = eig.node_locations[index];
        bool ok = rep.nodes_numeric == rep.nodes_analytic;
        const double h = grid.spacing();
        for (std::size_t i = 0; ok && i < rep.node_positions_analytic.size(); ++i) {
            ok = std::abs(rep.node_positions_numeric[i] - rep.node_positions_analytic[i]) <= h;
        }
        rep.node_check = ok;
    } catch (const std::exception& e) {
        record("eigensolve", e);
    }

    try {
        auto n = normalization(sol);
        auto other = normalization_cross_check(sol);
        rep.norm = n.norm;
        rep.norm_integral = n.integral;
        rep.norm_error = n.error;
        double rel = std::abs(n.integral - other.integral) / n.integral;
        rep.normalization_ok = n.error <= rep.tolerances.normalization * n.integral && rel <= 1e-8;
    } catch (const std::exception& e) {
        record("normalization", e);
    }

    rep.pass = rep.errors.empty() && rep.residual_ok && rep.energy_ok && rep.node_check && rep.normalization_ok;
    return rep;
}

} // namespace qes
