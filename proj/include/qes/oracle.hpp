#pragma once

/** \file oracle.hpp
 *
 *  \brief Numerical checks of analytic solutions that share no code path with them.
 *
 *  The radial equation -R'' + [V(r) + L/r^2] R = E R is discretised with
 *  three-point differences on a uniform grid with Dirichlet walls. The wall at
 *  r_min sits deep inside the region where exp(-sqrt(c) r^-2 / 2) suppresses
 *  every bound state, so it perturbs the low spectrum far below the tolerances
 *  used here.
 */

#include <optional>
#include <string>
#include <vector>

#include "qes/analytic.hpp"
#include "qes/kernels/kernels.hpp"
#include "qes/quadrature.hpp"
#include "qes/tridiagonal.hpp"

namespace qes {

struct RadialGrid
{
    double r_min = 0.0;
    double r_max = 0.0;
    /// Interior points.
    int n = 0;

    double spacing() const { return (r_max - r_min) / (n + 1); }
    double point(int i) const { return r_min + (i + 1) * spacing(); }
};

/// Throws InvalidInput unless 0 < r_min < r_max and n >= 16.
void validate(const RadialGrid& grid);

/// r_min from sqrt(c) r^-2 / 2 = 46, r_max from sqrt(a) r^2 / 2 = 46.
RadialGrid default_grid(const PotentialParams& params, int n = 4000);

struct OdeResidual
{
    double raw;
    /// raw / max(|R''|, |E R|, term scale of R'', tiny)
    double relative;
};

/// R'' + [E - V(r) - L/r^2] R with R'' from the closed-form derivative.
OdeResidual ode_residual(const AnsatzSolution& sol, double r);

struct EigenOptions
{
    /// Halvings of h after the base grid; eigenvalues are extrapolated from the two finest grids.
    int refinements = 2;
    double bisection_tol = 1e-12;
    kernels::Isa isa = kernels::active_isa();
};

struct EigenResult
{
    /// Richardson-extrapolated eigenvalues when refinements > 0, base-grid values otherwise.
    std::vector<double> eigenvalues;
    /// Per grid level (base first), ascending eigenvalues.
    std::vector<std::vector<double>> levels;
    std::vector<double> error_estimates;
    /// Ratio of successive refinement differences per eigenvalue; about 4 for second order.
    std::vector<double> convergence_ratios;
    /// Unit eigenvectors on the base grid.
    std::vector<std::vector<double>> eigenvectors;
    std::vector<int> node_counts;
    /// Interpolated sign changes of each eigenvector on the base grid.
    std::vector<std::vector<double>> node_locations;
    RadialGrid grid;
};

/// Assembles the symmetric tridiagonal operator on `grid` for the channel with centrifugal coefficient L.
SymTridiagonal assemble_operator(const PotentialParams& params, double centrifugal, const RadialGrid& grid,
                                 kernels::Isa isa = kernels::active_isa());

/// Lowest k eigenpairs of the radial operator for the ground-state quantum number of `spec`.
/// Throws InvalidWindow, GridTooCoarse or InvalidInput.
EigenResult fd_eigensolve(const PotentialParams& params, const ProblemSpec& spec, const RadialGrid& grid, int k,
                          const EigenOptions& opts = {});

/// Same, for an explicit centrifugal coefficient.
EigenResult fd_eigensolve_channel(const PotentialParams& params, double centrifugal, const RadialGrid& grid, int k,
                                  const EigenOptions& opts = {});

/// Window [lo, hi] outside which log R^2 is more than `depth` below its peak.
struct Window
{
    double lo;
    double hi;
};

Window integration_window(const AnsatzSolution& sol, double depth = 40.0);

struct Normalization
{
    double norm;
    double integral;
    double error;
};

/// N = 1/sqrt(int_0^inf R_unnormalised^2 dr) by adaptive Gauss-Kronrod over the integration window.
Normalization normalization(const AnsatzSolution& sol, double tol = 1e-12, double depth = 40.0);

/// Same integral by adaptive Gauss-Legendre; the independent second rule.
Normalization normalization_cross_check(const AnsatzSolution& sol, double tol = 1e-12, double depth = 40.0);

double normalize(const AnsatzSolution& sol, double tol = 1e-12);

enum class ToleranceTier { Exact, Rounded };

std::string_view to_string(ToleranceTier tier);

struct VerifyTolerances
{
    double residual;
    double energy;
    double normalization;
};

VerifyTolerances tolerances_for(ToleranceTier tier);

struct VerificationReport
{
    State state = State::Ground;
    ToleranceTier tier = ToleranceTier::Exact;
    VerifyTolerances tolerances{};

    double residual_max = 0.0;
    bool residual_ok = false;

    double energy_analytic = 0.0;
    double energy_numeric = 0.0;
    double energy_delta = 0.0;
    double energy_error_estimate = 0.0;
    bool energy_ok = false;

    int nodes_analytic = 0;
    int nodes_numeric = -1;
    std::vector<double> node_positions_analytic;
    std::vector<double> node_positions_numeric;
    bool node_check = false;

    double norm = 0.0;
    double norm_integral = 0.0;
    double norm_error = 0.0;
    bool normalization_ok = false;

    /// Messages from checks that threw; each one fails the verdict.
    std::vector<std::string> errors;
    bool pass = false;
};

/// Residual on 64 log-spaced points, FD eigenvalue of the matching state, node comparison and normalisation.
/// Failures of constituent checks are recorded in the report instead of propagating.
VerificationReport verify(const AnsatzSolution& sol, const RadialGrid& grid, ToleranceTier tier = ToleranceTier::Exact,
                          const EigenOptions& opts = {});

} // namespace qes
