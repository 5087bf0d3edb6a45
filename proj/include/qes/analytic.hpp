#pragma once

/** \file analytic.hpp
 *
 *  \brief Closed-form ground and first-excited solutions of the radial equation
 *         for V(r) = a r^2 + b r^-4 + c r^-6 in two and three dimensions.
 *
 *  The radial ansatz is
 *
 *      R(r) = r^kappa (alpha + beta r^2 + gamma r^-2) exp[-(sqrt(a) r^2 + sqrt(c) r^-2)/2].
 *
 *  Substituting it into R'' + [E - V(r) - L/r^2] R = 0 and matching the
 *  coefficients of r^2 .. r^-6 gives five linear relations between
 *  (alpha, beta, gamma) whose solvability fixes kappa, E and constrains (a, b, c).
 *  L is l(l+1) in 3-D and m^2 - 1/4 in 2-D.
 */

#include <array>
#include <vector>

#include "qes/types.hpp"

namespace qes {

enum class QuantumNumber { Ground, Excited };

/// l(l+1) in 3-D, m^2 - 1/4 in 2-D. Excited falls back to ell when ell_prime is absent.
double centrifugal_coefficient(const ProblemSpec& spec, QuantumNumber which);

/// (2 sqrt(c) + b)^2 - c[(2l+1)^2 + 8 sqrt(ac)] in 3-D; (2 sqrt(c) + b)^2 - 4c[m^2 + 2 sqrt(ac)] in 2-D.
double ground_constraint_residual(const PotentialParams& params, const ProblemSpec& spec);

/// b + 6 sqrt(c). Vanishes iff the same-l excited ansatz is consistent.
double excited_constraint_residual_same(const PotentialParams& params);

/// Residual of the older single-equation form of the excited-state constraint,
/// eta[(eta - 4)^2 - 4(2 kappa1 - 1)^2] - 64 sqrt(ac)(eta - 4),
/// with eta = L + 2 sqrt(ac) - kappa1^2 + kappa1 and L the ground-state centrifugal coefficient.
double eta_constraint_residual(const PotentialParams& params, const ProblemSpec& spec);

/// Natural magnitude of the terms summed in eta_constraint_residual, for relative comparisons.
double eta_constraint_scale(const PotentialParams& params, const ProblemSpec& spec);

/// Third relation of the l' != l case, LHS - RHS of
/// [D - 2(b + 4 sqrt c)/sqrt c] / (32 sqrt(ac)) = 1/[D - 4(b + 6 sqrt c)/sqrt c] + 1/D,
/// D = l'(l'+1) - l(l+1). Throws DegenerateDenominator when a bracket vanishes.
double cross_constraint_residual(const PotentialParams& params, int ell, int ell_prime);

struct ConstraintReport
{
    double ground_residual = 0.0;
    /// b + 6 sqrt(c) for same-l specs, the cross relation otherwise.
    double excited_residual = 0.0;
    double eta_constraint_residual = 0.0;
    double eta_constraint_scale = 1.0;
    double tolerance = 0.0;
    bool ground_satisfied = false;
    bool excited_satisfied = false;
    /// Judged relative to eta_constraint_scale.
    bool eta_constraint_satisfied = false;

    /// Ground and excited constraints both hold; the eta form is an equivalent restatement.
    bool satisfied() const { return ground_satisfied && excited_satisfied; }
};

ConstraintReport check_constraints(const PotentialParams& params, const ProblemSpec& spec, double tolerance);

/// Default tolerance for inputs that are exact or closed-form.
inline constexpr double exact_tolerance = 1e-9;
/// Default tolerance for inputs printed to 4-5 significant digits.
inline constexpr double rounded_tolerance = 1e-4;

/// Same-l (same-m) family: b = -6 sqrt(c) with sqrt(ac) = [16 - (2l+1)^2]/8 (3-D) or (4 - m^2)/2 (2-D).
/// Throws NoSolution when sqrt(ac) would be non-positive.
PotentialParams solve_same_qn(double a, const ProblemSpec& spec);

struct KappaEnergy
{
    double kappa;
    double energy;
};

KappaEnergy kappa_and_energy(const PotentialParams& params, State state);

struct Coefficients
{
    double alpha;
    double beta;
    double gamma;
};

/// Excited-state (alpha, beta, gamma): beta = 1 in the same-l case, alpha = 1 in the cross-l case.
/// Throws ConstraintViolated when the applicable constraints fail at `tolerance`.
Coefficients excited_coefficients(const PotentialParams& params, const ProblemSpec& spec,
                                  double tolerance = exact_tolerance);

/// Ground state with alpha = 1. Throws ConstraintViolated when the ground constraint fails.
AnsatzSolution make_ground_state(const PotentialParams& params, const ProblemSpec& spec,
                                 double tolerance = exact_tolerance);

AnsatzSolution make_excited_state(const PotentialParams& params, const ProblemSpec& spec,
                                  double tolerance = exact_tolerance);

/// R(r). Exponential underflow yields exactly 0. Throws DomainError for r <= 0.
double radial_eval(const AnsatzSolution& sol, double r);

/// Closed-form R''(r) from differentiating the ansatz directly. Throws DomainError for r <= 0.
double radial_second_derivative(const AnsatzSolution& sol, double r);

struct SecondDerivative
{
    double value;
    /// Sum of the absolute values of the individual terms; the floating-point scale of `value`.
    double term_scale;
};

SecondDerivative radial_second_derivative_terms(const AnsatzSolution& sol, double r);

/// Residuals (LHS - RHS) of the five coefficient-matching relations, powers r^2 .. r^-6.
std::array<double, 5> coefficient_match_residuals(const AnsatzSolution& sol, const PotentialParams& params,
                                                  const ProblemSpec& spec);

/// Positive roots of alpha + beta r^2 + gamma r^-2, ascending.
std::vector<double> node_positions(const AnsatzSolution& sol);

} // namespace qes
