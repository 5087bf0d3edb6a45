#include "qes/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace qes {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
        case ErrorKind::InvalidInput: return "InvalidInput";
        case ErrorKind::DomainError: return "DomainError";
        case ErrorKind::NoSolution: return "NoSolution";
        case ErrorKind::NoConvergence: return "NoConvergence";
        case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
        case ErrorKind::ConstraintViolated: return "ConstraintViolated";
        case ErrorKind::GridTooCoarse: return "GridTooCoarse";
        case ErrorKind::InvalidWindow: return "InvalidWindow";
        case ErrorKind::NonIntegrable: return "NonIntegrable";
    }
    return "Unknown";
}

std::string_view to_string(State state)
{
    return state == State::Ground ? "ground" : "excited";
}

std::string_view to_string(Dimension dim)
{
    return dim == Dimension::ThreeD ? "3" : "2";
}

double PotentialParams::sqrt_a() const { return std::sqrt(a); }
double PotentialParams::sqrt_c() const { return std::sqrt(c); }

double PotentialParams::potential(double r) const
{
    double inv2 = 1.0 / (r * r);
    return a * r * r + inv2 * inv2 * (b + c * inv2);
}

void validate(const PotentialParams& params)
{
    if (!std::isfinite(params.a) || !std::isfinite(params.b) || !std::isfinite(params.c)) {
        throw Error(ErrorKind::InvalidInput, "potential couplings must be finite");
    }
    if (params.a <= 0.0 || params.c <= 0.0) {
        throw Error(ErrorKind::InvalidInput, "potential requires a > 0 and c > 0");
    }
}

void validate(const ProblemSpec& spec)
{
    if (spec.ell < 0) {
        throw Error(ErrorKind::InvalidInput, "angular quantum number must be non-negative");
    }
    if (spec.ell_prime) {
        if (spec.dimension != Dimension::ThreeD) {
            throw Error(ErrorKind::InvalidInput, "distinct excited-state quantum number is only defined in 3-D");
        }
        if (*spec.ell_prime < 0) {
            throw Error(ErrorKind::InvalidInput, "ell_prime must be non-negative");
        }
        if (*spec.ell_prime == spec.ell) {
            throw Error(ErrorKind::InvalidInput, "ell_prime must differ from ell");
        }
    }
}

int AnsatzSolution::angular_number() const
{
    if (state == State::FirstExcited && spec.ell_prime) {
        return *spec.ell_prime;
    }
    return spec.ell;
}

double centrifugal_coefficient(const ProblemSpec& spec, QuantumNumber which)
{
    int n = spec.ell;
    if (which == QuantumNumber::Excited && spec.ell_prime && spec.dimension == Dimension::ThreeD) {
        n = *spec.ell_prime;
    }
    double q = static_cast<double>(n);
    if (spec.dimension == Dimension::ThreeD) {
        return q * (q + 1.0);
    }
    return q * q - 0.25;
}

namespace {

QuantumNumber quantum_number_of(State state)
{
    return state == State::Ground ? QuantumNumber::Ground : QuantumNumber::Excited;
}

} // namespace

double ground_constraint_residual(const PotentialParams& params, const ProblemSpec& spec)
{
    double sc = params.sqrt_c();
    double sac = std::sqrt(params.a * params.c);
    double lhs = (2.0 * sc + params.b) * (2.0 * sc + params.b);
    double q = static_cast<double>(spec.ell);
    if (spec.dimension == Dimension::ThreeD) {
        double t = 2.0 * q + 1.0;
        return lhs - params.c * (t * t + 8.0 * sac);
    }
    return lhs - 4.0 * params.c * (q * q + 2.0 * sac);
}

double excited_constraint_residual_same(const PotentialParams& params)
{
    return params.b + 6.0 * params.sqrt_c();
}

namespace {

struct EtaConstraintTerms
{
    double eta;
    double kappa1;
    double sac;
};

EtaConstraintTerms eta_constraint_terms(const PotentialParams& params, const ProblemSpec& spec)
{
    double sc = params.sqrt_c();
    double sac = std::sqrt(params.a * params.c);
    double kappa1 = (params.b + 7.0 * sc) / (2.0 * sc);
    double eta = centrifugal_coefficient(spec, QuantumNumber::Ground) + 2.0 * sac - kappa1 * kappa1 + kappa1;
    return {eta, kappa1, sac};
}

} // namespace

double eta_constraint_residual(const PotentialParams& params, const ProblemSpec& spec)
{
    auto [eta, kappa1, sac] = eta_constraint_terms(params, spec);
    double k = 2.0 * kappa1 - 1.0;
    return eta * ((eta - 4.0) * (eta - 4.0) - 4.0 * k * k) - 64.0 * sac * (eta - 4.0);
}

double eta_constraint_scale(const PotentialParams& params, const ProblemSpec& spec)
{
    auto [eta, kappa1, sac] = eta_constraint_terms(params, spec);
    double k = 2.0 * kappa1 - 1.0;
    double s = std::abs(eta) * ((eta - 4.0) * (eta - 4.0) + 4.0 * k * k) + 64.0 * sac * (std::abs(eta) + 4.0);
    return std::max(s, 1.0);
}

double cross_constraint_residual(const PotentialParams& params, int ell, int ell_prime)
{
    double l = ell;
    double lp = ell_prime;
    double d = lp * (lp + 1.0) - l * (l + 1.0);
    if (d == 0.0) {
        throw Error(ErrorKind::DegenerateDenominator, "l'(l'+1) equals l(l+1)");
    }
    double sc = params.sqrt_c();
    double t = params.b / sc;
    double beta_den = d - 4.0 * (t + 6.0);
    if (beta_den == 0.0) {
        throw Error(ErrorKind::DegenerateDenominator, "beta denominator vanishes");
    }
    double sac = std::sqrt(params.a * params.c);
    return (d - 2.0 * (t + 4.0)) / (32.0 * sac) - 1.0 / beta_den - 1.0 / d;
}

ConstraintReport check_constraints(const PotentialParams& params, const ProblemSpec& spec, double tolerance)
{
    validate(params);
    validate(spec);
    ConstraintReport rep;
    rep.tolerance = tolerance;
    rep.ground_residual = ground_constraint_residual(params, spec);
    if (spec.ell_prime) {
        try {
            rep.excited_residual = cross_constraint_residual(params, spec.ell, *spec.ell_prime);
        } catch (const Error&) {
            rep.excited_residual = std::numeric_limits<double>::infinity();
        }
    } else {
        rep.excited_residual = excited_constraint_residual_same(params);
    }
    rep.eta_constraint_residual = eta_constraint_residual(params, spec);
    rep.eta_constraint_scale = eta_constraint_scale(params, spec);
    rep.ground_satisfied = std::abs(rep.ground_residual) <= tolerance;
    rep.excited_satisfied = std::abs(rep.excited_residual) <= tolerance;
    rep.eta_constraint_satisfied = std::abs(rep.eta_constraint_residual) <= tolerance * rep.eta_constraint_scale;
    return rep;
}

PotentialParams solve_same_qn(double a, const ProblemSpec& spec)
{
    if (!(a > 0.0) || !std::isfinite(a)) {
        throw Error(ErrorKind::InvalidInput, "a must be positive");
    }
    validate(spec);
    if (spec.ell_prime) {
        throw Error(ErrorKind::InvalidInput, "solve_same_qn requires a single quantum number");
    }
    double q = spec.ell;
    double sac = spec.dimension == Dimension::ThreeD ? (16.0 - (2.0 * q + 1.0) * (2.0 * q + 1.0)) / 8.0
                                                     : (4.0 - q * q) / 2.0;
    if (sac <= 0.0) {
        throw Error(ErrorKind::NoSolution, "no exact same-quantum-number family for " +
                                               std::string(spec.dimension == Dimension::ThreeD ? "l = " : "m = ") +
                                               std::to_string(spec.ell));
    }
    double sc = sac / std::sqrt(a);
    return PotentialParams{a, -6.0 * sc, sc * sc};
}

KappaEnergy kappa_and_energy(const PotentialParams& params, State state)
{
    double sc = params.sqrt_c();
    double ratio = std::sqrt(params.a / params.c);
    if (state == State::Ground) {
        return {(params.b + 3.0 * sc) / (2.0 * sc), ratio * (params.b + 4.0 * sc)};
    }
    return {(params.b + 7.0 * sc) / (2.0 * sc), ratio * (params.b + 12.0 * sc)};
}

Coefficients excited_coefficients(const PotentialParams& params, const ProblemSpec& spec, double tolerance)
{
    auto rep = check_constraints(params, spec, tolerance);
    if (!rep.satisfied()) {
        throw Error(ErrorKind::ConstraintViolated,
                    "parameters do not satisfy the excited-state constraints (ground residual " +
                        std::to_string(rep.ground_residual) + ", excited residual " +
                        std::to_string(rep.excited_residual) + ")");
    }
    if (!spec.ell_prime) {
        return {0.0, 1.0, -std::sqrt(params.c / params.a)};
    }
    double l = spec.ell;
    double lp = *spec.ell_prime;
    double d = lp * (lp + 1.0) - l * (l + 1.0);
    double sc = params.sqrt_c();
    double beta_den = d - 4.0 * (params.b + 6.0 * sc) / sc;
    return {1.0, 4.0 * params.sqrt_a() / beta_den, 4.0 * sc / d};
}

AnsatzSolution make_ground_state(const PotentialParams& params, const ProblemSpec& spec, double tolerance)
{
    validate(params);
    validate(spec);
    double g = ground_constraint_residual(params, spec);
    if (std::abs(g) > tolerance) {
        throw Error(ErrorKind::ConstraintViolated,
                    "parameters do not satisfy the ground-state constraint (residual " + std::to_string(g) + ")");
    }
    auto [kappa, energy] = kappa_and_energy(params, State::Ground);
    AnsatzSolution sol;
    sol.state = State::Ground;
    sol.kappa = kappa;
    sol.energy = energy;
    sol.alpha = 1.0;
    sol.beta = 0.0;
    sol.gamma = 0.0;
    sol.params = params;
    sol.spec = spec;
    return sol;
}

AnsatzSolution make_excited_state(const PotentialParams& params, const ProblemSpec& spec, double tolerance)
{
    auto coef = excited_coefficients(params, spec, tolerance);
    auto [kappa, energy] = kappa_and_energy(params, State::FirstExcited);
    AnsatzSolution sol;
    sol.state = State::FirstExcited;
    sol.kappa = kappa;
    sol.energy = energy;
    sol.alpha = coef.alpha;
    sol.beta = coef.beta;
    sol.gamma = coef.gamma;
    sol.params = params;
    sol.spec = spec;
    return sol;
}

namespace {

void require_positive(double r)
{
    if (!(r > 0.0)) {
        throw Error(ErrorKind::DomainError, "radial coordinate must be positive");
    }
}

/// log of N r^kappa exp[-(sqrt(a) r^2 + sqrt(c) r^-2)/2]
double log_envelope(const AnsatzSolution& sol, double r)
{
    double lr = std::log(r);
    double phi = 0.5 * (std::sqrt(sol.params.a) * r * r + std::sqrt(sol.params.c) / (r * r));
    double ln_norm = sol.norm ? std::log(*sol.norm) : 0.0;
    return sol.kappa * lr - phi + ln_norm;
}

// Below this the envelope cannot be represented even after multiplying by
// the largest bracket the r^-8 terms can produce.
constexpr double log_underflow = -745.0;

} // namespace

double radial_eval(const AnsatzSolution& sol, double r)
{
    require_positive(r);
    double lg = log_envelope(sol, r);
    if (lg < log_underflow || std::isnan(lg)) {
        return 0.0;
    }
    double r2 = r * r;
    double poly = sol.alpha + sol.beta * r2 + sol.gamma / r2;
    return poly * std::exp(lg);
}

SecondDerivative radial_second_derivative_terms(const AnsatzSolution& sol, double r)
{
    require_positive(r);
    double lg = log_envelope(sol, r);
    if (lg < log_underflow || std::isnan(lg)) {
        return {0.0, 0.0};
    }
    const double a = sol.params.a;
    const double c = sol.params.c;
    const double sa = std::sqrt(a);
    const double sc = std::sqrt(c);
    const double sac = std::sqrt(a * c);
    const double k = sol.kappa;
    const double al = sol.alpha;
    const double be = sol.beta;
    const double ga = sol.gamma;

    // Each power of r contributes a sum of alpha/beta/gamma pieces.
    const std::array<double, 15> pieces = {
        a * be,                                 // r^4
        a * al, -be * sa * (2 * k + 5),         // r^2
        -al * sa * (2 * k + 1), be * (2 + 3 * k + k * k - 2 * sac), ga * a, // r^0
        al * (k * k - k - 2 * sac), be * sc * (2 * k + 1), -ga * sa * (2 * k - 3), // r^-2
        al * sc * (2 * k - 3), be * c, ga * (6 - 5 * k - 2 * sac + k * k), // r^-4
        al * c, ga * sc * (2 * k - 7),          // r^-6
        ga * c,                                 // r^-8
    };
    const double r2 = r * r;
    const double i2 = 1.0 / r2;
    const std::array<double, 7> powers = {r2 * r2, r2, 1.0, i2, i2 * i2, i2 * i2 * i2, i2 * i2 * i2 * i2};
    const std::array<int, 7> counts = {1, 2, 3, 3, 3, 2, 1};

    double value = 0.0;
    double scale = 0.0;
    std::size_t idx = 0;
    for (std::size_t p = 0; p < powers.size(); ++p) {
        for (int j = 0; j < counts[p]; ++j, ++idx) {
            value += pieces[idx] * powers[p];
            scale += std::abs(pieces[idx] * powers[p]);
        }
    }
    double env = std::exp(lg);
    return {value * env, scale * env};
}

double radial_second_derivative(const AnsatzSolution& sol, double r)
{
    return radial_second_derivative_terms(sol, r).value;
}

std::array<double, 5> coefficient_match_residuals(const AnsatzSolution& sol, const PotentialParams& params,
                                                  const ProblemSpec& spec)
{
    const double l = centrifugal_coefficient(spec, quantum_number_of(sol.state));
    const double sa = params.sqrt_a();
    const double sc = params.sqrt_c();
    const double sac = std::sqrt(params.a * params.c);
    const double b = params.b;
    const double k = sol.kappa;
    const double e = sol.energy;
    const double al = sol.alpha;
    const double be = sol.beta;
    const double ga = sol.gamma;

    return {
        be * (e - sa * (2 * k + 5)),
        al * (e - sa * (2 * k + 1)) - be * (l + 2 * sac - k * k - 3 * k - 2),
        al * (l + 2 * sac - k * k + k) - be * (-b + sc * (2 * k + 1)) - ga * (e - sa * (2 * k - 3)),
        al * (b - sc * (2 * k - 3)) + ga * (l + 2 * sac - k * k + 5 * k - 6),
        ga * (b - sc * (2 * k - 7)),
    };
}

std::vector<double> node_positions(const AnsatzSolution& sol)
{
    // alpha + beta x + gamma / x = 0 with x = r^2 > 0  <=>  beta x^2 + alpha x + gamma = 0
    std::vector<double> xs;
    const double qa = sol.beta;
    const double qb = sol.alpha;
    const double qc = sol.gamma;
    if (qa == 0.0) {
        if (qb != 0.0 && qc != 0.0) {
            xs.push_back(-qc / qb);
        }
    } else {
        double disc = qb * qb - 4.0 * qa * qc;
        if (disc >= 0.0) {
            double sq = std::sqrt(disc);
            // Stable pair of roots without cancellation.
            double q = -0.5 * (qb + std::copysign(sq, qb == 0.0 ? 1.0 : qb));
            if (q != 0.0) {
                xs.push_back(q / qa);
                xs.push_back(qc / q);
            } else {
                xs.push_back(0.0);
            }
            if (disc == 0.0) {
                xs.resize(1);
            }
        }
    }
    std::vector<double> nodes;
    for (double x : xs) {
        if (x > 0.0 && std::isfinite(x)) {
            nodes.push_back(std::sqrt(x));
        }
    }
    std::sort(nodes.begin(), nodes.end());
    return nodes;
}

} // namespace qes
