#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qes {

enum class ErrorKind {
    InvalidInput,
    DomainError,
    NoSolution,
    NoConvergence,
    DegenerateDenominator,
    ConstraintViolated,
    GridTooCoarse,
    InvalidWindow,
    NonIntegrable,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error
{
  public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what)
        , kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

/// Couplings of V(r) = a r^2 + b r^-4 + c r^-6 in units hbar = 2m = 1.
struct PotentialParams
{
    double a = 1.0;
    double b = 0.0;
    double c = 1.0;

    double sqrt_a() const;
    double sqrt_c() const;
    /// V(r); no positivity check so degenerate inputs can still be evaluated.
    double potential(double r) const;
};

/// Throws InvalidInput unless a > 0 and c > 0 and all three are finite.
void validate(const PotentialParams& params);

enum class Dimension { TwoD = 2, ThreeD = 3 };

/// Dimension plus angular quantum numbers. In 2-D `ell` holds m.
struct ProblemSpec
{
    Dimension dimension = Dimension::ThreeD;
    int ell = 0;
    std::optional<int> ell_prime;

    bool cross() const { return ell_prime.has_value(); }
};

/// Throws InvalidInput on negative quantum numbers, ell_prime in 2-D, or ell_prime == ell.
void validate(const ProblemSpec& spec);

enum class State { Ground, FirstExcited };

std::string_view to_string(State state);
std::string_view to_string(Dimension dim);

/// R(r) = N r^kappa (alpha + beta r^2 + gamma r^-2) exp[-(sqrt(a) r^2 + sqrt(c) r^-2)/2]
struct AnsatzSolution
{
    State state = State::Ground;
    double kappa = 0.0;
    double energy = 0.0;
    double alpha = 1.0;
    double beta = 0.0;
    double gamma = 0.0;
    std::optional<double> norm;
    PotentialParams params;
    ProblemSpec spec;

    /// Angular quantum number belonging to this state (ell' for a cross-ell excited state).
    int angular_number() const;
};

} // namespace qes
