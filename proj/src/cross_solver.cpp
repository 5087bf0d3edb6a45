#include "qes/cross_solver.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "qes/analytic.hpp"

namespace qes {

namespace {

/// Unknowns are (b, s) with s = sqrt(c). Both residuals are written in terms of
/// t = b/s and sigma = sqrt(a) s, which is what makes the scan one-dimensional.
class CrossSystem
{
  public:
    CrossSystem(double a, int ell, int ell_prime)
        : sa_(std::sqrt(a))
    {
        double l = ell;
        double lp = ell_prime;
        d_ = lp * (lp + 1.0) - l * (l + 1.0);
        w_ = (2.0 * l + 1.0) * (2.0 * l + 1.0);
    }

    double d() const { return d_; }
    double w() const { return w_; }

    /// Pole of the beta coefficient: D - 4(t + 6) = 0.
    double beta_denominator(double t) const { return d_ - 4.0 * t - 24.0; }

    double ground(double b, double s) const
    {
        double u = 2.0 * s + b;
        return u * u - s * s * (w_ + 8.0 * sa_ * s);
    }

    double excited_ts(double t, double sigma) const
    {
        return (d_ - 2.0 * t - 8.0) / (32.0 * sigma) - 1.0 / beta_denominator(t) - 1.0 / d_;
    }

    std::array<double, 2> residual(double b, double s) const
    {
        return {ground(b, s), excited_ts(b / s, sa_ * s)};
    }

    std::array<double, 4> jacobian(double b, double s) const
    {
        double u = 2.0 * s + b;
        double t = b / s;
        double sigma = sa_ * s;
        double den = beta_denominator(t);
        double g2_t = -2.0 / (32.0 * sigma) - 4.0 / (den * den);
        double g2_s = -(d_ - 2.0 * t - 8.0) / (32.0 * sigma * s);
        return {
            2.0 * u,
            4.0 * u - 2.0 * s * (w_ + 8.0 * sa_ * s) - 8.0 * sa_ * s * s,
            g2_t / s,
            g2_s - g2_t * b / (s * s),
        };
    }

    double sqrt_a() const { return sa_; }

  private:
    double sa_;
    double d_;
    double w_;
};

double norm2(const std::array<double, 2>& v) { return std::hypot(v[0], v[1]); }

bool admissible(const CrossSystem& sys, double b, double s)
{
    return std::isfinite(b) && std::isfinite(s) && s > 0.0 && sys.beta_denominator(b / s) != 0.0;
}

struct NewtonOutcome
{
    double b;
    double s;
    int iterations;
    bool converged;
};

/// Full Newton steps past the stopping tolerance, kept while the residual keeps shrinking.
void polish(const CrossSystem& sys, double& b, double& s, std::array<double, 2>& f)
{
    for (int k = 0; k < 4; ++k) {
        auto j = sys.jacobian(b, s);
        double det = j[0] * j[3] - j[1] * j[2];
        if (det == 0.0 || !std::isfinite(det)) {
            return;
        }
        double tb = b - (j[3] * f[0] - j[1] * f[1]) / det;
        double ts = s - (-j[2] * f[0] + j[0] * f[1]) / det;
        if (!admissible(sys, tb, ts)) {
            return;
        }
        auto tf = sys.residual(tb, ts);
        if (!(norm2(tf) < norm2(f))) {
            return;
        }
        b = tb;
        s = ts;
        f = tf;
    }
}

NewtonOutcome newton(const CrossSystem& sys, double b, double s, const CrossSolveOptions& opts)
{
    if (!admissible(sys, b, s)) {
        return {b, s, 0, false};
    }
    auto f = sys.residual(b, s);
    for (int it = 0; it < opts.max_iterations; ++it) {
        if (std::abs(f[0]) < opts.residual_tolerance && std::abs(f[1]) < opts.residual_tolerance) {
            polish(sys, b, s, f);
            return {b, s, it, true};
        }
        auto j = sys.jacobian(b, s);
        double det = j[0] * j[3] - j[1] * j[2];
        if (det == 0.0 || !std::isfinite(det)) {
            return {b, s, it, false};
        }
        double db = -(j[3] * f[0] - j[1] * f[1]) / det;
        double ds = -(-j[2] * f[0] + j[0] * f[1]) / det;

        double fnorm = norm2(f);
        double lambda = 1.0;
        double nb = b;
        double ns = s;
        std::array<double, 2> nf = f;
        bool moved = false;
        for (int h = 0; h <= opts.max_halvings; ++h, lambda *= 0.5) {
            double tb = b + lambda * db;
            double ts = s + lambda * ds;
            if (!admissible(sys, tb, ts)) {
                continue;
            }
            auto tf = sys.residual(tb, ts);
            if (!std::isfinite(tf[0]) || !std::isfinite(tf[1])) {
                continue;
            }
            nb = tb;
            ns = ts;
            nf = tf;
            moved = true;
            if (norm2(tf) < fnorm) {
                break;
            }
        }
        if (!moved) {
            return {b, s, it, false};
        }
        b = nb;
        s = ns;
        f = nf;
    }
    bool ok = std::abs(f[0]) < opts.residual_tolerance && std::abs(f[1]) < opts.residual_tolerance;
    return {b, s, opts.max_iterations, ok};
}

/// Roots along the two branches t = -2 +- sqrt(w + 8 sigma) of the ground constraint.
std::vector<std::array<double, 2>> scan_roots(const CrossSystem& sys, int ell_prime, const CrossSolveOptions& opts)
{
    double wp = (2.0 * ell_prime + 1.0) * (2.0 * ell_prime + 1.0);
    double sigma_max = 4.0 + sys.w() + wp;
    double sigma_min = 1e-3;
    int n = std::max(opts.scan_points, 16);
    double ratio = std::pow(sigma_max / sigma_min, 1.0 / (n - 1));

    std::vector<std::array<double, 2>> found;
    for (double branch : {-1.0, 1.0}) {
        auto t_of = [&](double sigma) { return -2.0 + branch * std::sqrt(sys.w() + 8.0 * sigma); };
        auto g_of = [&](double sigma) { return sys.excited_ts(t_of(sigma), sigma); };
        double prev_sigma = sigma_min;
        double prev_g = g_of(prev_sigma);
        for (int i = 1; i < n; ++i) {
            double sigma = sigma_min * std::pow(ratio, i);
            double g = g_of(sigma);
            bool pole = std::signbit(sys.beta_denominator(t_of(prev_sigma))) !=
                        std::signbit(sys.beta_denominator(t_of(sigma)));
            if (std::isfinite(g) && std::isfinite(prev_g) && !pole && std::signbit(g) != std::signbit(prev_g)) {
                double lo = prev_sigma;
                double hi = sigma;
                double glo = prev_g;
                for (int k = 0; k < 200 && hi - lo > 1e-15 * hi; ++k) {
                    double mid = 0.5 * (lo + hi);
                    double gm = g_of(mid);
                    if (std::signbit(gm) == std::signbit(glo)) {
                        lo = mid;
                        glo = gm;
                    } else {
                        hi = mid;
                    }
                }
                double root_sigma = 0.5 * (lo + hi);
                double s = root_sigma / sys.sqrt_a();
                found.push_back({t_of(root_sigma) * s, s});
            }
            prev_sigma = sigma;
            prev_g = g;
        }
    }
    return found;
}

bool same_root(const std::array<double, 2>& x, const std::array<double, 2>& y)
{
    double scale = std::max({std::abs(x[0]), std::abs(y[0]), std::abs(x[1]), std::abs(y[1]), 1e-300});
    return std::abs(x[0] - y[0]) <= 1e-8 * scale && std::abs(x[1] - y[1]) <= 1e-8 * scale;
}

std::optional<std::array<double, 2>> initial_guess(double a, int ell, int ell_prime)
{
    double sa = std::sqrt(a);
    if (ell == 0 && ell_prime == 1) {
        return std::array<double, 2>{-4.0 / sa, 0.9 / sa};
    }
    double m = std::min(ell, ell_prime);
    double sigma0 = (16.0 - (2.0 * m + 1.0) * (2.0 * m + 1.0)) / 8.0;
    if (sigma0 <= 0.0) {
        return std::nullopt;
    }
    return std::array<double, 2>{-6.0 * sigma0 / sa, 1.1 * sigma0 / sa};
}

} // namespace

CrossSolution solve_cross_l(double a, int ell, int ell_prime, const CrossSolveOptions& opts)
{
    if (!(a > 0.0) || !std::isfinite(a)) {
        throw Error(ErrorKind::InvalidInput, "a must be positive");
    }
    if (ell < 0 || ell_prime < 0) {
        throw Error(ErrorKind::InvalidInput, "angular quantum numbers must be non-negative");
    }
    if (ell == ell_prime) {
        throw Error(ErrorKind::DegenerateDenominator, "l'(l'+1) equals l(l+1)");
    }
    CrossSystem sys(a, ell, ell_prime);

    std::vector<std::array<double, 2>> roots;
    auto add_root = [&](const std::array<double, 2>& x) {
        for (const auto& r : roots) {
            if (same_root(r, x)) {
                return;
            }
        }
        roots.push_back(x);
    };

    for (const auto& seed : scan_roots(sys, ell_prime, opts)) {
        auto out = newton(sys, seed[0], seed[1], opts);
        if (out.converged) {
            add_root({out.b, out.s});
        }
    }

    auto guess = initial_guess(a, ell, ell_prime);
    std::optional<std::array<double, 2>> primary;
    int iterations = 0;
    if (guess) {
        auto out = newton(sys, (*guess)[0], (*guess)[1], opts);
        iterations = out.iterations;
        if (out.converged) {
            primary = std::array<double, 2>{out.b, out.s};
            add_root(*primary);
        } else if (sys.beta_denominator((*guess)[0] / (*guess)[1]) == 0.0) {
            throw Error(ErrorKind::DegenerateDenominator, "beta denominator vanishes at the starting point");
        }
    }
    if (!primary && !roots.empty()) {
        std::array<double, 2> ref = guess ? *guess : roots.front();
        primary = *std::min_element(roots.begin(), roots.end(), [&](const auto& x, const auto& y) {
            return std::hypot(x[0] - ref[0], x[1] - ref[1]) < std::hypot(y[0] - ref[0], y[1] - ref[1]);
        });
    }
    if (!primary) {
        throw Error(ErrorKind::NoConvergence, "no root of the l = " + std::to_string(ell) + ", l' = " +
                                                  std::to_string(ell_prime) + " constraint system was found");
    }

    std::sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) { return x[1] < y[1]; });

    CrossSolution result;
    auto to_params = [a](const std::array<double, 2>& x) { return PotentialParams{a, x[0], x[1] * x[1]}; };
    result.params = to_params(*primary);
    result.iterations = iterations;
    for (const auto& r : roots) {
        result.roots.push_back(to_params(r));
    }
    return result;
}

} // namespace qes
