#include "qes/tridiagonal.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "qes/types.hpp"

namespace qes {

namespace {

struct SturmWorkspace
{
    std::vector<double> offdiag_sq;
    double pivmin;
};

SturmWorkspace make_workspace(const SymTridiagonal& t)
{
    SturmWorkspace ws;
    ws.offdiag_sq.resize(t.offdiag.size());
    double emax = 1.0;
    for (std::size_t i = 0; i < t.offdiag.size(); ++i) {
        ws.offdiag_sq[i] = t.offdiag[i] * t.offdiag[i];
        emax = std::max(emax, ws.offdiag_sq[i]);
    }
    ws.pivmin = std::numeric_limits<double>::min() * emax;
    return ws;
}

void check_shape(const SymTridiagonal& t)
{
    if (t.diag.empty() || t.offdiag.size() + 1 != t.diag.size()) {
        throw Error(ErrorKind::InvalidInput, "tridiagonal matrix has inconsistent dimensions");
    }
}

} // namespace

int eigenvalue_count_below(const SymTridiagonal& t, double x, kernels::Isa isa)
{
    check_shape(t);
    auto ws = make_workspace(t);
    std::array<double, 1> shift{x};
    std::array<int, 1> count{};
    kernels::sturm_counts(isa, t.diag, ws.offdiag_sq, ws.pivmin, shift, count);
    return count[0];
}

std::vector<double> lowest_eigenvalues(const SymTridiagonal& t, int k, double abs_tol, kernels::Isa isa)
{
    check_shape(t);
    const int n = static_cast<int>(t.size());
    if (k < 1 || k > n) {
        throw Error(ErrorKind::InvalidInput, "requested eigenvalue count out of range");
    }
    auto ws = make_workspace(t);

    // Gershgorin interval.
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (int i = 0; i < n; ++i) {
        double radius = (i > 0 ? std::abs(t.offdiag[i - 1]) : 0.0) + (i + 1 < n ? std::abs(t.offdiag[i]) : 0.0);
        lo = std::min(lo, t.diag[i] - radius);
        hi = std::max(hi, t.diag[i] + radius);
    }
    double pad = 2.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(lo), std::abs(hi)) + ws.pivmin;
    lo -= pad;
    hi += pad;

    constexpr int points = 4;
    constexpr double eps = std::numeric_limits<double>::epsilon();
    std::vector<double> values(k);
    double floor = lo;
    for (int j = 0; j < k; ++j) {
        // Invariant: count(left) <= j < count(right).
        double left = floor;
        double right = hi;
        std::array<double, points> shifts{};
        std::array<int, points> counts{};
        for (int sweep = 0; sweep < 200; ++sweep) {
            double width = right - left;
            double tol = std::max(abs_tol, 4.0 * eps * std::max(std::abs(left), std::abs(right)));
            if (width <= tol) {
                break;
            }
            for (int p = 0; p < points; ++p) {
                shifts[p] = left + width * (p + 1) / (points + 1);
            }
            kernels::sturm_counts(isa, t.diag, ws.offdiag_sq, ws.pivmin, shifts, counts);
            double new_left = left;
            double new_right = right;
            for (int p = 0; p < points; ++p) {
                if (counts[p] <= j) {
                    new_left = shifts[p];
                } else {
                    new_right = shifts[p];
                    break;
                }
            }
            if (new_left == left && new_right == right) {
                break;
            }
            left = new_left;
            right = new_right;
        }
        values[j] = 0.5 * (left + right);
        floor = left;
    }
    return values;
}

std::vector<double> inverse_iteration(const SymTridiagonal& t, double lambda, int iterations)
{
    check_shape(t);
    const std::size_t n = t.size();

    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        norm = std::max(norm, std::abs(t.diag[i] - lambda) + (i > 0 ? std::abs(t.offdiag[i - 1]) : 0.0) +
                                  (i + 1 < n ? std::abs(t.offdiag[i]) : 0.0));
    }
    const double tiny = std::max(norm, 1.0) * std::numeric_limits<double>::epsilon();

    // LU of (T - lambda I) with partial pivoting; du2 holds the second superdiagonal fill-in.
    std::vector<double> dl(t.offdiag);
    std::vector<double> d(n);
    std::vector<double> du(t.offdiag);
    std::vector<double> du2(n > 2 ? n - 2 : 0, 0.0);
    std::vector<char> swapped(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        d[i] = t.diag[i] - lambda;
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (std::abs(d[i]) >= std::abs(dl[i])) {
            if (d[i] == 0.0) {
                d[i] = tiny;
            }
            double fact = dl[i] / d[i];
            dl[i] = fact;
            d[i + 1] -= fact * du[i];
        } else {
            double fact = d[i] / dl[i];
            d[i] = dl[i];
            dl[i] = fact;
            double temp = du[i];
            du[i] = d[i + 1];
            d[i + 1] = temp - fact * d[i + 1];
            if (i + 2 < n) {
                du2[i] = du[i + 1];
                du[i + 1] = -fact * du[i + 1];
            }
            swapped[i] = 1;
        }
    }
    if (d[n - 1] == 0.0) {
        d[n - 1] = tiny;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(d[i]) < tiny * 1e-8) {
            d[i] = std::copysign(tiny * 1e-8, d[i] == 0.0 ? 1.0 : d[i]);
        }
    }

    auto solve = [&](std::vector<double>& b) {
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (!swapped[i]) {
                b[i + 1] -= dl[i] * b[i];
            } else {
                double temp = b[i] - dl[i] * b[i + 1];
                b[i] = b[i + 1];
                b[i + 1] = temp;
            }
        }
        b[n - 1] /= d[n - 1];
        if (n > 1) {
            b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / d[n - 2];
        }
        if (n > 2) {
            for (std::size_t i = n - 2; i-- > 0;) {
                b[i] = (b[i] - du[i] * b[i + 1] - du2[i] * b[i + 2]) / d[i];
            }
        }
    };

    auto normalise = [](std::vector<double>& v) {
        double s = 0.0;
        double big = 0.0;
        for (double x : v) {
            big = std::max(big, std::abs(x));
        }
        if (big == 0.0 || !std::isfinite(big)) {
            throw Error(ErrorKind::NoConvergence, "inverse iteration produced a degenerate vector");
        }
        for (double& x : v) {
            x /= big;
            s += x * x;
        }
        s = std::sqrt(s);
        for (double& x : v) {
            x /= s;
        }
    };

    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = 1.0 + 0.25 * std::sin(0.7 * static_cast<double>(i));
    }
    for (int it = 0; it < std::max(iterations, 1); ++it) {
        solve(v);
        normalise(v);
    }
    auto peak = std::max_element(v.begin(), v.end(), [](double x, double y) { return std::abs(x) < std::abs(y); });
    if (*peak < 0.0) {
        for (double& x : v) {
            x = -x;
        }
    }
    return v;
}

} // namespace qes
