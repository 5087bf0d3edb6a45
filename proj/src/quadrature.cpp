#include "qes/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <queue>

#include "qes/types.hpp"

namespace qes {

namespace {

// 15-point Kronrod abscissae on [0, 1]; odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> xgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};

constexpr std::array<double, 8> wgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};

constexpr std::array<double, 4> wg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Panel
{
    double lo;
    double hi;
    double value;
    double error;

    bool operator<(const Panel& other) const { return error < other.error; }
};

Panel kronrod_panel(const std::function<double(double)>& f, double lo, double hi, int& evals)
{
    const double centre = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const double fc = f(centre);
    double kronrod = fc * wgk[7];
    double gauss = fc * wg[3];
    for (int j = 0; j < 7; ++j) {
        double dx = half * xgk[j];
        double sum = f(centre - dx) + f(centre + dx);
        kronrod += wgk[j] * sum;
        if (j % 2 == 1) {
            gauss += wg[j / 2] * sum;
        }
    }
    evals += 15;
    return {lo, hi, kronrod * half, std::abs((kronrod - gauss) * half)};
}

void check_interval(double lo, double hi)
{
    if (!(hi > lo) || !std::isfinite(lo) || !std::isfinite(hi)) {
        throw Error(ErrorKind::InvalidInput, "integration interval must be finite with hi > lo");
    }
}

} // namespace

QuadratureResult integrate_gauss_kronrod(const std::function<double(double)>& f, double lo, double hi,
                                         const QuadratureOptions& opts)
{
    check_interval(lo, hi);
    QuadratureResult res;
    std::priority_queue<Panel> panels;
    const int initial = std::max(opts.initial_panels, 1);
    double value = 0.0;
    double error = 0.0;
    for (int i = 0; i < initial; ++i) {
        double a = lo + (hi - lo) * i / initial;
        double b = i + 1 == initial ? hi : lo + (hi - lo) * (i + 1) / initial;
        Panel p = kronrod_panel(f, a, b, res.evaluations);
        value += p.value;
        error += p.error;
        panels.push(p);
    }
    while (static_cast<int>(panels.size()) < opts.max_panels) {
        if (error <= std::max(opts.abs_tol, opts.rel_tol * std::abs(value))) {
            res.converged = true;
            break;
        }
        Panel worst = panels.top();
        panels.pop();
        double mid = 0.5 * (worst.lo + worst.hi);
        Panel left = kronrod_panel(f, worst.lo, mid, res.evaluations);
        Panel right = kronrod_panel(f, mid, worst.hi, res.evaluations);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
    }
    // Re-sum to shed the drift of the running updates.
    value = 0.0;
    error = 0.0;
    while (!panels.empty()) {
        value += panels.top().value;
        error += panels.top().error;
        panels.pop();
    }
    res.value = value;
    res.error = error;
    res.converged = res.converged || error <= std::max(opts.abs_tol, opts.rel_tol * std::abs(value));
    return res;
}

GaussLegendreRule gauss_legendre_rule(int n)
{
    if (n < 1) {
        throw Error(ErrorKind::InvalidInput, "Gauss-Legendre rule needs at least one point");
    }
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) {
                p0 = 1.0;
                p1 = x;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        if (n == 1) {
            x = 0.0;
            dp = 1.0;
        }
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

QuadratureResult integrate_gauss_legendre(const std::function<double(double)>& f, double lo, double hi,
                                          const QuadratureOptions& opts, int points)
{
    check_interval(lo, hi);
    const auto rule = gauss_legendre_rule(points);
    QuadratureResult res;
    auto panel = [&](double a, double b) {
        double c = 0.5 * (a + b);
        double h = 0.5 * (b - a);
        double s = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            s += rule.weights[i] * f(c + h * rule.nodes[i]);
        }
        res.evaluations += points;
        return s * h;
    };

    struct Item
    {
        double lo;
        double hi;
        double whole;
    };
    const int initial = std::max(opts.initial_panels, 1);
    std::vector<Item> stack;
    double rough = 0.0;
    for (int i = 0; i < initial; ++i) {
        double a = lo + (hi - lo) * i / initial;
        double b = i + 1 == initial ? hi : lo + (hi - lo) * (i + 1) / initial;
        double w = panel(a, b);
        rough += w;
        stack.push_back({a, b, w});
    }
    const double budget = std::max(opts.abs_tol, opts.rel_tol * std::abs(rough));
    const double total_width = hi - lo;

    res.converged = true;
    int splits = 0;
    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        double mid = 0.5 * (it.lo + it.hi);
        double left = panel(it.lo, mid);
        double right = panel(mid, it.hi);
        double diff = std::abs(left + right - it.whole);
        double share = budget * (it.hi - it.lo) / total_width;
        if (diff <= share || splits >= opts.max_panels) {
            if (diff > share) {
                res.converged = false;
            }
            res.value += left + right;
            res.error += diff;
        } else {
            ++splits;
            stack.push_back({it.lo, mid, left});
            stack.push_back({mid, it.hi, right});
        }
    }
    return res;
}

} // namespace qes
