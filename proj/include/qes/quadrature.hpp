#pragma once

#include <functional>
#include <vector>

namespace qes {

struct QuadratureResult
{
    double value = 0.0;
    double error = 0.0;
    int evaluations = 0;
    bool converged = false;
};

struct QuadratureOptions
{
    double rel_tol = 1e-12;
    double abs_tol = 0.0;
    int max_panels = 4000;
    /// Equal-width panels the interval is cut into before adapting.
    int initial_panels = 8;
};

/// Globally adaptive 7/15-point Gauss-Kronrod: the panel with the largest error estimate is bisected next.
QuadratureResult integrate_gauss_kronrod(const std::function<double(double)>& f, double lo, double hi,
                                         const QuadratureOptions& opts = {});

/// Recursive adaptive Gauss-Legendre: an n-point panel is accepted when it agrees with the sum over its halves.
/// Shares no nodes with the Kronrod rule and is used as an independent cross-check.
QuadratureResult integrate_gauss_legendre(const std::function<double(double)>& f, double lo, double hi,
                                          const QuadratureOptions& opts = {}, int points = 12);

struct GaussLegendreRule
{
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Nodes and weights on [-1, 1] from Newton iteration on P_n.
GaussLegendreRule gauss_legendre_rule(int n);

} // namespace qes
