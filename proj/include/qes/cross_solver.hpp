#pragma once

#include <vector>

#include "qes/types.hpp"

namespace qes {

/// Options for the damped Newton iteration on (b, sqrt c).
struct CrossSolveOptions
{
    int max_iterations = 200;
    int max_halvings = 20;
    double residual_tolerance = 1e-10;
    /// Samples of the coarse pre-scan over sqrt(ac).
    int scan_points = 4000;
};

struct CrossSolution
{
    /// Root reached from the documented starting point (or the scanned root nearest to it).
    PotentialParams params;
    /// Every distinct root located by the pre-scan and polished by Newton, sorted by c.
    std::vector<PotentialParams> roots;
    int iterations = 0;
};

/// Solves the ground constraint for l together with the l' != l excited relation for (b, c).
/// Throws InvalidInput, DegenerateDenominator or NoConvergence.
CrossSolution solve_cross_l(double a, int ell, int ell_prime, const CrossSolveOptions& opts = {});

} // namespace qes
