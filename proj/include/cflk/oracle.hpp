#pragma once

#include <cstddef>

#include "cflk/green.hpp"
#include "cflk/problem.hpp"

namespace cflk {

struct GridMaxResult {
    double max_abs;
    double arg_t;
    double arg_s;
    Branch branch;       // Lower or Upper
    std::size_t grid_n;  // points per axis
};

/// Brute-force maximization of |G| over both closed triangles on an n-by-n
/// uniform grid (endpoints included, the diagonal evaluated under both
/// branches), with the analytic candidates s* and a + critical length
/// injected exactly when they lie in [a, b]. Grid points win ties in
/// row-major scan order, the g1 triangle before the g2 triangle; injected
/// candidates only replace strictly larger. Requires n >= 16.
GridMaxResult grid_max_abs_green(const Problem& p, std::size_t n);

struct SignAudit {
    std::size_t violations;
    double worst;  // largest overshoot beyond the slack's bound, 0 when clean
    std::size_t grid_n;
};

/// Audits the three sign families on their sub-triangles over an n-by-n grid:
///   g2 >= 0 on the upper triangle;
///   h1 <= g1 <= 0 for s <= t <= min(b, a + critical length);
///   0 <= g1 <= h1 for a + critical length <= s <= t <= b (SuperCritical).
/// Requires n >= 16.
SignAudit check_branch_signs(const Problem& p, std::size_t n, double slack = 1e-12);

/// Max over an n-point grid of |central difference - h_prime| for both
/// diagonal sections; the grid is shrunk by eps so stencil points stay in
/// [a, b]. Requires eps > 0 and n >= 16.
double fd_check_h_derivatives(const Problem& p, std::size_t n, double eps);

}  // namespace cflk
