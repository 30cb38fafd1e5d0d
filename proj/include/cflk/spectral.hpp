#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cflk/problem.hpp"

namespace cflk {

/// Midpoint-rule discretization of the kernel operator
/// u(t) -> integral of G(t, s) u(s) ds over [a, b].
struct KernelMatrix {
    std::size_t n;
    std::vector<double> nodes;    // t_i = a + (i + 1/2) (b-a)/n
    std::vector<double> weights;  // (b-a)/n each
    std::vector<double> entries;  // row-major, entries[i*n + j] = w_j * G(t_i, t_j)

    double entry(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
};

/// Branch by sign of t_j - t_i; diagonal entries use the averaged section
/// value (g1 + g2)/2, since the node's cell straddles both triangles.
/// Requires n >= 8.
KernelMatrix assemble_kernel(const Problem& p, std::size_t n);

struct Determinant {
    int sign;        // -1, 0, +1
    double log_abs;  // ln |det|; -infinity when sign == 0

    double value() const;
};

/// det(I - lambda K) via LU with partial pivoting; magnitude tracked in log
/// space, a zero pivot reports sign 0.
Determinant det_i_minus_lambda_k(const KernelMatrix& K, double lambda);

struct ScanPoint {
    double lambda;
    int det_sign;
    double det_log_abs;
};

struct CharacteristicValue {
    double lambda_star;
    double bracket_lo;
    double bracket_hi;
    double det_residual;              // det(I - lambda* K)
    std::vector<double> eigenvector;  // near-null vector at the nodes, max-norm 1
};

struct CharacteristicSearch {
    std::optional<CharacteristicValue> value;  // empty: no sign change up to lambda_max
    std::vector<ScanPoint> trace;
};

/// 50 pi^2 / (b-a)^2, a generous ceiling above the expected first
/// characteristic value.
double default_lambda_max(const Problem& p);

/// Scans det(I - lambda K) over a geometric lambda grid from half the
/// Lyapunov-predicted lower bound lyapunov_threshold/(b-a) up to lambda_max,
/// then refines the first sign change by bisection to |hi - lo| <= tol.
/// Requires n >= 64, tol > 0, lambda_max > lyapunov_threshold/(b-a).
CharacteristicSearch smallest_characteristic_value(const Problem& p, std::size_t n,
                                                   double lambda_max, double tol,
                                                   double scan_ratio = 1.05);

/// u(t) = lambda * sum_j w_j G(t, t_j) u_j; extends a node vector to any t.
double extend_solution(const Problem& p, const KernelMatrix& K, double lambda,
                       std::span<const double> u, double t);

/// lambda* (b-a) - lyapunov_threshold for the constant-potential problem,
/// using default_lambda_max and a 1e-8 bisection tolerance; nullopt when the
/// scan finds no sign change.
std::optional<double> lyapunov_gap(const Problem& p, std::size_t n);

}  // namespace cflk
