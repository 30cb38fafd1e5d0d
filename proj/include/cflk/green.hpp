#pragma once

#include <optional>

#include "cflk/problem.hpp"

namespace cflk {

enum class Branch { Lower, Upper, DiagonalBoth };

const char* to_string(Branch branch) noexcept;

/// Kernel evaluation with branch provenance. The two branches disagree on the
/// diagonal by exactly 2-alpha; there `value` carries the lower (g1) section
/// by convention and `upper_value` the g2 section.
struct GreenValue {
    double value;
    Branch branch;
    std::optional<double> upper_value;
};

/// Lower branch, valid on a <= s <= t <= b:
///   ((b-t)/(b-a)) * ((alpha-1)(s-a) - (2-alpha))
double g1(const Problem& p, double t, double s);

/// Upper branch, valid on a <= t <= s <= b, always >= 0:
///   ((t-a)/(b-a)) * ((alpha-1)(b-s) + (2-alpha))
double g2(const Problem& p, double t, double s);

/// Piecewise kernel over [a, b]^2: g1 below the diagonal, g2 above,
/// DiagonalBoth at t == s.
GreenValue green(const Problem& p, double t, double s);

/// Diagonal sections h1(s) = g1(s, s) and h2(s) = g2(s, s).
double h1(const Problem& p, double s);
double h2(const Problem& p, double s);

/// Common derivative of both diagonal sections (the two closed forms
/// coincide): ((alpha-1)(a + b - 2s) + (2-alpha)) / (b-a).
double h_prime(const Problem& p, double s);

}  // namespace cflk
