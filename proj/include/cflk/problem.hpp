#pragma once

#include <optional>

namespace cflk {

/// A boundary value problem instance: fractional order alpha in (1, 2] on the
/// interval [a, b] with 0 <= a < b.
class Problem {
public:
    Problem(double alpha, double a, double b);

    double alpha() const noexcept { return alpha_; }
    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    double length() const noexcept { return b_ - a_; }

private:
    double alpha_;
    double a_;
    double b_;
};

enum class RegimeKind { SubCritical, SuperCritical };

const char* to_string(RegimeKind kind) noexcept;

/// Regime classification. `critical_length` is nullopt when the quotient
/// (2-alpha)/(alpha-1) is not representable as a finite double.
struct Regime {
    RegimeKind kind;
    std::optional<double> critical_length;
};

/// (2-alpha)/(alpha-1); nullopt when the quotient is not finite.
std::optional<double> critical_length(const Problem& p);

/// SubCritical iff b-a < critical length. The boundary b-a == critical length
/// classifies as SuperCritical. An unbounded critical length is SubCritical.
Regime regime(const Problem& p);

/// Stationary point of both diagonal kernel sections,
/// (a + b + (2-alpha)/(alpha-1)) / 2. Lies in [a, b] only in the SuperCritical
/// regime; nullopt when the critical length is unbounded.
std::optional<double> s_star(const Problem& p);

}  // namespace cflk
