#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cflk/problem.hpp"

namespace cflk {

/// Per-problem closed forms: the exact maximum of |G|, the corrected
/// threshold, and the refuted one (nullopt when its denominator vanishes).
struct BoundReport {
    Regime regime;
    double max_abs_green;
    double lyapunov_threshold;
    std::optional<double> kirane_threshold;
    std::optional<double> s_star;
    bool s_star_in_interval;
};

/// SubCritical: 2-alpha. SuperCritical:
///   [(alpha-1)(b-a) + (2-alpha)]^2 / (4 (alpha-1) (b-a)).
double max_abs_green(const Problem& p);

/// Reciprocal of max_abs_green in both regimes:
/// SubCritical 1/(2-alpha), SuperCritical 4(alpha-1)(b-a)/[...]^2.
double lyapunov_threshold(const Problem& p);

/// 4(alpha-1)(b-a) / [(alpha-1)(b-a) - (2-alpha)]^2. Returns nullopt
/// (singular) when b-a equals the critical length, where the denominator
/// vanishes.
std::optional<double> kirane_threshold(const Problem& p);

BoundReport bound_report(const Problem& p);

struct SweepRow {
    double alpha;
    double length;
    RegimeKind regime;
    double max_abs_green;
    double lyapunov_threshold;
    std::optional<double> kirane_threshold;  // nullopt = singular
    std::optional<double> oracle_max;        // filled by callers running the grid oracle
};

/// One row per (alpha, length) pair with a = 0 and b = length, emitted in
/// lexicographic (alpha, length) order with exact duplicates removed.
/// Invalid grid entries are rejected with an itemized DomainError.
std::vector<SweepRow> threshold_comparison_sweep(std::span<const double> alphas,
                                                 std::span<const double> lengths);

inline constexpr const char* kSweepCsvHeader =
    "alpha,length,regime,max_abs_green,lyapunov_threshold,kirane_threshold";

/// Renders rows under kSweepCsvHeader; singular thresholds print as the
/// literal token SINGULAR, floats with 17 significant digits.
std::string sweep_csv(std::span<const SweepRow> rows);

}  // namespace cflk
