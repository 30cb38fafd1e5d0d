#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cflk/problem.hpp"

namespace cflk {

/// Sampled potential q(t) on strictly increasing nodes spanning [a, b]
/// exactly; interpreted as its piecewise-linear interpolant.
struct QSignal {
    std::vector<double> nodes;
    std::vector<double> values;
};

/// Parses a two-column "t,q" CSV (header required, '.' decimal separator).
/// Endpoints must match the problem's a and b to 1e-9 and are snapped to
/// them. Throws ParseError (malformed rows, with line numbers) or
/// DomainError (non-monotone nodes, endpoint mismatch, non-finite values).
QSignal load_q_csv(std::istream& in, const Problem& p);
QSignal load_q_csv(const std::string& path, const Problem& p);

/// Exact integral of |interpolant|: trapezoids per interval, with the zero
/// crossing of the linear interpolant inserted wherever q changes sign.
double integral_abs_q(const QSignal& q);

enum class Verdict { NoNontrivialSolution, Inconclusive };

const char* to_string(Verdict v) noexcept;

struct Certificate {
    Verdict verdict;
    double integral_abs_q;
    double threshold;
    double margin;  // integral_abs_q - threshold
};

/// NoNontrivialSolution iff integral |q| < lyapunov_threshold(p), strictly;
/// boundary equality is Inconclusive.
Certificate certify(const Problem& p, const QSignal& q);

/// {"verdict": ..., "integral_abs_q": ..., "threshold": ..., "margin": ...}
/// with numbers at 17 significant digits.
std::string certificate_json(const Certificate& c);

}  // namespace cflk
