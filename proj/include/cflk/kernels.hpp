#pragma once

#include <cstddef>
#include <vector>

namespace cflk::kernels {

/// Result of an |v| argmax scan. Ties resolve to the smallest index.
struct AbsArgmax {
    double value;
    std::size_t index;
};

/// Result of a one-sided bound audit. `worst` is the largest signed excess
/// over the whole range (may be negative when every element complies);
/// -infinity when the range is empty.
struct Excess {
    std::size_t count;
    double worst;
};

// dst[i] = scale * (c1 * (s[i] - p) + c0), no FP contraction.
using GreenRowFn = void (*)(double* dst, const double* s, std::size_t n,
                            double p, double c1, double c0, double scale);
// Maximum of |v[i]| with first-wins index; n must be >= 1.
using AbsArgmaxFn = AbsArgmax (*)(const double* v, std::size_t n);
// Counts x[i] > bound[i] + tol; worst = max(x[i] - bound[i]).
using ExcessVecFn = Excess (*)(const double* x, const double* bound,
                               std::size_t n, double tol);
// Same against a constant bound.
using ExcessConstFn = Excess (*)(const double* x, double bound,
                                 std::size_t n, double tol);
// row[i] -= factor * pivot[i]  (separate multiply and subtract, no FMA).
using ElimUpdateFn = void (*)(double* row, const double* pivot,
                              std::size_t n, double factor);

/// One instruction-set variant of the arithmetic inner loops. All variants
/// are bit-for-bit equivalent to the scalar reference.
struct Ops {
    const char* name;
    GreenRowFn green_row;
    AbsArgmaxFn abs_argmax;
    ExcessVecFn excess_above;        // x[i] > bound[i] + tol
    ExcessConstFn excess_above_const;
    ExcessVecFn excess_below;        // x[i] < bound[i] - tol
    ExcessConstFn excess_below_const;
    ElimUpdateFn elim_update;
};

/// Portable reference implementation.
const Ops& scalar() noexcept;

/// Variant selected at startup: CFLK_SIMD=scalar|avx2|neon forces a path
/// (falling back to scalar when unavailable), otherwise the best supported
/// one is used.
const Ops& active() noexcept;

/// All variants usable on this machine, scalar first.
std::vector<const Ops*> available();

}  // namespace cflk::kernels
