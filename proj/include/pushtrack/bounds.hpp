#ifndef PUSHTRACK_BOUNDS_HPP
#define PUSHTRACK_BOUNDS_HPP

#include <map>
#include <optional>
#include <string>

#include "pushtrack/curve.hpp"

namespace pushtrack {

// All bound evaluators work in the log domain (natural log, double) so that
// 9^i stays representable for large i. Display-only: the certified numbers
// live in the spectral module.
enum class PowerClass { primitive, square_S04_S12, power234_S11, other };
const char* to_string(PowerClass c);

struct BoundsReport {
    int self_int = 0;
    SurfaceSig surface;
    PowerClass power_class = PowerClass::primitive;
    std::optional<double> log_lower;
    std::optional<double> log_upper;
    bool upper_strict = false;        // "<" rather than "<=" at the upper endpoint
    bool hypothesis_warning = false;  // precondition i >= 2g+n-2 (strict if closed) failed
    std::map<std::string, double> extras;
};

// Lower bound per the non-primitive corollary cases (iii/i/ii: i+1, i,
// (i+1)/2 inside the fifth root); upper bound i*log 9 (holds without
// primitivity). Requires 3g + n > 3.
BoundsReport dilatation_bounds(int i, const SurfaceSig& surface, PowerClass power_class);

// Least dilatation in the point-pushing subgroup. Closed surface, no k:
// [log(2g)/5, g log 11). Closed, k >= 3g-1, g >= 3: [log(k+1)/5, log k + g log 11).
// General (g,n): lower bound log(2g+n-1)/5 only.
BoundsReport least_dilatation_bounds(const SurfaceSig& surface,
                                     std::optional<int> k = std::nullopt);

enum class AlgebraicSeries { lower_central, derived, lower_central_punctured };

struct AlgebraicBound {
    double log_lower = 0.0;
    bool vacuous = false;    // parameters too small; bound clamped to 0
    bool weakened = false;   // 4 <= 3g+n <= 5: corollary's weaker form
    std::map<std::string, double> extras;
};

AlgebraicBound algebraic_lower_bounds(int k, AlgebraicSeries series,
                                      const SurfaceSig& surface);

struct PowerCurveBounds {
    long long intersection_bound = 0;  // i(gamma^m) <= m^2 i + m - 1
    double log_dilatation = 0.0;       // m * log lambda
    double growth_constant = 0.0;      // C = log lambda / sqrt(2 i)
    double guaranteed_log_lower = 0.0; // C * sqrt(intersection_bound)
};

PowerCurveBounds power_curve_bounds(long long i_primitive, long long m, double log_lambda);

}  // namespace pushtrack

#endif
