#include "pushtrack/bounds.hpp"

#include <cmath>

#include "pushtrack/errors.hpp"

namespace pushtrack {

const char* to_string(PowerClass c) {
    switch (c) {
        case PowerClass::primitive: return "primitive";
        case PowerClass::square_S04_S12: return "square_S04_S12";
        case PowerClass::power234_S11: return "power234_S11";
        case PowerClass::other: return "other";
    }
    return "?";
}

BoundsReport dilatation_bounds(int i, const SurfaceSig& surface, PowerClass power_class) {
    if (i < 1) fail(ErrorKind::BadParameters, "self-intersection number must be >= 1");
    if (!kra_hypothesis(surface))
        fail(ErrorKind::HypothesisViolated, "surface needs 3g + n > 3");

    BoundsReport out;
    out.self_int = i;
    out.surface = surface;
    out.power_class = power_class;

    const int chi_bound = 2 * surface.genus + surface.punctures - 2;
    out.hypothesis_warning =
        surface.punctures == 0 ? !(i > chi_bound) : !(i >= chi_bound);

    // Corollary cases: (i) squares on S_{0,4} or S_{1,2}; (ii) 2nd/3rd/4th
    // powers on S_{1,1}; (iii) everything else, including primitive curves.
    const bool case_i = power_class == PowerClass::square_S04_S12 &&
                        ((surface.genus == 0 && surface.punctures == 4) ||
                         (surface.genus == 1 && surface.punctures == 2));
    const bool case_ii = power_class == PowerClass::power234_S11 &&
                         surface.genus == 1 && surface.punctures == 1;
    double radicand;
    if (case_i)
        radicand = static_cast<double>(i);
    else if (case_ii)
        radicand = (static_cast<double>(i) + 1.0) / 2.0;
    else
        radicand = static_cast<double>(i) + 1.0;
    out.log_lower = std::log(radicand) / 5.0;
    out.log_upper = static_cast<double>(i) * std::log(9.0);
    out.upper_strict = false;
    return out;
}

BoundsReport least_dilatation_bounds(const SurfaceSig& surface, std::optional<int> k) {
    if (!kra_hypothesis(surface))
        fail(ErrorKind::HypothesisViolated, "surface needs 3g + n > 3");
    BoundsReport out;
    out.surface = surface;
    out.power_class = PowerClass::primitive;

    if (k.has_value()) {
        // Stratified bound: closed surface, g >= 3, k >= 3g - 1.
        if (surface.punctures != 0 || surface.genus < 3)
            fail(ErrorKind::HypothesisViolated,
                 "k-stratified bounds need a closed surface of genus >= 3");
        if (*k < 3 * surface.genus - 1)
            fail(ErrorKind::HypothesisViolated, "need k >= 3g - 1");
        out.self_int = *k;
        out.log_lower = std::log(static_cast<double>(*k) + 1.0) / 5.0;
        out.log_upper = std::log(static_cast<double>(*k)) +
                        static_cast<double>(surface.genus) * std::log(11.0);
        out.upper_strict = true;
        return out;
    }
    if (surface.punctures == 0) {
        if (surface.genus < 2)
            fail(ErrorKind::HypothesisViolated, "closed-surface bounds need genus >= 2");
        out.log_lower = std::log(2.0 * surface.genus) / 5.0;
        out.log_upper = static_cast<double>(surface.genus) * std::log(11.0);
        out.upper_strict = true;
        return out;
    }
    // General punctured surface: lower bound only.
    out.log_lower =
        std::log(2.0 * surface.genus + static_cast<double>(surface.punctures) - 1.0) / 5.0;
    return out;
}

AlgebraicBound algebraic_lower_bounds(int k, AlgebraicSeries series,
                                      const SurfaceSig& surface) {
    if (k < 1) fail(ErrorKind::BadParameters, "series depth must be >= 1");
    if (!kra_hypothesis(surface))
        fail(ErrorKind::HypothesisViolated, "surface needs 3g + n > 3");
    AlgebraicBound out;
    const int complexity = 3 * surface.genus + surface.punctures;
    // The corollary's sharp forms need 3g + n > 5; for 4 <= 3g+n <= 5 only
    // the weaker (radicand halved) variants hold.
    out.weakened = complexity <= 5;
    const double weak = out.weakened ? 2.0 : 1.0;

    switch (series) {
        case AlgebraicSeries::lower_central: {
            const double log8k = std::log(static_cast<double>(k)) / std::log(8.0);
            if (log8k / weak <= 1.0) {
                out.vacuous = true;
                out.log_lower = 0.0;
            } else {
                out.log_lower = std::log(log8k / weak) / 5.0;
            }
            out.extras["log8_k"] = log8k;
            break;
        }
        case AlgebraicSeries::derived: {
            // Returns the paper's simplified form 2^{(k-4)/10}; the sharp
            // fifth-root form is reported alongside.
            const double sharp =
                std::log((std::pow(2.0, std::ceil(k / 2.0) - 2.0) + 1.0) / weak) / 5.0;
            out.extras["sharp_log_lower"] = std::max(0.0, sharp);
            double simplified = (static_cast<double>(k) - 4.0) / 10.0 * std::log(2.0);
            if (out.weakened) simplified -= std::log(2.0) / 5.0;
            if (simplified <= 0.0) {
                out.vacuous = simplified < 0.0;
                out.log_lower = 0.0;
            } else {
                out.log_lower = simplified;
            }
            break;
        }
        case AlgebraicSeries::lower_central_punctured: {
            if (surface.punctures < 1)
                fail(ErrorKind::BadParameters, "punctured-series bound needs n >= 1");
            const double ratio =
                static_cast<double>(k) /
                (4.0 * surface.genus + static_cast<double>(surface.punctures) - 1.0);
            if (ratio / weak <= 1.0) {
                out.vacuous = true;
                out.log_lower = 0.0;
            } else {
                out.log_lower = std::log(ratio / weak) / 5.0;
            }
            out.extras["depth_ratio"] = ratio;
            break;
        }
    }
    return out;
}

PowerCurveBounds power_curve_bounds(long long i_primitive, long long m, double log_lambda) {
    if (i_primitive < 1 || m < 1)
        fail(ErrorKind::BadParameters, "power curve bounds need positive inputs");
    PowerCurveBounds out;
    out.intersection_bound = m * m * i_primitive + m - 1;
    out.log_dilatation = static_cast<double>(m) * log_lambda;
    out.growth_constant = log_lambda / std::sqrt(2.0 * static_cast<double>(i_primitive));
    out.guaranteed_log_lower =
        out.growth_constant * std::sqrt(static_cast<double>(out.intersection_bound));
    return out;
}

}  // namespace pushtrack
