#ifndef PUSHTRACK_ANALYSIS_HPP
#define PUSHTRACK_ANALYSIS_HPP

#include <optional>
#include <string>

#include "pushtrack/bounds.hpp"
#include "pushtrack/curve.hpp"
#include "pushtrack/matrix.hpp"
#include "pushtrack/pretrack.hpp"
#include "pushtrack/spectral.hpp"

namespace pushtrack {

// Full pipeline result for one curve. When the curve does not fill or Kra's
// hypothesis fails, the track/matrix sections stay empty and the report
// degrades gracefully.
struct AnalysisReport {
    std::string curve_name;
    SurfaceSig surface;
    int self_int = 0;
    bool filling = false;
    bool hypothesis_ok = false;
    std::vector<std::string> taut_warnings;

    std::optional<RegionCensus> census;
    std::optional<TrackClass> track_class;
    std::optional<Int> row_sum;
    bool matrix_primitive = false;
    std::optional<SpectralEnclosure> enclosure;
    // true: "certified dilatation enclosure" (train/bigon track + primitive);
    // false: "PF eigenvalue of M only".
    bool enclosure_certified = false;
    std::optional<BoundsReport> bounds;
    std::optional<bool> sandwich_pass;  // log_lower <= ln lo and ln hi <= log_upper
};

AnalysisReport analyze(const CurveDiagram& diagram, const Rat& tol);

inline Rat default_tolerance() { return Rat(Int(1), int_pow(10, 9)); }

// Deterministic JSON renderings (ordered keys, 17-significant-digit floats,
// rationals in lowest terms).
std::string report_to_json(const AnalysisReport& report);
std::string report_to_text(const AnalysisReport& report);
std::string enclosure_to_json(const SpectralEnclosure& e);
std::string matrix_to_json(const IntMatrix& m);

}  // namespace pushtrack

#endif
