#include "pushtrack/analysis.hpp"

#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "pushtrack/incidence.hpp"

namespace pushtrack {

AnalysisReport analyze(const CurveDiagram& diagram, const Rat& tol) {
    AnalysisReport report;
    report.curve_name = diagram.name();
    report.self_int = diagram.self_intersections();

    const SurfaceFilling sf = surface_and_filling(diagram);
    report.surface = sf.surface;
    report.filling = sf.filling;
    report.hypothesis_ok = kra_hypothesis(sf.surface);
    for (const auto& f : taut_obstruction(diagram)) {
        std::ostringstream os;
        os << "face " << f.label << " (" << f.corners.size()
           << (f.corners.size() == 1 ? " corner" : " corners")
           << ") admits an elementary reduction; the diagram may not be taut";
        report.taut_warnings.push_back(os.str());
    }
    if (!report.filling || !report.hypothesis_ok) return report;

    const Pretrack track = build_pretrack(diagram);
    report.census = classify_regions(track);
    report.track_class = track.track_class;

    const IntMatrix m = incidence_matrix(diagram);
    report.row_sum = row_sum_bound(m);
    report.matrix_primitive = is_primitive(m);
    if (report.matrix_primitive) {
        report.enclosure = pf_enclosure(m, tol);
        report.enclosure_certified = track.track_class == TrackClass::train_track ||
                                     track.track_class == TrackClass::bigon_track;
    }
    report.bounds = dilatation_bounds(report.self_int, report.surface, PowerClass::primitive);
    if (report.enclosure) {
        const double log_lo = std::log(rat_to_double(report.enclosure->lo));
        const double log_hi = std::log(rat_to_double(report.enclosure->hi));
        report.sandwich_pass = report.bounds->log_lower.value() <= log_lo &&
                               log_hi <= report.bounds->log_upper.value();
    }
    return report;
}

std::string enclosure_to_json(const SpectralEnclosure& e) {
    nlohmann::ordered_json j;
    j["lo"] = rat_to_string(e.lo);
    j["hi"] = rat_to_string(e.hi);
    j["lo_float"] = double_to_string(rat_to_double(e.lo));
    j["hi_float"] = double_to_string(rat_to_double(e.hi));
    j["iterations"] = e.iterations;
    j["primitive"] = e.primitive;
    return j.dump();
}

std::string matrix_to_json(const IntMatrix& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int i = 0; i < m.dim(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows.dump();
}

namespace {

nlohmann::ordered_json census_json(const RegionCensus& c) {
    nlohmann::ordered_json j;
    j["nullgons"] = c.nullgons;
    j["monogons"] = c.monogons;
    j["bigons"] = c.bigons;
    j["trigons"] = c.trigons;
    j["higher"] = c.higher;
    j["punctured_monogons"] = c.punctured_monogons;
    j["punctured_nullgons"] = c.punctured_nullgons;
    j["punctured_other"] = c.punctured_other;
    j["track_class"] = to_string(c.track_class);
    j["euler_sum"] = rat_to_string(c.euler_sum);
    return j;
}

nlohmann::ordered_json bounds_json(const BoundsReport& b) {
    nlohmann::ordered_json j;
    j["self_int"] = b.self_int;
    j["genus"] = b.surface.genus;
    j["punctures"] = b.surface.punctures;
    j["power_class"] = to_string(b.power_class);
    if (b.log_lower) {
        j["log_lower"] = double_to_string(*b.log_lower);
        j["lower"] = double_to_string(std::exp(*b.log_lower));
    }
    if (b.log_upper) {
        j["log_upper"] = double_to_string(*b.log_upper);
        j["upper"] = double_to_string(std::exp(*b.log_upper));
        j["upper_strict"] = b.upper_strict;
    }
    j["hypothesis_warning"] = b.hypothesis_warning;
    if (!b.extras.empty()) {
        nlohmann::ordered_json extras;
        for (const auto& [key, value] : b.extras) extras[key] = double_to_string(value);
        j["extras"] = extras;
    }
    return j;
}

}  // namespace

std::string report_to_json(const AnalysisReport& r) {
    nlohmann::ordered_json j;
    j["curve"] = r.curve_name;
    j["genus"] = r.surface.genus;
    j["punctures"] = r.surface.punctures;
    j["self_intersections"] = r.self_int;
    j["filling"] = r.filling;
    j["kra_hypothesis"] = r.hypothesis_ok;
    j["taut_warnings"] = r.taut_warnings;
    if (r.census) j["regions"] = census_json(*r.census);
    if (r.row_sum) j["row_sum_bound"] = r.row_sum->str();
    if (r.census) {
        j["matrix_primitive"] = r.matrix_primitive;
        if (r.enclosure) {
            j["enclosure"] = nlohmann::ordered_json::parse(enclosure_to_json(*r.enclosure));
            j["enclosure_meaning"] = r.enclosure_certified
                                         ? "certified dilatation enclosure"
                                         : "PF eigenvalue of M only";
            j["enclosure_converged"] = r.enclosure->converged;
        }
        if (r.bounds) j["bounds"] = bounds_json(*r.bounds);
        if (r.sandwich_pass) j["sandwich"] = *r.sandwich_pass ? "pass" : "fail";
    }
    return j.dump(2) + "\n";
}

std::string report_to_text(const AnalysisReport& r) {
    std::ostringstream os;
    os << "curve: " << r.curve_name << "\n";
    os << "surface: genus " << r.surface.genus << ", punctures " << r.surface.punctures
       << "\n";
    os << "self-intersections: " << r.self_int << "\n";
    os << "filling: " << (r.filling ? "yes" : "no") << "\n";
    os << "Kra hypothesis 3g+n>3: " << (r.hypothesis_ok ? "yes" : "no") << "\n";
    for (const auto& w : r.taut_warnings) os << "warning: " << w << "\n";
    if (!r.census) {
        os << "no pretrack analysis (curve must fill a surface with 3g+n>3)\n";
        return os.str();
    }
    const auto& c = *r.census;
    os << "track class: " << to_string(c.track_class) << "\n";
    os << "regions: " << c.trigons << " trigons, " << c.bigons << " bigons, "
       << c.monogons << " monogons, " << c.nullgons << " nullgons, " << c.higher
       << " higher, " << c.punctured_monogons << " punctured monogons, "
       << c.punctured_nullgons << " punctured nullgons"
       << "; euler sum " << rat_to_string(c.euler_sum) << "\n";
    os << "row-sum bound: " << r.row_sum->str() << "\n";
    os << "primitive: " << (r.matrix_primitive ? "yes" : "no") << "\n";
    if (r.enclosure) {
        os << (r.enclosure_certified ? "certified dilatation enclosure"
                                     : "PF eigenvalue of M only")
           << ": [" << double_to_string(rat_to_double(r.enclosure->lo)) << ", "
           << double_to_string(rat_to_double(r.enclosure->hi)) << "] in "
           << r.enclosure->iterations << " iterations"
           << (r.enclosure->converged ? "" : " (iteration cap hit)") << "\n";
    }
    if (r.bounds && r.bounds->log_lower && r.bounds->log_upper) {
        os << "theorem bounds (log): [" << double_to_string(*r.bounds->log_lower) << ", "
           << double_to_string(*r.bounds->log_upper) << "]\n";
    }
    if (r.sandwich_pass) os << "sandwich: " << (*r.sandwich_pass ? "pass" : "fail") << "\n";
    return os.str();
}

}  // namespace pushtrack
