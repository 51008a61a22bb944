#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pushtrack/analysis.hpp"
#include "pushtrack/bounds.hpp"
#include "pushtrack/families.hpp"
#include "pushtrack/incidence.hpp"
#include "pushtrack/spectral.hpp"
#include "pushtrack/verify.hpp"

namespace {

using namespace pushtrack;

// Exit codes: 0 success, 1 mathematical failure (failed sandwich or
// acceptance criterion), 2 input error.
constexpr int kExitOk = 0;
constexpr int kExitMathFail = 1;
constexpr int kExitInputError = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::Io, "cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int cmd_faces(const std::string& path) {
    const CurveDiagram diagram = parse_curve(read_file(path));
    for (const auto& f : diagram.faces()) {
        std::cout << f.label << "  corners=" << f.corners.size()
                  << "  punctures=" << f.punctures << "\n";
    }
    return kExitOk;
}

int cmd_analyze(const std::string& path, const std::string& tol_text, bool as_json) {
    const CurveDiagram diagram = parse_curve(read_file(path));
    const Rat tol = tol_text.empty() ? default_tolerance() : rat_from_string(tol_text);
    if (tol <= Rat(0)) fail(ErrorKind::BadParameters, "tolerance must be positive");
    const AnalysisReport report = analyze(diagram, tol);
    std::cout << (as_json ? report_to_json(report) : report_to_text(report));
    if (report.sandwich_pass && !*report.sandwich_pass) return kExitMathFail;
    return kExitOk;
}

void print_family_report(const IntMatrix& m, const Int& first_row_formula) {
    nlohmann::ordered_json j;
    j["provenance"] = m.provenance();
    j["dimension"] = m.dim();
    j["first_row_sum"] = m.row_sum(0).str();
    j["first_row_sum_formula"] = first_row_formula.str();
    j["first_row_sum_matches_formula"] = m.row_sum(0) == first_row_formula;
    j["max_row_sum"] = m.max_row_sum().str();
    j["primitive"] = is_primitive(m);
    j["matrix"] = nlohmann::ordered_json::parse(matrix_to_json(m));
    std::cout << j.dump(2) << "\n";
}

int cmd_family_fixed(int genus, const std::string& emit_curve) {
    const auto [matrix, curve] = fixed_family(genus);
    print_family_report(matrix, fixed_family_first_row_sum(genus));
    if (!emit_curve.empty()) {
        std::ofstream out(emit_curve, std::ios::binary);
        if (!out) fail(ErrorKind::Io, "cannot write " + emit_curve);
        out << curve_to_json(curve);
    }
    return kExitOk;
}

int cmd_family_winding(int genus, int winding) {
    const IntMatrix matrix = winding_family(genus, winding);
    print_family_report(matrix, winding_family_first_row_sum(genus, winding));
    return kExitOk;
}

int cmd_bounds(int genus, int punctures, int selfint, int power,
               const std::string& power_class_name, double log_lambda) {
    const SurfaceSig surface{genus, punctures};
    PowerClass power_class = PowerClass::primitive;
    if (power_class_name == "square_S04_S12") power_class = PowerClass::square_S04_S12;
    else if (power_class_name == "power234_S11") power_class = PowerClass::power234_S11;
    else if (power_class_name == "other") power_class = PowerClass::other;
    else if (power_class_name != "primitive")
        fail(ErrorKind::BadParameters, "unknown power class " + power_class_name);

    nlohmann::ordered_json j;
    auto bounds_block = [](const BoundsReport& b) {
        nlohmann::ordered_json out;
        if (b.log_lower) {
            out["log_lower"] = double_to_string(*b.log_lower);
            out["lower"] = double_to_string(std::exp(*b.log_lower));
        }
        if (b.log_upper) {
            out["log_upper"] = double_to_string(*b.log_upper);
            out["upper"] = double_to_string(std::exp(*b.log_upper));
            out["upper_strict"] = b.upper_strict;
        }
        out["hypothesis_warning"] = b.hypothesis_warning;
        return out;
    };

    if (selfint > 0) {
        j["dilatation_bounds"] = bounds_block(dilatation_bounds(selfint, surface, power_class));
        if (surface.punctures == 0 && surface.genus >= 3 && selfint >= 3 * surface.genus - 1)
            j["least_dilatation_stratified"] =
                bounds_block(least_dilatation_bounds(surface, selfint));
        if (power > 1) {
            const double L =
                log_lambda > 0.0
                    ? log_lambda
                    : dilatation_bounds(selfint, surface, power_class).log_lower.value();
            const PowerCurveBounds p = power_curve_bounds(selfint, power, L);
            nlohmann::ordered_json pj;
            pj["intersection_bound"] = p.intersection_bound;
            pj["log_dilatation"] = double_to_string(p.log_dilatation);
            pj["growth_constant"] = double_to_string(p.growth_constant);
            pj["guaranteed_log_lower"] = double_to_string(p.guaranteed_log_lower);
            pj["log_lambda_used"] = double_to_string(L);
            j["power_curve"] = pj;
        }
    }
    j["least_dilatation"] = bounds_block(least_dilatation_bounds(surface));
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"point-pushing pretracks, incidence matrices, and dilatation bounds"};
    app.require_subcommand(1);

    std::string curve_path, tol_text, emit_curve, filter, power_class_name = "primitive";
    bool as_json = false;
    int genus = 2, punctures = 0, selfint = 0, power = 0, winding = 2;
    double log_lambda = 0.0;

    auto* faces = app.add_subcommand("faces", "list canonical faces of a curve file");
    faces->add_option("file", curve_path, "curve JSON file")->required();

    auto* analyze_cmd = app.add_subcommand("analyze", "full analysis of a curve file");
    analyze_cmd->add_option("file", curve_path, "curve JSON file")->required();
    analyze_cmd->add_option("--tol", tol_text, "enclosure tolerance, e.g. 1/1000000000");
    analyze_cmd->add_flag("--json", as_json, "emit the JSON report");

    auto* family = app.add_subcommand("family", "generate a family incidence matrix");
    auto* fixed = family->add_subcommand("fixed", "genus-g cyclic-cover family");
    fixed->add_option("--genus", genus, "genus >= 2")->required();
    fixed->add_option("--emit-curve", emit_curve, "write the lifted curve file here");
    auto* winding_cmd = family->add_subcommand("winding", "winding family");
    winding_cmd->add_option("--genus", genus, "genus >= 3")->required();
    winding_cmd->add_option("--winding", winding, "winding parameter n >= 2")->required();
    family->require_subcommand(1);

    auto* bounds_cmd = app.add_subcommand("bounds", "evaluate closed-form bounds");
    bounds_cmd->add_option("--genus", genus, "surface genus")->required();
    bounds_cmd->add_option("--punctures", punctures, "puncture count")->required();
    bounds_cmd->add_option("--selfint", selfint, "self-intersection number");
    bounds_cmd->add_option("--power", power, "power m for the power-curve bounds");
    bounds_cmd->add_option("--power-class", power_class_name,
                           "primitive|square_S04_S12|power234_S11|other");
    bounds_cmd->add_option("--log-lambda", log_lambda,
                           "log dilatation of the base curve (default: theorem lower bound)");

    auto* verify = app.add_subcommand("verify", "run the acceptance-criteria suite");
    verify->add_option("--filter", filter, "run only criteria whose name contains this");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (faces->parsed()) return cmd_faces(curve_path);
        if (analyze_cmd->parsed()) return cmd_analyze(curve_path, tol_text, as_json);
        if (family->parsed()) {
            if (fixed->parsed()) return cmd_family_fixed(genus, emit_curve);
            return cmd_family_winding(genus, winding);
        }
        if (bounds_cmd->parsed())
            return cmd_bounds(genus, punctures, selfint, power, power_class_name, log_lambda);
        if (verify->parsed()) return run_acceptance(filter) ? kExitOk : kExitMathFail;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.input_error() ? kExitInputError : kExitMathFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMathFail;
    }
    return kExitInputError;
}
