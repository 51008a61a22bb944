#include <doctest.h>

#include <cmath>

#include "pushtrack/analysis.hpp"
#include "pushtrack/families.hpp"

using namespace pushtrack;

TEST_CASE("analyze gamma0 end to end") {
    const AnalysisReport r = analyze(gamma0_curve(), default_tolerance());
    CHECK(r.filling);
    CHECK(r.hypothesis_ok);
    CHECK(r.surface == SurfaceSig{2, 0});
    CHECK(r.self_int == 3);
    CHECK(r.taut_warnings.empty());
    REQUIRE(r.track_class.has_value());
    CHECK(*r.track_class == TrackClass::train_track);
    CHECK(*r.row_sum == 41);
    CHECK(r.matrix_primitive);
    REQUIRE(r.enclosure.has_value());
    CHECK(r.enclosure_certified);
    const double lo = rat_to_double(r.enclosure->lo);
    const double hi = rat_to_double(r.enclosure->hi);
    CHECK(lo >= 1.3195);
    CHECK(hi <= 41.0);
    REQUIRE(r.sandwich_pass.has_value());
    CHECK(*r.sandwich_pass);
}

TEST_CASE("analyze degrades gracefully off the hypotheses") {
    SUBCASE("non-filling curve: no matrix section") {
        const CurveDiagram nf("nf", {{1, 1}, {1, 2}}, {{1, Hand::right}},
                              {{"f:c1.q0", 2}});
        const AnalysisReport r = analyze(nf, default_tolerance());
        CHECK_FALSE(r.filling);
        CHECK_FALSE(r.census.has_value());
        CHECK_FALSE(r.enclosure.has_value());
        CHECK_FALSE(r.sandwich_pass.has_value());
    }
    SUBCASE("filling but 3g+n = 3") {
        const CurveDiagram f8("f8", {{1, 1}, {1, 2}}, {{1, Hand::right}},
                              {{"f:c1.q0", 1}, {"f:c1.q1", 1}, {"f:c1.q3", 1}});
        const AnalysisReport r = analyze(f8, default_tolerance());
        CHECK(r.filling);
        CHECK_FALSE(r.hypothesis_ok);
        CHECK_FALSE(r.census.has_value());
    }
}

TEST_CASE("analyze a bigon track: enclosure still certified") {
    const CurveDiagram d("bigon-pair",
                         {{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 1}, {4, 1}, {3, 2}, {4, 2}},
                         {{1, Hand::right}, {2, Hand::right}, {3, Hand::right},
                          {4, Hand::right}});
    const AnalysisReport r = analyze(d, default_tolerance());
    REQUIRE(r.track_class.has_value());
    CHECK(*r.track_class == TrackClass::bigon_track);
    REQUIRE(r.enclosure.has_value());
    CHECK(r.enclosure_certified);
    CHECK(*r.sandwich_pass);
}

TEST_CASE("analyze winding fixture: uncertified PF enclosure") {
    const AnalysisReport r = analyze(winding_curve(2), default_tolerance());
    CHECK(r.filling);
    REQUIRE(r.track_class.has_value());
    CHECK(*r.track_class == TrackClass::pretrack_only);
    REQUIRE(r.enclosure.has_value());
    CHECK_FALSE(r.enclosure_certified);  // labeled "PF eigenvalue of M only"
    const std::string json = report_to_json(r);
    CHECK(json.find("PF eigenvalue of M only") != std::string::npos);
}

TEST_CASE("reports are byte-deterministic") {
    const AnalysisReport r = analyze(gamma0_curve(), default_tolerance());
    const std::string a = report_to_json(r);
    const std::string b = report_to_json(analyze(gamma0_curve(), default_tolerance()));
    CHECK(a == b);
    CHECK(a.find("\"sandwich\": \"pass\"") != std::string::npos);
    CHECK(a.find("certified dilatation enclosure") != std::string::npos);
    CHECK(a.find("\"row_sum_bound\": \"41\"") != std::string::npos);
    const std::string text = report_to_text(r);
    CHECK(text.find("train_track") != std::string::npos);
}

TEST_CASE("the sandwich inequality holds on every analyzable fixture") {
    std::vector<CurveDiagram> curves = {gamma0_curve(), fixed_family(3).second,
                                        winding_curve(1), winding_curve(3)};
    for (const auto& d : curves) {
        const AnalysisReport r = analyze(d, default_tolerance());
        REQUIRE(r.enclosure.has_value());
        REQUIRE(r.bounds.has_value());
        const double log_lo = std::log(rat_to_double(r.enclosure->lo));
        const double log_hi = std::log(rat_to_double(r.enclosure->hi));
        CHECK(*r.bounds->log_lower <= log_lo);
        CHECK(log_hi <= *r.bounds->log_upper);
        CHECK(*r.sandwich_pass);
    }
}
