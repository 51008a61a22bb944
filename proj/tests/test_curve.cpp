#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "pushtrack/curve.hpp"
#include "pushtrack/families.hpp"

using namespace pushtrack;

namespace {

CurveDiagram figure_eight(const std::map<std::string, int>& punctures = {}) {
    return CurveDiagram("figure-eight", {{1, 1}, {1, 2}}, {{1, Hand::right}}, punctures);
}

// Random valid based Gauss word: repeatedly pair the least unused slot
// (a first passage, so ids come out in first-passage order) with a random
// later slot.
CurveDiagram random_diagram(std::mt19937& rng, int n) {
    const int m = 2 * n;
    std::vector<bool> used(static_cast<size_t>(m), false);
    int next_id = 1;
    std::vector<PassageToken> word(static_cast<size_t>(m));
    for (int s = 0; s < m; ++s) {
        if (used[static_cast<size_t>(s)]) continue;
        std::vector<int> free;
        for (int t = s + 1; t < m; ++t)
            if (!used[static_cast<size_t>(t)]) free.push_back(t);
        const int t = free[std::uniform_int_distribution<size_t>(0, free.size() - 1)(rng)];
        used[static_cast<size_t>(s)] = used[static_cast<size_t>(t)] = true;
        word[static_cast<size_t>(s)] = {next_id, 1};
        word[static_cast<size_t>(t)] = {next_id, 2};
        ++next_id;
    }
    std::vector<Crossing> crossings;
    for (int c = 1; c <= n; ++c) {
        const Hand h = std::uniform_int_distribution<int>(0, 1)(rng) ? Hand::right : Hand::left;
        crossings.push_back({c, h});
    }
    return CurveDiagram("random", std::move(word), std::move(crossings));
}

}  // namespace

TEST_CASE("figure-eight diagram: one crossing, three faces, genus 0") {
    const CurveDiagram d = figure_eight();
    CHECK(d.self_intersections() == 1);
    CHECK(d.faces().size() == 3);
    CHECK(d.surface() == SurfaceSig{0, 0});

    std::multiset<size_t> corner_counts;
    for (const auto& f : d.faces()) corner_counts.insert(f.corners.size());
    CHECK(corner_counts == std::multiset<size_t>{1, 1, 2});

    // Canonical labels: the 2-corner face holds the outbound and inbound
    // quadrants; the lobes hold the mixed quadrants.
    CHECK(d.faces()[0].label == "f:c1.q0");
    CHECK(d.faces()[0].corners.size() == 2);
    CHECK(d.faces()[1].label == "f:c1.q1");
    CHECK(d.faces()[2].label == "f:c1.q3");
}

TEST_CASE("gamma0: single 12-corner face, genus 2") {
    const CurveDiagram g0 = gamma0_curve();
    CHECK(g0.self_intersections() == 3);
    REQUIRE(g0.faces().size() == 1);
    CHECK(g0.faces()[0].corners.size() == 12);
    CHECK(g0.faces()[0].label == "f:c1.q0");
    CHECK(g0.surface() == SurfaceSig{2, 0});
}

TEST_CASE("lifted family curve on S_g has g-1 faces") {
    for (int g : {3, 4, 5}) {
        const CurveDiagram curve = fixed_family(g).second;
        CHECK(static_cast<int>(curve.faces().size()) == g - 1);
        CHECK(curve.surface().genus == g);
        CHECK(curve.self_intersections() == 3 * (g - 1));
    }
}

TEST_CASE("malformed Gauss codes are rejected") {
    auto make = [](std::vector<PassageToken> w, std::vector<Crossing> c) {
        return CurveDiagram("bad", std::move(w), std::move(c));
    };
    // second passage before the first
    CHECK_THROWS_AS(make({{1, 2}, {1, 1}}, {{1, Hand::right}}), Error);
    // empty word
    CHECK_THROWS_AS(make({}, {}), Error);
    // duplicate passage
    CHECK_THROWS_AS(make({{1, 1}, {1, 1}}, {{1, Hand::right}}), Error);
    // ids out of first-passage order
    CHECK_THROWS_AS(make({{2, 1}, {2, 2}, {1, 1}, {1, 2}},
                         {{1, Hand::right}, {2, Hand::right}}),
                    Error);
    // crossing list mismatch
    CHECK_THROWS_AS(make({{1, 1}, {1, 2}}, {{2, Hand::right}}), Error);
    try {
        make({{1, 2}, {1, 1}}, {{1, Hand::right}});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::MalformedCode);
    }
}

TEST_CASE("surface_and_filling on the figure-eight variants") {
    SUBCASE("no punctures: fills S_{0,0}, hypothesis fails downstream") {
        const auto sf = surface_and_filling(figure_eight());
        CHECK(sf.filling);
        CHECK_FALSE(kra_hypothesis(sf.surface));
    }
    SUBCASE("one puncture per face: filling, Kra boundary case") {
        const auto sf = surface_and_filling(
            figure_eight({{"f:c1.q0", 1}, {"f:c1.q1", 1}, {"f:c1.q3", 1}}));
        CHECK(sf.surface == SurfaceSig{0, 3});
        CHECK(sf.filling);
        CHECK_FALSE(kra_hypothesis(sf.surface));  // 3g+n = 3
    }
    SUBCASE("two punctures on one face: not filling") {
        const auto sf = surface_and_filling(figure_eight({{"f:c1.q0", 2}}));
        CHECK_FALSE(sf.filling);
    }
}

TEST_CASE("gamma0 fills S_2 and meets the strict intersection bound") {
    const auto sf = surface_and_filling(gamma0_curve());
    CHECK(sf.surface == SurfaceSig{2, 0});
    CHECK(sf.filling);
    CHECK(sf.meets_intersection_bound);  // 3 > 2*2 - 2
}

TEST_CASE("taut_obstruction") {
    SUBCASE("figure-eight reports exactly the two 1-corner faces") {
        const auto faces = taut_obstruction(figure_eight());
        REQUIRE(faces.size() == 2);
        CHECK(faces[0].corners.size() == 1);
        CHECK(faces[1].corners.size() == 1);
    }
    SUBCASE("gamma0 reports nothing") {
        CHECK(taut_obstruction(gamma0_curve()).empty());
    }
    SUBCASE("puncturing the monogon faces silences them") {
        const auto faces =
            taut_obstruction(figure_eight({{"f:c1.q1", 1}, {"f:c1.q3", 1}}));
        CHECK(faces.empty());
    }
}

TEST_CASE("handedness of passages") {
    const CurveDiagram d = figure_eight();
    CHECK(handedness_of_passage(d, 1, 1) == Hand::right);
    CHECK(handedness_of_passage(d, 1, 2) == Hand::left);
    CHECK_THROWS_AS(handedness_of_passage(d, 7, 1), Error);

    const CurveDiagram g0 = gamma0_curve();
    for (int c = 1; c <= 3; ++c)
        CHECK(handedness_of_passage(g0, c, 1) != handedness_of_passage(g0, c, 2));
}

TEST_CASE("properties on random diagrams") {
    std::mt19937 rng(12345u);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const CurveDiagram d = random_diagram(rng, n);

        // Euler formula, exactly.
        const int F = static_cast<int>(d.faces().size());
        CHECK(n - 2 * n + F == 2 - 2 * d.surface().genus);

        // Every quadrant of every crossing appears in exactly one face corner.
        std::set<std::pair<int, int>> quadrants;
        for (const auto& f : d.faces())
            for (const auto& c : f.corners)
                CHECK(quadrants.insert({c.crossing, c.quadrant}).second);
        CHECK(quadrants.size() == static_cast<size_t>(4 * n));

        // Mirror symmetry: same face count and genus.
        const CurveDiagram m = mirror(d);
        CHECK(m.faces().size() == d.faces().size());
        CHECK(m.surface().genus == d.surface().genus);

        // No punctures: filling, and the intersection bound holds strictly.
        const auto sf = surface_and_filling(d);
        CHECK(sf.filling);
        CHECK(sf.meets_intersection_bound);
    }
}

TEST_CASE("rotate_basepoint yields a valid diagram with the same invariants") {
    CurveDiagram d = gamma0_curve();
    for (int step = 0; step < 6; ++step) {
        d = rotate_basepoint(d);
        CHECK(d.self_intersections() == 3);
        CHECK(d.surface().genus == 2);
        CHECK(d.faces().size() == 1);
    }
}

TEST_CASE("curve JSON round trip and parse errors") {
    const CurveDiagram g0 = gamma0_curve();
    const CurveDiagram back = parse_curve(curve_to_json(g0));
    CHECK(back.self_intersections() == 3);
    CHECK(back.surface() == g0.surface());
    for (int c = 1; c <= 3; ++c)
        CHECK(back.crossing(c).first_passage_inbound == g0.crossing(c).first_passage_inbound);

    CHECK_THROWS_AS(parse_curve("not json"), Error);
    CHECK_THROWS_AS(parse_curve("{}"), Error);
    // unknown face label
    try {
        parse_curve(R"({"name":"x","crossings":[{"id":1,"first_passage_inbound":"right"}],)"
                    R"("word":[[1,1],[1,2]],"punctures":{"f:c9.q0":1}})");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnknownFaceLabel);
    }
    // negative puncture count
    try {
        parse_curve(R"({"name":"x","crossings":[{"id":1,"first_passage_inbound":"right"}],)"
                    R"("word":[[1,1],[1,2]],"punctures":{"f:c1.q0":-1}})");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BadSurface);
    }
}
