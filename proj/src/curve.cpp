#include "pushtrack/curve.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

namespace pushtrack {

namespace {

// Darts: directed edge sides. Edge j runs from event j to event (j+1) mod 2n;
// dart 2j is its forward direction, 2j+1 the reverse.
int dart_reverse(int d) { return d ^ 1; }

std::string corner_key(const Corner& c) {
    return "c" + std::to_string(c.crossing) + ".q" + std::to_string(c.quadrant);
}

void validate_word(const std::vector<PassageToken>& word,
                   const std::vector<Crossing>& crossings) {
    if (word.empty()) fail(ErrorKind::MalformedCode, "empty Gauss word");
    if (word.size() % 2 != 0) fail(ErrorKind::MalformedCode, "odd-length Gauss word");
    const int n = static_cast<int>(word.size()) / 2;

    std::map<int, int> first_pos, second_pos;
    for (int j = 0; j < static_cast<int>(word.size()); ++j) {
        const auto& t = word[j];
        if (t.passage != 1 && t.passage != 2)
            fail(ErrorKind::MalformedCode, "passage must be 1 or 2");
        auto& pos = (t.passage == 1) ? first_pos : second_pos;
        if (pos.count(t.crossing))
            fail(ErrorKind::MalformedCode,
                 "crossing " + std::to_string(t.crossing) + " repeats passage " +
                     std::to_string(t.passage));
        pos[t.crossing] = j;
    }
    if (static_cast<int>(first_pos.size()) != n || static_cast<int>(second_pos.size()) != n)
        fail(ErrorKind::MalformedCode, "each crossing needs exactly one first and one second passage");
    for (const auto& [id, p1] : first_pos) {
        auto it = second_pos.find(id);
        if (it == second_pos.end())
            fail(ErrorKind::MalformedCode, "crossing " + std::to_string(id) + " has no second passage");
        if (p1 > it->second)
            fail(ErrorKind::MalformedCode,
                 "crossing " + std::to_string(id) + ": second passage precedes the first");
    }
    // ids sorted by first-passage position must be 1..n
    std::vector<std::pair<int, int>> by_pos;
    for (const auto& [id, p] : first_pos) by_pos.emplace_back(p, id);
    std::sort(by_pos.begin(), by_pos.end());
    for (int k = 0; k < n; ++k)
        if (by_pos[k].second != k + 1)
            fail(ErrorKind::MalformedCode, "crossing ids must follow first-passage order 1..n");

    if (static_cast<int>(crossings.size()) != n)
        fail(ErrorKind::MalformedCode, "crossing list does not match the word");
    std::set<int> seen;
    for (const auto& c : crossings) {
        if (c.id < 1 || c.id > n || !seen.insert(c.id).second)
            fail(ErrorKind::MalformedCode, "crossing ids must be 1..n, each once");
    }
}

}  // namespace

CurveDiagram::CurveDiagram(std::string name, std::vector<PassageToken> word,
                           std::vector<Crossing> crossings,
                           const std::map<std::string, int>& punctures)
    : name_(std::move(name)), word_(std::move(word)), crossings_(std::move(crossings)) {
    validate_word(word_, crossings_);
    std::sort(crossings_.begin(), crossings_.end(),
              [](const Crossing& a, const Crossing& b) { return a.id < b.id; });

    faces_ = trace_faces(*this);

    int puncture_total = 0;
    for (const auto& [label, count] : punctures) {
        if (count < 0) fail(ErrorKind::BadSurface, "negative puncture count on " + label);
        auto it = std::find_if(faces_.begin(), faces_.end(),
                               [&](const Face& f) { return f.label == label; });
        if (it == faces_.end()) fail(ErrorKind::UnknownFaceLabel, "no face " + label);
        it->punctures = count;
        puncture_total += count;
    }

    const int n = self_intersections();
    const int V = n, E = 2 * n, F = static_cast<int>(faces_.size());
    const int chi = V - E + F;
    if ((2 - chi) % 2 != 0 || chi > 2)
        fail(ErrorKind::BadSurface, "face tracing produced non-orientable data");
    surface_ = SurfaceSig{(2 - chi) / 2, puncture_total};
}

const Crossing& CurveDiagram::crossing(int id) const {
    if (id < 1 || id > self_intersections())
        fail(ErrorKind::UnknownCrossing, "no crossing " + std::to_string(id));
    return crossings_[static_cast<size_t>(id - 1)];
}

int CurveDiagram::event_of(int crossing_id, int passage) const {
    for (int j = 0; j < static_cast<int>(word_.size()); ++j)
        if (word_[j].crossing == crossing_id && word_[j].passage == passage) return j;
    fail(ErrorKind::UnknownCrossing, "no event for crossing " + std::to_string(crossing_id));
}

std::vector<Face> trace_faces(const CurveDiagram& diagram) {
    const int n = diagram.self_intersections();
    const int m = 2 * n;

    // Outgoing dart-ends per crossing in counterclockwise order, starting at
    // the boundary of the outbound quadrant. out1/out2 leave along the first/
    // second passage; in1/in2 are the reversed arriving darts. Quadrant k lies
    // between ends k and k+1, so quadrant 0 is outbound and 2 is inbound.
    std::vector<std::array<int, 4>> rot(static_cast<size_t>(n));
    for (int c = 1; c <= n; ++c) {
        const int e1 = diagram.event_of(c, 1);
        const int e2 = diagram.event_of(c, 2);
        const int out1 = 2 * e1;
        const int out2 = 2 * e2;
        const int in1 = 2 * (((e1 - 1) + m) % m) + 1;
        const int in2 = 2 * (((e2 - 1) + m) % m) + 1;
        if (diagram.crossing(c).first_passage_inbound == Hand::right)
            rot[c - 1] = {out1, out2, in1, in2};
        else
            rot[c - 1] = {out2, out1, in2, in1};
    }

    std::vector<int> next(static_cast<size_t>(2 * m), -1);
    std::vector<Corner> corner(static_cast<size_t>(2 * m));
    for (int c = 1; c <= n; ++c) {
        for (int k = 0; k < 4; ++k) {
            const int arriving = dart_reverse(rot[c - 1][static_cast<size_t>(k)]);
            next[static_cast<size_t>(arriving)] = rot[c - 1][static_cast<size_t>((k + 1) % 4)];
            corner[static_cast<size_t>(arriving)] = Corner{c, k};
        }
    }

    std::vector<bool> seen(static_cast<size_t>(2 * m), false);
    std::vector<Face> faces;
    for (int d0 = 0; d0 < 2 * m; ++d0) {
        if (seen[static_cast<size_t>(d0)]) continue;
        Face f;
        int d = d0;
        while (!seen[static_cast<size_t>(d)]) {
            seen[static_cast<size_t>(d)] = true;
            f.corners.push_back(corner[static_cast<size_t>(d)]);
            d = next[static_cast<size_t>(d)];
        }
        std::string best = corner_key(f.corners.front());
        for (const auto& cr : f.corners) best = std::min(best, corner_key(cr));
        f.label = "f:" + best;
        faces.push_back(std::move(f));
    }
    std::sort(faces.begin(), faces.end(),
              [](const Face& a, const Face& b) { return a.label < b.label; });
    return faces;
}

SurfaceFilling surface_and_filling(const CurveDiagram& diagram) {
    SurfaceFilling out;
    out.surface = diagram.surface();
    out.filling = true;
    for (const auto& f : diagram.faces())
        if (f.punctures > 1) out.filling = false;
    const int i = diagram.self_intersections();
    const int bound = 2 * out.surface.genus + out.surface.punctures - 2;
    out.meets_intersection_bound =
        out.surface.punctures == 0 ? (i > bound) : (i >= bound);
    return out;
}

std::vector<Face> taut_obstruction(const CurveDiagram& diagram) {
    std::vector<Face> out;
    for (const auto& f : diagram.faces()) {
        if (f.punctures > 0) continue;
        if (f.corners.size() == 1) {
            out.push_back(f);
        } else if (f.corners.size() == 2 &&
                   f.corners[0].crossing != f.corners[1].crossing) {
            // A 2-corner face reduces only when its corners sit at two
            // distinct crossings; both corners at one crossing is not an
            // elementary bigon.
            out.push_back(f);
        }
    }
    return out;
}

Hand handedness_of_passage(const CurveDiagram& diagram, int crossing_id, int passage) {
    const Crossing& c = diagram.crossing(crossing_id);
    if (passage == 1) return c.first_passage_inbound;
    if (passage == 2) return flip(c.first_passage_inbound);
    fail(ErrorKind::UnknownCrossing, "passage must be 1 or 2");
}

CurveDiagram mirror(const CurveDiagram& diagram) {
    std::vector<Crossing> crossings = diagram.crossings();
    for (auto& c : crossings) c.first_passage_inbound = flip(c.first_passage_inbound);
    return CurveDiagram(diagram.name() + "-mirror", diagram.word(), crossings);
}

CurveDiagram rotate_basepoint(const CurveDiagram& diagram) {
    const auto& word = diagram.word();
    const int m = static_cast<int>(word.size());
    std::vector<PassageToken> rotated(word.begin() + 1, word.end());
    rotated.push_back(word.front());

    // The crossing whose token wrapped has its passage roles exchanged, which
    // also flips its sign (the sign names the first passage's inbound side).
    const int wrapped = word.front().crossing;
    std::vector<int> order;
    for (const auto& t : rotated) {
        const int p = (t.crossing == wrapped) ? 3 - t.passage : t.passage;
        if (p == 1) order.push_back(t.crossing);
    }
    std::map<int, int> remap;
    for (int k = 0; k < static_cast<int>(order.size()); ++k) remap[order[k]] = k + 1;

    std::vector<PassageToken> new_word;
    new_word.reserve(static_cast<size_t>(m));
    for (const auto& t : rotated) {
        const int p = (t.crossing == wrapped) ? 3 - t.passage : t.passage;
        new_word.push_back(PassageToken{remap.at(t.crossing), p});
    }
    std::vector<Crossing> new_crossings;
    for (const auto& c : diagram.crossings()) {
        Hand h = c.first_passage_inbound;
        if (c.id == wrapped) h = flip(h);
        new_crossings.push_back(Crossing{remap.at(c.id), h});
    }
    return CurveDiagram(diagram.name() + "-rot", std::move(new_word), std::move(new_crossings));
}

CurveDiagram parse_curve(const std::string& document) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(document);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::MalformedCode, std::string("invalid JSON: ") + e.what());
    }
    try {
        std::string name = doc.value("name", std::string{});
        std::vector<Crossing> crossings;
        for (const auto& c : doc.at("crossings")) {
            Crossing cr;
            cr.id = c.at("id").get<int>();
            const std::string side = c.at("first_passage_inbound").get<std::string>();
            if (side == "right")
                cr.first_passage_inbound = Hand::right;
            else if (side == "left")
                cr.first_passage_inbound = Hand::left;
            else
                fail(ErrorKind::MalformedCode, "first_passage_inbound must be right|left");
            crossings.push_back(cr);
        }
        std::vector<PassageToken> word;
        for (const auto& t : doc.at("word")) {
            if (!t.is_array() || t.size() != 2)
                fail(ErrorKind::MalformedCode, "word tokens are [id, 1|2] pairs");
            word.push_back(PassageToken{t.at(0).get<int>(), t.at(1).get<int>()});
        }
        std::map<std::string, int> punctures;
        if (doc.contains("punctures"))
            for (const auto& [label, count] : doc.at("punctures").items())
                punctures[label] = count.get<int>();
        return CurveDiagram(std::move(name), std::move(word), std::move(crossings), punctures);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::MalformedCode, std::string("curve document schema: ") + e.what());
    }
}

std::string curve_to_json(const CurveDiagram& diagram) {
    nlohmann::ordered_json doc;
    doc["name"] = diagram.name();
    doc["crossings"] = nlohmann::ordered_json::array();
    for (const auto& c : diagram.crossings())
        doc["crossings"].push_back({{"id", c.id},
                                    {"first_passage_inbound", to_string(c.first_passage_inbound)}});
    doc["word"] = nlohmann::ordered_json::array();
    for (const auto& t : diagram.word()) doc["word"].push_back({t.crossing, t.passage});
    nlohmann::ordered_json punct = nlohmann::ordered_json::object();
    for (const auto& f : diagram.faces())
        if (f.punctures > 0) punct[f.label] = f.punctures;
    doc["punctures"] = punct;
    return doc.dump(2) + "\n";
}

}  // namespace pushtrack
