#ifndef PUSHTRACK_CURVE_HPP
#define PUSHTRACK_CURVE_HPP

#include <map>
#include <string>
#include <vector>

#include "pushtrack/errors.hpp"

namespace pushtrack {

enum class Hand { right, left };

inline Hand flip(Hand h) { return h == Hand::right ? Hand::left : Hand::right; }
inline const char* to_string(Hand h) { return h == Hand::right ? "right" : "left"; }

// One pass of the curve through a crossing. `passage` is 1 or 2 in the based
// linear order starting at p = gamma(0).
struct PassageToken {
    int crossing = 0;
    int passage = 0;
};

struct Crossing {
    int id = 0;
    // Side, relative to the direction of travel, on which the inbound quadrant
    // lies when the crossing is passed for the first time. Transversality
    // forces the second passage to see the opposite side.
    Hand first_passage_inbound = Hand::right;
};

struct Corner {
    int crossing = 0;
    int quadrant = 0;  // 0 = outbound, counterclockwise; 2 = inbound
};

struct Face {
    std::string label;  // "f:" + lexicographically least corner "c<id>.q<q>"
    std::vector<Corner> corners;
    int punctures = 0;
};

struct SurfaceSig {
    int genus = 0;
    int punctures = 0;  // the marked point is NOT included

    friend bool operator==(const SurfaceSig&, const SurfaceSig&) = default;
};

// Kra's hypothesis 3g + n > 3; every analysis operation requires it.
inline bool kra_hypothesis(const SurfaceSig& s) {
    return 3 * s.genus + s.punctures > 3;
}

// A based generic closed curve given by its signed Gauss code, together with
// the derived ribbon-graph data. Immutable once built.
class CurveDiagram {
  public:
    // Programmatic constructor; validates the word, derives rotation/faces/
    // surface, then assigns punctures by canonical face label.
    CurveDiagram(std::string name, std::vector<PassageToken> word,
                 std::vector<Crossing> crossings,
                 const std::map<std::string, int>& punctures = {});

    const std::string& name() const { return name_; }
    const std::vector<PassageToken>& word() const { return word_; }
    const std::vector<Crossing>& crossings() const { return crossings_; }
    const std::vector<Face>& faces() const { return faces_; }
    const SurfaceSig& surface() const { return surface_; }

    int self_intersections() const { return static_cast<int>(crossings_.size()); }
    const Crossing& crossing(int id) const;
    // Event index (position in the word) of the given passage of a crossing.
    int event_of(int crossing_id, int passage) const;

  private:
    std::string name_;
    std::vector<PassageToken> word_;
    std::vector<Crossing> crossings_;
    std::vector<Face> faces_;
    SurfaceSig surface_;
};

// Parses the JSON curve document (External Interfaces schema).
CurveDiagram parse_curve(const std::string& document);
std::string curve_to_json(const CurveDiagram& diagram);

// Faces are derived during construction; exposed as a free operation as well.
std::vector<Face> trace_faces(const CurveDiagram& diagram);

struct SurfaceFilling {
    SurfaceSig surface;
    bool filling = false;
    // i(gamma) >= 2g + n - 2, strict when the surface is closed.
    bool meets_intersection_bound = false;
};

SurfaceFilling surface_and_filling(const CurveDiagram& diagram);

// Unpunctured faces admitting an elementary reduction: 1-corner faces (curls)
// and 2-corner faces whose corners lie at two distinct crossings. A warning
// that the diagram may not be taut, not a proof either way.
std::vector<Face> taut_obstruction(const CurveDiagram& diagram);

Hand handedness_of_passage(const CurveDiagram& diagram, int crossing_id, int passage);

// Test/property helpers: same curve with all crossing signs reversed, and the
// basepoint moved forward past one crossing-to-crossing segment (tokens are
// rotated by one; passage roles and ids are renumbered canonically).
CurveDiagram mirror(const CurveDiagram& diagram);
CurveDiagram rotate_basepoint(const CurveDiagram& diagram);

}  // namespace pushtrack

#endif
