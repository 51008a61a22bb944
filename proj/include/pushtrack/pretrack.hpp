#ifndef PUSHTRACK_PRETRACK_HPP
#define PUSHTRACK_PRETRACK_HPP

#include <string>
#include <vector>

#include "pushtrack/curve.hpp"
#include "pushtrack/numeric.hpp"

namespace pushtrack {

enum class BranchKind { eye_d, eye_l, eye_r, cross_a, cross_b, cross_c, plain_arc };
enum class Side { A, B };

struct BranchEnd {
    int switch_id = -1;
    Side side = Side::A;
};

struct Branch {
    int id = -1;
    BranchKind kind = BranchKind::plain_arc;
    int crossing = 0;  // for cross_a/b/c
    BranchEnd ends[2];
};

struct Switch {
    int id = -1;
    // Branch ids incident on each side; a branch with both ends here appears
    // twice. Both sides nonempty on every built track.
    std::vector<int> side_a, side_b;
};

enum class RegionSource { crossing_trigon, eye_trigon, marked_monogon, face_residual };

struct Region {
    RegionSource source = RegionSource::face_residual;
    int cusps = 0;
    int punctures = 0;   // the marked point counts as a puncture
    std::string label;   // face label for residuals, descriptive otherwise
    Rat euler_index;     // chi(C) - cusps/2 with chi = 1 - punctures (disks)
};

enum class TrackClass { train_track, bigon_track, pretrack_only };
const char* to_string(TrackClass c);

struct RegionCensus {
    int nullgons = 0;
    int monogons = 0;
    int bigons = 0;
    int trigons = 0;
    int higher = 0;
    int punctured_nullgons = 0;
    int punctured_monogons = 0;
    int punctured_other = 0;
    TrackClass track_class = TrackClass::pretrack_only;
    Rat euler_sum;
};

struct Pretrack {
    int n_crossings = 0;
    std::vector<Branch> branches;  // ids 0..3n+2 are the distinguished set B'
    std::vector<Switch> switches;
    std::vector<Region> regions;
    TrackClass track_class = TrackClass::pretrack_only;
    SurfaceSig surface;

    int reduced_dim() const { return 3 * (n_crossings + 1); }
    // Order of B': d, l, r, a_1, b_1, c_1, ..., a_n, b_n, c_n.
    int branch_d() const { return 0; }
    int branch_a(int q) const { return 3 * q; }
    int branch_b(int q) const { return 3 * q + 1; }
    int branch_c(int q) const { return 3 * q + 2; }
};

// Reduced weights on the distinguished branches, ordered as above.
using ReducedWeightVector = std::vector<Rat>;
// Weight per branch id (full branch set).
using FullWeights = std::vector<Rat>;

// Performs the corner surgery at every crossing and installs the eye at the
// basepoint; classifies complementary regions. Requires a filling diagram on
// a surface with 3g + n > 3.
Pretrack build_pretrack(const CurveDiagram& diagram);

RegionCensus classify_regions(const Pretrack& track);

// Unique extension of reduced weights to the full branch set via the switch
// equations (exact rational solve). NotInReducedCone when no nonnegative
// extension exists; InconsistentTrack when the switch system itself is
// degenerate (must not happen on built tracks).
FullWeights reduced_to_full(const Pretrack& track, const ReducedWeightVector& w);

ReducedWeightVector restrict_to_reduced(const Pretrack& track, const FullWeights& full);

// Weights of the essential simple closed curve sigma = delta # eps carried by
// the induced pretrack (delta = the subloop at the last-reached crossing,
// eps = a loop around the marked point, joined along two parallel copies of
// the tail beta).
ReducedWeightVector carried_curve_weights(const CurveDiagram& diagram);
FullWeights carried_curve_full_weights(const Pretrack& track, const CurveDiagram& diagram);

}  // namespace pushtrack

#endif
