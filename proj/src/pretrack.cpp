#include "pushtrack/pretrack.hpp"

#include <algorithm>
#include <cassert>

#include "pushtrack/errors.hpp"

namespace pushtrack {

const char* to_string(TrackClass c) {
    switch (c) {
        case TrackClass::train_track: return "train_track";
        case TrackClass::bigon_track: return "bigon_track";
        case TrackClass::pretrack_only: return "pretrack_only";
    }
    return "?";
}

namespace {

// Switch layout: per crossing c, three switches sit at the surgery points --
//   P(c) at a1+ (start of the first-passage stub, where b and c attach),
//   M(c) at a2- (entering the strand through the crossing),
//   Q(c) at a2+ (leaving it; also receives the arc fused over a1-).
// The eye adds U (back vertex of the bigon, where the loop d attaches) and
// W (front vertex).
struct SwitchIds {
    int n;
    int P(int c) const { return 3 * (c - 1); }
    int M(int c) const { return 3 * (c - 1) + 1; }
    int Q(int c) const { return 3 * (c - 1) + 2; }
    int U() const { return 3 * n; }
    int W() const { return 3 * n + 1; }
};

TrackClass classify_track(const std::vector<Region>& regions) {
    bool only_bigons = true;
    bool any_violation = false;
    for (const auto& r : regions) {
        if (r.euler_index < Rat(0)) continue;
        any_violation = true;
        if (!(r.punctures == 0 && r.cusps == 2)) only_bigons = false;
    }
    if (!any_violation) return TrackClass::train_track;
    return only_bigons ? TrackClass::bigon_track : TrackClass::pretrack_only;
}

Region make_region(RegionSource source, int cusps, int punctures, std::string label) {
    Region r;
    r.source = source;
    r.cusps = cusps;
    r.punctures = punctures;
    r.label = std::move(label);
    r.euler_index = Rat(Int(1 - punctures)) - Rat(Int(cusps), Int(2));
    return r;
}

}  // namespace

Pretrack build_pretrack(const CurveDiagram& diagram) {
    const SurfaceFilling sf = surface_and_filling(diagram);
    if (!sf.filling) fail(ErrorKind::NotFilling, "curve does not fill its surface");
    // Kra's hypothesis counts the marked point via the based mapping class
    // group, not here: the check is 3g + n > 3 on the unmarked surface.
    if (!kra_hypothesis(sf.surface))
        fail(ErrorKind::HypothesisViolated, "surface needs 3g + n > 3");

    const int n = diagram.self_intersections();
    const int m = 2 * n;
    const SwitchIds sw{n};

    Pretrack track;
    track.n_crossings = n;
    track.surface = sf.surface;
    track.switches.resize(static_cast<size_t>(3 * n + 2));
    for (int i = 0; i < 3 * n + 2; ++i) track.switches[static_cast<size_t>(i)].id = i;

    auto add_branch = [&](BranchKind kind, int crossing, BranchEnd e0, BranchEnd e1) {
        Branch b;
        b.id = static_cast<int>(track.branches.size());
        b.kind = kind;
        b.crossing = crossing;
        b.ends[0] = e0;
        b.ends[1] = e1;
        auto& s0 = track.switches[static_cast<size_t>(e0.switch_id)];
        (e0.side == Side::A ? s0.side_a : s0.side_b).push_back(b.id);
        auto& s1 = track.switches[static_cast<size_t>(e1.switch_id)];
        (e1.side == Side::A ? s1.side_a : s1.side_b).push_back(b.id);
        track.branches.push_back(b);
        return b.id;
    };

    // Distinguished branches first, in reduced-coordinate order.
    add_branch(BranchKind::eye_d, 0, {sw.U(), Side::B}, {sw.U(), Side::B});
    add_branch(BranchKind::eye_l, 0, {sw.U(), Side::B}, {sw.W(), Side::A});
    add_branch(BranchKind::eye_r, 0, {sw.U(), Side::B}, {sw.W(), Side::A});
    for (int c = 1; c <= n; ++c) {
        add_branch(BranchKind::cross_a, c, {sw.M(c), Side::B}, {sw.Q(c), Side::B});
        add_branch(BranchKind::cross_b, c, {sw.P(c), Side::B}, {sw.Q(c), Side::B});
        add_branch(BranchKind::cross_c, c, {sw.P(c), Side::B}, {sw.M(c), Side::B});
    }

    // Plain arcs along the curve. The arc leaving event e starts at P or Q of
    // its crossing; arriving at a second passage it stops at M, arriving at a
    // first passage it continues over the deleted stub (the a1- point is a
    // regular point after smoothing) and ends on side B of that crossing's Q.
    const auto& word = diagram.word();
    auto start_of = [&](int event) {
        const auto& t = word[static_cast<size_t>(event)];
        return BranchEnd{t.passage == 1 ? sw.P(t.crossing) : sw.Q(t.crossing), Side::A};
    };
    auto end_of = [&](int event) {
        const auto& t = word[static_cast<size_t>(event)];
        if (t.passage == 2) return BranchEnd{sw.M(t.crossing), Side::A};
        return BranchEnd{sw.Q(t.crossing), Side::B};
    };
    for (int e = 0; e + 1 < m; ++e)
        add_branch(BranchKind::plain_arc, 0, start_of(e), end_of(e + 1));
    // Basepoint edge: pre runs into the eye, post leaves it.
    add_branch(BranchKind::plain_arc, 0, start_of(m - 1), {sw.U(), Side::A});
    add_branch(BranchKind::plain_arc, 0, {sw.W(), Side::B}, end_of(0));

    // Regions: one trigon cut off at each crossing, the eye's trigon and
    // marked monogon, and one residual region per diagram face whose cusps
    // are exactly its inbound-quadrant corners.
    for (int c = 1; c <= n; ++c)
        track.regions.push_back(make_region(RegionSource::crossing_trigon, 3, 0,
                                            "trigon@c" + std::to_string(c)));
    track.regions.push_back(make_region(RegionSource::eye_trigon, 3, 0, "eye-trigon"));
    track.regions.push_back(make_region(RegionSource::marked_monogon, 1, 1, "marked-monogon"));
    for (const auto& f : diagram.faces()) {
        int inbound = 0;
        for (const auto& corner : f.corners)
            if (corner.quadrant == 2) ++inbound;
        track.regions.push_back(
            make_region(RegionSource::face_residual, inbound, f.punctures, f.label));
    }

    track.track_class = classify_track(track.regions);
    return track;
}

RegionCensus classify_regions(const Pretrack& track) {
    RegionCensus census;
    census.euler_sum = Rat(0);
    for (const auto& r : track.regions) {
        census.euler_sum += r.euler_index;
        if (r.punctures == 0) {
            switch (r.cusps) {
                case 0: ++census.nullgons; break;
                case 1: ++census.monogons; break;
                case 2: ++census.bigons; break;
                case 3: ++census.trigons; break;
                default: ++census.higher; break;
            }
        } else {
            if (r.cusps == 0)
                ++census.punctured_nullgons;
            else if (r.cusps == 1)
                ++census.punctured_monogons;
            else
                ++census.punctured_other;
        }
    }
    census.track_class = track.track_class;
    return census;
}

FullWeights reduced_to_full(const Pretrack& track, const ReducedWeightVector& w) {
    const int reduced = track.reduced_dim();
    const int total = static_cast<int>(track.branches.size());
    const int unknowns = total - reduced;
    if (static_cast<int>(w.size()) != reduced)
        fail(ErrorKind::BadParameters, "reduced vector must have length 3(n+1)");

    // One equation per switch: sum(side A) - sum(side B) = 0, with the known
    // distinguished weights moved to the right-hand side.
    const int rows = static_cast<int>(track.switches.size());
    std::vector<std::vector<Rat>> aug(
        static_cast<size_t>(rows), std::vector<Rat>(static_cast<size_t>(unknowns + 1), Rat(0)));
    for (int s = 0; s < rows; ++s) {
        auto accumulate = [&](const std::vector<int>& side, int sign) {
            for (int b : side) {
                if (b < reduced)
                    aug[static_cast<size_t>(s)][static_cast<size_t>(unknowns)] -= Rat(Int(sign)) * w[static_cast<size_t>(b)];
                else
                    aug[static_cast<size_t>(s)][static_cast<size_t>(b - reduced)] += Rat(Int(sign));
            }
        };
        accumulate(track.switches[static_cast<size_t>(s)].side_a, +1);
        accumulate(track.switches[static_cast<size_t>(s)].side_b, -1);
    }

    // Exact Gaussian elimination.
    int rank = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < unknowns && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (aug[static_cast<size_t>(r)][static_cast<size_t>(col)] != Rat(0)) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(aug[static_cast<size_t>(rank)], aug[static_cast<size_t>(pivot)]);
        const Rat lead = aug[static_cast<size_t>(rank)][static_cast<size_t>(col)];
        for (auto& v : aug[static_cast<size_t>(rank)]) v /= lead;
        for (int r = 0; r < rows; ++r) {
            if (r == rank) continue;
            const Rat factor = aug[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (factor == Rat(0)) continue;
            for (int cc = col; cc <= unknowns; ++cc)
                aug[static_cast<size_t>(r)][static_cast<size_t>(cc)] -=
                    factor * aug[static_cast<size_t>(rank)][static_cast<size_t>(cc)];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (int r = rank; r < rows; ++r)
        if (aug[static_cast<size_t>(r)][static_cast<size_t>(unknowns)] != Rat(0))
            fail(ErrorKind::NotInReducedCone,
                 "reduced weights admit no extension to the switch system");
    if (rank < unknowns)
        fail(ErrorKind::InconsistentTrack, "switch system is underdetermined");

    FullWeights full(static_cast<size_t>(total), Rat(0));
    for (int b = 0; b < reduced; ++b) {
        if (w[static_cast<size_t>(b)] < Rat(0))
            fail(ErrorKind::NotInReducedCone, "reduced weights must be nonnegative");
        full[static_cast<size_t>(b)] = w[static_cast<size_t>(b)];
    }
    for (int r = 0; r < rank; ++r) {
        const Rat value = aug[static_cast<size_t>(r)][static_cast<size_t>(unknowns)];
        if (value < Rat(0))
            fail(ErrorKind::NotInReducedCone, "a forced branch weight is negative");
        full[static_cast<size_t>(reduced + pivot_col[static_cast<size_t>(r)])] = value;
    }
    return full;
}

ReducedWeightVector restrict_to_reduced(const Pretrack& track, const FullWeights& full) {
    if (full.size() != track.branches.size())
        fail(ErrorKind::BadParameters, "full weight vector has the wrong length");
    return ReducedWeightVector(full.begin(), full.begin() + track.reduced_dim());
}

FullWeights carried_curve_full_weights(const Pretrack& track, const CurveDiagram& diagram) {
    const int n = track.n_crossings;
    const int m = 2 * n;
    const auto& word = diagram.word();
    const int reduced = track.reduced_dim();
    // Plain-arc ids follow the distinguished block in edge order; the
    // basepoint edge contributes pre then post.
    auto piece = [&](int e) { return reduced + e; };
    const int pre = reduced + (m - 1);

    FullWeights weights(track.branches.size(), Rat(0));
    auto bump = [&](int id) { weights[static_cast<size_t>(id)] += Rat(1); };

    // q_n is the crossing reached last: the highest id under first-passage
    // numbering. delta = the subloop between its two passages.
    const int e1 = diagram.event_of(n, 1);
    const int e2 = diagram.event_of(n, 2);

    for (int j = e1;;) {
        bump(piece(j));
        const int j2 = j + 1;  // delta never wraps past the basepoint
        if (j2 == e2) break;
        assert(word[static_cast<size_t>(j2)].passage == 2);
        bump(track.branch_a(word[static_cast<size_t>(j2)].crossing));
        j = j2;
    }
    // delta continues smoothly into beta through the strand at q_n, out to
    // the eye, once around the loop d, and back along the parallel copy.
    bump(track.branch_a(n));
    for (int j = e2; j != m - 1; ++j) {
        bump(piece(j));
        assert(word[static_cast<size_t>(j + 1)].passage == 2);
        bump(track.branch_a(word[static_cast<size_t>(j + 1)].crossing));
    }
    bump(pre);
    bump(track.branch_d());
    bump(pre);
    for (int j = m - 1; j > e2; --j) {
        bump(track.branch_a(word[static_cast<size_t>(j)].crossing));
        bump(piece(j - 1));
    }
    // The return leg closes onto delta's start over the outbound-quadrant arc.
    bump(track.branch_b(n));
    return weights;
}

ReducedWeightVector carried_curve_weights(const CurveDiagram& diagram) {
    const Pretrack track = build_pretrack(diagram);
    return restrict_to_reduced(track, carried_curve_full_weights(track, diagram));
}

}  // namespace pushtrack
