#include "pushtrack/incidence.hpp"

#include "pushtrack/errors.hpp"

namespace pushtrack {

namespace {

// The four 3x3 blocks, rows/cols ordered (d,l,r) at the eye slot and
// (a,b,c) at the crossing slot. Everything else is the identity.
constexpr int kRight_ee[9] = {1, 0, 1, 0, 0, 0, 0, 0, 0};
constexpr int kRight_ei[9] = {1, 0, 0, 0, 1, 0, 0, 0, 1};
constexpr int kRight_ie[9] = {2, 0, 1, 0, 0, 1, 0, 1, 0};
constexpr int kRight_ii[9] = {0, 0, 0, 1, 1, 0, 0, 0, 0};
constexpr int kLeft_ee[9] = {1, 1, 0, 0, 0, 0, 0, 0, 0};
constexpr int kLeft_ei[9] = {1, 0, 0, 0, 0, 1, 0, 1, 0};
constexpr int kLeft_ie[9] = {2, 1, 0, 0, 1, 0, 0, 0, 1};
constexpr int kLeft_ii[9] = {0, 0, 0, 1, 1, 0, 0, 0, 0};

void put_block(IntMatrix& m, int r0, int c0, const int* block) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(r0 + i, c0 + j) = block[i * 3 + j];
}

}  // namespace

IntMatrix pass_matrix(int n, int i, Hand orientation) {
    if (i < 1 || i > n)
        fail(ErrorKind::IndexOutOfRange,
             "crossing index " + std::to_string(i) + " outside 1.." + std::to_string(n));
    IntMatrix m = IntMatrix::identity(3 * (n + 1));
    const bool right = orientation == Hand::right;
    put_block(m, 0, 0, right ? kRight_ee : kLeft_ee);
    put_block(m, 0, 3 * i, right ? kRight_ei : kLeft_ei);
    put_block(m, 3 * i, 0, right ? kRight_ie : kLeft_ie);
    put_block(m, 3 * i, 3 * i, right ? kRight_ii : kLeft_ii);
    return m;
}

IntMatrix incidence_matrix(const CurveDiagram& diagram) {
    if (!surface_and_filling(diagram).filling)
        fail(ErrorKind::NotFilling, "incidence matrix needs a filling curve");
    const int n = diagram.self_intersections();
    // Strict left fold in traversal order: the first passage is the rightmost
    // factor of the product.
    IntMatrix m = IntMatrix::identity(3 * (n + 1), diagram.name());
    for (const auto& token : diagram.word()) {
        const Hand hand = handedness_of_passage(diagram, token.crossing, token.passage);
        m = pass_matrix(n, token.crossing, hand) * m;
    }
    m.set_provenance(diagram.name());
    return m;
}

}  // namespace pushtrack
