#ifndef PUSHTRACK_INCIDENCE_HPP
#define PUSHTRACK_INCIDENCE_HPP

#include "pushtrack/curve.hpp"
#include "pushtrack/matrix.hpp"

namespace pushtrack {

// The elementary pass matrix: identity on C^{3(n+1)} except the four 3x3
// blocks in the (e,e), (e,i), (i,e), (i,i) positions, which describe pushing
// the marked point through crossing i with the inbound quadrant on the given
// side. Every row sums to at most 3.
IntMatrix pass_matrix(int n, int i, Hand orientation);

// M_gamma: the ordered product of one pass matrix per word token, first
// passage applied first (rightmost factor); per-passage handedness comes from
// the crossing signs. Strict left fold, exact integers.
IntMatrix incidence_matrix(const CurveDiagram& diagram);

}  // namespace pushtrack

#endif
