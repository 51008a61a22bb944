#ifndef PUSHTRACK_FAMILIES_HPP
#define PUSHTRACK_FAMILIES_HPP

#include <utility>

#include "pushtrack/curve.hpp"
#include "pushtrack/matrix.hpp"

namespace pushtrack {

// The genus-2 example: a filling curve with three self-intersection points
// whose complement is a single disk. Word and signs are frozen fixtures,
// pinned by exact equality of incidence_matrix(gamma0) with the published
// block matrix (see tests).
CurveDiagram gamma0_curve();

// gamma0 with `winds` extra crossings from winding around a handle; filling,
// genus 2, i = winds + 3. Its induced pretrack has `winds` complementary
// unpunctured monogons, so it is only a pretrack.
CurveDiagram winding_curve(int winds);

// Published blocks: A (3x3), B (3x9), C (9x3), D (9x9) of the genus-2 matrix,
// and the winding blocks At (3x3), Bt (3x14), Ct (14x3), Dt (14x14) whose
// entries are linear in the winding parameter n.
void fixed_blocks(std::vector<std::vector<Int>>& A, std::vector<std::vector<Int>>& B,
                  std::vector<std::vector<Int>>& C, std::vector<std::vector<Int>>& D);
void winding_blocks(const Int& n, std::vector<std::vector<Int>>& At,
                    std::vector<std::vector<Int>>& Bt, std::vector<std::vector<Int>>& Ct,
                    std::vector<std::vector<Int>>& Dt);

// q(n) = (11^n - 1)/10 and the closed form A^n = [[11^n, 8q, 2q],[0,1,0],[0,0,1]].
std::pair<IntMatrix, Int> closed_form_power(int n);
Int q_value(int n);

// Incidence matrix of the lift of gamma0^{g-1} to the genus-g cyclic cover,
// assembled per the published block pattern, together with the lifted curve's
// Gauss code (g-1 relabeled copies of gamma0's code). Dimension 3 + 9(g-1).
std::pair<IntMatrix, CurveDiagram> fixed_family(int g);

// Incidence matrix for the winding family on S_g (g >= 3, n >= 2), dimension
// 3 + 9(g-2) + 14. The corresponding track sigma is not constructed; the
// published blocks fully determine the matrix.
IntMatrix winding_family(int g, const Int& n);

// First-row sums in closed form, for the row-sum chain checks:
// fixed:   11^{g-1} + 10 q(g-1) + sum_{j=1}^{g-1} 20 q(j)
// winding: (6n+11)(11^{g-2} + 10 q(g-2) + 1) + (57n+20)
//          + sum_{j=1}^{g-2} (6n+11)(20 q(j) + 2)
Int fixed_family_first_row_sum(int g);
Int winding_family_first_row_sum(int g, const Int& n);

}  // namespace pushtrack

#endif
