#ifndef PUSHTRACK_SPECTRAL_HPP
#define PUSHTRACK_SPECTRAL_HPP

#include <optional>
#include <utility>
#include <vector>

#include "pushtrack/matrix.hpp"
#include "pushtrack/numeric.hpp"

namespace pushtrack {

// Perron--Frobenius in the sense of "primitive": nonnegative with some power
// strictly positive. Checked as strong connectivity of the positivity digraph
// plus cycle-length gcd 1 (never by forming powers).
bool is_primitive(const IntMatrix& m);

// Largest row sum; bounds the PF eigenvalue, and hence the dilatation when
// the matrix is the incidence matrix of a train/bigon-track carrying.
Int row_sum_bound(const IntMatrix& m);

struct SpectralEnclosure {
    Rat lo;
    Rat hi;
    int iterations = 0;
    bool primitive = false;
    bool converged = false;  // false = iteration cap hit (best enclosure kept)
    // (lo, hi) after each step; lo nondecreasing, hi nonincreasing.
    std::vector<std::pair<Rat, Rat>> history;
};

inline int default_iteration_cap() { return 10000; }
// PUSHTRACK_ITER_CAP overrides the cap when set to a positive integer.
int iteration_cap_from_env();

// Certified Collatz--Wielandt bracketing of the PF eigenvalue: iterate
// x <- Mx over exact integers (gcd-renormalized), reporting
// lo = min_i (Mx)_i/x_i and hi = max_i (Mx)_i/x_i each step until
// hi - lo <= tol. Deterministic for a fixed seed; default seed = all ones.
SpectralEnclosure pf_enclosure(const IntMatrix& m, const Rat& tol,
                               const std::optional<std::vector<Int>>& seed = std::nullopt,
                               int iteration_cap = iteration_cap_from_env());

// Brute-force oracle: exists k <= (dim-1)^2 + 1 with M^k > 0 (Wielandt bound).
// Test/verification use only.
bool is_primitive_bruteforce(const IntMatrix& m);

}  // namespace pushtrack

#endif
