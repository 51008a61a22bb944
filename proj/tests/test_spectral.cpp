#include <doctest.h>

#include <random>

#include "pushtrack/families.hpp"
#include "pushtrack/incidence.hpp"
#include "pushtrack/spectral.hpp"

using namespace pushtrack;

namespace {

IntMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    IntMatrix m(static_cast<int>(rows.size()));
    int i = 0;
    for (const auto& row : rows) {
        int j = 0;
        for (int v : row) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

}  // namespace

TEST_CASE("is_primitive") {
    CHECK(is_primitive(incidence_matrix(gamma0_curve())));
    CHECK_FALSE(is_primitive(IntMatrix::identity(2)));
    CHECK_FALSE(is_primitive(IntMatrix::identity(5)));
    // permutation matrix of a 3-cycle: irreducible with period 3
    CHECK_FALSE(is_primitive(from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}})));
    // 1x1 cases
    CHECK(is_primitive(from_rows({{7}})));
    CHECK_FALSE(is_primitive(from_rows({{0}})));
    // reducible
    CHECK_FALSE(is_primitive(from_rows({{1, 1}, {0, 1}})));
}

TEST_CASE("is_primitive agrees with the Wielandt brute-force oracle") {
    std::mt19937 rng(424242u);
    std::uniform_int_distribution<int> dim_dist(1, 8);
    std::uniform_int_distribution<int> entry_dist(0, 4);
    for (int t = 0; t < 300; ++t) {
        const int d = dim_dist(rng);
        IntMatrix m(d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                const int v = entry_dist(rng);
                m.at(i, j) = v >= 3 ? v - 2 : 0;
            }
        CHECK(is_primitive(m) == is_primitive_bruteforce(m));
    }
}

TEST_CASE("row_sum_bound") {
    CHECK(row_sum_bound(incidence_matrix(gamma0_curve())) == 41);
    CHECK(row_sum_bound(IntMatrix::identity(4)) == 1);
    for (int i = 1; i <= 3; ++i)
        for (Hand h : {Hand::right, Hand::left})
            CHECK(row_sum_bound(pass_matrix(3, i, h)) <= 3);
}

TEST_CASE("pf_enclosure on small matrices") {
    const Rat tol(Int(1), int_pow(10, 9));
    SUBCASE("1x1 matrix converges in one step") {
        const SpectralEnclosure e = pf_enclosure(from_rows({{7}}), tol);
        CHECK(e.lo == Rat(7));
        CHECK(e.hi == Rat(7));
        CHECK(e.iterations == 1);
        CHECK(e.converged);
    }
    SUBCASE("symmetric 2x2 with eigenvalue 3") {
        const SpectralEnclosure e = pf_enclosure(from_rows({{2, 1}, {1, 2}}), tol);
        CHECK(e.converged);
        CHECK(e.lo <= Rat(3));
        CHECK(Rat(3) <= e.hi);
        CHECK(e.hi - e.lo <= tol);
    }
    SUBCASE("non-primitive input is rejected") {
        CHECK_THROWS_AS(pf_enclosure(IntMatrix::identity(3), tol), Error);
    }
}

TEST_CASE("pf_enclosure on the gamma0 matrix") {
    const Rat tol(Int(1), int_pow(10, 9));
    const IntMatrix m = incidence_matrix(gamma0_curve());
    const SpectralEnclosure e = pf_enclosure(m, tol);
    CHECK(e.converged);
    CHECK(e.hi - e.lo <= tol);
    CHECK(e.hi <= Rat(41));
    // lo >= 4^{1/5}, exactly: lo^5 >= 4
    CHECK(e.lo * e.lo * e.lo * e.lo * e.lo >= Rat(4));
    // monotone bracketing
    for (size_t k = 1; k < e.history.size(); ++k) {
        CHECK(e.history[k].first >= e.history[k - 1].first);
        CHECK(e.history[k].second <= e.history[k - 1].second);
    }
    // first step brackets by row sums
    CHECK(e.history.front().second == Rat(m.max_row_sum()));
    CHECK(e.history.front().first == Rat(m.min_row_sum()));
}

TEST_CASE("enclosures from different strictly positive seeds overlap") {
    const Rat tol(Int(1), int_pow(10, 6));
    const IntMatrix m = incidence_matrix(gamma0_curve());
    const SpectralEnclosure a = pf_enclosure(m, tol);
    std::vector<Int> seed(12);
    for (int i = 0; i < 12; ++i) seed[static_cast<size_t>(i)] = i + 1;
    const SpectralEnclosure b = pf_enclosure(m, tol, seed);
    CHECK(a.lo <= b.hi);
    CHECK(b.lo <= a.hi);
    CHECK_THROWS_AS(pf_enclosure(m, tol, std::vector<Int>(12, Int(0))), Error);
}

TEST_CASE("iteration cap returns the best enclosure unconverged") {
    const Rat tol(Int(1), int_pow(10, 30));
    const SpectralEnclosure e = pf_enclosure(incidence_matrix(gamma0_curve()), tol,
                                             std::nullopt, 3);
    CHECK_FALSE(e.converged);
    CHECK(e.iterations == 3);
    CHECK(e.lo <= e.hi);
}
