#include <doctest.h>

#include "pushtrack/families.hpp"
#include "pushtrack/incidence.hpp"
#include "pushtrack/spectral.hpp"

using namespace pushtrack;

TEST_CASE("closed form powers of the A block") {
    SUBCASE("n = 0 is the identity") {
        const auto [m, q] = closed_form_power(0);
        CHECK(m == IntMatrix::identity(3, m.provenance()));
        CHECK(q == 0);
    }
    SUBCASE("n = 1 is the A block itself") {
        const auto [m, q] = closed_form_power(1);
        CHECK(q == 1);
        CHECK(m.at(0, 0) == 11);
        CHECK(m.at(0, 1) == 8);
        CHECK(m.at(0, 2) == 2);
    }
    SUBCASE("n = 3") {
        const auto [m, q] = closed_form_power(3);
        CHECK(q == 133);
        CHECK(m.at(0, 0) == 1331);
        CHECK(m.at(0, 1) == 1064);
        CHECK(m.at(0, 2) == 266);
    }
    SUBCASE("matches iterated multiplication up to n = 20") {
        const IntMatrix a = closed_form_power(1).first;
        IntMatrix acc = IntMatrix::identity(3);
        for (int n = 0; n <= 20; ++n) {
            CHECK(closed_form_power(n).first == acc);
            acc = acc * a;
        }
    }
}

TEST_CASE("fixed family: genus-2 case is the published matrix") {
    const auto [m, curve] = fixed_family(2);
    CHECK(m.dim() == 12);
    CHECK(m == incidence_matrix(gamma0_curve()));
    CHECK(curve.self_intersections() == 3);
    CHECK(m.row_sum(0) == 41);
    // 41 = 11 + 10 q(1) + 20 q(1)
    CHECK(fixed_family_first_row_sum(2) == 41);
}

TEST_CASE("fixed family row-sum chain") {
    CHECK(fixed_family_first_row_sum(3) == 501);  // 121 + 120 + 260
    for (int g = 2; g <= 8; ++g) {
        const IntMatrix m = fixed_family(g).first;
        CHECK(m.dim() == 3 + 9 * (g - 1));
        const Int fr = m.row_sum(0);
        CHECK(fr == fixed_family_first_row_sum(g));
        CHECK(fr == m.max_row_sum());
        CHECK(5 * fr < 2 * int_pow(11, static_cast<unsigned>(g)));
    }
}

TEST_CASE("fixed family: M^3 positivity and primitivity") {
    for (int g = 2; g <= 6; ++g) {
        const IntMatrix m = fixed_family(g).first;
        const IntMatrix m3 = m.pow(3);
        for (int j = 0; j < m.dim(); ++j) {
            CHECK(m3.at(0, j) > 0);
            CHECK(m3.at(j, 0) > 0);
        }
        CHECK(is_primitive(m));
    }
}

TEST_CASE("cross-module oracle: assembled matrix equals the incidence product") {
    for (int g = 2; g <= 5; ++g) {
        const auto [m, curve] = fixed_family(g);
        CHECK(incidence_matrix(curve) == m);
    }
}

TEST_CASE("winding family matrices") {
    const IntMatrix m32 = winding_family(3, 2);
    CHECK(m32.dim() == 26);
    CHECK(m32.row_sum(0) == winding_family_first_row_sum(3, 2));
    // (6n+11)(11 + 10 q(1) + 1) + (57n+20) + (6n+11)(20 q(1) + 2) at n=2
    CHECK(winding_family_first_row_sum(3, 2) == 506 + 134 + 506);

    std::vector<std::vector<Int>> At, Bt, Ct, Dt;
    winding_blocks(2, At, Bt, Ct, Dt);
    Int bt_row = 0;
    for (const auto& v : Bt[0]) bt_row += v;
    CHECK(bt_row == 57 * 2 + 20);  // 134

    for (int g = 3; g <= 5; ++g) {
        for (int n = 2; n <= 10; ++n) {
            const IntMatrix m = winding_family(g, n);
            const Int fr = m.row_sum(0);
            CHECK(fr == winding_family_first_row_sum(g, n));
            CHECK(fr < n * int_pow(11, static_cast<unsigned>(g)));
            CHECK(is_primitive(m));
        }
    }
}

TEST_CASE("family parameter validation") {
    CHECK_THROWS_AS(fixed_family(1), Error);
    CHECK_THROWS_AS(winding_family(2, 2), Error);
    CHECK_THROWS_AS(winding_family(3, 1), Error);
    CHECK_THROWS_AS(winding_curve(0), Error);
    CHECK_THROWS_AS(closed_form_power(-1), Error);
}

TEST_CASE("family curves") {
    for (int g = 2; g <= 5; ++g) {
        const CurveDiagram curve = fixed_family(g).second;
        CHECK(curve.self_intersections() == 3 * (g - 1));
        CHECK(curve.surface().genus == g);
        CHECK(surface_and_filling(curve).filling);
    }
    for (int w = 1; w <= 4; ++w) {
        const CurveDiagram curve = winding_curve(w);
        CHECK(curve.self_intersections() == w + 3);
        CHECK(curve.surface().genus == 2);
        CHECK(surface_and_filling(curve).filling);
    }
}
