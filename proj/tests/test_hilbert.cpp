#include <catch2/catch_amalgamated.hpp>

#include "momentcara/hilbert.hpp"

using namespace momentcara;

TEST_CASE("regular-sequence quotient Hilbert function") {
    const auto line = HilbertProfile::projective_space(1);
    CHECK(hf_regular_quotient(line, 1, 2, 3) == 2);  // two points cut on a line

    const auto plane = HilbertProfile::projective_space(2);
    CHECK(hf_regular_quotient(plane, 2, 3, 6) == 9);  // d^2 with d = 3

    // (n,d) = (3,2): 35 - 30 + 3, recursion against the literal binomials.
    const auto p3 = HilbertProfile::projective_space(3);
    const Int direct = binom(3 + 4, 3) - 3 * binom(3 + 2, 3) + binom(3, 2);
    REQUIRE(direct == 8);
    CHECK(hf_regular_quotient(p3, 3, 2, 4) == direct);

    // r = 0 leaves the base profile untouched.
    for (int j = 0; j <= 8; ++j)
        CHECK(hf_regular_quotient(p3, 0, 1, j) == p3(Int(j)));

    // Negative evaluation degrees vanish.
    CHECK(hf_regular_quotient(p3, 3, 2, -1) == 0);
    CHECK(p3(Int(-5)) == 0);
}

TEST_CASE("regular-quotient profile kind evaluates the same sum") {
    const auto quotient =
        HilbertProfile::regular_quotient(HilbertProfile::projective_space(4), 2, 3);
    for (int j = 0; j <= 10; ++j)
        CHECK(quotient(Int(j)) ==
              hf_regular_quotient(HilbertProfile::projective_space(4), 2, 3, j));
}

TEST_CASE("grid closed forms, Rn") {
    // (2, d, even) is exactly d^2.
    for (int d = 2; d <= 4; ++d)
        CHECK(grid_cara_closed_form(2, d, Parity::Even, Domain::Rn) == Int(d) * d);

    // Against the literal three-term formulas (valid for even degree at all d).
    for (int n = 1; n <= 6; ++n)
        for (int d = 1; d <= 6; ++d) {
            const Int even = binom(n + 2 * d, n) - Int(n) * binom(n + d, n) + binom(n, 2);
            CHECK(grid_cara_closed_form(n, d, Parity::Even, Domain::Rn) == even);
        }

    // The odd four-term formula is valid once d >= 2; at d = 1 the alternating
    // sum keeps an extra term and the printed formula overshoots by binom(n,3).
    for (int n = 1; n <= 6; ++n)
        for (int d = 2; d <= 6; ++d) {
            const Int odd =
                binom(n + 2 * d + 1, n) - Int(n) * binom(n + d + 1, n) + 3 * binom(n + 1, 3);
            CHECK(grid_cara_closed_form(n, d, Parity::Odd, Domain::Rn) == odd);
        }
    for (int n = 1; n <= 6; ++n) {
        const Int formula = binom(n + 3, n) - Int(n) * binom(n + 2, n) + 3 * binom(n + 1, 3);
        CHECK(grid_cara_closed_form(n, 1, Parity::Odd, Domain::Rn) == formula - binom(n, 3));
        // A single grid point has a one-dimensional span.
        CHECK(grid_cara_closed_form(n, 1, Parity::Odd, Domain::Rn) == 1);
        CHECK(grid_cara_closed_form(n, 1, Parity::Even, Domain::Rn) == 1);
    }
}

TEST_CASE("grid closed forms, cube") {
    for (int d = 1; d <= 4; ++d)
        CHECK(grid_cara_closed_form(1, d, Parity::Even, Domain::Cube) == d + 1);
    CHECK(grid_cara_closed_form(2, 2, Parity::Even, Domain::Cube) == 9);

    for (int n = 1; n <= 6; ++n)
        for (int d = 1; d <= 6; ++d) {
            const Int even = binom(n + 2 * d, n) - Int(n) * binom(n + d - 1, n);
            const Int odd = binom(n + 2 * d + 1, n) - Int(n) * binom(n + d, n);
            CHECK(grid_cara_closed_form(n, d, Parity::Even, Domain::Cube) == even);
            CHECK(grid_cara_closed_form(n, d, Parity::Odd, Domain::Cube) == odd);
        }
}

TEST_CASE("grid closed forms match the quotient recursion") {
    for (int n = 1; n <= 6; ++n)
        for (int d = 1; d <= 6; ++d) {
            const auto pn = HilbertProfile::projective_space(n);
            CHECK(grid_cara_closed_form(n, d, Parity::Even, Domain::Rn) ==
                  hf_regular_quotient(pn, n, d, 2 * d));
            CHECK(grid_cara_closed_form(n, d, Parity::Odd, Domain::Rn) ==
                  hf_regular_quotient(pn, n, d, 2 * d + 1));
            CHECK(grid_cara_closed_form(n, d, Parity::Even, Domain::Cube) ==
                  hf_regular_quotient(pn, n, d + 1, 2 * d));
            CHECK(grid_cara_closed_form(n, d, Parity::Odd, Domain::Cube) ==
                  hf_regular_quotient(pn, n, d + 1, 2 * d + 1));
        }
}

TEST_CASE("grid bound versus d^n") {
    for (int n = 1; n <= 4; ++n)
        for (int d = 1; d <= 4; ++d) {
            Int grid_size = 1;
            for (int i = 0; i < n; ++i) grid_size *= d;
            CHECK(grid_cara_closed_form(n, d, Parity::Even, Domain::Rn) <= grid_size);
        }
    CHECK(grid_cara_closed_form(5, 2, Parity::Even, Domain::Rn) == 31);  // strict: 31 < 32
    CHECK(grid_cara_closed_form(4, 2, Parity::Even, Domain::Rn) == 16);  // equality at n = 4
}

TEST_CASE("sphere Hilbert function") {
    for (int d = 0; d <= 20; ++d)
        CHECK(sphere_hilbert(3, d) == Int(d + 1) * (d + 1));
    CHECK(sphere_hilbert(2, 3) == 7);
    for (int n = 2; n <= 6; ++n) CHECK(sphere_hilbert(n, 0) == 1);
}

TEST_CASE("variety bounds on the sphere") {
    const auto sphere3 = HilbertProfile::sphere(3);
    for (int d = 1; d <= 10; ++d) {
        const auto report = variety_bounds(sphere3, 2, d);
        CHECK(report.lower == Int(2) * d * d);
        CHECK(report.upper == Int(4) * d * (d + 1));
        CHECK(!report.regime_violation);
        CHECK(!report.regime_note.empty());
    }
}

TEST_CASE("variety bounds flag the out-of-regime curve example") {
    // Smooth plane curve of degree 8: Hilbert polynomial 8t - 20.
    const auto curve = HilbertProfile::polynomial({Rat(-20), Rat(8)});
    const auto report = variety_bounds(curve, 1, 1);
    CHECK(report.upper == -5);
    CHECK(report.lower == 8);
    CHECK(report.regime_violation);
}

TEST_CASE("variety bounds on projective space reproduce the grid bound") {
    for (int n = 1; n <= 5; ++n) {
        const auto quotient =
            HilbertProfile::projective_space(n);
        for (int d = 1; d <= 5; ++d) {
            const auto report = variety_bounds(quotient, n, d);
            CHECK(report.lower == grid_cara_closed_form(n, d, Parity::Even, Domain::Rn));
        }
    }
}

TEST_CASE("curve bounds") {
    CHECK(curve_bounds(2, 3).lower == 6);
    CHECK(curve_bounds(2, 3).upper == 7);
    CHECK(curve_bounds(8, 2).lower == 16);
    CHECK(curve_bounds(8, 2).upper == 17);
    CHECK(curve_bounds(1, 1).lower == 1);
    CHECK(curve_bounds(1, 1).upper == 2);
}

TEST_CASE("asymptotic ratios") {
    // n = 1: ratio d/(2d+1) -> 1/2.
    for (int d : {1, 5, 50})
        CHECK(asymptotic_ratio(1, d, Parity::Even, Domain::Rn) == Rat(d, 2 * d + 1));

    // d -> infinity at fixed n: within 1e-3 of 1 - n/2^n at d = 2000.
    for (int n = 2; n <= 4; ++n) {
        const Rat limit = Rat(1) - Rat(n) / Rat(1 << n);
        const Rat at2000 = asymptotic_ratio(n, 2000, Parity::Even, Domain::Rn);
        Rat gap = limit - at2000;
        if (gap < 0) gap = -gap;
        CHECK(gap < Rat(1, 1000));
    }

    // Exact value of the (100, 2) even Rn ratio: 1 - 12n/((n+3)(n+4)) + small;
    // the large-n march to 1 at fixed degree happens on the cube bound.
    const Rat rn100 = asymptotic_ratio(100, 2, Parity::Even, Domain::Rn);
    CHECK(rn100 == Rat(Int("4087976")) / Rat(Int("4598126")));
    CHECK(rn100 > Rat(22, 25));
    CHECK(rn100 < Rat(89, 100));
    const Rat cube100 = asymptotic_ratio(100, 2, Parity::Even, Domain::Cube);
    CHECK(cube100 > Rat(99, 100));
    const Rat cube200 = asymptotic_ratio(200, 2, Parity::Even, Domain::Cube);
    CHECK(cube200 > Rat(999, 1000));
}
