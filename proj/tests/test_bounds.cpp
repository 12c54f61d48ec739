#include <cmath>

#include "doctest.h"
#include "dplab/bounds.hpp"
#include "dplab/model.hpp"

using namespace dplab;

TEST_CASE("omega evaluates (n^2-1)/(4n^2) and increases toward 1/4") {
    CHECK(omega(1) == 0.0);
    CHECK(omega(2) == doctest::Approx(3.0 / 16.0).epsilon(1e-15));
    CHECK(omega(3) == doctest::Approx(2.0 / 9.0).epsilon(1e-15));
    CHECK_THROWS_AS(omega(0), ValidationError);
    for (int n = 1; n < 40; ++n) {
        CHECK(omega(n) < omega(n + 1));
        CHECK(omega(n) < 0.25);
    }
}

TEST_CASE("band_index partitions [0, 1/4) by the odd omega values") {
    CHECK(band_index(0.0) == 1);
    CHECK(band_index(0.1) == 1);
    CHECK(band_index(2.0 / 9.0) == 2);  // the left endpoint belongs to the band
    CHECK(band_index(0.24) == 3);       // omega_5 = 0.24 exactly
    CHECK_THROWS_AS(band_index(0.25), ValidationError);
    CHECK_THROWS_AS(band_index(-0.01), ValidationError);
    for (int n = 1; n < 20; ++n) CHECK(band_index(omega(2 * n - 1)) == n);
}

TEST_CASE("o_X follows the three-case definition") {
    CHECK(o_X(0.1, CardX::inf()) ==
          doctest::Approx((1.0 - std::sqrt(0.6)) / 2.0).epsilon(1e-15));
    CHECK(o_X(0.1, CardX::inf()) == doctest::Approx(0.1127016654).epsilon(1e-9));
    CHECK(o_X(0.23, CardX::of(3)) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(o_X(2.0 / 9.0, CardX::of(4)) == doctest::Approx(2.0 / 3.0).epsilon(1e-13));
    CHECK_THROWS_AS(o_X(0.0, CardX::inf()), ValidationError);
    CHECK_THROWS_AS(o_X(0.25, CardX::inf()), ValidationError);
    CHECK_THROWS_AS(o_X(0.1, CardX::of(1)), ValidationError);

    // Strictly increasing in eps within each band for infinite X.
    for (int n = 1; n <= 3; ++n) {
        const double lo = omega(2 * n - 1), hi = omega(2 * n + 1);
        double prev = -1.0;
        for (int i = 1; i < 20; ++i) {
            const double eps = lo + (hi - lo) * i / 20.0;
            const double val = o_X(eps, CardX::inf());
            CHECK(val > prev);
            prev = val;
        }
    }
}

TEST_CASE("o_prime_X follows the parity cases") {
    CHECK(o_prime_X(0.1, 3) == doctest::Approx(2.0 * std::sqrt(0.05)).epsilon(1e-15));
    CHECK(o_prime_X(0.1, 3) == doctest::Approx(0.4472135955).epsilon(1e-9));
    CHECK(o_prime_X(0.23, 3) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(o_prime_X(0.09, 2) == doctest::Approx(0.3).epsilon(1e-12));
    CHECK_THROWS_AS(o_prime_X(0.1, 1), ValidationError);
    CHECK_THROWS_AS(o_prime_X(0.3, 3), ValidationError);

    // The instability radius stays below the finite-X stability radius.
    for (int n = 2; n <= 9; ++n)
        for (int i = 1; i < 100; ++i) {
            const double eps = 0.25 * i / 100.0;
            CHECK(o_prime_X(eps, n) < 2.0 * std::sqrt(eps));
        }
}

TEST_CASE("gamma is decreasing and bounded by 2 sqrt(eps)") {
    CHECK(gamma(2.0 * std::sqrt(0.16), 0.16) ==
          doctest::Approx(2.0 * std::sqrt(0.16)).epsilon(1e-12));
    CHECK(gamma(1.0, 0.16) == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(gamma(0.9, 0.16) > gamma(1.0, 0.16));
    CHECK_THROWS_AS(gamma(0.5, 0.16), ValidationError);  // below 2 sqrt(eps) = 0.8
    CHECK_THROWS_AS(gamma(1.1, 0.16), ValidationError);

    for (double eps : {0.01, 0.05, 0.12}) {
        const double lo = 2.0 * std::sqrt(eps);
        double prev = 1e9;
        for (int i = 0; i <= 50; ++i) {
            const double t = lo + (1.0 - lo) * i / 50.0;
            const double g = gamma(t, eps);
            CHECK(g <= lo + 1e-12);
            CHECK(g < prev);
            prev = g;
        }
    }
}

TEST_CASE("bound_table emits one record per grid value with the rz flag") {
    const double grid1[] = {0.01};
    const auto rows = bound_table(grid1, CardX::of(3));
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].r17 == doctest::Approx(0.2915475947).epsilon(1e-9));
    CHECK(rows[0].applicable_rz);
    REQUIRE(rows[0].o_prime_x.has_value());

    const double grid2[] = {2.0 / 17.0};
    CHECK_FALSE(bound_table(grid2, CardX::of(3))[0].applicable_rz);

    const double bad[] = {0.0};
    CHECK_THROWS_AS(bound_table(bad, CardX::of(3)), ValidationError);

    CHECK(bound_table_csv({}, CardX::of(3)) ==
          "eps,o_X,o_prime_X,two_sqrt_eps,r17,applicable_rz\n");
    const auto csv = bound_table_csv(grid1, CardX::inf());
    CHECK(csv.find(",,") != std::string::npos);  // o_prime_X column empty for infinite X
}

TEST_CASE("BoundParams orders its thresholds") {
    const BoundParams p(0.1);
    CHECK(p.two_sqrt_eps < p.r9);
    CHECK(p.r9 < p.r17);
    CHECK_THROWS_AS(BoundParams(0.25), ValidationError);
    CHECK_THROWS_AS(BoundParams(0.0), ValidationError);
}
