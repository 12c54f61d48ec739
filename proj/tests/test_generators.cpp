#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "dplab/bounds.hpp"
#include "dplab/calculus.hpp"
#include "dplab/functionals.hpp"
#include "dplab/generators.hpp"
#include "oracles.hpp"

using namespace dplab;

namespace {

int vertex_index(const OperatorMatrix& op, const std::string& name) {
    const auto& v = op.graph.vertices;
    const auto it = std::find(v.begin(), v.end(), name);
    REQUIRE(it != v.end());
    return static_cast<int>(it - v.begin());
}

int point_index(const OperatorMatrix& op, const std::string& name) {
    const auto& p = op.space.points;
    const auto it = std::find(p.begin(), p.end(), name);
    REQUIRE(it != p.end());
    return static_cast<int>(it - p.begin());
}

}  // namespace

TEST_CASE("gen_recero meets the o_prime_X radius exactly") {
    SUBCASE("odd cardinality below omega_n") {
        const auto bundle = gen_recero(3, 0.1, 2);
        const double c = 6.0 * std::sqrt(0.1) / std::sqrt(8.0);
        CHECK(c == doctest::Approx(0.670820).epsilon(1e-6));
        CHECK(bundle.op.rows[0][0] == doctest::Approx(c / 3.0).epsilon(1e-12));
        CHECK(op_norm(bundle.op) == 1.0);
        const double dist = dist_to_wcm(bundle.op).dist;
        CHECK(dist == doctest::Approx(2.0 * std::sqrt(0.05)).epsilon(1e-12));
        CHECK(dist == doctest::Approx(o_prime_X(0.1, 3)).epsilon(1e-12));
    }
    SUBCASE("even cardinality") {
        const auto bundle = gen_recero(2, 0.09, 2);
        CHECK(bundle.op.rows[0][0] == doctest::Approx(0.3).epsilon(1e-12));
        CHECK(epsilon_exact(bundle.op).eps == doctest::Approx(0.09).epsilon(1e-12));
        CHECK(dist_to_wcm(bundle.op).dist == doctest::Approx(0.3).epsilon(1e-12));
        CHECK(dist_to_wcm(bundle.op).dist == doctest::Approx(std::sqrt(0.09)).epsilon(1e-12));
    }
    SUBCASE("odd cardinality above omega_n clamps the bump to one") {
        const auto bundle = gen_recero(3, 0.23, 2);
        CHECK(bundle.op.rows[0][0] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
        CHECK(dist_to_wcm(bundle.op).dist == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
        CHECK(epsilon_exact(bundle.op).eps == doctest::Approx(omega(3)).epsilon(1e-12));
    }
    SUBCASE("the radius matches across the documented grid") {
        for (int n = 2; n <= 7; ++n)
            for (double eps : {0.02, 0.07, 0.12, 0.17, 0.23}) {
                CAPTURE(n);
                CAPTURE(eps);
                const auto bundle = gen_recero(n, eps, 3);
                CHECK(dist_to_wcm(bundle.op).dist ==
                      doctest::Approx(o_prime_X(eps, n)).epsilon(1e-12));
                CHECK(epsilon_exact(bundle.op).eps <= eps + 1e-12);
                CHECK(op_norm(bundle.op) == 1.0);
            }
    }
    SUBCASE("parameter validation") {
        CHECK_THROWS_AS(gen_recero(1, 0.1, 2), ValidationError);
        CHECK_THROWS_AS(gen_recero(3, 0.25, 2), ValidationError);
        CHECK_THROWS_AS(gen_recero(3, 0.1, 1), ValidationError);
    }
}

TEST_CASE("gen_interval reproduces the sharp two-point mesh") {
    const double eps = 0.04;
    const auto bundle = gen_interval(eps, 201);
    const auto& op = bundle.op;

    SUBCASE("endpoint rows are exact coordinate rows") {
        CHECK(op.rows[200] == std::vector<double>{1.0, 0.0});
        CHECK(op.rows[0] == std::vector<double>{0.0, 1.0});
        CHECK(op_norm(op) == 1.0);
    }
    SUBCASE("the midpoint row splits the minimum level evenly") {
        CHECK(op.rows[100][0] == doctest::Approx(std::sqrt(eps)).epsilon(1e-12));
        CHECK(op.rows[100][1] == doctest::Approx(std::sqrt(eps)).epsilon(1e-12));
    }
    SUBCASE("defect and distance are exactly eps and 2 sqrt(eps)") {
        CHECK(epsilon_exact(op).eps == doctest::Approx(eps).epsilon(1e-12));
        CHECK(dist_to_wcm(op).dist == doctest::Approx(2.0 * std::sqrt(eps)).epsilon(1e-12));
    }
    SUBCASE("even mesh sizes are rejected") {
        CHECK_THROWS_AS(gen_interval(0.04, 200), ValidationError);
        CHECK_THROWS_AS(gen_interval(0.3, 11), ValidationError);
    }
}

TEST_CASE("gen_tripod builds the averaging operator") {
    for (int n : {1, 2}) {
        for (int m : {4, 8}) {
            CAPTURE(n);
            CAPTURE(m);
            const auto bundle = gen_tripod(n, m);
            CHECK(op_norm(bundle.op) == doctest::Approx(1.0).epsilon(1e-14));
            CHECK(epsilon_exact(bundle.op).eps == doctest::Approx(2.0 / 9.0).epsilon(1e-12));
        }
    }

    SUBCASE("the carried leaf row averages two thirds against one third") {
        const auto bundle = gen_tripod(1, 4);
        const int y = vertex_index(bundle.op, "A0");
        CHECK(bundle.op.rows[y][point_index(bundle.op, "A0")] ==
              doctest::Approx(2.0 / 3.0).epsilon(1e-15));
        CHECK(bundle.op.rows[y][point_index(bundle.op, "A1")] ==
              doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    }
    SUBCASE("the center row averages the three tripod centers") {
        const auto bundle = gen_tripod(1, 4);
        const int y = vertex_index(bundle.op, "D0");
        for (const char* c : {"D0", "D1", "D2"})
            CHECK(bundle.op.rows[y][point_index(bundle.op, c)] ==
                  doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    }
    SUBCASE("mesh refinement leaves the defect untouched") {
        CHECK(epsilon_exact(gen_tripod(1, 4).op).eps == epsilon_exact(gen_tripod(1, 8).op).eps);
        CHECK(epsilon_exact(gen_interval(0.04, 21).op).eps ==
              epsilon_exact(gen_interval(0.04, 41).op).eps);
    }
}

TEST_CASE("gen_tripod_weighted scales the defect to 2/17") {
    for (int n : {1, 2, 3}) {
        for (int m : {4, 8}) {
            CAPTURE(n);
            CAPTURE(m);
            const auto bundle = gen_tripod_weighted(n, m);
            CHECK(op_norm(bundle.op) == doctest::Approx(1.0).epsilon(1e-14));
            CHECK(epsilon_exact(bundle.op).eps == doctest::Approx(2.0 / 17.0).epsilon(1e-12));
        }
    }
    SUBCASE("outer coordinate rows climb from 3/sqrt(17) to 1") {
        const auto bundle = gen_tripod_weighted(1, 4);
        const int y = vertex_index(bundle.op, "A0''");
        CHECK(bundle.op.rows[y][point_index(bundle.op, "A0''")] == 1.0);
    }
}

TEST_CASE("gen_circles reaches defect exactly 1/8") {
    for (int circles : {1, 2, 4}) {
        CAPTURE(circles);
        const auto bundle = gen_circles(circles, 16);
        CHECK(op_norm(bundle.op) == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(epsilon_exact(bundle.op).eps == doctest::Approx(0.125).epsilon(1e-12));
    }
    SUBCASE("the attachment vertex carries only the even coordinate") {
        const auto bundle = gen_circles(1, 16);
        const int y = vertex_index(bundle.op, "C1[0]");
        CHECK(bundle.op.rows[y][point_index(bundle.op, "2")] ==
              doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-15));
        CHECK(bundle.op.rows[y][point_index(bundle.op, "1")] == 0.0);
    }
    SUBCASE("the terminal vertex points at infinity") {
        const auto bundle = gen_circles(2, 16);
        const int y = vertex_index(bundle.op, "O");
        CHECK(bundle.op.rows[y][point_index(bundle.op, "inf")] ==
              doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-15));
    }
    SUBCASE("scaling in the generator hits the requested defect") {
        const auto bundle = gen_circles(1, 16, 0.05);
        CHECK(epsilon_exact(bundle.op).eps == doctest::Approx(0.05).epsilon(1e-12));
        CHECK(op_norm(bundle.op) == 1.0);
    }
    SUBCASE("odd meshes and out-of-range scaling are rejected") {
        CHECK_THROWS_AS(gen_circles(1, 15), ValidationError);
        CHECK_THROWS_AS(gen_circles(0, 16), ValidationError);
        CHECK_THROWS_AS(gen_circles(1, 16, 0.2), ValidationError);
    }
}

TEST_CASE("gen_scaled rescales defect and distance through the isolated point") {
    SUBCASE("uniform thirds scaled to 0.1") {
        const auto base = functional_instance(extremal_functional(3, 0.23),
                                              o_X(0.23, CardX::of(3)), "uniform3");
        const auto scaled = gen_scaled(base, 0.1);
        const double gamma = std::sqrt(0.1 / (2.0 / 9.0));
        CHECK(epsilon_exact(scaled.op).eps == doctest::Approx(0.1).epsilon(1e-12));
        CHECK(op_norm(scaled.op) == 1.0);
        CHECK(dist_to_wcm(scaled.op).dist ==
              doctest::Approx(gamma * 2.0 / 3.0).epsilon(1e-12));
    }
    SUBCASE("identity scaling keeps the instance") {
        const auto base = gen_recero(2, 0.09, 2);
        const auto scaled = gen_scaled(base, 0.09);
        CHECK(epsilon_exact(scaled.op).eps == doctest::Approx(0.09).epsilon(1e-12));
    }
    SUBCASE("a weighted tripod scales to 0.05") {
        const auto scaled = gen_scaled(gen_tripod_weighted(1, 4), 0.05);
        CHECK(epsilon_exact(scaled.op).eps == doctest::Approx(0.05).epsilon(1e-12));
    }
    SUBCASE("upscaling is rejected") {
        const auto base = gen_recero(2, 0.04, 2);
        CHECK_THROWS_AS(gen_scaled(base, 0.2), ValidationError);
    }
}

TEST_CASE("catalog expectations match the exact algorithms") {
    for (const auto& bundle : standard_catalog()) {
        CAPTURE(bundle.provenance);
        if (bundle.expected_eps)
            CHECK(epsilon_exact(bundle.op).eps ==
                  doctest::Approx(*bundle.expected_eps).epsilon(1e-12));
        if (bundle.expected_dist)
            CHECK(dist_to_wcm(bundle.op).dist ==
                  doctest::Approx(*bundle.expected_dist).epsilon(1e-12));
    }
}
