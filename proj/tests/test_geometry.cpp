#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nippas/geometry.hpp"

#include <Eigen/Geometry>

#include <cmath>
#include <numbers>
#include <random>

using namespace nippas;

namespace {

constexpr double kPi = std::numbers::pi;

Vector point2(double a, double b) {
    Vector z(2);
    z << a, b;
    return z;
}

}  // namespace

TEST_CASE("bounding box validation and queries") {
    CHECK_THROWS(BoundingBox(Vector::Ones(2), Vector::Zero(2)));
    CHECK_THROWS(BoundingBox(Vector::Zero(0), Vector::Zero(0)));

    BoundingBox box = BoundingBox::unit(3);
    CHECK(box.dim() == 3);
    CHECK(box.volume() == doctest::Approx(1.0));
    CHECK(box.inside(Vector::Constant(3, 0.5)));
    CHECK_FALSE(box.inside(Vector::Constant(3, 1.5)));
    CHECK(box.clamp(Vector::Constant(3, 1.5)) == Vector::Ones(3));
}

TEST_CASE("contains on the built-in domains") {
    CHECK(Domain::disc().contains(point2(kPi, kPi)));
    CHECK_FALSE(Domain::triangle().contains(point2(0.0, -1.0)));

    Vector lo = Vector::Zero(2), hi = Vector::Constant(2, 2.0 * kPi);
    Domain cube = Domain::hypercube(BoundingBox(lo, hi));
    CHECK(cube.contains(point2(1.0, 1.0)));

    CHECK_THROWS(cube.contains(Vector::Ones(3)));
}

TEST_CASE("holes indicator") {
    Domain holes = Domain::holes();
    CHECK_FALSE(holes.contains(point2(kPi, kPi)));          // inside the central hole
    CHECK(holes.contains(point2(0.0, 0.0)));                // corner clears all three holes
    CHECK_FALSE(holes.contains(point2(2.0 * kPi + 0.1, 0.0)));  // outside the square
}

TEST_CASE("boundary points count as inside") {
    CHECK(Domain::disc().contains(point2(0.0, kPi)));  // on the circle
    CHECK(Domain::triangle().contains(point2(1.0, 0.0)));
    CHECK(Domain::simplex2d().contains(point2(0.5, 0.5)));
}

TEST_CASE("contains matches a direct inequality evaluation on random points") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 2.0 * kPi + 1.0);
    const double s3 = std::sqrt(3.0);

    auto disc = Domain::disc();
    auto tri = Domain::triangle();
    auto holes = Domain::holes();
    auto simplex = Domain::simplex2d();

    for (int i = 0; i < 10000; ++i) {
        Vector z = point2(u(rng), u(rng));

        bool disc_ref = std::pow(z[0] - kPi, 2) + std::pow(z[1] - kPi, 2) <= kPi * kPi;
        CHECK(disc.contains(z) == disc_ref);

        bool tri_ref = z[1] >= 0.0 && z[1] - s3 * z[0] <= 0.0 &&
                       s3 * z[0] + z[1] <= 2.0 * kPi * s3;
        // the triangle's bounding box caps z[0] at 2pi; the inequalities already do
        CHECK(tri.contains(z) == (tri_ref && z[0] >= 0.0 && z[0] <= 2.0 * kPi &&
                                  z[1] <= s3 * kPi));

        auto hole = [&](double cx, double cy, double r) {
            return std::pow(z[0] - cx, 2) + std::pow(z[1] - cy, 2) <= r * r;
        };
        bool holes_ref = z[0] >= 0.0 && z[0] <= 2.0 * kPi && z[1] >= 0.0 &&
                         z[1] <= 2.0 * kPi && !hole(kPi, kPi, kPi / 2.0) &&
                         !hole(kPi / 3.0, kPi / 3.0, kPi / 5.0) &&
                         !hole(5.0 * kPi / 3.0, 5.0 * kPi / 3.0, kPi / 3.0);
        CHECK(holes.contains(z) == holes_ref);

        Vector s = point2(z[0] / (2.0 * kPi + 1.0), z[1] / (2.0 * kPi + 1.0));
        bool simplex_ref = s[0] >= 0.0 && s[1] >= 0.0 && s[0] + s[1] <= 1.0;
        CHECK(simplex.contains(s) == simplex_ref);
    }
}

TEST_CASE("simplex chart reproduces the corners") {
    SimplexChart chart = SimplexChart::swe_parameters();
    CHECK(chart.to_ambient(1.0, 0.0).isApprox(Eigen::Vector3d(12.0, 0.5, -0.5), 1e-15));
    CHECK(chart.to_ambient(0.0, 1.0).isApprox(Eigen::Vector3d(8.0, 1.5, -0.5), 1e-15));
    CHECK(chart.to_ambient(0.0, 0.0).isApprox(Eigen::Vector3d(8.0, 0.5, 0.5), 1e-15));

    Eigen::Vector3d mid = chart.to_ambient(1.0 / 3.0, 1.0 / 3.0);
    CHECK(mid[0] == doctest::Approx(28.0 / 3.0).epsilon(1e-14));
    CHECK(mid[1] == doctest::Approx(5.0 / 6.0).epsilon(1e-14));
    CHECK(mid[2] == doctest::Approx(-1.0 / 6.0).epsilon(1e-14));

    CHECK_THROWS(chart.to_ambient(0.7, 0.7));
    CHECK_THROWS(chart.to_ambient(-0.1, 0.2));
}

TEST_CASE("simplex chart is affine and maps into the corner plane") {
    SimplexChart chart = SimplexChart::swe_parameters();
    // plane through the three corners: normal n, offset c
    Eigen::Vector3d n = (chart.corner(0) - chart.corner(2))
                            .cross(chart.corner(1) - chart.corner(2))
                            .normalized();
    const double offset = n.dot(chart.corner(2));

    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        double a1 = u(rng), a2 = u(rng) * (1.0 - a1);
        double b1 = u(rng), b2 = u(rng) * (1.0 - b1);
        double lam = u(rng);

        Eigen::Vector3d lhs =
            chart.to_ambient(lam * a1 + (1 - lam) * b1, lam * a2 + (1 - lam) * b2);
        Eigen::Vector3d rhs =
            lam * chart.to_ambient(a1, a2) + (1 - lam) * chart.to_ambient(b1, b2);
        CHECK((lhs - rhs).norm() <= 1e-13);
        CHECK(std::abs(n.dot(lhs) - offset) <= 1e-12);
    }
}

TEST_CASE("domain volumes are the exact areas") {
    CHECK(Domain::disc().volume() == doctest::Approx(kPi * kPi * kPi).epsilon(1e-14));
    CHECK(Domain::triangle().volume() ==
          doctest::Approx(std::sqrt(3.0) * kPi * kPi).epsilon(1e-14));
    CHECK(Domain::simplex2d().volume() == doctest::Approx(0.5));
}
