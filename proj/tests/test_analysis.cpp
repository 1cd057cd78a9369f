#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nippas/analysis.hpp"

#include <cmath>
#include <random>

using namespace nippas;

namespace {

Vector scalar(double v) { return Vector::Constant(1, v); }

double integrate_monomial(int n, int degree) {
    auto [nodes, weights] = gauss_legendre(n, -1.0, 1.0);
    double acc = 0.0;
    for (int i = 0; i < nodes.size(); ++i) acc += weights[i] * std::pow(nodes[i], degree);
    return acc;
}

}  // namespace

TEST_CASE("textbook small rules") {
    auto [n1, w1] = gauss_legendre(1, -1.0, 1.0);
    CHECK(n1[0] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(w1[0] == doctest::Approx(2.0).epsilon(1e-15));

    auto [n2, w2] = gauss_legendre(2, -1.0, 1.0);
    CHECK(std::abs(n2[0]) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
    CHECK(std::abs(n2[1]) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
    CHECK(w2[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(w2[1] == doctest::Approx(1.0).epsilon(1e-14));

    CHECK_THROWS(gauss_legendre(0, -1.0, 1.0));
}

TEST_CASE("exactness through degree 2n-1") {
    // even degrees integrate to 2/(d+1), odd ones to zero
    for (int n : {5, 20, 100}) {
        for (int degree = 0; degree <= 2 * n - 1; degree += (n == 100 ? 11 : 1)) {
            const double exact = degree % 2 == 0 ? 2.0 / (degree + 1.0) : 0.0;
            const double got = integrate_monomial(n, degree);
            if (degree % 2 == 0)
                CHECK(std::abs(got - exact) <= 1e-12 * std::abs(exact));
            else
                CHECK(std::abs(got) <= 1e-13);
        }
    }
    // the headline case: degree 198 with 100 nodes
    CHECK(std::abs(integrate_monomial(100, 198) - 2.0 / 199.0) <= 1e-13 * (2.0 / 199.0));
}

TEST_CASE("weights are positive and sum to the box volume") {
    BoundingBox box(Vector::Zero(2), Vector::Constant(2, 3.0));
    QuadratureRule rule = tensor_rule(box, 30);
    double total = 0.0;
    rule.for_each([&](const Vector&, double w) {
        CHECK(w > 0.0);
        total += w;
    });
    CHECK(total == doctest::Approx(9.0).epsilon(1e-13));
    CHECK(rule.num_points() == 900);
}

TEST_CASE("moment error of an exact surrogate is bitwise zero") {
    Pdf pdf = Pdf::uniform(Domain::hypercube(BoundingBox::unit(1)));
    QuadratureRule rule = tensor_rule(pdf.support().box(), 50);
    auto field = [](const Vector& z) { return scalar(std::sin(z[0])); };
    CHECK(moment_error(1, field, field, pdf, rule) == 0.0);
    CHECK(moment_error(2, field, field, pdf, rule) == 0.0);
}

TEST_CASE("first-moment error of a constant offset") {
    Pdf pdf = Pdf::uniform(Domain::hypercube(BoundingBox::unit(1)));
    QuadratureRule rule = tensor_rule(pdf.support().box(), 50);
    auto reference = [](const Vector& z) { return scalar(z[0]); };
    auto surrogate = [](const Vector& z) { return scalar(z[0] + 0.125); };
    CHECK(moment_error(1, surrogate, reference, pdf, rule) ==
          doctest::Approx(0.125).epsilon(1e-13));
}

TEST_CASE("second-moment error against a vanishing surrogate") {
    Pdf pdf = Pdf::uniform(Domain::hypercube(BoundingBox::unit(1)));
    QuadratureRule rule = tensor_rule(pdf.support().box(), 50);
    auto reference = [](const Vector& z) { return scalar(z[0]); };
    auto surrogate = [](const Vector&) { return scalar(0.0); };
    // integral of z^2 over [0,1]
    CHECK(moment_error(2, surrogate, reference, pdf, rule) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-13));
    CHECK_THROWS(moment_error(0, surrogate, reference, pdf, rule));
}

TEST_CASE("monte carlo error basics") {
    Domain domain = Domain::hypercube(BoundingBox::unit(1));
    auto reference = [](const Vector& z) { return scalar(z[0] * z[0]); };
    CHECK(mc_error(reference, reference, domain, 100, 7) == 0.0);

    Vector offset(2);
    offset << 3.0, 4.0;
    auto vec_ref = [](const Vector&) { return Vector::Zero(2); };
    auto vec_sur = [&offset](const Vector&) -> Vector { return offset; };
    CHECK(mc_error(vec_sur, vec_ref, domain, 37, 11) == doctest::Approx(5.0).epsilon(1e-14));
}

TEST_CASE("monte carlo error estimates the integral of |z^2 - z|") {
    Domain domain = Domain::hypercube(BoundingBox::unit(1));
    auto reference = [](const Vector& z) { return scalar(z[0] * z[0]); };
    auto surrogate = [](const Vector& z) { return scalar(z[0]); };
    const int n = 1000000;
    const double got = mc_error(surrogate, reference, domain, n, 13);
    // mean 1/6, variance 1/180
    const double three_se = 3.0 * std::sqrt(1.0 / 180.0 / n);
    CHECK(std::abs(got - 1.0 / 6.0) <= three_se);
}

TEST_CASE("monte carlo error is deterministic and order-independent") {
    Domain domain = Domain::hypercube(BoundingBox::unit(2));
    auto reference = [](const Vector& z) { return scalar(z[0] + z[1]); };
    auto surrogate = [](const Vector&) { return scalar(0.0); };
    const double a = mc_error(surrogate, reference, domain, 500, 21);
    const double b = mc_error(surrogate, reference, domain, 500, 21);
    CHECK(a == b);

    // the estimate equals the permuted-order mean of the same draws
    auto points = mc_points(domain, 500, 21);
    double reversed = 0.0;
    for (auto it = points.rbegin(); it != points.rend(); ++it)
        reversed += (reference(*it) - surrogate(*it)).norm();
    reversed /= points.size();
    CHECK(a == doctest::Approx(reversed).epsilon(1e-15));
}

TEST_CASE("ensemble statistics") {
    CHECK_THROWS(ensemble_convergence({}));

    EnsembleStats single = ensemble_convergence({{3.0, 2.0, 1.0}});
    CHECK(single.mean == std::vector<double>{3.0, 2.0, 1.0});
    CHECK(single.lo == single.mean);
    CHECK(single.hi == single.mean);

    EnsembleStats two = ensemble_convergence({{1.0, 5.0, 9.0}, {3.0, 1.0}});
    REQUIRE(two.length() == 2);  // truncated to the shortest run
    CHECK(two.mean[0] == doctest::Approx(2.0));
    CHECK(two.lo[0] == 1.0);
    CHECK(two.hi[0] == 3.0);
    CHECK(two.mean[1] == doctest::Approx(3.0));
    CHECK(two.lo[1] == 1.0);
    CHECK(two.hi[1] == 5.0);
}
