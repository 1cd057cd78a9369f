#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nippas/surrogate.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <random>

using namespace nippas;

namespace {

Vector point1(double a) { return Vector::Constant(1, a); }

Vector point2(double a, double b) {
    Vector z(2);
    z << a, b;
    return z;
}

BlackBoxSample scalar_sample(double u) {
    BlackBoxSample s;
    s.qoi = Vector::Constant(1, u);
    s.term_values.push_back(s.qoi);
    return s;
}

// approximate Fekete points: select rows of the candidate Vandermonde by
// column-pivoted QR, which keeps the square system well conditioned
std::vector<Vector> fekete_points(const BoundingBox& box, int count, int grid_per_axis) {
    BasisSpec spec(box);
    for (int i = 0; i < count; ++i) spec.indices.push_back(next_index(spec));

    std::vector<Vector> candidates;
    if (box.dim() == 1) {
        for (int i = 0; i < grid_per_axis; ++i) {
            double t = std::cos(M_PI * i / (grid_per_axis - 1.0));
            candidates.push_back(point1(box.lo[0] + 0.5 * (t + 1.0) * box.width(0)));
        }
    } else {
        for (int i = 0; i < grid_per_axis; ++i)
            for (int j = 0; j < grid_per_axis; ++j) {
                double ti = std::cos(M_PI * i / (grid_per_axis - 1.0));
                double tj = std::cos(M_PI * j / (grid_per_axis - 1.0));
                candidates.push_back(point2(box.lo[0] + 0.5 * (ti + 1.0) * box.width(0),
                                            box.lo[1] + 0.5 * (tj + 1.0) * box.width(1)));
            }
    }

    Eigen::MatrixXd vand_t(count, candidates.size());
    for (std::size_t c = 0; c < candidates.size(); ++c)
        vand_t.col(c) = basis_row(spec, candidates[c]);
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(vand_t);
    std::vector<Vector> points;
    for (int k = 0; k < count; ++k)
        points.push_back(candidates[qr.colsPermutation().indices()[k]]);
    return points;
}

}  // namespace

TEST_CASE("a single node yields the constant surrogate") {
    SurrogateState state(BoundingBox::unit(1));
    SampleSet set;
    add_node(state, set, point1(0.37), scalar_sample(4.2));
    CHECK(eval_qoi(state, point1(0.0))[0] == doctest::Approx(4.2));
    CHECK(eval_qoi(state, point1(0.9))[0] == doctest::Approx(4.2));
}

TEST_CASE("two nodes interpolate linearly in 1D") {
    SurrogateState state(BoundingBox::unit(1));
    SampleSet set;
    add_node(state, set, point1(0.0), scalar_sample(0.0));
    add_node(state, set, point1(1.0), scalar_sample(1.0));
    CHECK(eval_qoi(state, point1(0.5))[0] == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("six nodes capture a function inside the basis span") {
    // f = 3 + z1 z2 lies in the span of the first six graded-lex functions
    auto f = [](const Vector& z) { return 3.0 + z[0] * z[1]; };
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> u(0.0, 1.0);

    SurrogateState state(BoundingBox::unit(2));
    SampleSet set;
    for (int i = 0; i < 6; ++i) {
        Vector z = point2(u(rng), u(rng));
        add_node(state, set, z, scalar_sample(f(z)));
    }
    for (int i = 0; i < 100; ++i) {
        Vector z = point2(u(rng), u(rng));
        CHECK(std::abs(eval_qoi(state, z)[0] - f(z)) < 1e-10);
    }
}

TEST_CASE("interpolation holds at every node after every append, d in {1,2}") {
    for (int dim : {1, 2}) {
        const int count = 100;
        auto points = fekete_points(BoundingBox::unit(dim), count, dim == 1 ? 400 : 40);

        auto f = [dim](const Vector& z) {
            return dim == 1 ? std::exp(z[0]) : std::sin(3.0 * z[0]) + z[1] * z[1];
        };
        SurrogateState state(BoundingBox::unit(dim));
        SampleSet set;
        for (int k = 0; k < count; ++k) {
            add_node(state, set, points[k], scalar_sample(f(points[k])));
            for (int i = 0; i <= k; ++i) {
                const double stored = set.qoi(i, 0);
                const double evaluated = eval_qoi(state, set.nodes[i])[0];
                CHECK(std::abs(evaluated - stored) <= 1e-8 * (1.0 + std::abs(stored)));
            }
        }
    }
}

TEST_CASE("incremental coefficients match a dense solve while well conditioned") {
    const int count = 40;
    auto points = fekete_points(BoundingBox::unit(2), count, 40);
    auto f = [](const Vector& z) { return std::cos(2.0 * z[0]) * std::exp(z[1]); };

    SurrogateState state(BoundingBox::unit(2));
    SampleSet set;
    for (int k = 0; k < count; ++k)
        add_node(state, set, points[k], scalar_sample(f(points[k])));

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(state.pinv.A);
    const double cond =
        svd.singularValues()[0] / svd.singularValues()[svd.singularValues().size() - 1];
    REQUIRE(cond < 1e8);

    Eigen::VectorXd direct = state.pinv.A.fullPivLu().solve(set.qoi.col(0));
    CHECK((state.coeff_qoi.col(0) - direct).norm() <= 1e-8 * direct.norm());
}

TEST_CASE("terms interpolate alongside the QoI") {
    SurrogateState state(BoundingBox::unit(1));
    SampleSet set;
    auto make = [](double u, double t0, double t1) {
        BlackBoxSample s;
        s.qoi = Vector::Constant(1, u);
        s.term_values.push_back(Vector::Constant(1, t0));
        s.term_values.push_back(Vector::Constant(1, t1));
        return s;
    };
    add_node(state, set, point1(0.1), make(1.0, -2.0, 3.0));
    add_node(state, set, point1(0.8), make(2.0, 5.0, -1.0));

    CHECK(eval_term(state, 0, point1(0.1))[0] == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(eval_term(state, 1, point1(0.8))[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK_THROWS(eval_term(state, 2, point1(0.5)));
}

TEST_CASE("node history is append-only") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    SurrogateState state(BoundingBox::unit(1));
    SampleSet set;
    std::vector<Vector> snapshot;
    for (int k = 0; k < 20; ++k) {
        Vector z = point1(u(rng));
        add_node(state, set, z, scalar_sample(z[0]));
        snapshot.push_back(z);
        for (int i = 0; i <= k; ++i) CHECK(set.nodes[i] == snapshot[i]);
    }
}

TEST_CASE("duplicate nodes are rejected with the nearest node attached") {
    SurrogateState state(BoundingBox::unit(1));
    SampleSet set;
    add_node(state, set, point1(0.5), scalar_sample(1.0), 1e-8);
    try {
        add_node(state, set, point1(0.5 + 1e-12), scalar_sample(1.0), 1e-8);
        FAIL("expected duplicate_node_error");
    } catch (const duplicate_node_error& err) {
        CHECK(err.nearest[0] == doctest::Approx(0.5));
        CHECK(err.distance <= 1e-8);
    }
}

TEST_CASE("evaluating an empty surrogate is an error") {
    SurrogateState state(BoundingBox::unit(1));
    CHECK_THROWS(eval_qoi(state, point1(0.5)));
}
