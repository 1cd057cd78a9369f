#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nippas/residual.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <random>

using namespace nippas;

namespace {

constexpr double kPi = std::numbers::pi;

Vector point1(double a) { return Vector::Constant(1, a); }

Vector point2(double a, double b) {
    Vector z(2);
    z << a, b;
    return z;
}

// surrogate over n Chebyshev points of [0, 1]
struct Built {
    SurrogateState state;
    SampleSet set;
};

Built build_steady(const SteadyAdvectionDiffusion& model, int n_nodes, bool with_full) {
    Built b{SurrogateState(SteadyAdvectionDiffusion::parameter_box()), {}};
    b.set.track_full = with_full;
    for (int i = 0; i < n_nodes; ++i) {
        const double t = std::cos(kPi * (2.0 * i + 1.0) / (2.0 * n_nodes));
        Vector z = point1(0.5 * (t + 1.0));
        add_node(b.state, b.set, z, model.sample(z, with_full));
    }
    return b;
}

Eigen::MatrixXd dense_operator(const SteadyAdvectionDiffusion& model, double z) {
    Eigen::MatrixXd op = model.reynolds(z) * Eigen::MatrixXd(model.operator_matrix(0));
    op -= Eigen::MatrixXd(model.operator_matrix(1));
    return op;
}

}  // namespace

TEST_CASE("residual vanishes at the sample nodes") {
    SteadyAdvectionDiffusion model(ReProfile::re1, 200, QoiSpec::select(100));
    Domain domain = Domain::hypercube(SteadyAdvectionDiffusion::parameter_box());
    Built b = build_steady(model, 8, false);
    RefinementMeasure measure{MeasureKind::R, &domain, &model, nullptr};

    double scale = 1.0 + b.set.qoi.cwiseAbs().maxCoeff();
    for (const Vector& z : b.set.nodes) CHECK(eval_R(measure, b.state, z) <= 1e-7 * scale);
}

TEST_CASE("a one-node surrogate has zero residual only at its node") {
    SteadyAdvectionDiffusion model(ReProfile::re1, 200, QoiSpec::select(100));
    Domain domain = Domain::hypercube(SteadyAdvectionDiffusion::parameter_box());
    Built b = build_steady(model, 1, false);
    RefinementMeasure measure{MeasureKind::R, &domain, &model, nullptr};

    CHECK(eval_R(measure, b.state, b.set.nodes[0]) <= 1e-7);
    CHECK(eval_R(measure, b.state, point1(0.95)) > 1e-3);
}

TEST_CASE("the scaled residual is the signed surrogate error (linear identity)") {
    SteadyAdvectionDiffusion model(ReProfile::re1, 200, QoiSpec::select(100));
    Domain domain = Domain::hypercube(SteadyAdvectionDiffusion::parameter_box());
    Built b = build_steady(model, 10, true);
    RefinementMeasure measure{MeasureKind::R_star, &domain, &model, nullptr};

    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 20; ++i) {
        Vector z = point1(u(rng));
        const double u_true = model.sample(z).qoi[0];
        const double u_tilde = eval_qoi(b.state, z)[0];

        // library path (sparse solve) and an independent dense-solve oracle
        Vector lhs = projected_inverse_residual(measure, b.state, z);
        Vector rv = full_residual_vector(measure, b.state, z);
        Vector oracle = model.apply_qoi_map(dense_operator(model, z[0]).fullPivLu().solve(rv));

        const double tol = 1e-9 * (1.0 + std::abs(u_true));
        CHECK(std::abs(lhs[0] - (u_tilde - u_true)) <= tol);
        CHECK(std::abs(oracle[0] - (u_tilde - u_true)) <= tol);
        CHECK(eval_R_star(measure, b.state, z) ==
              doctest::Approx(std::abs(u_tilde - u_true)).epsilon(1e-6));
    }
}

TEST_CASE("identity holds for both PDE sizes in the contract") {
    for (int n_pde : {50, 200}) {
        SteadyAdvectionDiffusion model(ReProfile::re2, n_pde, QoiSpec::select(n_pde / 2));
        Domain domain = Domain::hypercube(SteadyAdvectionDiffusion::parameter_box());
        Built b = build_steady(model, 9, true);
        RefinementMeasure measure{MeasureKind::R_star, &domain, &model, nullptr};

        std::mt19937_64 rng(17);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (int i = 0; i < 50; ++i) {
            Vector z = point1(u(rng));
            const double u_true = model.sample(z).qoi[0];
            const double u_tilde = eval_qoi(b.state, z)[0];
            Vector lhs = projected_inverse_residual(measure, b.state, z);
            CHECK(std::abs(lhs[0] - (u_tilde - u_true)) <= 1e-8 * (1.0 + std::abs(u_true)));
        }
    }
}

TEST_CASE("error bound by operator norms") {
    SteadyAdvectionDiffusion model(ReProfile::re1, 50, QoiSpec::select(25));
    Domain domain = Domain::hypercube(SteadyAdvectionDiffusion::parameter_box());
    Built b = build_steady(model, 7, true);
    RefinementMeasure measure{MeasureKind::R_star, &domain, &model, nullptr};

    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        Vector z = point1(u(rng));
        const Vector u_true = model.sample(z).qoi;
        const double err = (eval_qoi(b.state, z) - u_true).norm();

        Eigen::MatrixXd inverse = dense_operator(model, z[0]).inverse();
        const double bound = model.qoi_spec().norm2() *
                                 inverse.jacobiSvd().singularValues()[0] *
                                 full_residual_vector(measure, b.state, z).norm() +
                             1e-8;
        CHECK(err <= bound);
    }
}

TEST_CASE("pdf weighting scales the residual") {
    SteadyAdvectionDiffusion model(ReProfile::re1, 200, QoiSpec::select(100));
    Domain domain = Domain::hypercube(SteadyAdvectionDiffusion::parameter_box());
    Pdf uniform = Pdf::uniform(Domain::hypercube(SteadyAdvectionDiffusion::parameter_box()));
    Built b = build_steady(model, 4, false);

    RefinementMeasure plain{MeasureKind::R, &domain, &model, nullptr};
    RefinementMeasure weighted{MeasureKind::R_rho, &domain, &model, &uniform};

    Vector z = point1(0.77);
    CHECK(eval_R_rho(weighted, b.state, z) ==
          doctest::Approx(eval_R(plain, b.state, z)).epsilon(1e-12));

    // beta weighting: equal residuals are ranked by the density
    Pdf beta = Pdf::beta_product(SteadyAdvectionDiffusion::parameter_box(), {2.0}, {2.0});
    RefinementMeasure beta_measure{MeasureKind::R_rho, &domain, &model, &beta};
    const double r_peak = eval_R_rho(beta_measure, b.state, point1(0.5));
    const double r_tail = eval_R_rho(beta_measure, b.state, point1(0.99));
    const double raw_peak = eval_R(plain, b.state, point1(0.5));
    const double raw_tail = eval_R(plain, b.state, point1(0.99));
    CHECK(r_peak / raw_peak > r_tail / raw_tail);

    // zero density kills the residual outside the beta support
    Pdf narrow = Pdf::beta_product(
        BoundingBox(Vector::Constant(1, 0.4), Vector::Constant(1, 0.6)), {2.0}, {2.0});
    RefinementMeasure narrow_measure{MeasureKind::R_rho, &domain, &model, &narrow};
    CHECK(eval_R_rho(narrow_measure, b.state, point1(0.9)) == 0.0);
}

TEST_CASE("empirical interpolation equals the QoI residual when Q is the identity") {
    SteadyAdvectionDiffusion model(ReProfile::re1, 120, QoiSpec::identity());
    Domain domain = Domain::hypercube(SteadyAdvectionDiffusion::parameter_box());
    Built b = build_steady(model, 6, true);

    RefinementMeasure r{MeasureKind::R, &domain, &model, nullptr};
    RefinementMeasure ei{MeasureKind::R_EI, &domain, &model, nullptr};

    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 20; ++i) {
        Vector z = point1(u(rng));
        const double a = eval_R(r, b.state, z);
        const double c = eval_R_EI(ei, b.state, z);
        CHECK(std::abs(a - c) <= 1e-9 * (1.0 + std::max(a, c)));
    }
    for (const Vector& z : b.set.nodes) CHECK(eval_R_EI(ei, b.state, z) <= 1e-6);
}

TEST_CASE("indicator restriction returns exactly zero off the domain") {
    AnalyticToy toy(
        BoundingBox(Vector::Zero(2), Vector::Constant(2, 2.0 * kPi)),
        [](const Vector& z) { return std::sin(z[0]) + z[1]; });
    Domain holes = Domain::holes();
    SurrogateState state(holes.box());
    SampleSet set;
    Vector z0 = point2(0.5, 0.5);
    add_node(state, set, z0, toy.sample(z0));
    RefinementMeasure measure{MeasureKind::R, &holes, &toy, nullptr};

    CHECK(eval_R(measure, state, point2(kPi, kPi)) == 0.0);  // inside a hole
    CHECK(eval_R(measure, state, point2(1.0, 2.0)) > 0.0);
}

TEST_CASE("measure preconditions are enforced") {
    SteadyAdvectionDiffusion model(ReProfile::re1, 50, QoiSpec::select(25));
    Domain domain = Domain::hypercube(SteadyAdvectionDiffusion::parameter_box());
    Built b = build_steady(model, 3, false);

    RefinementMeasure r{MeasureKind::R, &domain, &model, nullptr};
    CHECK_THROWS(eval_R(r, b.state, point1(1.5)));  // outside the box

    RefinementMeasure rho{MeasureKind::R_rho, &domain, &model, nullptr};
    CHECK_THROWS(eval_R_rho(rho, b.state, point1(0.5)));  // missing pdf
    CHECK_THROWS(eval_R(rho, b.state, point1(0.5)));      // kind mismatch
    CHECK_THROWS(eval_R_star(r, b.state, point1(0.5)));   // kind mismatch

    AnalyticToy toy(BoundingBox::unit(1), [](const Vector& z) { return z[0]; });
    Domain unit = Domain::hypercube(BoundingBox::unit(1));
    SurrogateState tstate(unit.box());
    SampleSet tset;
    add_node(tstate, tset, point1(0.5), toy.sample(point1(0.5)));
    RefinementMeasure star{MeasureKind::R_star, &unit, &toy, nullptr};
    CHECK_THROWS(eval_R_star(star, tstate, point1(0.5)));  // toy has no operators
}
