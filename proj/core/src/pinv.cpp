#include "nippas/pinv.hpp"

#include <Eigen/Dense>

#include <stdexcept>

namespace nippas {

PinvState make_pinv_state(const Eigen::MatrixXd& A) {
    PinvState state;
    state.A = A;
    state.G = direct_pinv(A);
    return state;
}

void greville_append_column(PinvState& state, const Eigen::VectorXd& a, double tau) {
    const int n = state.rows();
    const int m = state.cols();
    if (a.size() != n)
        throw std::invalid_argument("greville_append_column: column length mismatch");

    // d = G a, a1 = A d, a2 = a - a1
    Eigen::VectorXd d = state.G * a;
    Eigen::VectorXd a1 = state.A * d;
    Eigen::VectorXd a2 = a - a1;
    state.flops += 2ull * std::uint64_t(n) * std::uint64_t(m);

    // one re-orthogonalization pass: for a column inside range(A) the first
    // residual is roundoff amplified by cond(A), which would flip the branch
    // decision; re-projecting collapses that noise quadratically
    a2 -= state.A * (state.G * a2);
    state.flops += 2ull * std::uint64_t(n) * std::uint64_t(m);

    Eigen::RowVectorXd b;
    if (a2.norm() > tau * a.norm()) {
        b = a2.transpose() / a2.squaredNorm();
        state.flops += 2ull * std::uint64_t(n);
    } else {
        b = (d.transpose() * state.G) / (1.0 + d.squaredNorm());
        state.flops += std::uint64_t(n) * std::uint64_t(m) + std::uint64_t(m);
    }

    Eigen::MatrixXd Gnew(m + 1, n);
    Gnew.topRows(m) = state.G - d * b;
    Gnew.row(m) = b;
    state.flops += std::uint64_t(n) * std::uint64_t(m);

    state.A.conservativeResize(n, m + 1);
    state.A.col(m) = a;
    state.G = std::move(Gnew);
}

void greville_append_row(PinvState& state, const Eigen::VectorXd& r, double tau) {
    if (r.size() != state.cols())
        throw std::invalid_argument("greville_append_row: row length mismatch");
    PinvState transposed;
    transposed.A = state.A.transpose();
    transposed.G = state.G.transpose();
    transposed.flops = state.flops;
    greville_append_column(transposed, r, tau);
    state.A = transposed.A.transpose();
    state.G = transposed.G.transpose();
    state.flops = transposed.flops;
}

Eigen::MatrixXd direct_pinv(const Eigen::MatrixXd& A) {
    if (A.size() == 0) return Eigen::MatrixXd(A.cols(), A.rows());
    Eigen::BDCSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd& sigma = svd.singularValues();
    const double cutoff = sigma.size() > 0 ? sigma[0] * 1e-12 : 0.0;
    Eigen::VectorXd inv_sigma = Eigen::VectorXd::Zero(sigma.size());
    for (int i = 0; i < sigma.size(); ++i)
        if (sigma[i] > cutoff) inv_sigma[i] = 1.0 / sigma[i];
    return svd.matrixV() * inv_sigma.asDiagonal() * svd.matrixU().transpose();
}

double penrose_deviation(const Eigen::MatrixXd& A, const Eigen::MatrixXd& G) {
    const Eigen::MatrixXd AG = A * G;
    const Eigen::MatrixXd GA = G * A;
    const double na = A.norm();
    const double ng = G.norm();
    double dev = (A * GA - A).norm() / (na > 0 ? na : 1.0);
    dev = std::max(dev, (G * AG - G).norm() / (ng > 0 ? ng : 1.0));
    dev = std::max(dev, (AG.transpose() - AG).norm() / (1.0 + AG.norm()));
    dev = std::max(dev, (GA.transpose() - GA).norm() / (1.0 + GA.norm()));
    return dev;
}

}  // namespace nippas
