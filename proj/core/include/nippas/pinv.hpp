#pragma once

#include <Eigen/Core>

#include <cstdint>

namespace nippas {

/// A matrix together with its Moore-Penrose pseudo-inverse, maintained
/// incrementally under column/row appends via Greville's recursion.
struct PinvState {
    Eigen::MatrixXd A;  // n x m
    Eigen::MatrixXd G;  // m x n, pseudo-inverse of A
    /// Running multiply-add tally of the incremental updates (cost audits).
    std::uint64_t flops = 0;

    int rows() const { return static_cast<int>(A.rows()); }
    int cols() const { return static_cast<int>(A.cols()); }
};

/// Relative threshold deciding the a2 = 0 branch of the Greville update: the
/// branch is taken when ||a - AGa|| <= tau * ||a||.
inline constexpr double kGrevilleZeroTol = 1e-10;

/// Initialize a state from a dense matrix (pseudo-inverse via SVD).
PinvState make_pinv_state(const Eigen::MatrixXd& A);

/// A' = [A a]; G updated in O(rows*cols) multiply-adds.
void greville_append_column(PinvState& state, const Eigen::VectorXd& a,
                            double tau = kGrevilleZeroTol);

/// A' = [A; r^T], realized as transpose -> column append -> transpose.
void greville_append_row(PinvState& state, const Eigen::VectorXd& r,
                         double tau = kGrevilleZeroTol);

/// Dense Moore-Penrose pseudo-inverse by SVD; singular values below
/// sigma_max * 1e-12 are truncated. Oracle and fallback.
Eigen::MatrixXd direct_pinv(const Eigen::MatrixXd& A);

/// Worst relative violation of the four Penrose conditions of (A, G).
double penrose_deviation(const Eigen::MatrixXd& A, const Eigen::MatrixXd& G);

}  // namespace nippas
