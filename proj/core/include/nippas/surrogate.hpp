#pragma once

#include "nippas/basis.hpp"
#include "nippas/models.hpp"
#include "nippas/pinv.hpp"

#include <stdexcept>
#include <vector>

namespace nippas {

/// Adaptive nodes with everything the black box returned there. All row
/// counts stay equal to the node count; the node list is append-only.
struct SampleSet {
    std::vector<Vector> nodes;
    Eigen::MatrixXd qoi;                       // N x N_QoI
    std::vector<Eigen::MatrixXd> terms;        // per operator term, N x N_QoI
    Eigen::MatrixXd source;                    // N x N_QoI, only if sampled
    Eigen::MatrixXd full_solution;             // N x N_PDE when tracked
    std::vector<Eigen::MatrixXd> full_terms;   // per term, N x N_PDE
    bool track_full = false;

    int size() const { return static_cast<int>(nodes.size()); }
    /// Distance to the nearest stored node (infinity when empty).
    double nearest_distance(const Vector& z, int* index = nullptr) const;
};

struct duplicate_node_error : std::runtime_error {
    duplicate_node_error(const Vector& nearest_node, double dist);
    Vector nearest;
    double distance;
};

/// Interpolation state over a SampleSet: graded-lex Chebyshev basis (one
/// function per node), the Vandermonde matrix with its live pseudo-inverse,
/// and coefficient matrices for the QoI and every dataset sharing the nodes.
struct SurrogateState {
    BasisSpec basis;
    PinvState pinv;                                  // A_{ij} = phi_j(z_i)
    Eigen::MatrixXd coeff_qoi;                       // n x N_QoI
    std::vector<Eigen::MatrixXd> coeff_terms;        // per term, n x N_QoI
    Eigen::MatrixXd coeff_full_solution;             // n x N_PDE when tracked
    std::vector<Eigen::MatrixXd> coeff_full_terms;   // per term, n x N_PDE

    explicit SurrogateState(BoundingBox basis_box) : basis(std::move(basis_box)) {}
    int num_nodes() const { return basis.size(); }
    /// cond(A) proxy: ||A||_F * ||G||_F.
    double cond_estimate() const;
};

/// Append one node: duplicate guard, basis growth by the next graded-lex
/// index, Vandermonde column+row appends with two Greville updates, and
/// coefficient refresh as G * data for every dataset.
void add_node(SurrogateState& state, SampleSet& set, const Vector& z_new,
              const BlackBoxSample& sample, double dup_tol = 0.0);

Vector eval_qoi(const SurrogateState& state, const Vector& z);
Vector eval_term(const SurrogateState& state, int l, const Vector& z);
Vector eval_full_solution(const SurrogateState& state, const Vector& z);
Vector eval_full_term(const SurrogateState& state, int l, const Vector& z);

}  // namespace nippas
