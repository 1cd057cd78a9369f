#include "nippas/surrogate.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace nippas {

namespace {

void append_row(Eigen::MatrixXd& m, const Vector& row) {
    m.conservativeResize(m.rows() + 1, row.size());
    m.row(m.rows() - 1) = row;
}

}  // namespace

double SampleSet::nearest_distance(const Vector& z, int* index) const {
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < size(); ++i) {
        const double d = (nodes[i] - z).norm();
        if (d < best) {
            best = d;
            if (index) *index = i;
        }
    }
    return best;
}

duplicate_node_error::duplicate_node_error(const Vector& nearest_node, double dist)
    : std::runtime_error("duplicate node: distance " + std::to_string(dist) +
                         " to an existing node"),
      nearest(nearest_node),
      distance(dist) {}

double SurrogateState::cond_estimate() const {
    if (num_nodes() == 0) return 1.0;
    return pinv.A.norm() * pinv.G.norm();
}

void add_node(SurrogateState& state, SampleSet& set, const Vector& z_new,
              const BlackBoxSample& sample, double dup_tol) {
    if (z_new.size() != state.basis.dim())
        throw std::invalid_argument("add_node: node dimension mismatch");

    int nearest_idx = -1;
    const double dist = set.nearest_distance(z_new, &nearest_idx);
    if (set.size() > 0 && dist <= dup_tol)
        throw duplicate_node_error(set.nodes[nearest_idx], dist);

    const int n_terms = static_cast<int>(sample.term_values.size());
    const bool with_full = set.track_full;
    if (with_full && sample.full_solution.size() == 0)
        throw std::invalid_argument("add_node: full-space data requested but absent from sample");

    if (set.size() == 0) {
        set.terms.resize(n_terms);
        if (with_full) set.full_terms.resize(n_terms);
        state.coeff_terms.resize(n_terms);
        if (with_full) state.coeff_full_terms.resize(n_terms);
    }

    // grow the basis and the Vandermonde system
    if (state.num_nodes() == 0) {
        state.basis.indices.push_back(next_index(state.basis));
        state.pinv.A = Eigen::MatrixXd::Constant(1, 1, 1.0);  // phi_0 = 1
        state.pinv.G = Eigen::MatrixXd::Constant(1, 1, 1.0);
    } else {
        const MultiIndex mi = next_index(state.basis);
        Vector new_col(set.size());
        for (int i = 0; i < set.size(); ++i)
            new_col[i] = eval_basis_fn(mi, state.basis.box, set.nodes[i]);
        state.basis.indices.push_back(mi);
        greville_append_column(state.pinv, new_col);
        greville_append_row(state.pinv, basis_row(state.basis, z_new));
    }

    set.nodes.push_back(z_new);
    append_row(set.qoi, sample.qoi);
    for (int l = 0; l < n_terms; ++l) append_row(set.terms[l], sample.term_values[l]);
    if (with_full) {
        append_row(set.full_solution, sample.full_solution);
        for (int l = 0; l < n_terms; ++l)
            append_row(set.full_terms[l], sample.full_term_values[l]);
    }

    // refresh all coefficient sets from the updated pseudo-inverse
    state.coeff_qoi = state.pinv.G * set.qoi;
    for (int l = 0; l < n_terms; ++l) state.coeff_terms[l] = state.pinv.G * set.terms[l];
    if (with_full) {
        state.coeff_full_solution = state.pinv.G * set.full_solution;
        for (int l = 0; l < n_terms; ++l)
            state.coeff_full_terms[l] = state.pinv.G * set.full_terms[l];
    }
}

namespace {

Vector eval_dataset(const SurrogateState& state, const Eigen::MatrixXd& coeff,
                    const Vector& z) {
    if (state.num_nodes() == 0)
        throw std::logic_error("surrogate evaluation requires at least one node");
    return coeff.transpose() * basis_row(state.basis, z);
}

}  // namespace

Vector eval_qoi(const SurrogateState& state, const Vector& z) {
    return eval_dataset(state, state.coeff_qoi, z);
}

Vector eval_term(const SurrogateState& state, int l, const Vector& z) {
    if (l < 0 || l >= static_cast<int>(state.coeff_terms.size()))
        throw std::invalid_argument("eval_term: term index out of range");
    return eval_dataset(state, state.coeff_terms[l], z);
}

Vector eval_full_solution(const SurrogateState& state, const Vector& z) {
    if (state.coeff_full_solution.size() == 0)
        throw std::logic_error("eval_full_solution: full-space data not tracked");
    return eval_dataset(state, state.coeff_full_solution, z);
}

Vector eval_full_term(const SurrogateState& state, int l, const Vector& z) {
    if (l < 0 || l >= static_cast<int>(state.coeff_full_terms.size()) ||
        state.coeff_full_terms[l].size() == 0)
        throw std::logic_error("eval_full_term: full-space data not tracked");
    return eval_dataset(state, state.coeff_full_terms[l], z);
}

}  // namespace nippas
