#include "nippas/residual.hpp"

#include <Eigen/SparseLU>

#include <stdexcept>

namespace nippas {

MeasureKind measure_from_string(const std::string& s) {
    if (s == "R") return MeasureKind::R;
    if (s == "R_rho" || s == "Rrho") return MeasureKind::R_rho;
    if (s == "R_star" || s == "Rstar") return MeasureKind::R_star;
    if (s == "R_EI" || s == "REI") return MeasureKind::R_EI;
    throw std::invalid_argument("unknown refinement measure: " + s);
}

std::string to_string(MeasureKind kind) {
    switch (kind) {
        case MeasureKind::R: return "R";
        case MeasureKind::R_rho: return "R_rho";
        case MeasureKind::R_star: return "R_star";
        case MeasureKind::R_EI: return "R_EI";
    }
    return "?";
}

namespace {

void check_common(const RefinementMeasure& m, const SurrogateState& state, const Vector& z) {
    if (!m.domain || !m.model) throw std::invalid_argument("measure: domain and model required");
    if (state.num_nodes() < 1) throw std::logic_error("measure: surrogate has no nodes");
    if (!m.domain->box().inside(z))
        throw std::invalid_argument("measure: point outside the bounding box");
}

void check_linear(const RefinementMeasure& m) {
    if (!m.model->linear())
        throw std::invalid_argument("measure: " + to_string(m.kind) +
                                    " requires a linear model with explicit operators");
    if (m.model->pde_size() > kMaxDenseSolveSize)
        throw std::invalid_argument("measure: PDE size exceeds the full-solve guard");
}

// sum_l gamma_l(z) L_l as a sparse matrix
Eigen::SparseMatrix<double> assemble_operator(const BlackBoxModel& model, const Vector& z) {
    Eigen::SparseMatrix<double> op = model.coefficient(0, z) * model.operator_matrix(0);
    for (int l = 1; l < model.num_terms(); ++l)
        op += model.coefficient(l, z) * model.operator_matrix(l);
    return op;
}

}  // namespace

Vector qoi_residual_vector(const RefinementMeasure& m, const SurrogateState& state,
                           const Vector& z) {
    const BlackBoxModel& model = *m.model;
    Vector r = -model.qoi_source(z);
    for (int l = 0; l < model.num_terms(); ++l)
        r += model.coefficient(l, z) * eval_term(state, l, z);
    return r;
}

Vector full_residual_vector(const RefinementMeasure& m, const SurrogateState& state,
                            const Vector& z) {
    const BlackBoxModel& model = *m.model;
    Vector r = -model.full_source(z);
    for (int l = 0; l < model.num_terms(); ++l)
        r += model.coefficient(l, z) * eval_full_term(state, l, z);
    return r;
}

Vector projected_inverse_residual(const RefinementMeasure& m, const SurrogateState& state,
                                  const Vector& z) {
    const BlackBoxModel& model = *m.model;
    Eigen::SparseMatrix<double> op = assemble_operator(model, z);
    op.makeCompressed();
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu(op);
    if (lu.info() != Eigen::Success)
        throw std::runtime_error("measure: assembled operator is singular at this point");
    return model.apply_qoi_map(lu.solve(full_residual_vector(m, state, z)));
}

double eval_R(const RefinementMeasure& m, const SurrogateState& state, const Vector& z) {
    check_common(m, state, z);
    if (m.kind != MeasureKind::R)
        throw std::invalid_argument("eval_R: measure kind mismatch");
    if (!m.domain->contains(z)) return 0.0;
    return qoi_residual_vector(m, state, z).norm();
}

double eval_R_rho(const RefinementMeasure& m, const SurrogateState& state, const Vector& z) {
    check_common(m, state, z);
    if (m.kind != MeasureKind::R_rho)
        throw std::invalid_argument("eval_R_rho: measure kind mismatch");
    if (!m.pdf) throw std::invalid_argument("eval_R_rho: pdf required");
    if (!m.domain->contains(z)) return 0.0;
    const double rho = m.pdf->density(z);
    if (rho == 0.0) return 0.0;
    return rho * qoi_residual_vector(m, state, z).norm();
}

double eval_R_star(const RefinementMeasure& m, const SurrogateState& state, const Vector& z) {
    check_common(m, state, z);
    if (m.kind != MeasureKind::R_star)
        throw std::invalid_argument("eval_R_star: measure kind mismatch");
    check_linear(m);
    if (!m.domain->contains(z)) return 0.0;
    return projected_inverse_residual(m, state, z).norm();
}

double eval_R_EI(const RefinementMeasure& m, const SurrogateState& state, const Vector& z) {
    check_common(m, state, z);
    if (m.kind != MeasureKind::R_EI)
        throw std::invalid_argument("eval_R_EI: measure kind mismatch");
    check_linear(m);
    if (!m.domain->contains(z)) return 0.0;

    // classic empirical interpolation: apply the explicit operators to the
    // interpolated full solution, so the full space plays the role of the QoI
    const BlackBoxModel& model = *m.model;
    const Vector v_tilde = eval_full_solution(state, z);
    Vector r = -model.full_source(z);
    for (int l = 0; l < model.num_terms(); ++l)
        r += model.coefficient(l, z) * (model.operator_matrix(l) * v_tilde);
    return r.norm();
}

double eval_measure(const RefinementMeasure& m, const SurrogateState& state, const Vector& z) {
    switch (m.kind) {
        case MeasureKind::R: return eval_R(m, state, z);
        case MeasureKind::R_rho: return eval_R_rho(m, state, z);
        case MeasureKind::R_star: return eval_R_star(m, state, z);
        case MeasureKind::R_EI: return eval_R_EI(m, state, z);
    }
    throw std::logic_error("eval_measure: unreachable");
}

}  // namespace nippas
