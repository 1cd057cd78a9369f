#pragma once

#include "nippas/distributions.hpp"
#include "nippas/surrogate.hpp"

namespace nippas {

enum class MeasureKind { R, R_rho, R_star, R_EI };

MeasureKind measure_from_string(const std::string& s);
std::string to_string(MeasureKind kind);

/// Which scalar field drives refinement, together with its ingredients.
/// R      : ||Q R_v(z)||_2, built purely from QoI-projected term data.
/// R_rho  : rho(z) * R(z), requires a pdf.
/// R_star : ||Q (sum_l gamma_l L_l)^{-1} R_v(z)||_2, linear models with
///          explicit operators only; the surrogate must track full-space data.
/// R_EI   : ||sum_l gamma_l L_l vtilde(z) - S(z)||_2 from the full-solution
///          interpolant, linear models only.
/// All four are restricted to the domain by its indicator.
struct RefinementMeasure {
    MeasureKind kind = MeasureKind::R;
    const Domain* domain = nullptr;
    const BlackBoxModel* model = nullptr;
    const Pdf* pdf = nullptr;  // required for R_rho

    bool needs_full_space() const {
        return kind == MeasureKind::R_star || kind == MeasureKind::R_EI;
    }
};

/// Largest PDE size for which the scaled measures assemble and solve the full
/// operator at every evaluation.
inline constexpr int kMaxDenseSolveSize = 2000;

/// The signed QoI-projected residual vector Q R_v(z) =
/// sum_l gamma_l(z) * eval_term(state, l, z) - Q S(z).
Vector qoi_residual_vector(const RefinementMeasure& m, const SurrogateState& state,
                           const Vector& z);

/// The full-space residual R_v(z) (requires tracked full-space data).
Vector full_residual_vector(const RefinementMeasure& m, const SurrogateState& state,
                            const Vector& z);

/// Q (sum_l gamma_l(z) L_l)^{-1} R_v(z); by the error identity for linear
/// models this equals the signed surrogate error in the QoI.
Vector projected_inverse_residual(const RefinementMeasure& m, const SurrogateState& state,
                                  const Vector& z);

double eval_R(const RefinementMeasure& m, const SurrogateState& state, const Vector& z);
double eval_R_rho(const RefinementMeasure& m, const SurrogateState& state, const Vector& z);
double eval_R_star(const RefinementMeasure& m, const SurrogateState& state, const Vector& z);
double eval_R_EI(const RefinementMeasure& m, const SurrogateState& state, const Vector& z);

/// Dispatch on m.kind.
double eval_measure(const RefinementMeasure& m, const SurrogateState& state, const Vector& z);

}  // namespace nippas
