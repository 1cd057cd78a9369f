#pragma once

#include "nippas/distributions.hpp"
#include "nippas/geometry.hpp"

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace nippas {

/// n-point Gauss-Legendre rule on [a, b]; exact through degree 2n-1.
/// Nodes/weights by Newton iteration on the Legendre recurrence.
std::pair<Vector, Vector> gauss_legendre(int n, double a, double b);

/// Tensorized Gauss-Legendre rule over a bounding box.
struct QuadratureRule {
    std::vector<Vector> axis_nodes;
    std::vector<Vector> axis_weights;

    int dim() const { return static_cast<int>(axis_nodes.size()); }
    std::int64_t num_points() const;
    /// Visits every tensor point with its weight.
    void for_each(const std::function<void(const Vector&, double)>& fn) const;
};

QuadratureRule tensor_rule(const BoundingBox& box, int points_per_axis);

using VectorField = std::function<Vector(const Vector&)>;

/// || integral of rho(z) (u(z)^k - u_tilde(z)^k) dz ||_2 with element-wise
/// powers, integrated by the tensor rule over the pdf's support box. The pdf
/// density vanishing off the support restricts the integrand; evaluation is
/// skipped where the density is exactly zero.
double moment_error(int k, const VectorField& surrogate, const VectorField& reference,
                    const Pdf& pdf, const QuadratureRule& rule);

/// (1/N_MC) sum ||u(z_i) - u_tilde(z_i)||_2 over uniform draws from the
/// domain (rejection sampling for non-hypercube supports). Deterministic for
/// a fixed seed.
double mc_error(const VectorField& surrogate, const VectorField& reference,
                const Domain& domain, int n_mc, std::uint64_t seed);

/// The uniform draws mc_error uses, exposed so callers can pre-warm caches.
std::vector<Vector> mc_points(const Domain& domain, int n_mc, std::uint64_t seed);

/// Per-iteration mean and [min, max] envelope over runs of one metric
/// series; rows are truncated to the shortest run. Throws on empty input.
struct EnsembleStats {
    std::vector<double> mean;
    std::vector<double> lo;
    std::vector<double> hi;
    std::size_t length() const { return mean.size(); }
};

EnsembleStats ensemble_convergence(const std::vector<std::vector<double>>& runs);

}  // namespace nippas
