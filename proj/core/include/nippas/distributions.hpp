#pragma once

#include "nippas/geometry.hpp"

#include <array>
#include <random>
#include <vector>

namespace nippas {

enum class PdfKind { uniform, beta_product, dirichlet };

/// Probability density on the random space. Densities are normalized over
/// their support; evaluation outside the support returns 0. Sampling takes an
/// explicit RNG so callers own all randomness.
class Pdf {
public:
    /// Uniform over a (possibly non-hypercube) domain, density 1/|D|.
    static Pdf uniform(Domain support);

    /// Per-axis product of scaled beta-type densities on a hypercube box:
    ///   rho(z) = prod_i c_i s_i^alpha_i (1 - s_i)^beta_i,
    /// with s_i = (z_i - lo_i)/(hi_i - lo_i) and c_i fixing unit mass per
    /// axis. The exponents are used as given, not shifted by one.
    static Pdf beta_product(BoundingBox box, std::vector<double> alpha,
                            std::vector<double> beta);

    /// Dirichlet with shape (a1, a2, a3), expressed in the 2D chart
    /// coordinates (s1, s2) of the unit triangle; barycentric coordinates are
    /// (s1, s2, 1 - s1 - s2). Normalized with respect to ds1 ds2, so the
    /// chart Jacobian of any affine embedding is absorbed by normalization.
    static Pdf dirichlet(std::array<double, 3> alpha);

    double density(const Vector& z) const;
    Vector sample(std::mt19937_64& rng) const;

    PdfKind kind() const { return kind_; }
    const Domain& support() const { return support_; }
    int dim() const { return support_.dim(); }
    const std::vector<double>& alpha() const { return alpha_; }
    const std::vector<double>& beta() const { return beta_; }

private:
    Pdf(PdfKind kind, Domain support);

    PdfKind kind_;
    Domain support_;
    std::vector<double> alpha_;
    std::vector<double> beta_;
    std::vector<double> axis_norm_;  // per-axis constants c_i (beta_product)
    double dirichlet_norm_ = 1.0;
};

/// All 625 per-axis shape combinations (alpha_i, beta_i) in {1..5}^2 for a 2D
/// beta_product family on [0, 2pi]^2; ordered lexicographically in
/// (alpha_1, beta_1, alpha_2, beta_2) starting from all ones.
std::vector<Pdf> pdf_grid_625();

/// Uniform draw from a domain by rejection against the indicator. Throws if
/// the observed acceptance rate degenerates (below ~1e-6).
Vector sample_uniform(const Domain& domain, std::mt19937_64& rng);

}  // namespace nippas
