#include "nippas/distributions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace nippas {

namespace {

// log Beta(a, b)
double log_beta(double a, double b) {
    return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

}  // namespace

Pdf::Pdf(PdfKind kind, Domain support) : kind_(kind), support_(std::move(support)) {}

Pdf Pdf::uniform(Domain support) {
    return Pdf(PdfKind::uniform, std::move(support));
}

Pdf Pdf::beta_product(BoundingBox box, std::vector<double> alpha, std::vector<double> beta) {
    const int d = box.dim();
    if (static_cast<int>(alpha.size()) != d || static_cast<int>(beta.size()) != d)
        throw std::invalid_argument("Pdf::beta_product: shape/box dimension mismatch");
    for (int i = 0; i < d; ++i)
        if (!(alpha[i] > 0.0) || !(beta[i] > 0.0))
            throw std::invalid_argument("Pdf::beta_product: shape parameters must be positive");

    Pdf pdf(PdfKind::beta_product, Domain::hypercube(box));
    pdf.alpha_ = std::move(alpha);
    pdf.beta_ = std::move(beta);
    pdf.axis_norm_.resize(d);
    for (int i = 0; i < d; ++i) {
        // int_lo^hi s^a (1-s)^b dz = w * Beta(a+1, b+1) with s = (z-lo)/w
        const double w = pdf.support_.box().width(i);
        pdf.axis_norm_[i] = 1.0 / (w * std::exp(log_beta(pdf.alpha_[i] + 1.0, pdf.beta_[i] + 1.0)));
    }
    return pdf;
}

Pdf Pdf::dirichlet(std::array<double, 3> alpha) {
    for (double a : alpha)
        if (!(a > 0.0))
            throw std::invalid_argument("Pdf::dirichlet: shape parameters must be positive");
    Pdf pdf(PdfKind::dirichlet, Domain::simplex2d());
    pdf.alpha_.assign(alpha.begin(), alpha.end());
    double log_norm = std::lgamma(alpha[0] + alpha[1] + alpha[2]);
    for (double a : alpha) log_norm -= std::lgamma(a);
    pdf.dirichlet_norm_ = std::exp(log_norm);
    return pdf;
}

double Pdf::density(const Vector& z) const {
    if (z.size() != dim()) throw std::invalid_argument("Pdf::density: dimension mismatch");
    if (!support_.contains(z)) return 0.0;
    switch (kind_) {
        case PdfKind::uniform:
            return 1.0 / support_.volume();
        case PdfKind::beta_product: {
            double rho = 1.0;
            const BoundingBox& box = support_.box();
            for (int i = 0; i < dim(); ++i) {
                const double s = (z[i] - box.lo[i]) / box.width(i);
                rho *= axis_norm_[i] * std::pow(s, alpha_[i]) * std::pow(1.0 - s, beta_[i]);
            }
            return rho;
        }
        case PdfKind::dirichlet: {
            const double b[3] = {z[0], z[1], 1.0 - z[0] - z[1]};
            double rho = dirichlet_norm_;
            for (int i = 0; i < 3; ++i) rho *= std::pow(b[i], alpha_[i] - 1.0);
            return rho;
        }
    }
    return 0.0;
}

Vector Pdf::sample(std::mt19937_64& rng) const {
    switch (kind_) {
        case PdfKind::uniform:
            return sample_uniform(support_, rng);
        case PdfKind::beta_product: {
            Vector z(dim());
            const BoundingBox& box = support_.box();
            for (int i = 0; i < dim(); ++i) {
                // beta draw with the density's effective exponents
                std::gamma_distribution<double> ga(alpha_[i] + 1.0, 1.0);
                std::gamma_distribution<double> gb(beta_[i] + 1.0, 1.0);
                const double x = ga(rng);
                const double y = gb(rng);
                z[i] = box.lo[i] + box.width(i) * x / (x + y);
            }
            return z;
        }
        case PdfKind::dirichlet: {
            double g[3];
            double sum = 0.0;
            for (int i = 0; i < 3; ++i) {
                std::gamma_distribution<double> dist(alpha_[i], 1.0);
                g[i] = dist(rng);
                sum += g[i];
            }
            Vector s(2);
            s << g[0] / sum, g[1] / sum;
            return s;
        }
    }
    throw std::logic_error("Pdf::sample: unreachable");
}

std::vector<Pdf> pdf_grid_625() {
    Vector lo(2), hi(2);
    lo << 0.0, 0.0;
    hi << 2.0 * std::numbers::pi, 2.0 * std::numbers::pi;
    BoundingBox box(lo, hi);

    std::vector<Pdf> grid;
    grid.reserve(625);
    for (int a1 = 1; a1 <= 5; ++a1)
        for (int b1 = 1; b1 <= 5; ++b1)
            for (int a2 = 1; a2 <= 5; ++a2)
                for (int b2 = 1; b2 <= 5; ++b2)
                    grid.push_back(Pdf::beta_product(
                        box, {double(a1), double(a2)}, {double(b1), double(b2)}));
    return grid;
}

Vector sample_uniform(const Domain& domain, std::mt19937_64& rng) {
    const BoundingBox& box = domain.box();
    Vector z(domain.dim());
    // 2e6 consecutive rejections corresponds to an acceptance rate safely
    // below the 1e-6 degeneracy threshold
    constexpr long kMaxRejections = 2'000'000;
    for (long attempt = 0; attempt < kMaxRejections; ++attempt) {
        for (int i = 0; i < domain.dim(); ++i) {
            std::uniform_real_distribution<double> u(box.lo[i], box.hi[i]);
            z[i] = u(rng);
        }
        if (domain.contains(z)) return z;
    }
    throw std::runtime_error("sample_uniform: degenerate domain (acceptance rate below 1e-6)");
}

}  // namespace nippas
