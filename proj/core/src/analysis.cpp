#include "nippas/analysis.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace nippas {

std::pair<Vector, Vector> gauss_legendre(int n, double a, double b) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
    Vector nodes(n), weights(n);

    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Chebyshev-based initial guess, then Newton on P_n
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            dp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = x;
        weights[i] = w;
        nodes[n - 1 - i] = -x;
        weights[n - 1 - i] = w;
    }

    // affine map [-1,1] -> [a,b]
    const double mid = 0.5 * (a + b);
    const double scale = 0.5 * (b - a);
    for (int i = 0; i < n; ++i) {
        nodes[i] = mid - scale * nodes[i];
        weights[i] *= scale;
    }
    return {nodes, weights};
}

std::int64_t QuadratureRule::num_points() const {
    std::int64_t count = 1;
    for (const Vector& nodes : axis_nodes) count *= nodes.size();
    return count;
}

void QuadratureRule::for_each(const std::function<void(const Vector&, double)>& fn) const {
    const int d = dim();
    std::vector<int> idx(d, 0);
    Vector z(d);
    while (true) {
        double w = 1.0;
        for (int i = 0; i < d; ++i) {
            z[i] = axis_nodes[i][idx[i]];
            w *= axis_weights[i][idx[i]];
        }
        fn(z, w);
        int axis = d - 1;
        while (axis >= 0 && ++idx[axis] == axis_nodes[axis].size()) {
            idx[axis] = 0;
            --axis;
        }
        if (axis < 0) break;
    }
}

QuadratureRule tensor_rule(const BoundingBox& box, int points_per_axis) {
    QuadratureRule rule;
    for (int i = 0; i < box.dim(); ++i) {
        auto [nodes, weights] = gauss_legendre(points_per_axis, box.lo[i], box.hi[i]);
        rule.axis_nodes.push_back(std::move(nodes));
        rule.axis_weights.push_back(std::move(weights));
    }
    return rule;
}

namespace {

Vector elementwise_power(const Vector& v, int k) {
    if (k == 1) return v;
    Vector out = v;
    for (int i = 0; i < out.size(); ++i) out[i] = std::pow(v[i], k);
    return out;
}

}  // namespace

double moment_error(int k, const VectorField& surrogate, const VectorField& reference,
                    const Pdf& pdf, const QuadratureRule& rule) {
    if (k < 1) throw std::invalid_argument("moment_error: moment order must be >= 1");
    Vector integral;
    rule.for_each([&](const Vector& z, double w) {
        const double rho = pdf.density(z);
        if (rho == 0.0) return;
        const Vector diff =
            elementwise_power(reference(z), k) - elementwise_power(surrogate(z), k);
        if (integral.size() == 0) integral = Vector::Zero(diff.size());
        integral += (w * rho) * diff;
    });
    return integral.size() == 0 ? 0.0 : integral.norm();
}

std::vector<Vector> mc_points(const Domain& domain, int n_mc, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Vector> points;
    points.reserve(n_mc);
    for (int i = 0; i < n_mc; ++i) points.push_back(sample_uniform(domain, rng));
    return points;
}

double mc_error(const VectorField& surrogate, const VectorField& reference,
                const Domain& domain, int n_mc, std::uint64_t seed) {
    if (n_mc < 1) throw std::invalid_argument("mc_error: n_mc must be >= 1");
    double total = 0.0;
    for (const Vector& z : mc_points(domain, n_mc, seed))
        total += (reference(z) - surrogate(z)).norm();
    return total / n_mc;
}

EnsembleStats ensemble_convergence(const std::vector<std::vector<double>>& runs) {
    if (runs.empty()) throw std::invalid_argument("ensemble_convergence: no runs given");
    std::size_t len = runs.front().size();
    for (const auto& r : runs) len = std::min(len, r.size());

    EnsembleStats stats;
    stats.mean.resize(len);
    stats.lo.resize(len);
    stats.hi.resize(len);
    for (std::size_t i = 0; i < len; ++i) {
        double sum = 0.0;
        double lo = runs.front()[i], hi = runs.front()[i];
        for (const auto& r : runs) {
            sum += r[i];
            lo = std::min(lo, r[i]);
            hi = std::max(hi, r[i]);
        }
        stats.mean[i] = sum / runs.size();
        stats.lo[i] = lo;
        stats.hi[i] = hi;
    }
    return stats;
}

}  // namespace nippas
