#include "nippas/optimizer.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace nippas {

namespace {

[[noreturn]] void throw_non_finite(const Vector& z) {
    std::ostringstream os;
    os << "maximize: objective returned a non-finite value at z = (";
    for (int i = 0; i < z.size(); ++i) os << (i ? ", " : "") << z[i];
    os << ")";
    throw std::runtime_error(os.str());
}

}  // namespace

SwarmResult maximize(const std::function<double(const Vector&)>& f, const BoundingBox& box,
                     const SwarmConfig& cfg) {
    const int d = box.dim();
    const int n = cfg.particles_for(d);
    const int max_iters = cfg.iters_for(d);
    const int stall_window = cfg.stall_for(d);
    if (n < 2) throw std::invalid_argument("maximize: need at least 2 particles");

    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    std::vector<Vector> pos(n), vel(n), best_pos(n);
    std::vector<double> best_val(n);

    SwarmResult result;
    result.z_max = Vector::Zero(d);
    result.f_max = -std::numeric_limits<double>::infinity();

    for (int p = 0; p < n; ++p) {
        pos[p] = Vector(d);
        for (int i = 0; i < d; ++i) pos[p][i] = box.lo[i] + box.width(i) * unit(rng);
        vel[p] = Vector::Zero(d);
        const double v = f(pos[p]);
        ++result.evals;
        if (!std::isfinite(v)) throw_non_finite(pos[p]);
        best_pos[p] = pos[p];
        best_val[p] = v;
        if (v > result.f_max) {
            result.f_max = v;
            result.z_max = pos[p];
        }
    }

    int stall = 0;
    for (int iter = 0; iter < max_iters; ++iter) {
        const double previous_best = result.f_max;
        for (int p = 0; p < n; ++p) {
            for (int i = 0; i < d; ++i) {
                const double r1 = unit(rng);
                const double r2 = unit(rng);
                double v = cfg.inertia * vel[p][i] +
                           cfg.cognitive * r1 * (best_pos[p][i] - pos[p][i]) +
                           cfg.social * r2 * (result.z_max[i] - pos[p][i]);
                const double vmax = box.width(i);
                vel[p][i] = std::clamp(v, -vmax, vmax);
                pos[p][i] = std::clamp(pos[p][i] + vel[p][i], box.lo[i], box.hi[i]);
            }
            const double value = f(pos[p]);
            ++result.evals;
            if (!std::isfinite(value)) throw_non_finite(pos[p]);
            if (value > best_val[p]) {
                best_val[p] = value;
                best_pos[p] = pos[p];
            }
            if (value > result.f_max) {
                result.f_max = value;
                result.z_max = pos[p];
            }
        }
        result.iters = iter + 1;

        const double improvement = result.f_max - previous_best;
        if (improvement <= cfg.stall_rel_tol * std::max(1.0, std::abs(result.f_max)))
            ++stall;
        else
            stall = 0;
        if (stall >= stall_window) break;
    }
    return result;
}

}  // namespace nippas
