#pragma once

#include "nippas/geometry.hpp"

#include <cstdint>
#include <functional>

namespace nippas {

/// Particle swarm parameters. Zeros select the dimension-scaled defaults:
/// 100 d particles, 200 d iterations, 20 d stall window. The coefficient
/// defaults are the standard constriction values.
struct SwarmConfig {
    int n_particles = 0;
    int max_iters = 0;
    double inertia = 0.729;
    double cognitive = 1.49445;
    double social = 1.49445;
    std::uint64_t seed = 0;
    int stall_iters = 0;
    double stall_rel_tol = 1e-12;

    int particles_for(int dim) const { return n_particles > 0 ? n_particles : 100 * dim; }
    int iters_for(int dim) const { return max_iters > 0 ? max_iters : 200 * dim; }
    int stall_for(int dim) const { return stall_iters > 0 ? stall_iters : 20 * dim; }
};

struct SwarmResult {
    Vector z_max;
    double f_max = 0.0;
    std::int64_t evals = 0;
    int iters = 0;
};

/// Global maximization of a nonnegative, possibly non-smooth objective over a
/// box. Particles start uniformly in the box, velocities are clamped to the
/// box widths, positions clipped to the box. Terminates at the iteration cap
/// or when the best value stalls. Deterministic for a fixed seed; ties keep
/// the first maximizer encountered. Throws if f returns a non-finite value.
SwarmResult maximize(const std::function<double(const Vector&)>& f, const BoundingBox& box,
                     const SwarmConfig& cfg);

}  // namespace nippas
