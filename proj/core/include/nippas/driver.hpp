#pragma once

#include "nippas/analysis.hpp"
#include "nippas/optimizer.hpp"
#include "nippas/residual.hpp"

#include <limits>
#include <memory>
#include <optional>
#include <string>

namespace nippas {

/// Optional per-iteration error metrics against the model's own discrete
/// solution (or a caller-supplied reference). Reference values are cached by
/// exact node location, so repeated evaluation points are solved once.
struct ErrorTracking {
    bool enabled = false;
    int n_mc = 2000;
    std::uint64_t mc_seed = 9001;
    bool moments = false;          // e_rho^(1), e_rho^(2)
    int quad_points_per_axis = 100;
    VectorField reference;         // defaults to the model itself
    std::shared_ptr<ReferenceCache> cache;  // shared across runs when set
};

struct RunConfig {
    const BlackBoxModel* model = nullptr;
    const Domain* domain = nullptr;
    const Pdf* pdf = nullptr;  // initial draw + R_rho weighting; uniform if null
    MeasureKind measure = MeasureKind::R;
    /// Stopping threshold; NaN selects the adaptive default
    /// 1e-8 * (1 + max |u| observed).
    double epsilon = std::numeric_limits<double>::quiet_NaN();
    int max_nodes = 60;
    /// Duplicate-node guard, relative to the box diameter.
    double dup_tol_rel = 1e-8;
    SwarmConfig swarm;
    std::uint64_t seed = 1;
    ErrorTracking errors;
};

enum class RunStatus { converged, budget_exhausted, stalled, model_failure };

std::string to_string(RunStatus status);

/// One refinement iteration: the swarm maximum that selected the next node
/// (appended = false only for the terminal record of a run that stopped
/// without sampling). Error metrics are NaN unless tracking is enabled.
struct ConvergenceRecord {
    int iter = 0;
    int n_nodes = 0;
    Vector z;
    double residual_max = 0.0;
    bool appended = false;
    double e = std::numeric_limits<double>::quiet_NaN();
    double e_rho_1 = std::numeric_limits<double>::quiet_NaN();
    double e_rho_2 = std::numeric_limits<double>::quiet_NaN();
    bool cond_warning = false;
};

struct RunResult {
    SurrogateState state;
    SampleSet samples;
    std::vector<ConvergenceRecord> history;
    RunStatus status = RunStatus::converged;
    std::string log;
    double epsilon_used = 0.0;
};

/// The adaptive sampling loop: one random initial node, then greedy
/// refinement at the global maximum of the chosen measure until the measure
/// drops below epsilon, the node budget is reached, or the swarm returns a
/// point indistinguishable from an existing node.
RunResult run(const RunConfig& cfg);

/// Number of nodes whose given coordinate lies within `fraction` of either
/// box edge (edge points included).
int boundary_clustering_stat(const SampleSet& set, const BoundingBox& box, double fraction,
                             int axis = 0);

}  // namespace nippas
