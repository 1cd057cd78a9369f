#include "nippas/driver.hpp"

#include <cmath>
#include <sstream>

namespace nippas {

std::string to_string(RunStatus status) {
    switch (status) {
        case RunStatus::converged: return "converged";
        case RunStatus::budget_exhausted: return "budget";
        case RunStatus::stalled: return "stalled";
        case RunStatus::model_failure: return "model_failure";
    }
    return "?";
}

namespace {

constexpr double kCondWarnThreshold = 1e8;

std::uint64_t swarm_seed_for(std::uint64_t base, int iter) {
    // splitmix-style stream per refinement iteration
    std::uint64_t x = base + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(iter + 1);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27;
    return x;
}

class MetricEvaluator {
public:
    MetricEvaluator(const RunConfig& cfg) : cfg_(cfg) {
        if (!cfg_.errors.enabled) return;
        cache_ = cfg_.errors.cache ? cfg_.errors.cache : std::make_shared<ReferenceCache>();
        reference_ = cfg_.errors.reference
                         ? cfg_.errors.reference
                         : VectorField([model = cfg_.model](const Vector& z) {
                               return model->sample(z).qoi;
                           });
        points_ = mc_points(*cfg_.domain, cfg_.errors.n_mc, cfg_.errors.mc_seed);
        if (cfg_.errors.moments) {
            rule_ = tensor_rule(cfg_.domain->box(), cfg_.errors.quad_points_per_axis);
            moment_pdf_ = cfg_.pdf;
            if (!moment_pdf_) {
                owned_pdf_ = std::make_unique<Pdf>(Pdf::uniform(*cfg_.domain));
                moment_pdf_ = owned_pdf_.get();
            }
        }
    }

    void fill(ConvergenceRecord& rec, const SurrogateState& state) {
        if (!cfg_.errors.enabled) return;
        auto cached_ref = [this](const Vector& z) -> Vector {
            return cache_->get(z, reference_);
        };
        auto surrogate = [&state](const Vector& z) { return eval_qoi(state, z); };

        double total = 0.0;
        for (const Vector& z : points_) total += (cached_ref(z) - surrogate(z)).norm();
        rec.e = total / static_cast<double>(points_.size());

        if (cfg_.errors.moments) {
            rec.e_rho_1 = moment_error(1, surrogate, cached_ref, *moment_pdf_, rule_);
            rec.e_rho_2 = moment_error(2, surrogate, cached_ref, *moment_pdf_, rule_);
        }
    }

private:
    const RunConfig& cfg_;
    std::shared_ptr<ReferenceCache> cache_;
    VectorField reference_;
    std::vector<Vector> points_;
    QuadratureRule rule_;
    const Pdf* moment_pdf_ = nullptr;
    std::unique_ptr<Pdf> owned_pdf_;
};

}  // namespace

RunResult run(const RunConfig& cfg) {
    if (!cfg.model || !cfg.domain)
        throw std::invalid_argument("run: model and domain are required");
    if (cfg.model->dim() != cfg.domain->dim())
        throw std::invalid_argument("run: model/domain dimension mismatch");
    if (cfg.max_nodes < 1) throw std::invalid_argument("run: max_nodes must be >= 1");
    if (!std::isnan(cfg.epsilon) && !(cfg.epsilon > 0.0))
        throw std::invalid_argument("run: epsilon must be positive");
    if (cfg.measure == MeasureKind::R_rho && !cfg.pdf)
        throw std::invalid_argument("run: R_rho requires a pdf");

    RefinementMeasure measure{cfg.measure, cfg.domain, cfg.model, cfg.pdf};
    const bool with_full = measure.needs_full_space();

    RunResult result{SurrogateState(cfg.domain->box()), SampleSet{}, {}, RunStatus::converged,
                     "", 0.0};
    result.samples.track_full = with_full;
    std::ostringstream log;

    const double dup_tol = cfg.dup_tol_rel * cfg.domain->box().diameter();
    MetricEvaluator metrics(cfg);

    // initial node: one random draw
    std::mt19937_64 rng(cfg.seed);
    Vector z0 = cfg.pdf ? cfg.pdf->sample(rng) : sample_uniform(*cfg.domain, rng);
    double max_abs_u = 0.0;
    try {
        BlackBoxSample sample = cfg.model->sample(z0, with_full);
        max_abs_u = std::max(max_abs_u, sample.qoi.cwiseAbs().maxCoeff());
        add_node(result.state, result.samples, z0, sample, dup_tol);
    } catch (const std::exception& err) {
        result.status = RunStatus::model_failure;
        log << "black-box failure at the initial node: " << err.what() << "\n";
        result.log = log.str();
        return result;
    }

    for (int iter = 1;; ++iter) {
        const double epsilon =
            std::isnan(cfg.epsilon) ? 1e-8 * (1.0 + max_abs_u) : cfg.epsilon;
        result.epsilon_used = epsilon;

        SwarmConfig swarm = cfg.swarm;
        swarm.seed = swarm_seed_for(cfg.swarm.seed, iter);
        auto objective = [&](const Vector& z) {
            return eval_measure(measure, result.state, z);
        };
        const SwarmResult found = maximize(objective, cfg.domain->box(), swarm);

        ConvergenceRecord rec;
        rec.iter = iter;
        rec.z = found.z_max;
        rec.residual_max = found.f_max;
        rec.cond_warning = result.state.cond_estimate() > kCondWarnThreshold;
        if (rec.cond_warning)
            log << "iteration " << iter << ": conditioning estimate "
                << result.state.cond_estimate()
                << " exceeds 1e8; coefficients fall back to least-squares semantics\n";

        if (found.f_max < epsilon) {
            rec.n_nodes = result.samples.size();
            rec.appended = false;
            metrics.fill(rec, result.state);
            result.history.push_back(std::move(rec));
            result.status = RunStatus::converged;
            break;
        }
        if (result.samples.size() >= cfg.max_nodes) {
            rec.n_nodes = result.samples.size();
            rec.appended = false;
            metrics.fill(rec, result.state);
            result.history.push_back(std::move(rec));
            result.status = RunStatus::budget_exhausted;
            break;
        }
        if (result.samples.nearest_distance(found.z_max) <= dup_tol) {
            rec.n_nodes = result.samples.size();
            rec.appended = false;
            metrics.fill(rec, result.state);
            result.history.push_back(std::move(rec));
            result.status = RunStatus::stalled;
            log << "iteration " << iter
                << ": swarm maximum within the duplicate guard of an existing node; "
                   "residual landscape is flat at tolerance level\n";
            break;
        }

        try {
            BlackBoxSample sample = cfg.model->sample(found.z_max, with_full);
            max_abs_u = std::max(max_abs_u, sample.qoi.cwiseAbs().maxCoeff());
            add_node(result.state, result.samples, found.z_max, sample, dup_tol);
        } catch (const std::exception& err) {
            result.status = RunStatus::model_failure;
            log << "black-box failure at iteration " << iter << ": " << err.what() << "\n";
            rec.n_nodes = result.samples.size();
            rec.appended = false;
            result.history.push_back(std::move(rec));
            break;
        }
        rec.n_nodes = result.samples.size();
        rec.appended = true;
        metrics.fill(rec, result.state);
        result.history.push_back(std::move(rec));
    }

    result.log = log.str();
    return result;
}

int boundary_clustering_stat(const SampleSet& set, const BoundingBox& box, double fraction,
                             int axis) {
    if (axis < 0 || axis >= box.dim())
        throw std::invalid_argument("boundary_clustering_stat: axis out of range");
    const double band = fraction * box.width(axis);
    int count = 0;
    for (const Vector& z : set.nodes)
        if (z[axis] - box.lo[axis] <= band || box.hi[axis] - z[axis] <= band) ++count;
    return count;
}

}  // namespace nippas
