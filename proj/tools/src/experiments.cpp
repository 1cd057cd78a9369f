#include "experiments.hpp"

#include "artifacts.hpp"

#include "nippas/serialize.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace nippas::cli {

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

std::shared_ptr<ReferenceCache> open_cache(const std::string& signature) {
    auto cache = std::make_shared<ReferenceCache>();
    if (const char* dir = std::getenv("NIPPAS_CACHE_DIR")) {
        std::filesystem::create_directories(dir);
        cache->load(std::string(dir) + "/" + signature + ".cache");
    }
    return cache;
}

void close_cache(const ReferenceCache& cache, const std::string& signature) {
    if (const char* dir = std::getenv("NIPPAS_CACHE_DIR"))
        cache.save(std::string(dir) + "/" + signature + ".cache");
}

// (n_nodes, metric) pairs from the appended records of a history
std::vector<std::pair<int, double>> nodes_vs(const RunResult& result,
                                             double ConvergenceRecord::* metric) {
    std::vector<std::pair<int, double>> out;
    for (const ConvergenceRecord& rec : result.history)
        if (rec.appended) out.emplace_back(rec.n_nodes, rec.*metric);
    return out;
}

int nodes_to_threshold(const std::vector<std::pair<int, double>>& curve, double threshold) {
    for (const auto& [nodes, e] : curve)
        if (e < threshold) return nodes;
    return -1;
}

// rebuild the surrogate node by node and report the MC error after each
// prefix, for an arbitrary reference field
std::vector<double> replay_errors(const BlackBoxModel& model, const Domain& domain,
                                  const std::vector<Vector>& nodes,
                                  const VectorField& reference, int n_mc,
                                  std::uint64_t mc_seed, ReferenceCache& cache) {
    const std::vector<Vector> points = mc_points(domain, n_mc, mc_seed);
    SurrogateState state(domain.box());
    SampleSet set;
    std::vector<double> errors;
    for (const Vector& z : nodes) {
        add_node(state, set, z, model.sample(z));
        double total = 0.0;
        for (const Vector& p : points) total += (cache.get(p, reference) - eval_qoi(state, p)).norm();
        errors.push_back(total / points.size());
    }
    return errors;
}

void write_summary(const std::string& path, const std::vector<std::string>& lines) {
    std::ofstream out(path);
    for (const std::string& line : lines) out << line << "\n";
}

RunConfig base_run_config(const BlackBoxModel& model, const Domain& domain,
                          std::uint64_t seed) {
    RunConfig cfg;
    cfg.model = &model;
    cfg.domain = &domain;
    cfg.seed = seed;
    cfg.swarm.seed = seed * 977 + 13;
    return cfg;
}

// ---------------------------------------------------------------------------

int ssad_measures(const ExperimentOptions& opts) {
    const int n_pde = opts.full_scale ? 1000 : 200;
    const int max_nodes = opts.full_scale ? 60 : 40;
    std::vector<std::string> summary;

    for (ReProfile profile : {ReProfile::re1, ReProfile::re2, ReProfile::re3}) {
        SteadyAdvectionDiffusion model(profile, n_pde, QoiSpec::identity());
        Domain domain = Domain::hypercube(SteadyAdvectionDiffusion::parameter_box());
        auto cache = open_cache("ssad_" + to_string(profile) + "_" + std::to_string(n_pde));

        std::map<MeasureKind, RunResult> results;
        for (MeasureKind kind : {MeasureKind::R, MeasureKind::R_star}) {
            RunConfig cfg = base_run_config(model, domain, opts.seed);
            cfg.measure = kind;
            cfg.epsilon = 1e-12;
            cfg.max_nodes = max_nodes;
            cfg.errors.enabled = true;
            cfg.errors.n_mc = 2000;
            cfg.errors.cache = cache;
            results.emplace(kind, run(cfg));
            std::cout << "ssad-measures " << to_string(profile) << " " << to_string(kind)
                      << ": " << results.at(kind).samples.size() << " nodes, status "
                      << to_string(results.at(kind).status) << "\n";
        }

        auto curve_r = nodes_vs(results.at(MeasureKind::R), &ConvergenceRecord::e);
        auto curve_rs = nodes_vs(results.at(MeasureKind::R_star), &ConvergenceRecord::e);
        CsvWriter csv(opts.out_dir + "/ssad_measures_" + to_string(profile) + ".csv",
                      {"nodes", "e_R", "e_Rstar"});
        for (std::size_t i = 0; i < std::min(curve_r.size(), curve_rs.size()); ++i)
            csv.row({double(curve_r[i].first), curve_r[i].second, curve_rs[i].second});

        CsvWriter cdf(opts.out_dir + "/ssad_node_cdf_" + to_string(profile) + ".csv",
                      {"measure", "z", "cdf"});
        for (MeasureKind kind : {MeasureKind::R, MeasureKind::R_star}) {
            std::vector<double> zs;
            for (const Vector& z : results.at(kind).samples.nodes) zs.push_back(z[0]);
            std::sort(zs.begin(), zs.end());
            for (std::size_t i = 0; i < zs.size(); ++i)
                cdf.row_mixed({to_string(kind), CsvWriter::format(zs[i]),
                               CsvWriter::format((i + 1.0) / zs.size())});
        }

        summary.push_back(to_string(profile) + ": nodes_to_1e-6 R=" +
                          std::to_string(nodes_to_threshold(curve_r, 1e-6)) + " R*=" +
                          std::to_string(nodes_to_threshold(curve_rs, 1e-6)));
        close_cache(*cache, "ssad_" + to_string(profile) + "_" + std::to_string(n_pde));
    }
    write_summary(opts.out_dir + "/ssad_measures_summary.txt", summary);
    return 0;
}

int ssad_vs_ei(const ExperimentOptions& opts) {
    const int n_pde = opts.full_scale ? 1000 : 200;
    const int max_nodes = opts.full_scale ? 60 : 40;
    SteadyAdvectionDiffusion model(ReProfile::re1, n_pde, QoiSpec::select(n_pde / 2));
    Domain domain = Domain::hypercube(SteadyAdvectionDiffusion::parameter_box());
    auto cache = open_cache("ssad_ei_" + std::to_string(n_pde));

    CsvWriter csv(opts.out_dir + "/ssad_vs_ei.csv", {"seed", "measure", "nodes", "e"});
    std::map<MeasureKind, std::vector<int>> needed;
    for (int s = 0; s < 5; ++s) {
        for (MeasureKind kind : {MeasureKind::R, MeasureKind::R_EI}) {
            RunConfig cfg = base_run_config(model, domain, opts.seed + s);
            cfg.measure = kind;
            cfg.epsilon = 1e-13;
            cfg.max_nodes = max_nodes;
            cfg.errors.enabled = true;
            cfg.errors.n_mc = 2000;
            cfg.errors.cache = cache;
            RunResult result = run(cfg);
            auto curve = nodes_vs(result, &ConvergenceRecord::e);
            for (const auto& [nodes, e] : curve)
                csv.row_mixed({std::to_string(opts.seed + s), to_string(kind),
                               std::to_string(nodes), CsvWriter::format(e)});
            needed[kind].push_back(nodes_to_threshold(curve, 1e-6));
            std::cout << "ssad-vs-ei seed " << opts.seed + s << " " << to_string(kind)
                      << ": nodes_to_1e-6 = " << needed[kind].back() << "\n";
        }
    }

    std::vector<std::string> summary;
    for (const auto& [kind, counts] : needed) {
        double mean = 0.0;
        for (int c : counts) mean += c;
        summary.push_back("mean_nodes_to_1e-6 " + to_string(kind) + " = " +
                          std::to_string(mean / counts.size()));
    }
    write_summary(opts.out_dir + "/ssad_vs_ei_summary.txt", summary);
    close_cache(*cache, "ssad_ei_" + std::to_string(n_pde));
    return 0;
}

int uad_schemes(const ExperimentOptions& opts) {
    const int nx = opts.full_scale ? 256 : 64;
    const double dt = opts.full_scale ? 1e-5 : 1e-3;
    const int max_nodes = 40;
    Domain domain = Domain::hypercube(UnsteadyAdvectionDiffusion::parameter_box());

    for (TimeScheme scheme :
         {TimeScheme::backward_euler, TimeScheme::crank_nicolson, TimeScheme::rk4}) {
        UnsteadyAdvectionDiffusion model(scheme, nx, dt);
        RunConfig cfg = base_run_config(model, domain, opts.seed);
        cfg.epsilon = 1e-14;
        cfg.max_nodes = max_nodes;
        RunResult result = run(cfg);

        ReferenceCache discrete_cache;
        ReferenceCache exact_cache;
        auto discrete = [&model](const Vector& z) { return model.sample(z, false).qoi; };
        auto exact = [&model](const Vector& z) {
            return Vector::Constant(1, model.exact_qoi(z));
        };
        auto e_discrete = replay_errors(model, domain, result.samples.nodes, discrete, 2000,
                                        9001, discrete_cache);
        auto e_exact = replay_errors(model, domain, result.samples.nodes, exact, 2000, 9001,
                                     exact_cache);

        CsvWriter csv(opts.out_dir + "/uad_schemes_" + to_string(scheme) + ".csv",
                      {"nodes", "e_discrete", "e_exact"});
        for (std::size_t i = 0; i < e_discrete.size(); ++i)
            csv.row({double(i + 1), e_discrete[i], e_exact[i]});
        std::cout << "uad-schemes " << to_string(scheme) << ": final e_discrete = "
                  << e_discrete.back() << ", e_exact = " << e_exact.back() << "\n";
    }
    return 0;
}

int uad_pdf_study(const ExperimentOptions& opts) {
    const int nx = opts.full_scale ? 256 : 64;
    const double dt = opts.full_scale ? 1e-5 : 1e-3;
    const int max_nodes = 40;
    const int n_mc = opts.full_scale ? 5000 : 2000;

    UnsteadyAdvectionDiffusion model(TimeScheme::crank_nicolson, nx, dt);
    Domain domain = Domain::hypercube(UnsteadyAdvectionDiffusion::parameter_box());
    auto cache = open_cache("uad_cn_" + std::to_string(nx));

    std::vector<Pdf> grid = pdf_grid_625();
    const int count = opts.full_scale ? 625 : std::clamp(opts.pdf_count, 1, 625);
    const int stride = std::max<int>(1, 625 / count);

    std::map<MeasureKind, std::map<std::string, std::vector<std::vector<double>>>> series;
    int done = 0;
    for (int i = 0; i < 625 && done < count; i += stride, ++done) {
        const Pdf& pdf = grid[i];
        for (MeasureKind kind : {MeasureKind::R, MeasureKind::R_rho}) {
            RunConfig cfg = base_run_config(model, domain, opts.seed + done);
            cfg.measure = kind;
            cfg.pdf = &pdf;
            cfg.epsilon = 1e-14;
            cfg.max_nodes = max_nodes;
            cfg.errors.enabled = true;
            cfg.errors.moments = true;
            cfg.errors.n_mc = n_mc;
            cfg.errors.quad_points_per_axis = 100;
            cfg.errors.cache = cache;
            RunResult result = run(cfg);

            auto push = [&](const std::string& name, double ConvergenceRecord::* metric) {
                std::vector<double> column;
                for (const auto& [nodes, value] : nodes_vs(result, metric))
                    column.push_back(value);
                series[kind][name].push_back(std::move(column));
            };
            push("e", &ConvergenceRecord::e);
            push("e1", &ConvergenceRecord::e_rho_1);
            push("e2", &ConvergenceRecord::e_rho_2);
        }
        if ((done + 1) % 5 == 0)
            std::cout << "uad-pdf-study: " << done + 1 << "/" << count << " pdfs done\n";
    }

    for (const auto& [kind, metrics] : series) {
        for (const auto& [name, runs] : metrics) {
            EnsembleStats stats = ensemble_convergence(runs);
            CsvWriter csv(opts.out_dir + "/uad_pdf_" + name + "_" + to_string(kind) + ".csv",
                          {"nodes", "mean", "lo", "hi"});
            for (std::size_t i = 0; i < stats.length(); ++i)
                csv.row({double(i + 2), stats.mean[i], stats.lo[i], stats.hi[i]});
        }
    }
    close_cache(*cache, "uad_cn_" + std::to_string(nx));
    return 0;
}

int uad_domains(const ExperimentOptions& opts) {
    const int nx = opts.full_scale ? 256 : 64;
    const double dt = opts.full_scale ? 1e-5 : 1e-3;
    const int max_nodes = 60;

    UnsteadyAdvectionDiffusion model(TimeScheme::crank_nicolson, nx, dt);
    auto cache = open_cache("uad_cn_" + std::to_string(nx));

    for (const Domain& domain : {Domain::triangle(), Domain::disc(), Domain::holes()}) {
        Pdf uniform = Pdf::uniform(domain);
        RunConfig cfg = base_run_config(model, domain, opts.seed);
        cfg.pdf = &uniform;
        cfg.epsilon = 1e-13;
        cfg.max_nodes = max_nodes;
        cfg.errors.enabled = true;
        cfg.errors.n_mc = 2000;
        cfg.errors.cache = cache;
        RunResult result = run(cfg);

        const std::string tag = to_string(domain.kind());
        CsvWriter csv(opts.out_dir + "/uad_domains_" + tag + ".csv", {"nodes", "e"});
        for (const auto& [nodes, e] : nodes_vs(result, &ConvergenceRecord::e))
            csv.row({double(nodes), e});
        write_nodes_csv(opts.out_dir + "/uad_domains_nodes_" + tag + ".csv", result.samples);
        std::cout << "uad-domains " << tag << ": " << result.samples.size()
                  << " nodes, final e = " << result.history.back().e << "\n";
    }
    close_cache(*cache, "uad_cn_" + std::to_string(nx));
    return 0;
}

int swe_dambreak_study(const ExperimentOptions& opts) {
    const int n_cells = opts.full_scale ? 2000 : 500;
    const int max_nodes = 60;
    const int quad = opts.full_scale ? 100 : 60;

    SweDambreak model(n_cells, 0.45);
    Domain domain = Domain::simplex2d();
    Pdf pdf = Pdf::dirichlet({5.0, 2.0, 2.0});
    auto cache = open_cache("swe_" + std::to_string(n_cells));

    for (MeasureKind kind : {MeasureKind::R, MeasureKind::R_rho}) {
        RunConfig cfg = base_run_config(model, domain, opts.seed);
        cfg.measure = kind;
        cfg.pdf = &pdf;
        cfg.epsilon = 1e-12;
        cfg.max_nodes = max_nodes;
        cfg.errors.enabled = true;
        cfg.errors.moments = true;
        cfg.errors.n_mc = 2000;
        cfg.errors.quad_points_per_axis = quad;
        cfg.errors.cache = cache;
        RunResult result = run(cfg);

        CsvWriter csv(opts.out_dir + "/swe_convergence_" + to_string(kind) + ".csv",
                      {"nodes", "e", "e1", "e2"});
        for (const ConvergenceRecord& rec : result.history)
            if (rec.appended) csv.row({double(rec.n_nodes), rec.e, rec.e_rho_1, rec.e_rho_2});

        CsvWriter nodes(opts.out_dir + "/swe_nodes_" + to_string(kind) + ".csv",
                        {"s1", "s2", "g", "h_l", "v_l"});
        for (const Vector& s : result.samples.nodes) {
            Eigen::Vector3d p = model.chart().to_ambient(s);
            nodes.row({s[0], s[1], p[0], p[1], p[2]});
        }
        std::cout << "swe-dambreak " << to_string(kind) << ": " << result.samples.size()
                  << " nodes, final e_rho_1 = " << result.history.back().e_rho_1 << "\n";
    }
    close_cache(*cache, "swe_" + std::to_string(n_cells));
    return 0;
}

}  // namespace

const std::vector<std::string>& experiment_names() {
    static const std::vector<std::string> names = {"ssad-measures", "ssad-vs-ei",
                                                   "uad-schemes",   "uad-pdf-study",
                                                   "uad-domains",   "swe-dambreak"};
    return names;
}

int experiment_command(const std::string& name, const ExperimentOptions& opts) {
    std::filesystem::create_directories(opts.out_dir);
    Timer timer;
    int code = 0;
    if (name == "ssad-measures")
        code = ssad_measures(opts);
    else if (name == "ssad-vs-ei")
        code = ssad_vs_ei(opts);
    else if (name == "uad-schemes")
        code = uad_schemes(opts);
    else if (name == "uad-pdf-study")
        code = uad_pdf_study(opts);
    else if (name == "uad-domains")
        code = uad_domains(opts);
    else if (name == "swe-dambreak")
        code = swe_dambreak_study(opts);
    else {
        std::cerr << "unknown experiment '" << name << "'; valid names:";
        for (const std::string& n : experiment_names()) std::cerr << " " << n;
        std::cerr << "\n";
        return 1;
    }
    std::cout << name << " finished in " << timer.seconds() << " s -> " << opts.out_dir
              << "\n";
    return code;
}

}  // namespace nippas::cli
