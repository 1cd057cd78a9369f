#include "artifacts.hpp"

#include "nippas/serialize.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace nippas::cli {

struct CsvWriter::Impl {
    std::ofstream out;
};

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& header)
    : impl_(std::make_unique<Impl>()) {
    impl_->out.open(path);
    if (!impl_->out) throw std::runtime_error("csv: cannot write '" + path + "'");
    for (std::size_t i = 0; i < header.size(); ++i)
        impl_->out << (i ? "," : "") << header[i];
    impl_->out << "\n";
}

CsvWriter::~CsvWriter() = default;

std::string CsvWriter::format(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17e", v);
    return buf;
}

void CsvWriter::row(const std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i)
        impl_->out << (i ? "," : "") << format(values[i]);
    impl_->out << "\n";
}

void CsvWriter::row_mixed(const std::vector<std::string>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) impl_->out << (i ? "," : "") << values[i];
    impl_->out << "\n";
}

void write_history_csv(const std::string& path, const RunResult& result) {
    const int d = result.state.basis.dim();
    std::vector<std::string> header = {"iter",    "n_nodes", "appended", "residual_max",
                                       "e",       "e_rho_1", "e_rho_2",  "cond_warning"};
    for (int i = 0; i < d; ++i) header.push_back("z" + std::to_string(i));

    CsvWriter csv(path, header);
    for (const ConvergenceRecord& rec : result.history) {
        std::vector<std::string> row = {std::to_string(rec.iter),
                                        std::to_string(rec.n_nodes),
                                        rec.appended ? "1" : "0",
                                        CsvWriter::format(rec.residual_max),
                                        CsvWriter::format(rec.e),
                                        CsvWriter::format(rec.e_rho_1),
                                        CsvWriter::format(rec.e_rho_2),
                                        rec.cond_warning ? "1" : "0"};
        for (int i = 0; i < d; ++i) row.push_back(CsvWriter::format(rec.z[i]));
        csv.row_mixed(row);
    }
}

void write_nodes_csv(const std::string& path, const SampleSet& samples) {
    if (samples.size() == 0) return;
    const int d = static_cast<int>(samples.nodes.front().size());
    std::vector<std::string> header;
    for (int i = 0; i < d; ++i) header.push_back("z" + std::to_string(i));
    for (int j = 0; j < samples.qoi.cols(); ++j) header.push_back("u" + std::to_string(j));

    CsvWriter csv(path, header);
    for (int i = 0; i < samples.size(); ++i) {
        std::vector<double> row;
        for (int a = 0; a < d; ++a) row.push_back(samples.nodes[i][a]);
        for (int j = 0; j < samples.qoi.cols(); ++j) row.push_back(samples.qoi(i, j));
        csv.row(row);
    }
}

void write_manifest(const std::string& path, const Config& normalized_config,
                    const std::vector<std::pair<std::string, std::string>>& outputs,
                    const RunResult& result, double runtime_seconds) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("manifest: cannot write '" + path + "'");
    out << "[artifact]\nversion = " << kArtifactVersion << "\n\n";
    for (const auto& [section, keys] : normalized_config.sections()) {
        out << "[" << section << "]\n";
        for (const auto& [key, value] : keys) out << key << " = " << value << "\n";
        out << "\n";
    }
    out << "[outputs]\n";
    for (const auto& [key, file] : outputs) out << key << " = " << file << "\n";
    out << "\n[result]\n";
    out << "status = " << to_string(result.status) << "\n";
    out << "nodes = " << result.samples.size() << "\n";
    out << "epsilon_used = " << CsvWriter::format(result.epsilon_used) << "\n";
    out << "runtime_seconds = " << runtime_seconds << "\n";
}

int run_command(const std::string& config_path, const std::string& out_dir,
                long seed_override) {
    Config cfg = Config::parse_file(config_path);
    if (seed_override >= 0) cfg.set("run", "seed", std::to_string(seed_override));
    RunSetup setup = build_setup(cfg);

    std::filesystem::create_directories(out_dir);
    const auto start = std::chrono::steady_clock::now();
    RunResult result = run(setup.run);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    const std::string history_path = out_dir + "/history.csv";
    const std::string nodes_path = out_dir + "/nodes.csv";
    const std::string dump_path = out_dir + "/surrogate.txt";
    const std::string manifest_path = out_dir + "/manifest.ini";

    write_history_csv(history_path, result);
    write_nodes_csv(nodes_path, result.samples);
    if (result.samples.size() > 0) save_surrogate_file(dump_path, result.state);
    write_manifest(manifest_path, normalize(cfg),
                   {{"history", history_path},
                    {"nodes", nodes_path},
                    {"surrogate", dump_path},
                    {"manifest", manifest_path}},
                   result, seconds);

    std::cout << "status: " << to_string(result.status) << "\n"
              << "nodes: " << result.samples.size() << "\n"
              << "epsilon_used: " << result.epsilon_used << "\n"
              << "outputs: " << out_dir << "\n";
    if (!result.log.empty()) std::cout << "log:\n" << result.log;

    switch (result.status) {
        case RunStatus::converged:
        case RunStatus::budget_exhausted: return 0;
        case RunStatus::stalled: return 2;
        case RunStatus::model_failure: return 1;
    }
    return 1;
}

int eval_command(const std::string& surrogate_path, const std::string& points_path,
                 const std::string& out_path) {
    LoadedSurrogate surrogate = load_surrogate_file(surrogate_path);
    const int d = surrogate.basis.dim();

    std::ifstream in(points_path);
    if (!in) throw std::runtime_error("eval: cannot open points file '" + points_path + "'");

    std::vector<Vector> points;
    std::string line;
    while (std::getline(in, line)) {
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream row(line);
        std::vector<double> values;
        double v;
        while (row >> v) values.push_back(v);
        if (values.empty()) {
            // header or blank line; only tolerated before any data
            if (points.empty()) continue;
            break;
        }
        if (static_cast<int>(values.size()) != d)
            throw std::runtime_error("eval: point dimension " + std::to_string(values.size()) +
                                     " does not match the surrogate dimension " +
                                     std::to_string(d));
        Vector z(d);
        for (int i = 0; i < d; ++i) z[i] = values[i];
        points.push_back(z);
    }

    std::vector<std::string> header;
    for (int i = 0; i < d; ++i) header.push_back("z" + std::to_string(i));
    for (int j = 0; j < surrogate.coeff_qoi.cols(); ++j)
        header.push_back("u" + std::to_string(j));
    CsvWriter csv(out_path, header);
    for (const Vector& z : points) {
        Vector u = surrogate.eval(z);
        std::vector<double> row;
        for (int i = 0; i < d; ++i) row.push_back(z[i]);
        for (int j = 0; j < u.size(); ++j) row.push_back(u[j]);
        csv.row(row);
    }
    std::cout << "evaluated " << points.size() << " points -> " << out_path << "\n";
    return 0;
}

}  // namespace nippas::cli
