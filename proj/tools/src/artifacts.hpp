#pragma once

#include "config.hpp"

#include "nippas/driver.hpp"

#include <string>
#include <vector>

namespace nippas::cli {

inline constexpr const char* kArtifactVersion = "1.0.0";

/// CSV writer: header row, comma separation, floats in scientific notation
/// with 17 significant digits.
class CsvWriter {
public:
    CsvWriter(const std::string& path, const std::vector<std::string>& header);
    ~CsvWriter();

    void row(const std::vector<double>& values);
    void row_mixed(const std::vector<std::string>& values);
    static std::string format(double v);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

void write_history_csv(const std::string& path, const RunResult& result);
void write_nodes_csv(const std::string& path, const SampleSet& samples);

/// manifest.ini: artifact version, normalized config echo (replayable as a
/// config), output paths, seeds, status and timing.
void write_manifest(const std::string& path, const Config& normalized_config,
                    const std::vector<std::pair<std::string, std::string>>& outputs,
                    const RunResult& result, double runtime_seconds);

/// `run` subcommand body; returns the process exit code
/// (0 converged/budget, 2 stalled, 1 error).
int run_command(const std::string& config_path, const std::string& out_dir,
                long seed_override);

/// `eval` subcommand body: evaluate a surrogate dump at points from a CSV.
int eval_command(const std::string& surrogate_path, const std::string& points_path,
                 const std::string& out_path);

}  // namespace nippas::cli
