#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nippas::cli {

struct ExperimentOptions {
    std::string out_dir = "out";
    bool full_scale = false;
    int pdf_count = 25;  // ensemble size for the pdf study (625 at full scale)
    std::uint64_t seed = 1;
};

const std::vector<std::string>& experiment_names();

/// Runs one named study and writes its CSV artifacts; returns an exit code.
int experiment_command(const std::string& name, const ExperimentOptions& opts);

}  // namespace nippas::cli
