#pragma once

#include "nippas/driver.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace nippas::cli {

/// Flat INI-style configuration: `key = value` lines under `[section]`
/// headers, `#`/`;` comments. Sections and keys are validated against the
/// known schema; diagnostics name the offending key.
class Config {
public:
    static Config parse_file(const std::string& path);
    static Config parse_text(const std::string& text, const std::string& origin = "<string>");

    bool has(const std::string& section, const std::string& key) const;
    std::string get(const std::string& section, const std::string& key,
                    const std::string& fallback) const;
    double get_double(const std::string& section, const std::string& key,
                      double fallback) const;
    long get_long(const std::string& section, const std::string& key, long fallback) const;
    bool get_bool(const std::string& section, const std::string& key, bool fallback) const;
    std::vector<double> get_list(const std::string& section, const std::string& key) const;

    void set(const std::string& section, const std::string& key, const std::string& value);
    const std::map<std::string, std::map<std::string, std::string>>& sections() const {
        return data_;
    }

    /// Throws if a section or key is outside the run-config schema.
    void validate_run_schema() const;

private:
    [[noreturn]] void fail(const std::string& section, const std::string& key,
                           const std::string& reason) const;
    std::map<std::string, std::map<std::string, std::string>> data_;
    std::string origin_;
};

/// A fully materialized run: the owned model/domain/pdf objects plus the
/// driver configuration pointing at them.
struct RunSetup {
    std::unique_ptr<BlackBoxModel> model;
    std::unique_ptr<Domain> domain;
    std::unique_ptr<Pdf> pdf;
    RunConfig run;
};

RunSetup build_setup(const Config& cfg);

/// Normalized config echo (the manifest embeds it so a manifest file can be
/// fed back to `run` unchanged).
Config normalize(const Config& cfg);

}  // namespace nippas::cli
