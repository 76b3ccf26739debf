// config.hpp — run-wide tunables shared by fill, metrics, harness, and the CLI.
#pragma once

#include <cstdint>
#include <string>

namespace holefill {

enum class SamplingMode { VerticesOnly, VerticesPlusFaceSamples };

struct SamplingSpec {
    SamplingMode mode = SamplingMode::VerticesPlusFaceSamples;
    // Face samples per average-triangle area; ignored when total_budget > 0.
    double samples_per_avg_area = 10.0;
    long total_budget = 0;
    long max_samples = 2000000;
};

struct RunConfig {
    double small_factor = 1.5;
    double medium_factor = 2.5;
    double fracture_cos = 0.7;
    int smooth_iterations = 3;
    double ring_merge_radius_factor = 0.5;
    bool open_surface = false;
    SamplingSpec sampling;
    std::uint64_t seed = 1;

    // Throws ConfigError when a field is out of range.
    void validate() const;
};

// Flat key=value file; '#' comments. Unknown keys are errors, missing keys
// keep their defaults. save_config writes every field, so a load of a saved
// file reproduces the config exactly.
RunConfig load_config(const std::string& path);
void save_config(const RunConfig& config, const std::string& path);

}  // namespace holefill
