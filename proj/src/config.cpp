#include "holefill/config.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "holefill/errors.hpp"

namespace holefill {

void RunConfig::validate() const {
    if (!(small_factor > 0))
        throw ConfigError("small_factor must be > 0");
    if (!(small_factor < medium_factor))
        throw ConfigError("small_factor must be < medium_factor");
    if (!(fracture_cos >= -1 && fracture_cos <= 1))
        throw ConfigError("fracture_cos must lie in [-1, 1]");
    if (smooth_iterations < 0)
        throw ConfigError("smooth_iterations must be >= 0");
    if (!(ring_merge_radius_factor > 0 && ring_merge_radius_factor < 1))
        throw ConfigError("ring_merge_radius_factor must lie in (0, 1)");
    if (sampling.mode == SamplingMode::VerticesPlusFaceSamples &&
        sampling.total_budget == 0 && !(sampling.samples_per_avg_area > 0))
        throw ConfigError("samples_per_avg_area must be > 0");
    if (sampling.total_budget < 0)
        throw ConfigError("total_budget must be >= 0");
    if (sampling.max_samples <= 0)
        throw ConfigError("max_samples must be > 0");
}

namespace {

double to_double(const std::string& key, const std::string& value) {
    const char* begin = value.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0')
        throw ConfigError("config key '" + key + "' needs a number, got '" + value + "'");
    return v;
}

long to_long(const std::string& key, const std::string& value) {
    const char* begin = value.c_str();
    char* end = nullptr;
    long v = std::strtol(begin, &end, 10);
    if (end == begin || *end != '\0')
        throw ConfigError("config key '" + key + "' needs an integer, got '" + value + "'");
    return v;
}

std::uint64_t to_u64(const std::string& key, const std::string& value) {
    const char* begin = value.c_str();
    char* end = nullptr;
    unsigned long long v = std::strtoull(begin, &end, 10);
    if (end == begin || *end != '\0' || value[0] == '-')
        throw ConfigError("config key '" + key + "' needs a non-negative integer, got '" + value +
                          "'");
    return v;
}

bool to_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    throw ConfigError("config key '" + key + "' needs true/false, got '" + value + "'");
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    RunConfig c;
    std::string raw;
    while (std::getline(in, raw)) {
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.resize(hash);
        std::string line = trim(raw);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line without '=': '" + line + "'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));

        if (key == "small_factor") c.small_factor = to_double(key, value);
        else if (key == "medium_factor") c.medium_factor = to_double(key, value);
        else if (key == "fracture_cos") c.fracture_cos = to_double(key, value);
        else if (key == "smooth_iterations") c.smooth_iterations = static_cast<int>(to_long(key, value));
        else if (key == "ring_merge_radius_factor") c.ring_merge_radius_factor = to_double(key, value);
        else if (key == "open_surface") c.open_surface = to_bool(key, value);
        else if (key == "sampling_mode") {
            if (value == "vertices") c.sampling.mode = SamplingMode::VerticesOnly;
            else if (value == "vertices+faces") c.sampling.mode = SamplingMode::VerticesPlusFaceSamples;
            else throw ConfigError("sampling_mode must be 'vertices' or 'vertices+faces'");
        } else if (key == "samples_per_avg_area") c.sampling.samples_per_avg_area = to_double(key, value);
        else if (key == "total_budget") c.sampling.total_budget = to_long(key, value);
        else if (key == "max_samples") c.sampling.max_samples = to_long(key, value);
        else if (key == "seed") c.seed = to_u64(key, value);
        else throw ConfigError("unknown config key '" + key + "'");
    }
    c.validate();
    return c;
}

void save_config(const RunConfig& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write config file '" + path + "'");
    char buf[64];
    auto num = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return std::string(buf);
    };
    out << "small_factor = " << num(c.small_factor) << "\n"
        << "medium_factor = " << num(c.medium_factor) << "\n"
        << "fracture_cos = " << num(c.fracture_cos) << "\n"
        << "smooth_iterations = " << c.smooth_iterations << "\n"
        << "ring_merge_radius_factor = " << num(c.ring_merge_radius_factor) << "\n"
        << "open_surface = " << (c.open_surface ? "true" : "false") << "\n"
        << "sampling_mode = "
        << (c.sampling.mode == SamplingMode::VerticesOnly ? "vertices" : "vertices+faces") << "\n"
        << "samples_per_avg_area = " << num(c.sampling.samples_per_avg_area) << "\n"
        << "total_budget = " << c.sampling.total_budget << "\n"
        << "max_samples = " << c.sampling.max_samples << "\n"
        << "seed = " << c.seed << "\n";
    if (!out) throw ConfigError("failed writing config file '" + path + "'");
}

}  // namespace holefill
