#ifndef IRA_CORE_CONFIG_HPP
#define IRA_CORE_CONFIG_HPP

#include <cstdint>
#include <string>

#include "core/degree_dist.hpp"

namespace ira {

// Tool configuration, persisted as JSON. Unknown keys are rejected, ranges
// validated on load, defaults filled in.
struct Config {
    EnsembleKind ensemble = EnsembleKind::check_regular;
    int q = 3;              // bit-regular repetition degree
    double p = 0.5;         // design erasure probability
    double epsilon = 0.1;   // capacity gap
    int n_max = 10000;      // coefficient depth cap
    int oracle_depth = 256; // reversion oracle depth cap
    int grid_size = 10000;  // DE grid
    std::uint64_t seed = 1;
    int threads = 1;
    int doping_count = 150;
    std::string out;        // output path ("" = stdout)

    bool operator==(const Config&) const = default;

    std::string to_json() const;
    static Config from_json(const std::string& text);
    static Config load(const std::string& path);
    void save(const std::string& path) const;
    void validate() const;  // throws validation_error naming the field
};

}  // namespace ira

#endif
