#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "evacsim/world.hpp"

namespace evacsim {

/// One experiment definition, as read from a scenario file.
///
/// File grammar (one directive per line):
///   key = value          # '#' starts a comment, blank lines are ignored
///
/// Keys:
///   name         scenario id (defaults to the file stem); feeds seed derivation
///   grid_width   cells, default 55
///   grid_height  cells, default 55
///   occupants    default 1000
///   exit         slot:widthPU, repeatable, one line per exit slot
///   seeds        comma-separated explicit run seeds
///   master_seed  derive one seed per repetition (default 1); mutually
///   repetitions  exclusive with `seeds` (default 5)
///   max_ticks    abort threshold, 0 = engine default
///
/// Unknown or duplicate keys are rejected.
struct ScenarioConfig {
    std::string name;
    int grid_width = 55;
    int grid_height = 55;
    int occupants = 1000;
    std::vector<ExitSpec> exits;
    std::vector<std::uint64_t> seeds; // explicit seeds; empty means derive
    std::uint64_t master_seed = 1;
    int repetitions = 5;
    long max_ticks = 0;

    /// The run seeds: the explicit list if given, otherwise one derived seed
    /// per repetition from (master_seed, name, repetition index).
    std::vector<std::uint64_t> resolved_seeds() const;

    ExitLayout layout() const { return ExitLayout(exits, grid_width, grid_height); }
    GridWorld build_world() const { return GridWorld::build(grid_width, grid_height, layout()); }

    bool operator==(const ScenarioConfig&) const = default;
};

/// Parses scenario text. ParseError carries the offending line number,
/// ValidationError the offending field.
ScenarioConfig parse_scenario_text(const std::string& text, const std::string& default_name);

/// Reads and parses one scenario file; the default name is the file stem.
ScenarioConfig parse_scenario_file(const std::string& path);

/// Inverse of parsing: parse_scenario_text(serialize_scenario(c), c.name) == c.
std::string serialize_scenario(const ScenarioConfig& config);

} // namespace evacsim
