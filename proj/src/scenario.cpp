#include "evacsim/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "evacsim/rng.hpp"

namespace evacsim {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

long parse_long(const std::string& value, int line, const std::string& key) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(value, &used);
    } catch (const std::exception&) {
        throw ParseError(line, "value of '" + key + "' is not an integer: '" + value + "'");
    }
    if (used != value.size())
        throw ParseError(line, "trailing junk in value of '" + key + "': '" + value + "'");
    return v;
}

std::uint64_t parse_u64(const std::string& value, int line, const std::string& key) {
    if (value.empty() || value[0] == '-')
        throw ParseError(line, "value of '" + key + "' is not a non-negative integer: '" + value + "'");
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
        v = std::stoull(value, &used);
    } catch (const std::exception&) {
        throw ParseError(line, "value of '" + key + "' is not a non-negative integer: '" + value + "'");
    }
    if (used != value.size())
        throw ParseError(line, "trailing junk in value of '" + key + "': '" + value + "'");
    return v;
}

void validate(const ScenarioConfig& c, bool seeds_given, bool master_given, bool reps_given) {
    if (c.name.empty())
        throw ValidationError("name", "scenario name must not be empty");
    if (c.name.find_first_of("#\n\r") != std::string::npos)
        throw ValidationError("name", "scenario name must not contain '#' or line breaks");
    if (c.grid_width < 3 || c.grid_height < 3)
        throw ValidationError("grid_width",
                              "grid must be at least 3x3 cells, got " +
                                  std::to_string(c.grid_width) + "x" + std::to_string(c.grid_height));
    long interior = static_cast<long>(c.grid_width - 2) * (c.grid_height - 2);
    if (c.occupants < 0)
        throw ValidationError("occupants", "occupant count must be >= 0");
    if (c.occupants > interior)
        throw ValidationError("occupants", std::to_string(c.occupants) + " occupants exceed the " +
                                               std::to_string(interior) + " interior cells");
    if (seeds_given && (master_given || reps_given))
        throw ValidationError("seeds", "'seeds' excludes 'master_seed' and 'repetitions'");
    if (seeds_given && c.seeds.empty())
        throw ValidationError("seeds", "explicit seed list must not be empty");
    if (c.repetitions < 1)
        throw ValidationError("repetitions", "need at least 1 repetition");
    if (c.max_ticks < 0)
        throw ValidationError("max_ticks", "max_ticks must be >= 0");
    ExitLayout layout;
    try {
        layout = ExitLayout(c.exits, c.grid_width, c.grid_height);
    } catch (const Error& e) {
        throw ValidationError("exit", e.what());
    }
    if (layout.open_exit_count() == 0)
        throw ValidationError("exit", "scenario needs at least one open exit");
}

} // namespace

std::vector<std::uint64_t> ScenarioConfig::resolved_seeds() const {
    if (!seeds.empty())
        return seeds;
    std::vector<std::uint64_t> out;
    out.reserve(static_cast<std::size_t>(repetitions));
    for (int rep = 0; rep < repetitions; ++rep)
        out.push_back(derive_run_seed(master_seed, name, static_cast<std::uint64_t>(rep)));
    return out;
}

ScenarioConfig parse_scenario_text(const std::string& text, const std::string& default_name) {
    ScenarioConfig c;
    c.name = default_name;
    bool seeds_given = false, master_given = false, reps_given = false;
    bool name_given = false, width_given = false, height_given = false;
    bool occupants_given = false, max_ticks_given = false;

    std::istringstream in(text);
    std::string raw;
    int line = 0;
    auto once = [&](bool& flag, const std::string& key) {
        if (flag)
            throw ParseError(line, "duplicate key '" + key + "'");
        flag = true;
    };
    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw;
        if (std::size_t hash = s.find('#'); hash != std::string::npos)
            s.erase(hash);
        s = trim(s);
        if (s.empty())
            continue;
        std::size_t eq = s.find('=');
        if (eq == std::string::npos)
            throw ParseError(line, "expected 'key = value', got '" + trim(raw) + "'");
        std::string key = trim(s.substr(0, eq));
        std::string value = trim(s.substr(eq + 1));
        if (key.empty())
            throw ParseError(line, "missing key before '='");
        if (value.empty())
            throw ParseError(line, "missing value for '" + key + "'");

        if (key == "name") {
            once(name_given, key);
            c.name = value;
        } else if (key == "grid_width") {
            once(width_given, key);
            c.grid_width = static_cast<int>(parse_long(value, line, key));
        } else if (key == "grid_height") {
            once(height_given, key);
            c.grid_height = static_cast<int>(parse_long(value, line, key));
        } else if (key == "occupants") {
            once(occupants_given, key);
            c.occupants = static_cast<int>(parse_long(value, line, key));
        } else if (key == "exit") {
            std::size_t colon = value.find(':');
            if (colon == std::string::npos)
                throw ParseError(line, "exit value must be 'slot:widthPU', got '" + value + "'");
            int slot = static_cast<int>(parse_long(trim(value.substr(0, colon)), line, key));
            int width = static_cast<int>(parse_long(trim(value.substr(colon + 1)), line, key));
            c.exits.push_back({slot, width});
        } else if (key == "seeds") {
            once(seeds_given, key);
            std::string rest = value;
            while (!rest.empty()) {
                std::size_t comma = rest.find(',');
                std::string item = trim(comma == std::string::npos ? rest : rest.substr(0, comma));
                if (item.empty())
                    throw ParseError(line, "empty entry in seed list");
                c.seeds.push_back(parse_u64(item, line, key));
                rest = comma == std::string::npos ? "" : rest.substr(comma + 1);
            }
        } else if (key == "master_seed") {
            once(master_given, key);
            c.master_seed = parse_u64(value, line, key);
        } else if (key == "repetitions") {
            once(reps_given, key);
            c.repetitions = static_cast<int>(parse_long(value, line, key));
        } else if (key == "max_ticks") {
            once(max_ticks_given, key);
            c.max_ticks = parse_long(value, line, key);
        } else {
            throw ParseError(line, "unknown key '" + key + "'");
        }
    }
    validate(c, seeds_given, master_given, reps_given);
    return c;
}

ScenarioConfig parse_scenario_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario_text(buf.str(), std::filesystem::path(path).stem().string());
}

std::string serialize_scenario(const ScenarioConfig& config) {
    std::ostringstream out;
    out << "name = " << config.name << "\n";
    out << "grid_width = " << config.grid_width << "\n";
    out << "grid_height = " << config.grid_height << "\n";
    out << "occupants = " << config.occupants << "\n";
    for (const ExitSpec& e : config.exits)
        out << "exit = " << e.slot << ":" << e.width_pu << "\n";
    if (!config.seeds.empty()) {
        out << "seeds = ";
        for (std::size_t i = 0; i < config.seeds.size(); ++i)
            out << (i ? "," : "") << config.seeds[i];
        out << "\n";
    } else {
        out << "master_seed = " << config.master_seed << "\n";
        out << "repetitions = " << config.repetitions << "\n";
    }
    if (config.max_ticks > 0)
        out << "max_ticks = " << config.max_ticks << "\n";
    return out.str();
}

} // namespace evacsim
