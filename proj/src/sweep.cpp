#include "evacsim/sweep.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "evacsim/analytical.hpp"
#include "evacsim/engine.hpp"

namespace evacsim {

namespace {

std::string fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

} // namespace

SweepOutcome run_sweep(const std::vector<ScenarioConfig>& scenarios) {
    std::ostringstream out;
    out << kSweepCsvHeader << "\n";
    bool any_timeout = false;
    const std::string tmax = fixed(van_bogaert_tmax(VanBogaertParams{}), 1);

    for (const ScenarioConfig& sc : scenarios) {
        GridWorld world = sc.build_world();
        int n_exits = world.layout().open_exit_count();
        int pu = world.layout().total_width_pu();

        double sum = 0.0;
        bool scenario_timeout = false;
        long worst_travel = 0;
        std::vector<std::uint64_t> seeds = sc.resolved_seeds();
        long capacity = 0;
        for (std::uint64_t seed : seeds) {
            RunResult r = run(world, sc.occupants, seed, sc.max_ticks);
            capacity = r.capacity_lower_bound();
            worst_travel = std::max(worst_travel, r.travel_lower_bound());
            out << sc.name << ',' << n_exits << ',' << pu << ',' << seed << ',';
            if (r.timed_out) {
                out << "timeout";
                scenario_timeout = true;
            } else {
                out << r.evac_time_ticks;
                sum += static_cast<double>(r.evac_time_ticks);
            }
            out << ",," << capacity << ',' << r.travel_lower_bound() << ",\n";
        }
        out << sc.name << ',' << n_exits << ',' << pu << ",,,";
        if (scenario_timeout)
            out << "timeout";
        else
            out << fixed(sum / static_cast<double>(seeds.size()), 4);
        out << ',' << capacity << ',' << worst_travel << ',' << tmax << "\n";
        any_timeout = any_timeout || scenario_timeout;
    }
    return {out.str(), any_timeout};
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open for writing: " + path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out)
        throw IoError("short write: " + path);
}

} // namespace evacsim
