#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "evacsim/analytical.hpp"
#include "evacsim/engine.hpp"
#include "evacsim/firecode.hpp"
#include "evacsim/render.hpp"
#include "evacsim/scenario.hpp"
#include "evacsim/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;      // bad command line, unreadable or malformed input
constexpr int kExitValidation = 2; // well-formed input that violates an invariant
constexpr int kExitTimeout = 3;    // a simulation hit its tick limit

std::uint64_t pick_seed(const evacsim::ScenarioConfig& sc, std::optional<std::uint64_t> literal,
                        int rep) {
    if (literal)
        return *literal;
    std::vector<std::uint64_t> seeds = sc.resolved_seeds();
    if (rep < 0 || static_cast<std::size_t>(rep) >= seeds.size())
        throw evacsim::ValidationError("rep", "repetition index " + std::to_string(rep) +
                                                  " out of range, scenario has " +
                                                  std::to_string(seeds.size()) + " seeds");
    return seeds[static_cast<std::size_t>(rep)];
}

void emit(const std::string& path, const std::string& content) {
    if (path == "-")
        std::fwrite(content.data(), 1, content.size(), stdout);
    else
        evacsim::write_text_file(path, content);
}

int cmd_run(const std::string& scenario_path, std::optional<std::uint64_t> seed, int rep) {
    using namespace evacsim;
    ScenarioConfig sc = parse_scenario_file(scenario_path);
    GridWorld world = sc.build_world();
    std::uint64_t run_seed = pick_seed(sc, seed, rep);
    RunResult r = run(world, sc.occupants, run_seed, sc.max_ticks);

    std::printf("scenario      %s\n", sc.name.c_str());
    std::printf("grid          %dx%d (%ld interior cells)\n", world.width(), world.height(),
                world.inside_count());
    std::printf("occupants     %d\n", sc.occupants);
    std::printf("exits         %d open, %d PU total\n", world.layout().open_exit_count(),
                world.layout().total_width_pu());
    std::printf("seed          %llu\n", static_cast<unsigned long long>(run_seed));
    if (r.timed_out)
        std::printf("evacuation    TIMEOUT after %ld ticks (%ld still inside)\n", r.evac_time_ticks,
                    sc.occupants - (r.evac_curve.empty() ? 0 : r.evac_curve.back()));
    else
        std::printf("evacuation    %ld s\n", r.evac_time_ticks);
    std::printf("lower bounds  capacity %ld s, travel %ld s\n", r.capacity_lower_bound(),
                r.travel_lower_bound());
    for (const auto& [slot, count] : r.per_exit_throughput)
        std::printf("exit slot %d   %ld evacuated\n", slot, count);
    return r.timed_out ? kExitTimeout : kExitOk;
}

int cmd_sweep(const std::vector<std::string>& files, const std::string& out_path) {
    using namespace evacsim;
    std::vector<ScenarioConfig> scenarios;
    scenarios.reserve(files.size());
    for (const std::string& f : files)
        scenarios.push_back(parse_scenario_file(f));
    SweepOutcome outcome = run_sweep(scenarios);
    emit(out_path, outcome.csv);
    return outcome.any_timeout ? kExitTimeout : kExitOk;
}

int cmd_validate(long occupants, double area, double ph, evacsim::VanBogaertParams params,
                 std::optional<double> compare_mean) {
    using namespace evacsim;
    double da = dimensionless_density({occupants, ph, area});
    double v = pm_walking_velocity(da);
    double vve = pm_emergency_velocity(v, da);
    double tmax = van_bogaert_tmax(params);
    std::printf("occupants          %ld\n", occupants);
    std::printf("floor area         %.1f m^2\n", area);
    std::printf("Da                 %.6f\n", da);
    std::printf("V                  %.5f m/s\n", v);
    std::printf("V_VE               %.5f m/s\n", vve);
    std::printf("T_max              %.1f s\n", tmax);
    if (compare_mean) {
        const char* verdict = *compare_mean < tmax ? "below" : "NOT below";
        std::printf("simulated mean     %.4f s (%s the T_max bound)\n", *compare_mean, verdict);
    }
    return kExitOk;
}

int cmd_compliance(const std::string& scenario_path, std::optional<evacsim::Point> vantage,
                   std::optional<long> occupants_override) {
    using namespace evacsim;
    ScenarioConfig sc = parse_scenario_file(scenario_path);
    ExitLayout layout = sc.layout();
    long occupants = occupants_override ? *occupants_override : sc.occupants;
    ComplianceReport rep = check_compliance(occupants, layout, vantage);

    std::printf("scenario           %s\n", sc.name.c_str());
    std::printf("occupants          %ld\n", rep.requirement.occupants);
    std::printf("required           %ld PU (%.1f m), %d independent exits\n",
                rep.requirement.required_pu, rep.required_meters(), rep.requirement.required_exits);
    std::printf("provided           %ld PU (%.1f m legal width, %ld m simulated), %d open exits\n",
                rep.provided_pu, rep.provided_meters(), rep.provided_pu, rep.provided_exits);
    std::printf("vantage            (%.2f, %.2f)\n", rep.vantage.x, rep.vantage.y);
    std::printf("independent exits  %d\n", rep.independent_exits);
    for (const ExitPairAngle& p : rep.pair_angles)
        std::printf("  slots %d-%d  %7.2f deg  %s\n", p.slot_a, p.slot_b, p.angle_deg,
                    p.independent ? "independent" : "NOT independent");
    std::printf("compliant          %s\n", rep.compliant ? "yes" : "no");
    for (const std::string& v : rep.violations)
        std::printf("  violation: %s\n", v.c_str());
    return kExitOk;
}

int cmd_render(const std::string& scenario_path, std::optional<std::uint64_t> seed, int rep,
               long ticks, const std::string& format, const std::string& out_path) {
    using namespace evacsim;
    ScenarioConfig sc = parse_scenario_file(scenario_path);
    Simulation sim(sc.build_world(), sc.occupants, pick_seed(sc, seed, rep));
    for (long t = 0; t < ticks && !sim.done(); ++t)
        sim.step();
    emit(out_path, format == "ppm" ? render_ppm(sim) : render_text(sim));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"evacsim: deterministic grid evacuation simulator and exit-sizing checker"};
    app.require_subcommand(1);

    std::string scenario_path, out_path = "-", format = "text";
    std::vector<std::string> sweep_files;
    std::optional<std::uint64_t> seed;
    int rep = 0;
    long ticks = 0;
    long occupants = 1000;
    std::optional<long> occupants_override;
    double area = 3025.0, ph = 0.125;
    evacsim::VanBogaertParams params;
    std::optional<double> compare_mean;
    std::optional<std::vector<double>> vantage_xy;

    CLI::App* c_run = app.add_subcommand("run", "run one simulation and print a summary");
    c_run->add_option("--scenario", scenario_path, "scenario file")->required();
    c_run->add_option("--seed", seed, "literal run seed (overrides the scenario's seeds)");
    c_run->add_option("--rep", rep, "repetition index into the scenario's seed list");

    CLI::App* c_sweep = app.add_subcommand("sweep", "run scenario files x seeds, write CSV");
    c_sweep->add_option("scenarios", sweep_files, "scenario files, in output order");
    c_sweep->add_option("--out", out_path, "CSV path, '-' for stdout");

    CLI::App* c_val = app.add_subcommand("validate", "closed-form density/velocity/time bounds");
    c_val->add_option("--occupants", occupants, "occupant count");
    c_val->add_option("--area", area, "floor area in m^2");
    c_val->add_option("--ph", ph, "horizontal projection per person in m^2");
    c_val->add_option("--coef-s", params.s, "area coefficient");
    c_val->add_option("--coef-i", params.i, "compartment coefficient");
    c_val->add_option("--coef-fd", params.fd, "density factor");
    c_val->add_option("--coef-h", params.h, "height coefficient");
    c_val->add_option("--coef-r", params.r, "risk coefficient");
    c_val->add_option("--compare-mean", compare_mean, "simulated mean to compare against T_max");

    CLI::App* c_comp = app.add_subcommand("compliance", "exit-sizing check for a scenario");
    c_comp->add_option("--scenario", scenario_path, "scenario file")->required();
    c_comp->add_option("--occupants", occupants_override, "override the scenario occupant count");
    c_comp->add_option("--vantage", vantage_xy, "observer position x y (default: exit centroid)")
        ->expected(2);

    CLI::App* c_render = app.add_subcommand("render", "snapshot a simulation state");
    c_render->add_option("--scenario", scenario_path, "scenario file")->required();
    c_render->add_option("--seed", seed, "literal run seed");
    c_render->add_option("--rep", rep, "repetition index into the scenario's seed list");
    c_render->add_option("--ticks", ticks, "ticks to simulate before the snapshot");
    c_render->add_option("--format", format, "text or ppm")
        ->check(CLI::IsMember({"text", "ppm"}));
    c_render->add_option("--out", out_path, "output path, '-' for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (c_run->parsed())
            return cmd_run(scenario_path, seed, rep);
        if (c_sweep->parsed())
            return cmd_sweep(sweep_files, out_path);
        if (c_val->parsed())
            return cmd_validate(occupants, area, ph, params, compare_mean);
        if (c_comp->parsed()) {
            std::optional<evacsim::Point> vantage;
            if (vantage_xy)
                vantage = evacsim::Point{(*vantage_xy)[0], (*vantage_xy)[1]};
            return cmd_compliance(scenario_path, vantage, occupants_override);
        }
        if (c_render->parsed())
            return cmd_render(scenario_path, seed, rep, ticks, format, out_path);
    } catch (const evacsim::ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const evacsim::IoError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const evacsim::ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitValidation;
    } catch (const evacsim::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitValidation;
    }
    return kExitUsage;
}
