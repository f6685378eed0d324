#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "evacsim/rng.hpp"
#include "evacsim/world.hpp"

namespace evacsim {

struct Agent {
    int id = 0;
    Cell pos;
    bool alive = true;
};

/// Uniform sample without replacement of n Inside cells, one agent per cell.
///
/// Reproducibility contract: the candidate pool is world.inside_cells() in
/// row-major order; cells are drawn by a partial Fisher-Yates pass (for
/// i = 0..n-1: j = i + rng.below(pool - i), swap, take cell i). Agent ids are
/// 0..n-1 in draw order.
std::vector<Agent> seed_occupants(const GridWorld& world, int n, Pcg32& rng);

/// One evacuation run in progress. All randomness comes from the single
/// generator seeded at construction: first the occupant placement, then the
/// per-tick draws, in a fixed documented order.
class Simulation {
public:
    Simulation(GridWorld world, int n_occupants, std::uint64_t seed);

    /// Advances one tick (one simulated second):
    ///  (a) live agents in ascending id order are Fisher-Yates shuffled;
    ///  (b) in that order each agent scans its Moore neighbors in the fixed
    ///      kMooreOffsets order for cells that are walkable, unoccupied and
    ///      strictly closer to an exit; it moves to one with the minimum
    ///      distance (ties broken by one rng.below(k) draw, only taken when
    ///      k >= 2 cells tie), otherwise it waits;
    ///  (c) agents landing on an Exit cell depart but occupy the cell until
    ///      tick end (capacity 1 agent per exit cell per tick);
    ///  (d) departed agents are removed, counters update, tick advances.
    void step();

    const GridWorld& world() const { return world_; }
    const DistanceField& field() const { return field_; }
    long tick() const { return tick_; }
    long evacuated() const { return evacuated_; }
    int live_count() const { return live_count_; }
    int n_occupants() const { return static_cast<int>(agents_.size()); }
    bool done() const { return live_count_ == 0; }

    /// All agents ever seeded, indexed by id; departed ones have alive=false.
    const std::vector<Agent>& agents() const { return agents_; }
    /// Agent id occupying (x, y), or -1.
    int occupant_at(int x, int y) const {
        return occupant_[static_cast<std::size_t>(y) * world_.width() + x];
    }
    const std::map<int, long>& per_exit_counts() const { return per_exit_counts_; }
    /// Largest distance-field value among the seeded agents' start cells.
    std::int32_t max_initial_distance() const { return max_initial_distance_; }

private:
    GridWorld world_;
    DistanceField field_;
    Pcg32 rng_;
    std::vector<Agent> agents_;
    std::vector<int> occupant_;
    std::map<int, long> per_exit_counts_;
    long tick_ = 0;
    long evacuated_ = 0;
    int live_count_ = 0;
    std::int32_t max_initial_distance_ = 0;

    void check_invariants() const;
};

struct RunResult {
    long evac_time_ticks = 0;
    int n_occupants = 0;
    ExitLayout layout;
    std::uint64_t seed = 0;
    std::map<int, long> per_exit_throughput;
    std::vector<long> evac_curve; // cumulative evacuated after each tick
    bool timed_out = false;
    std::int32_t max_initial_distance = 0;

    long capacity_lower_bound() const {
        int pu = layout.total_width_pu();
        return pu > 0 ? (static_cast<long>(n_occupants) + pu - 1) / pu : 0;
    }
    long travel_lower_bound() const { return max_initial_distance; }
};

/// Ticks after which a run is declared stuck: ten times the sum of the
/// capacity bound and the worst possible travel distance.
long default_max_ticks(const GridWorld& world, const DistanceField& field, int n_occupants);

/// Runs to completion or to max_ticks (0 picks the default above). A timeout
/// is reported in the result, never silently truncated.
RunResult run(const GridWorld& world, int n_occupants, std::uint64_t seed, long max_ticks = 0);

} // namespace evacsim
