#include "evacsim/engine.hpp"

#include <string>
#include <utility>

namespace evacsim {

std::vector<Agent> seed_occupants(const GridWorld& world, int n, Pcg32& rng) {
    std::vector<Cell> pool = world.inside_cells();
    if (n < 0 || static_cast<std::size_t>(n) > pool.size())
        throw Overcrowded("cannot place " + std::to_string(n) + " occupants on " +
                          std::to_string(pool.size()) + " interior cells");
    std::vector<Agent> agents;
    agents.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::size_t j = i + rng.below(static_cast<std::uint32_t>(pool.size() - i));
        std::swap(pool[i], pool[j]);
        agents.push_back({i, pool[i], true});
    }
    return agents;
}

Simulation::Simulation(GridWorld world, int n_occupants, std::uint64_t seed)
    : world_(std::move(world)), field_(compute_distance_field(world_)), rng_(seed) {
    agents_ = seed_occupants(world_, n_occupants, rng_);
    live_count_ = n_occupants;
    occupant_.assign(static_cast<std::size_t>(world_.width()) * world_.height(), -1);
    for (const Agent& a : agents_) {
        occupant_[static_cast<std::size_t>(a.pos.y) * world_.width() + a.pos.x] = a.id;
        std::int32_t d = field_.at(a.pos);
        if (d != DistanceField::kUnreachable && d > max_initial_distance_)
            max_initial_distance_ = d;
    }
}

void Simulation::step() {
    assert(live_count_ > 0);

    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(live_count_));
    for (const Agent& a : agents_)
        if (a.alive)
            order.push_back(a.id);
    rng_.shuffle(order);

    std::vector<int> departing;
    for (int id : order) {
        Agent& a = agents_[static_cast<std::size_t>(id)];
        std::int32_t own = field_.at(a.pos);
        if (own == DistanceField::kUnreachable)
            continue; // no route to any exit, wait forever

        Cell candidates[8];
        int k = 0;
        std::int32_t best = 0;
        for (Cell off : kMooreOffsets) {
            int nx = a.pos.x + off.x;
            int ny = a.pos.y + off.y;
            if (!world_.in_bounds(nx, ny) || !world_.walkable(nx, ny))
                continue;
            if (occupant_[static_cast<std::size_t>(ny) * world_.width() + nx] != -1)
                continue;
            std::int32_t d = field_.at(nx, ny);
            if (d == DistanceField::kUnreachable || d >= own)
                continue; // strictly downhill only
            if (k == 0 || d < best) {
                best = d;
                k = 0;
                candidates[k++] = {nx, ny};
            } else if (d == best) {
                candidates[k++] = {nx, ny};
            }
        }
        if (k == 0)
            continue; // fully blocked, wait for a turn
        Cell target = candidates[k >= 2 ? static_cast<int>(rng_.below(static_cast<std::uint32_t>(k))) : 0];
        occupant_[static_cast<std::size_t>(a.pos.y) * world_.width() + a.pos.x] = -1;
        a.pos = target;
        occupant_[static_cast<std::size_t>(target.y) * world_.width() + target.x] = a.id;
        if (world_.at(target) == PatchState::Exit)
            departing.push_back(id); // keeps blocking the exit cell until tick end
    }

    for (int id : departing) {
        Agent& a = agents_[static_cast<std::size_t>(id)];
        a.alive = false;
        occupant_[static_cast<std::size_t>(a.pos.y) * world_.width() + a.pos.x] = -1;
        ++evacuated_;
        ++per_exit_counts_[world_.exit_slot_at(a.pos.x, a.pos.y)];
        --live_count_;
    }
    ++tick_;
    check_invariants();
}

void Simulation::check_invariants() const {
    assert(live_count_ + evacuated_ == static_cast<long>(agents_.size()));
    long seen = 0;
    for (const Agent& a : agents_) {
        if (!a.alive)
            continue;
        ++seen;
        assert(world_.walkable(a.pos.x, a.pos.y));
        assert(occupant_[static_cast<std::size_t>(a.pos.y) * world_.width() + a.pos.x] == a.id);
    }
    long occupied = 0;
    for (int id : occupant_)
        if (id != -1)
            ++occupied;
    assert(seen == live_count_ && occupied == live_count_);
    (void)seen;
    (void)occupied;
}

long default_max_ticks(const GridWorld& world, const DistanceField& field, int n_occupants) {
    int pu = world.layout().total_width_pu();
    long capacity = pu > 0 ? (static_cast<long>(n_occupants) + pu - 1) / pu : 0;
    return 10 * (capacity + field.max_finite());
}

RunResult run(const GridWorld& world, int n_occupants, std::uint64_t seed, long max_ticks) {
    Simulation sim(world, n_occupants, seed);
    if (max_ticks <= 0)
        max_ticks = default_max_ticks(sim.world(), sim.field(), n_occupants);

    RunResult r;
    r.n_occupants = n_occupants;
    r.layout = world.layout();
    r.seed = seed;
    r.max_initial_distance = sim.max_initial_distance();

    while (!sim.done() && sim.tick() < max_ticks) {
        sim.step();
        r.evac_curve.push_back(sim.evacuated());
    }
    r.evac_time_ticks = sim.tick();
    r.timed_out = !sim.done();
    r.per_exit_throughput = sim.per_exit_counts();
    return r;
}

} // namespace evacsim
