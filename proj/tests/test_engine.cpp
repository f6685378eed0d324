#include <doctest.h>

#include <algorithm>
#include <set>

#include "evacsim/engine.hpp"

using namespace evacsim;

namespace {

GridWorld default_world(std::vector<ExitSpec> exits = {{2, 1}}) {
    return GridWorld::build(55, 55, ExitLayout(std::move(exits), 55, 55));
}

} // namespace

TEST_CASE("seed_occupants places n distinct agents on Inside cells") {
    GridWorld w = default_world();
    Pcg32 rng(3);
    std::vector<Agent> agents = seed_occupants(w, 100, rng);
    REQUIRE(agents.size() == 100);
    std::set<Cell> cells;
    for (const Agent& a : agents) {
        CHECK(w.at(a.pos) == PatchState::Inside);
        cells.insert(a.pos);
    }
    CHECK(cells.size() == 100);
    for (int i = 0; i < 100; ++i)
        CHECK(agents[static_cast<std::size_t>(i)].id == i);
}

TEST_CASE("seed_occupants boundaries") {
    GridWorld w = default_world();
    Pcg32 rng(3);
    CHECK(seed_occupants(w, 0, rng).empty());

    Pcg32 rng2(3);
    std::vector<Agent> full = seed_occupants(w, 2809, rng2);
    std::set<Cell> cells;
    for (const Agent& a : full)
        cells.insert(a.pos);
    CHECK(cells.size() == 2809);

    Pcg32 rng3(3);
    CHECK_THROWS_AS(seed_occupants(w, 2810, rng3), Overcrowded);
}

TEST_CASE("seed_occupants is deterministic") {
    GridWorld w = default_world();
    Pcg32 a(11), b(11), c(12);
    std::vector<Agent> s1 = seed_occupants(w, 50, a);
    std::vector<Agent> s2 = seed_occupants(w, 50, b);
    std::vector<Agent> s3 = seed_occupants(w, 50, c);
    for (int i = 0; i < 50; ++i)
        CHECK(s1[static_cast<std::size_t>(i)].pos == s2[static_cast<std::size_t>(i)].pos);
    bool all_equal = true;
    for (int i = 0; i < 50; ++i)
        all_equal = all_equal && s1[static_cast<std::size_t>(i)].pos == s3[static_cast<std::size_t>(i)].pos;
    CHECK(!all_equal);
}

TEST_CASE("single agent walks its distance") {
    GridWorld w = GridWorld::build(3, 3, ExitLayout({{1, 1}}, 3, 3));
    RunResult r = run(w, 1, 42);
    CHECK(r.evac_time_ticks == 1);
    CHECK(!r.timed_out);
    CHECK(r.evac_curve == std::vector<long>{1});
    CHECK(r.per_exit_throughput.at(1) == 1);
    CHECK(r.max_initial_distance == 1);
}

TEST_CASE("a single exit cell drains at most one agent per tick") {
    // 5x5 room, every interior cell occupied, one 1-cell exit. Nine agents
    // need at least nine ticks through a unit exit, plus a short tail while
    // the last ones walk up after the jam clears.
    GridWorld w = GridWorld::build(5, 5, ExitLayout({{1, 1}}, 5, 5));
    REQUIRE(w.inside_count() == 9);
    RunResult r = run(w, 9, 7);
    CHECK(r.evac_time_ticks >= 9);
    CHECK(r.evac_curve.back() == 9);
    long prev = 0;
    for (long v : r.evac_curve) {
        CHECK(v - prev <= 1);
        prev = v;
    }
    CHECK(r.evac_curve[0] == 1); // someone is always next to the exit here
}

TEST_CASE("no occupants, no ticks") {
    GridWorld w = default_world();
    RunResult r = run(w, 0, 1);
    CHECK(r.evac_time_ticks == 0);
    CHECK(!r.timed_out);
    CHECK(r.evac_curve.empty());
    CHECK(r.per_exit_throughput.empty());
}

TEST_CASE("runs are bitwise deterministic") {
    GridWorld w = default_world({{2, 2}, {7, 1}});
    RunResult a = run(w, 300, 1234);
    RunResult b = run(w, 300, 1234);
    CHECK(a.evac_time_ticks == b.evac_time_ticks);
    CHECK(a.evac_curve == b.evac_curve);
    CHECK(a.per_exit_throughput == b.per_exit_throughput);
    CHECK(a.max_initial_distance == b.max_initial_distance);

    RunResult c = run(w, 300, 1235);
    CHECK(a.evac_time_ticks != c.evac_time_ticks); // near-certain for 300 agents
}

TEST_CASE("full state trajectories replay under equal seeds") {
    GridWorld w = GridWorld::build(9, 9, ExitLayout({{3, 1}, {6, 1}}, 9, 9));
    Simulation s1(w, 20, 77), s2(w, 20, 77);
    while (!s1.done() && !s2.done()) {
        s1.step();
        s2.step();
        REQUIRE(s1.tick() == s2.tick());
        REQUIRE(s1.evacuated() == s2.evacuated());
        for (int id = 0; id < 20; ++id) {
            const Agent& a = s1.agents()[static_cast<std::size_t>(id)];
            const Agent& b = s2.agents()[static_cast<std::size_t>(id)];
            REQUIRE(a.alive == b.alive);
            if (a.alive)
                REQUIRE(a.pos == b.pos);
        }
    }
    CHECK(s1.done());
    CHECK(s2.done());
}

TEST_CASE("conservation stays exact and positions stay exclusive") {
    GridWorld w = GridWorld::build(12, 10, ExitLayout({{1, 1}, {5, 2}}, 12, 10));
    Simulation sim(w, 40, 5);
    while (!sim.done()) {
        sim.step();
        long alive = 0;
        std::set<Cell> where;
        for (const Agent& a : sim.agents())
            if (a.alive) {
                ++alive;
                where.insert(a.pos);
                CHECK(w.walkable(a.pos.x, a.pos.y));
            }
        CHECK(alive + sim.evacuated() == 40);
        CHECK(where.size() == static_cast<std::size_t>(alive));
    }
    CHECK(sim.evacuated() == 40);
}

TEST_CASE("agents never move uphill") {
    GridWorld w = GridWorld::build(15, 15, ExitLayout({{2, 1}}, 15, 15));
    Simulation sim(w, 60, 9);
    std::vector<std::int32_t> last(60);
    for (int id = 0; id < 60; ++id)
        last[static_cast<std::size_t>(id)] = sim.field().at(sim.agents()[static_cast<std::size_t>(id)].pos);
    while (!sim.done()) {
        sim.step();
        for (const Agent& a : sim.agents()) {
            if (!a.alive)
                continue;
            std::int32_t d = sim.field().at(a.pos);
            CHECK(d <= last[static_cast<std::size_t>(a.id)]);
            last[static_cast<std::size_t>(a.id)] = d;
        }
    }
}

TEST_CASE("capacity and travel lower bounds hold") {
    Pcg32 rng(31337);
    for (int trial = 0; trial < 40; ++trial) {
        int width = 5 + static_cast<int>(rng.below(12));
        int height = 5 + static_cast<int>(rng.below(12));
        std::vector<ExitSpec> exits;
        for (int slot = 1; slot <= 8; ++slot)
            if (rng.below(4) == 0)
                exits.push_back({slot, 1});
        if (exits.empty())
            exits.push_back({1, 1});
        ExitLayout layout;
        try {
            layout = ExitLayout(exits, width, height);
        } catch (const Error&) {
            continue;
        }
        GridWorld w = GridWorld::build(width, height, layout);
        int n = static_cast<int>(rng.below(static_cast<std::uint32_t>(w.inside_count()) + 1));
        RunResult r = run(w, n, rng.next_u32());
        REQUIRE(!r.timed_out);
        CHECK(r.evac_time_ticks >= r.capacity_lower_bound());
        CHECK(r.evac_time_ticks >= r.travel_lower_bound());
        CHECK(static_cast<long>(r.evac_curve.size()) == r.evac_time_ticks);
        long prev = 0;
        for (long v : r.evac_curve) {
            CHECK(v >= prev);
            CHECK(v - prev <= layout.total_width_pu());
            prev = v;
        }
        if (n > 0)
            CHECK(r.evac_curve.back() == n);
        long total = 0;
        for (const auto& [slot, count] : r.per_exit_throughput)
            total += count;
        CHECK(total == n);
    }
}

TEST_CASE("tick limit reports a timeout instead of truncating silently") {
    GridWorld w = default_world();
    RunResult r = run(w, 500, 1, 3);
    CHECK(r.timed_out);
    CHECK(r.evac_time_ticks == 3);
    CHECK(r.evac_curve.size() == 3);
    CHECK(r.evac_curve.back() < 500);
}

TEST_CASE("default tick limit is generous") {
    GridWorld w = default_world();
    DistanceField f = compute_distance_field(w);
    long limit = default_max_ticks(w, f, 1000);
    CHECK(limit >= 10 * 1000);
    RunResult r = run(w, 1000, 99);
    CHECK(!r.timed_out);
    CHECK(r.evac_time_ticks < limit);
}
