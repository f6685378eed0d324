#include "evacsim/firecode.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

namespace evacsim {

Point exit_midpoint(const ExitLayout& layout, int slot) {
    std::vector<Cell> cells = layout.cells_of_slot(slot);
    if (cells.empty())
        throw SlotOutOfRange("slot " + std::to_string(slot) + " has no open exit in this layout");
    double sx = 0.0, sy = 0.0;
    for (Cell c : cells) {
        sx += cell_center(c).x;
        sy += cell_center(c).y;
    }
    return {sx / cells.size(), sy / cells.size()};
}

long required_pu(long occupants) { return (occupants + 99) / 100; }

double pu_to_meters(long n_pu) {
    switch (n_pu) {
    case 0: return 0.0;
    case 1: return 0.9;
    case 2: return 1.4;
    default: return static_cast<double>(n_pu) * 0.6;
    }
}

int ExitCountTable::required_exits(long occupants) const {
    if (occupants <= 0)
        return 0;
    for (const ExitCountBand& b : bands)
        if (occupants <= b.max_occupants)
            return b.required_exits;
    const ExitCountBand& last = bands.back();
    long extra = occupants - last.max_occupants;
    return last.required_exits + static_cast<int>((extra + step_beyond - 1) / step_beyond);
}

ExitCountTable ExitCountTable::portuguese_default() {
    return {{{50, 1}, {500, 2}, {800, 3}, {1000, 5}}, 500};
}

PuRequirement compute_requirement(long occupants, const ExitCountTable& table) {
    return {occupants, required_pu(occupants), table.required_exits(occupants)};
}

double subtended_angle_deg(Point a, Point b, Point vantage) {
    double ux = a.x - vantage.x, uy = a.y - vantage.y;
    double vx = b.x - vantage.x, vy = b.y - vantage.y;
    double nu = std::hypot(ux, uy), nv = std::hypot(vx, vy);
    if (nu == 0.0 || nv == 0.0)
        throw DegenerateVantage("vantage coincides with an exit midpoint");
    double c = (ux * vx + uy * vy) / (nu * nv);
    c = std::clamp(c, -1.0, 1.0);
    return std::acos(c) * 180.0 / std::numbers::pi;
}

int independent_exit_count(const ExitLayout& layout, Point vantage) {
    std::vector<ExitSpec> open = layout.open_exits();
    int n = static_cast<int>(open.size());
    if (n == 0)
        return 0;

    std::vector<Point> mids(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        mids[static_cast<std::size_t>(i)] = exit_midpoint(layout, open[static_cast<std::size_t>(i)].slot);

    bool ok[8][8] = {};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            ok[i][j] = subtended_angle_deg(mids[static_cast<std::size_t>(i)],
                                           mids[static_cast<std::size_t>(j)], vantage) >=
                       kIndependenceAngleDeg - 1e-9;

    int best = 0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        bool valid = true;
        for (int i = 0; i < n && valid; ++i)
            for (int j = i + 1; j < n && valid; ++j)
                if ((mask >> i & 1) && (mask >> j & 1) && !ok[i][j])
                    valid = false;
        if (valid)
            best = std::max(best, std::popcount(mask));
    }
    return best;
}

Point default_vantage(const ExitLayout& layout) {
    Point room{layout.grid_width() / 2.0, layout.grid_height() / 2.0};
    std::vector<ExitSpec> open = layout.open_exits();
    if (open.empty())
        return room;
    double sx = 0.0, sy = 0.0;
    for (const ExitSpec& e : open) {
        Point m = exit_midpoint(layout, e.slot);
        sx += m.x;
        sy += m.y;
    }
    Point c{sx / open.size(), sy / open.size()};
    bool interior = c.x > 1.0 && c.x < layout.grid_width() - 1.0 && c.y > 1.0 &&
                    c.y < layout.grid_height() - 1.0;
    return interior ? c : room;
}

ComplianceReport check_compliance(long occupants, const ExitLayout& layout,
                                  std::optional<Point> vantage, const ExitCountTable& table) {
    ComplianceReport rep;
    rep.requirement = compute_requirement(occupants, table);
    rep.provided_pu = layout.total_width_pu();
    rep.provided_exits = layout.open_exit_count();
    rep.vantage = vantage ? *vantage : default_vantage(layout);

    std::vector<ExitSpec> open = layout.open_exits();
    for (std::size_t i = 0; i < open.size(); ++i)
        for (std::size_t j = i + 1; j < open.size(); ++j) {
            double a = subtended_angle_deg(exit_midpoint(layout, open[i].slot),
                                           exit_midpoint(layout, open[j].slot), rep.vantage);
            rep.pair_angles.push_back(
                {open[i].slot, open[j].slot, a, a >= kIndependenceAngleDeg - 1e-9});
        }
    rep.independent_exits = open.empty() ? 0 : independent_exit_count(layout, rep.vantage);

    if (rep.provided_pu < rep.requirement.required_pu)
        rep.violations.push_back("insufficient width: provided " + std::to_string(rep.provided_pu) +
                                 " PU, required " + std::to_string(rep.requirement.required_pu) +
                                 " PU");
    if (rep.independent_exits < rep.requirement.required_exits)
        rep.violations.push_back(
            "insufficient exits: " + std::to_string(rep.independent_exits) +
            " independent exit(s), required " + std::to_string(rep.requirement.required_exits));
    rep.compliant = rep.violations.empty();
    return rep;
}

} // namespace evacsim
