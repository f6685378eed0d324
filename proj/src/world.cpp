#include "evacsim/world.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

namespace evacsim {

namespace {

// Walks a wall in clockwise direction. Wall index 0..3 = top, right, bottom,
// left. Returns the cell reached after `travel` clockwise steps from the
// wall's starting corner.
Cell wall_cell(int wall, int travel, int w, int h) {
    switch (wall) {
    case 0: return {travel, 0};              // top: left to right
    case 1: return {w - 1, travel};          // right: top to bottom
    case 2: return {w - 1 - travel, h - 1};  // bottom: right to left
    default: return {0, h - 1 - travel};     // left: bottom to top
    }
}

int wall_length(int wall, int w, int h) { return (wall == 0 || wall == 2) ? w : h; }

} // namespace

std::vector<Cell> resolve_slot(int slot, int width_pu, int grid_width, int grid_height) {
    if (slot < 1 || slot > 8)
        throw SlotOutOfRange("exit slot " + std::to_string(slot) + " not in 1..8");
    if (width_pu < 1)
        throw ExitOverflow("exit width must be >= 1 PU, got " + std::to_string(width_pu));

    int wall = (slot - 1) / 2;
    int len = wall_length(wall, grid_width, grid_height);
    int anchor = (slot % 2 == 1) ? len / 3 : (2 * len) / 3;
    int start = anchor - (width_pu - 1) / 2;

    std::vector<Cell> cells;
    cells.reserve(static_cast<std::size_t>(width_pu));
    for (int t = start; t < start + width_pu; ++t) {
        if (t < 1 || t > len - 2)
            throw ExitOverflow("exit slot " + std::to_string(slot) + " width " +
                               std::to_string(width_pu) + " PU does not fit on its wall");
        cells.push_back(wall_cell(wall, t, grid_width, grid_height));
    }
    return cells;
}

ExitLayout::ExitLayout(std::vector<ExitSpec> exits, int grid_width, int grid_height)
    : exits_(std::move(exits)), grid_width_(grid_width), grid_height_(grid_height) {
    if (grid_width_ < 3 || grid_height_ < 3)
        throw InvalidDimensions("grid must be at least 3x3 cells, got " +
                                std::to_string(grid_width_) + "x" + std::to_string(grid_height_));

    std::sort(exits_.begin(), exits_.end(),
              [](const ExitSpec& a, const ExitSpec& b) { return a.slot < b.slot; });

    bool slot_used[9] = {};
    std::map<Cell, int> claimed;
    for (const ExitSpec& e : exits_) {
        if (e.slot < 1 || e.slot > 8)
            throw SlotOutOfRange("exit slot " + std::to_string(e.slot) + " not in 1..8");
        if (e.width_pu < 0)
            throw ExitOverflow("exit width must be >= 0 PU, got " + std::to_string(e.width_pu));
        if (slot_used[e.slot])
            throw OverlappingExits("slot " + std::to_string(e.slot) + " specified twice");
        slot_used[e.slot] = true;
        if (e.width_pu == 0)
            continue; // closed exit
        ++open_exit_count_;
        total_width_pu_ += e.width_pu;
        for (Cell c : resolve_slot(e.slot, e.width_pu, grid_width_, grid_height_)) {
            auto [it, inserted] = claimed.emplace(c, e.slot);
            if (!inserted)
                throw OverlappingExits("slots " + std::to_string(it->second) + " and " +
                                       std::to_string(e.slot) + " both claim cell (" +
                                       std::to_string(c.x) + ", " + std::to_string(c.y) + ")");
            exit_cells_.push_back(c);
            cell_slots_.push_back(e.slot);
        }
    }
}

std::vector<Cell> ExitLayout::cells_of_slot(int slot) const {
    std::vector<Cell> out;
    for (std::size_t i = 0; i < exit_cells_.size(); ++i)
        if (cell_slots_[i] == slot)
            out.push_back(exit_cells_[i]);
    return out;
}

std::vector<ExitSpec> ExitLayout::open_exits() const {
    std::vector<ExitSpec> out;
    for (const ExitSpec& e : exits_)
        if (e.width_pu >= 1)
            out.push_back(e);
    return out;
}

GridWorld GridWorld::build(int width, int height, const ExitLayout& layout) {
    if (width < 3 || height < 3)
        throw InvalidDimensions("grid must be at least 3x3 cells, got " +
                                std::to_string(width) + "x" + std::to_string(height));
    if (layout.grid_width() != width || layout.grid_height() != height)
        throw InvalidDimensions("exit layout was resolved for a " +
                                std::to_string(layout.grid_width()) + "x" +
                                std::to_string(layout.grid_height()) + " grid, not " +
                                std::to_string(width) + "x" + std::to_string(height));
    if (layout.total_width_pu() == 0)
        throw NoOpenExit("simulation world needs at least one open exit");

    GridWorld w;
    w.width_ = width;
    w.height_ = height;
    w.layout_ = layout;
    w.cells_.assign(static_cast<std::size_t>(width) * height, PatchState::Inside);
    w.exit_slot_.assign(static_cast<std::size_t>(width) * height, 0);

    for (int x = 0; x < width; ++x) {
        w.cells_[x] = PatchState::Wall;
        w.cells_[static_cast<std::size_t>(height - 1) * width + x] = PatchState::Wall;
    }
    for (int y = 0; y < height; ++y) {
        w.cells_[static_cast<std::size_t>(y) * width] = PatchState::Wall;
        w.cells_[static_cast<std::size_t>(y) * width + width - 1] = PatchState::Wall;
    }
    const auto& cells = layout.exit_cells();
    {
        std::size_t i = 0;
        for (const ExitSpec& e : layout.exits()) {
            if (e.width_pu == 0)
                continue;
            for (int k = 0; k < e.width_pu; ++k, ++i) {
                std::size_t idx = static_cast<std::size_t>(cells[i].y) * width + cells[i].x;
                w.cells_[idx] = PatchState::Exit;
                w.exit_slot_[idx] = e.slot;
            }
        }
        assert(i == cells.size());
    }

    for (PatchState s : w.cells_) {
        switch (s) {
        case PatchState::Inside: ++w.inside_count_; break;
        case PatchState::Wall: ++w.wall_count_; break;
        case PatchState::Exit: ++w.exit_count_; break;
        case PatchState::Outside: ++w.outside_count_; break;
        }
    }
    return w;
}

std::vector<Cell> GridWorld::inside_cells() const {
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(inside_count_));
    for (int y = 0; y < height_; ++y)
        for (int x = 0; x < width_; ++x)
            if (at(x, y) == PatchState::Inside)
                out.push_back({x, y});
    return out;
}

std::int32_t DistanceField::max_finite() const {
    std::int32_t m = 0;
    for (std::int32_t d : dist)
        if (d != kUnreachable && d > m)
            m = d;
    return m;
}

DistanceField compute_distance_field(const GridWorld& world) {
    if (world.layout().total_width_pu() == 0)
        throw NoOpenExit("distance field needs at least one exit cell");

    DistanceField f;
    f.width = world.width();
    f.height = world.height();
    f.dist.assign(static_cast<std::size_t>(f.width) * f.height, DistanceField::kUnreachable);

    std::deque<Cell> queue;
    for (Cell c : world.layout().exit_cells()) {
        f.dist[static_cast<std::size_t>(c.y) * f.width + c.x] = 0;
        queue.push_back(c);
    }
    while (!queue.empty()) {
        Cell c = queue.front();
        queue.pop_front();
        std::int32_t d = f.at(c);
        for (Cell off : kMooreOffsets) {
            int nx = c.x + off.x;
            int ny = c.y + off.y;
            if (!world.in_bounds(nx, ny) || !world.walkable(nx, ny))
                continue;
            std::size_t idx = static_cast<std::size_t>(ny) * f.width + nx;
            if (f.dist[idx] == DistanceField::kUnreachable) {
                f.dist[idx] = d + 1;
                queue.push_back({nx, ny});
            }
        }
    }
    return f;
}

} // namespace evacsim
