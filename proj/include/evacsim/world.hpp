#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

#include "evacsim/errors.hpp"

namespace evacsim {

/// State of one 1m x 1m patch.
enum class PatchState : std::uint8_t { Inside, Outside, Wall, Exit };

struct Cell {
    int x = 0;
    int y = 0;
    auto operator<=>(const Cell&) const = default;
};

/// One perimeter exit slot. width_pu == 0 means the exit is closed.
/// 1 PU corresponds to 1 cell = 1 m in the simulated world.
struct ExitSpec {
    int slot = 0;     // 1..8
    int width_pu = 0; // >= 0
    auto operator<=>(const ExitSpec&) const = default;
};

/// Cells of a perimeter exit slot, resolved against a w x h grid.
///
/// Slots are numbered clockwise from the top wall: 1,2 on the top wall, 3,4
/// on the right wall, 5,6 on the bottom wall, 7,8 on the left wall. The first
/// slot of each wall sits one third of the way along the wall in clockwise
/// direction, the second two thirds (anchor = floor(len/3) resp.
/// floor(2*len/3) cells of clockwise travel). Widths > 1 extend around the
/// anchor, the odd extra cell going to the clockwise side. Cells must stay on
/// the wall and off its two corner cells.
std::vector<Cell> resolve_slot(int slot, int width_pu, int grid_width, int grid_height);

/// A set of exit slots resolved against a fixed grid size.
class ExitLayout {
public:
    ExitLayout() = default;
    ExitLayout(std::vector<ExitSpec> exits, int grid_width, int grid_height);

    const std::vector<ExitSpec>& exits() const { return exits_; }
    int grid_width() const { return grid_width_; }
    int grid_height() const { return grid_height_; }
    int total_width_pu() const { return total_width_pu_; }
    int open_exit_count() const { return open_exit_count_; }

    /// All exit cells, in slot order then clockwise within a slot.
    const std::vector<Cell>& exit_cells() const { return exit_cells_; }
    /// Cells of one open slot (empty for closed or absent slots).
    std::vector<Cell> cells_of_slot(int slot) const;
    /// Slots with width_pu >= 1, ascending.
    std::vector<ExitSpec> open_exits() const;

    bool operator==(const ExitLayout&) const = default;

private:
    std::vector<ExitSpec> exits_;
    std::vector<Cell> exit_cells_;
    std::vector<int> cell_slots_; // slot owning exit_cells_[i]
    int grid_width_ = 0;
    int grid_height_ = 0;
    int total_width_pu_ = 0;
    int open_exit_count_ = 0;

    friend class GridWorld;
};

/// The discretized space: a w x h bounding grid whose perimeter is Wall
/// except for the exit cells, with everything strictly inside walkable.
/// Immutable after construction.
class GridWorld {
public:
    static constexpr double kCellSizeMeters = 1.0;

    /// Builds the grid. Rejects degenerate dimensions, ill-fitting exits and
    /// layouts with no open exit (a simulation world must be escapable).
    static GridWorld build(int width, int height, const ExitLayout& layout);

    int width() const { return width_; }
    int height() const { return height_; }
    const ExitLayout& layout() const { return layout_; }

    PatchState at(int x, int y) const {
        assert(in_bounds(x, y));
        return cells_[static_cast<std::size_t>(y) * width_ + x];
    }
    PatchState at(Cell c) const { return at(c.x, c.y); }

    bool in_bounds(int x, int y) const {
        return x >= 0 && x < width_ && y >= 0 && y < height_;
    }
    bool walkable(int x, int y) const {
        PatchState s = at(x, y);
        return s == PatchState::Inside || s == PatchState::Exit;
    }

    /// Slot owning the exit cell at (x, y), or 0 if the cell is not an exit.
    int exit_slot_at(int x, int y) const {
        assert(in_bounds(x, y));
        return exit_slot_[static_cast<std::size_t>(y) * width_ + x];
    }

    long inside_count() const { return inside_count_; }
    long wall_count() const { return wall_count_; }
    long exit_count() const { return exit_count_; }
    long outside_count() const { return outside_count_; }

    /// All Inside cells in row-major order (y outer, x inner). This order is
    /// part of the reproducibility contract: occupant seeding samples from it.
    std::vector<Cell> inside_cells() const;

private:
    GridWorld() = default;

    int width_ = 0;
    int height_ = 0;
    std::vector<PatchState> cells_;
    std::vector<int> exit_slot_;
    ExitLayout layout_;
    long inside_count_ = 0;
    long wall_count_ = 0;
    long exit_count_ = 0;
    long outside_count_ = 0;
};

/// Grid of shortest-path distances (in cells) to the nearest exit, so agents
/// can head toward the nearest exit by walking downhill.
struct DistanceField {
    static constexpr std::int32_t kUnreachable = -1;

    int width = 0;
    int height = 0;
    std::vector<std::int32_t> dist;

    std::int32_t at(int x, int y) const {
        assert(x >= 0 && x < width && y >= 0 && y < height);
        return dist[static_cast<std::size_t>(y) * width + x];
    }
    std::int32_t at(Cell c) const { return at(c.x, c.y); }

    /// Largest finite distance in the field (0 if none).
    std::int32_t max_finite() const;
};

/// Multi-source breadth-first distances from the set of Exit cells over
/// walkable cells, 8-neighbor (Moore) adjacency, unit step cost.
DistanceField compute_distance_field(const GridWorld& world);

/// Moore neighborhood scan order, fixed for reproducibility: row-major,
/// (dx, dy) from (-1,-1) to (1,1) skipping (0,0).
inline constexpr Cell kMooreOffsets[8] = {
    {-1, -1}, {0, -1}, {1, -1}, {-1, 0}, {1, 0}, {-1, 1}, {0, 1}, {1, 1},
};

} // namespace evacsim
