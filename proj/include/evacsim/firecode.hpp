#pragma once

#include <optional>
#include <string>
#include <vector>

#include "evacsim/world.hpp"

namespace evacsim {

/// Continuous plan coordinates, in meters. Cell (x, y) covers the unit square
/// [x, x+1) x [y, y+1), so its center is (x + 0.5, y + 0.5).
struct Point {
    double x = 0.0;
    double y = 0.0;
    bool operator==(const Point&) const = default;
};

inline Point cell_center(Cell c) { return {c.x + 0.5, c.y + 0.5}; }

/// Midpoint of an open exit: the mean of its cell centers.
Point exit_midpoint(const ExitLayout& layout, int slot);

/// Two exits count as independent escape routes when an observer sees them at
/// least this far apart.
inline constexpr double kIndependenceAngleDeg = 45.0;

/// One passage unit per started group of 100 occupants.
long required_pu(long occupants);

/// Legal width in meters of an opening totalling n PU: the first PU is 0.9 m,
/// two are 1.4 m, beyond that n x 0.6 m.
double pu_to_meters(long n_pu);

/// Required number of independent exits by occupant band. The table is data
/// so jurisdictions with other codes can substitute their own.
struct ExitCountBand {
    long max_occupants = 0;
    int required_exits = 0;
};

struct ExitCountTable {
    std::vector<ExitCountBand> bands; // ascending max_occupants
    long step_beyond = 500;           // +1 exit per started group of this size past the last band

    int required_exits(long occupants) const;

    /// Shipped default: 1-50 -> 1, 51-500 -> 2, 501-800 -> 3, 801-1000 -> 5,
    /// then one more exit per additional 500 occupants.
    static ExitCountTable portuguese_default();
};

struct PuRequirement {
    long occupants = 0;
    long required_pu = 0;
    int required_exits = 0;
};

PuRequirement compute_requirement(long occupants, const ExitCountTable& table);

/// Angle in degrees, within [0, 180], at `vantage` between the rays toward
/// `a` and `b`.
double subtended_angle_deg(Point a, Point b, Point vantage);

/// Size of the largest subset of open exits whose pairs all subtend at least
/// 45 degrees at the vantage. Exact brute force (at most 8 exits, 255 subsets).
int independent_exit_count(const ExitLayout& layout, Point vantage);

/// Observer position used when the caller does not supply one: the centroid
/// of the open exits' midpoints if it lies strictly inside the wall ring,
/// otherwise the room centroid. Exit-heavy walls pull the observer toward
/// them, which matches reading the plan from where the escape routes matter;
/// the fallback covers layouts whose centroid degenerates onto a wall.
Point default_vantage(const ExitLayout& layout);

struct ExitPairAngle {
    int slot_a = 0;
    int slot_b = 0;
    double angle_deg = 0.0;
    bool independent = false;
};

struct ComplianceReport {
    PuRequirement requirement;
    long provided_pu = 0;
    int provided_exits = 0;
    int independent_exits = 0;
    Point vantage;
    std::vector<ExitPairAngle> pair_angles;
    bool compliant = false;
    std::vector<std::string> violations;

    double required_meters() const { return pu_to_meters(requirement.required_pu); }
    double provided_meters() const { return pu_to_meters(provided_pu); }
};

/// Checks a layout against the exit-sizing rules: enough total PU and enough
/// pairwise-independent exits for the occupant count. Without an explicit
/// vantage the default policy above applies.
ComplianceReport check_compliance(long occupants, const ExitLayout& layout,
                                  std::optional<Point> vantage = std::nullopt,
                                  const ExitCountTable& table = ExitCountTable::portuguese_default());

} // namespace evacsim
