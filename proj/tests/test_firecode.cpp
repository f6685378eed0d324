#include <doctest.h>

#include <algorithm>

#include "evacsim/firecode.hpp"

using namespace evacsim;

namespace {

ExitLayout row6_layout() {
    return ExitLayout({{1, 2}, {3, 2}, {4, 2}, {5, 2}, {7, 2}}, 55, 55);
}

ExitLayout row8_layout() {
    std::vector<ExitSpec> exits;
    for (int s = 1; s <= 8; ++s)
        exits.push_back({s, 2});
    return ExitLayout(exits, 55, 55);
}

} // namespace

TEST_CASE("passage units per started hundred") {
    CHECK(required_pu(0) == 0);
    CHECK(required_pu(1) == 1);
    CHECK(required_pu(100) == 1);
    CHECK(required_pu(101) == 2);
    CHECK(required_pu(1000) == 10);
    for (long n = 0; n <= 10000; ++n) {
        long expect = n / 100 + (n % 100 != 0 ? 1 : 0);
        REQUIRE(required_pu(n) == expect);
    }
}

TEST_CASE("passage units to meters") {
    CHECK(pu_to_meters(0) == 0.0);
    CHECK(pu_to_meters(1) == 0.9);
    CHECK(pu_to_meters(2) == 1.4);
    CHECK(pu_to_meters(3) == doctest::Approx(1.8).epsilon(1e-12));
    CHECK(pu_to_meters(10) == 6.0);
    double prev = pu_to_meters(2);
    for (long n = 3; n < 40; ++n) {
        double m = pu_to_meters(n);
        CHECK(m > prev);
        prev = m;
    }
}

TEST_CASE("required exit counts by occupancy band") {
    ExitCountTable t = ExitCountTable::portuguese_default();
    CHECK(t.required_exits(0) == 0);
    CHECK(t.required_exits(1) == 1);
    CHECK(t.required_exits(50) == 1);
    CHECK(t.required_exits(51) == 2);
    CHECK(t.required_exits(500) == 2);
    CHECK(t.required_exits(501) == 3);
    CHECK(t.required_exits(800) == 3);
    CHECK(t.required_exits(801) == 5);
    CHECK(t.required_exits(1000) == 5);
    CHECK(t.required_exits(1001) == 6);
    CHECK(t.required_exits(1500) == 6);
    CHECK(t.required_exits(1501) == 7);
}

TEST_CASE("custom band tables extend past their last band") {
    ExitCountTable t{{{10, 1}, {20, 3}}, 5};
    CHECK(t.required_exits(0) == 0);
    CHECK(t.required_exits(10) == 1);
    CHECK(t.required_exits(11) == 3);
    CHECK(t.required_exits(20) == 3);
    CHECK(t.required_exits(21) == 4);
    CHECK(t.required_exits(25) == 4);
    CHECK(t.required_exits(26) == 5);
}

TEST_CASE("exit midpoints are cell-center means") {
    ExitLayout l = row6_layout();
    CHECK(exit_midpoint(l, 1) == Point{19.0, 0.5});
    CHECK(exit_midpoint(l, 3) == Point{54.5, 19.0});
    CHECK(exit_midpoint(l, 4) == Point{54.5, 37.0});
    CHECK(exit_midpoint(l, 5) == Point{36.0, 54.5});
    CHECK(exit_midpoint(l, 7) == Point{0.5, 36.0});
    CHECK_THROWS_AS(exit_midpoint(l, 2), SlotOutOfRange);
    CHECK_THROWS_AS(exit_midpoint(l, 9), SlotOutOfRange);
}

TEST_CASE("subtended angles") {
    CHECK(subtended_angle_deg({1, 0}, {0, 1}, {0, 0}) == doctest::Approx(90.0).epsilon(1e-12));
    CHECK(subtended_angle_deg({2, 0}, {1, 0}, {0, 0}) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(subtended_angle_deg({1, 0}, {-1, 0}, {0, 0}) == doctest::Approx(180.0).epsilon(1e-12));
    // Symmetric in the two targets, invariant under scaling about the vantage.
    Point v{3.0, 4.0};
    Point a{7.5, 9.0}, b{-2.0, 6.5};
    CHECK(subtended_angle_deg(a, b, v) == subtended_angle_deg(b, a, v));
    Point a2{v.x + 10 * (a.x - v.x), v.y + 10 * (a.y - v.y)};
    CHECK(subtended_angle_deg(a, b, v) == doctest::Approx(subtended_angle_deg(a2, b, v)).epsilon(1e-12));
    CHECK_THROWS_AS(subtended_angle_deg(v, b, v), DegenerateVantage);
}

TEST_CASE("diametrically opposite exits subtend a straight angle") {
    ExitLayout l({{2, 2}, {6, 2}}, 55, 55);
    Point mid2 = exit_midpoint(l, 2);
    Point mid6 = exit_midpoint(l, 6);
    double ang = subtended_angle_deg(mid2, mid6, {27.5, 27.5});
    CHECK(ang == doctest::Approx(180.0).epsilon(1e-9));
    CHECK(independent_exit_count(l, {27.5, 27.5}) == 2);
}

TEST_CASE("neighbouring exits on one wall merge into one route") {
    ExitLayout l({{1, 1}, {2, 1}}, 55, 55);
    Point mid1 = exit_midpoint(l, 1); // (18.5, 0.5)
    Point mid2 = exit_midpoint(l, 2); // (36.5, 0.5)
    double ang = subtended_angle_deg(mid1, mid2, {27.5, 27.5});
    CHECK(ang == doctest::Approx(36.8699).epsilon(1e-4));
    CHECK(independent_exit_count(l, {27.5, 27.5}) == 1);
}

TEST_CASE("independent exit count depends on the vantage") {
    ExitLayout l = row6_layout();
    CHECK(independent_exit_count(l, {27.5, 27.5}) == 4); // slots 3 and 4 conflict from the room centre
    CHECK(independent_exit_count(l, {32.9, 29.4}) == 5);
}

TEST_CASE("default vantage favours the exit centroid") {
    ExitLayout l = row6_layout();
    Point v = default_vantage(l);
    CHECK(v.x == doctest::Approx(32.9).epsilon(1e-12));
    CHECK(v.y == doctest::Approx(29.4).epsilon(1e-12));

    CHECK(default_vantage(row8_layout()) == Point{27.5, 27.5});

    // A lone exit's centroid sits on the wall; fall back to the room centre.
    ExitLayout single({{2, 1}}, 55, 55);
    CHECK(default_vantage(single) == Point{27.5, 27.5});
}

TEST_CASE("independent count never exceeds the open count") {
    ExitLayout l = row8_layout();
    int c = independent_exit_count(l, default_vantage(l));
    CHECK(c == 4);
    CHECK(c <= l.open_exit_count());
}

TEST_CASE("a five-exit double-unit layout satisfies the thousand-occupant rules") {
    ComplianceReport rep = check_compliance(1000, row6_layout());
    CHECK(rep.requirement.required_pu == 10);
    CHECK(rep.requirement.required_exits == 5);
    CHECK(rep.provided_pu == 10);
    CHECK(rep.provided_exits == 5);
    CHECK(rep.independent_exits == 5);
    CHECK(rep.compliant);
    CHECK(rep.violations.empty());
    CHECK(rep.required_meters() == 6.0);
    CHECK(rep.provided_meters() == 6.0);
    CHECK(rep.pair_angles.size() == 10); // C(5,2)
    for (const ExitPairAngle& pa : rep.pair_angles)
        CHECK(pa.independent == (pa.angle_deg >= kIndependenceAngleDeg - 1e-9));
}

TEST_CASE("an undersized layout reports both violations") {
    ComplianceReport rep = check_compliance(1000, ExitLayout({{2, 1}}, 55, 55));
    CHECK(!rep.compliant);
    REQUIRE(rep.violations.size() == 2);
    CHECK(rep.violations[0].find("insufficient width") != std::string::npos);
    CHECK(rep.violations[1].find("insufficient exits") != std::string::npos);
}

TEST_CASE("an explicit vantage can break compliance") {
    ComplianceReport rep = check_compliance(1000, row6_layout(), Point{27.5, 27.5});
    CHECK(rep.vantage == Point{27.5, 27.5});
    CHECK(rep.independent_exits == 4);
    CHECK(!rep.compliant);
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].find("insufficient exits") != std::string::npos);
}

TEST_CASE("more exits is not automatically better") {
    // Eight exits provide ample width but only four independent directions.
    ComplianceReport rep = check_compliance(1000, row8_layout());
    CHECK(rep.provided_pu == 16);
    CHECK(rep.independent_exits == 4);
    CHECK(!rep.compliant);
}

TEST_CASE("an empty room is trivially compliant") {
    ComplianceReport rep = check_compliance(0, row6_layout());
    CHECK(rep.requirement.required_pu == 0);
    CHECK(rep.requirement.required_exits == 0);
    CHECK(rep.compliant);
}
