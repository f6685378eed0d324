#include <doctest.h>

#include <algorithm>
#include <array>

#include "evacsim/render.hpp"

using namespace evacsim;

TEST_CASE("text render of the smallest world") {
    GridWorld w = GridWorld::build(3, 3, ExitLayout({{1, 1}}, 3, 3));
    Simulation sim(w, 1, 1);
    CHECK(render_text(sim) == "#E#\n#o#\n###\n");

    Simulation empty(w, 0, 1);
    CHECK(render_text(empty) == "#E#\n#.#\n###\n");
}

TEST_CASE("text render counts per glyph") {
    GridWorld w = GridWorld::build(55, 55, ExitLayout({{2, 1}}, 55, 55));
    Simulation sim(w, 0, 1);
    std::string img = render_text(sim);
    CHECK(std::count(img.begin(), img.end(), '\n') == 55);
    CHECK(std::count(img.begin(), img.end(), '#') == 215);
    CHECK(std::count(img.begin(), img.end(), 'E') == 1);
    CHECK(std::count(img.begin(), img.end(), '.') == 2809);
    CHECK(std::count(img.begin(), img.end(), 'o') == 0);
    CHECK(img.size() == 55u * 56u);

    Simulation peopled(w, 137, 1);
    std::string img2 = render_text(peopled);
    CHECK(std::count(img2.begin(), img2.end(), 'o') == 137);
    CHECK(std::count(img2.begin(), img2.end(), '.') == 2809 - 137);
    CHECK(render_text(peopled) == img2);
}

TEST_CASE("ppm render is a valid P6 image") {
    GridWorld w = GridWorld::build(3, 3, ExitLayout({{1, 1}}, 3, 3));
    Simulation sim(w, 1, 1);
    std::string ppm = render_ppm(sim);
    std::string header = "P6\n3 3\n255\n";
    REQUIRE(ppm.size() == header.size() + 27);
    CHECK(ppm.substr(0, header.size()) == header);

    auto pixel = [&](int x, int y) {
        std::size_t off = header.size() + 3 * (static_cast<std::size_t>(y) * 3 + x);
        return std::array<unsigned char, 3>{static_cast<unsigned char>(ppm[off]),
                                            static_cast<unsigned char>(ppm[off + 1]),
                                            static_cast<unsigned char>(ppm[off + 2])};
    };
    CHECK(pixel(0, 0) == std::array<unsigned char, 3>{128, 128, 128}); // wall
    CHECK(pixel(1, 0) == std::array<unsigned char, 3>{255, 255, 255}); // exit
    CHECK(pixel(1, 1) == std::array<unsigned char, 3>{200, 30, 30});   // agent
}

TEST_CASE("ppm size scales with the grid") {
    GridWorld w = GridWorld::build(12, 7, ExitLayout({{4, 1}}, 12, 7));
    Simulation sim(w, 5, 3);
    std::string ppm = render_ppm(sim);
    CHECK(ppm.substr(0, 10) == "P6\n12 7\n25");
    CHECK(ppm.size() == std::string("P6\n12 7\n255\n").size() + 12u * 7u * 3u);
}
