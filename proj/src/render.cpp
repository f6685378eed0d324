#include "evacsim/render.hpp"

#include <sstream>

namespace evacsim {

std::string render_text(const Simulation& sim) {
    const GridWorld& w = sim.world();
    std::string out;
    out.reserve(static_cast<std::size_t>((w.width() + 1) * w.height()));
    for (int y = 0; y < w.height(); ++y) {
        for (int x = 0; x < w.width(); ++x) {
            char glyph;
            if (sim.occupant_at(x, y) != -1) {
                glyph = 'o';
            } else {
                switch (w.at(x, y)) {
                case PatchState::Wall: glyph = '#'; break;
                case PatchState::Inside: glyph = '.'; break;
                case PatchState::Exit: glyph = 'E'; break;
                default: glyph = ' '; break;
                }
            }
            out.push_back(glyph);
        }
        out.push_back('\n');
    }
    return out;
}

std::string render_ppm(const Simulation& sim) {
    const GridWorld& w = sim.world();
    std::ostringstream head;
    head << "P6\n" << w.width() << " " << w.height() << "\n255\n";
    std::string out = head.str();
    out.reserve(out.size() + static_cast<std::size_t>(w.width()) * w.height() * 3);
    for (int y = 0; y < w.height(); ++y)
        for (int x = 0; x < w.width(); ++x) {
            unsigned char r, g, b;
            if (sim.occupant_at(x, y) != -1) {
                r = 200, g = 30, b = 30;
            } else {
                switch (w.at(x, y)) {
                case PatchState::Wall: r = g = b = 128; break;
                case PatchState::Inside:
                case PatchState::Exit: r = g = b = 255; break;
                default: r = g = b = 0; break;
                }
            }
            out.push_back(static_cast<char>(r));
            out.push_back(static_cast<char>(g));
            out.push_back(static_cast<char>(b));
        }
    return out;
}

} // namespace evacsim
