#pragma once

#include <string>

#include "evacsim/engine.hpp"

namespace evacsim {

/// One character per cell, one line per grid row:
///   '#' Wall, '.' empty Inside, 'o' agent, 'E' Exit, ' ' Outside.
std::string render_text(const Simulation& sim);

/// Binary portable pixmap (P6, maxval 255). Colors: Outside black, Inside
/// and Exit white, Wall mid grey (128), agents red (200, 30, 30).
std::string render_ppm(const Simulation& sim);

} // namespace evacsim
