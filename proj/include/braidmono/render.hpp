#pragma once

#include <string>

#include "braidmono/braid.hpp"
#include "braidmono/tracker.hpp"

namespace braidmono {

// Schematic braid diagram: time runs left to right, one column per letter,
// the under strand is broken at each crossing. Deterministic layout.
std::string render_word_svg(const BraidWord& word);

// Plot of the tracked strands: x is loop time, y is the projection
// Re(e^{-i angle} z). Crossing gaps are placed by re-extracting the word;
// if extraction fails the curves are drawn without gaps.
std::string render_track_svg(const FiberTrack& track, double projection_angle);

}  // namespace braidmono
