#ifndef LAMINA_RENDER_HPP_
#define LAMINA_RENDER_HPP_

#include <string>

#include "lamina/atlas.hpp"
#include "lamina/portrait.hpp"

namespace lamina {

/// Unit circle with one chord per pair of consecutive angles in each class
/// (a single chord for valence 2), one color per class. The characteristic
/// arc is drawn thick and the critical arc dashed.
std::string render_portrait_svg(const OrbitPortrait& portrait);

/// Root-pair chords of every component of period 2..max_period.
std::string render_wakes_svg(const Atlas& atlas, int max_period);

}  // namespace lamina

#endif  // LAMINA_RENDER_HPP_
