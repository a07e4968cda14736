#pragma once

#include "kinn/dissection.hpp"

#include <optional>
#include <string>

namespace kinn {

// SVG 1.1 diagram of a dissection: vertices equally spaced on a circle with
// vertex 0 at the bottom and labels increasing counterclockwise, one line
// per diagonal, and the marked face (when given) filled. Output bytes are
// deterministic for identical input.
std::string render_svg(const Dissection& d, const std::optional<Face>& marked = std::nullopt);

std::string render_svg(const KInN& x);

}  // namespace kinn
