#pragma once

#include <string>
#include <vector>

#include "pierce/fingerhut.hpp"
#include "pierce/spanning.hpp"

namespace pierce {

// Standalone SVG 1.1 figure: points as dots, tree edges in red, the
// enclosing circle as a bold outline with a cross at its center, diametral
// disks as translucent fills, ellipses as outlines.  Byte output is
// deterministic for fixed inputs.  Null tree/circle skip those layers.
std::string render_svg_string(const Instance& inst, const Tree* tree, const Circle* circle,
                              const std::vector<Disk>& disks,
                              const std::vector<EllipseSpec>& ellipses);

// Same, written to `path`.  Throws IoError on failure.
void render_svg(const Instance& inst, const Tree* tree, const Circle* circle,
                const std::vector<Disk>& disks, const std::vector<EllipseSpec>& ellipses,
                const std::string& path);

}  // namespace pierce
