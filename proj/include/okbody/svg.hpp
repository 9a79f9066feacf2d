#pragma once

#include <string>

#include "okbody/okounkov.hpp"
#include "okbody/slices.hpp"

namespace okb {

// Standalone SVG renderings. Display coordinates are rounded to six decimal
// digits; the exact values ride along in data-exact attributes so nothing is
// lost. Throws IOError when the file cannot be written.
void emit_svg_polygon(const VertexList& vertices, const std::string& path);
void emit_svg_slice(const SliceBody& body, const std::string& path);

} // namespace okb
