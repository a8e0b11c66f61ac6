#pragma once

#include <map>
#include <string>
#include <vector>

#include "coxshadow/affineweyl.hpp"

namespace coxshadow {

// Deterministic SVG rendering of rank-2 affine Coxeter complexes. Floating
// point is confined to this renderer; identical inputs yield identical bytes.
struct RenderSpec {
  std::string type_tag;
  int view_radius = 6;                                   // length-ball bound
  std::vector<std::pair<AffineElement, std::string>> highlight_alcoves;  // alcove -> class
  std::vector<std::pair<Weight, std::string>> highlight_vertices;
  std::map<std::string, std::string> style;              // class -> fill color
  double scale = 40.0;
};

std::string render_svg(const RenderSpec& spec);

}  // namespace coxshadow
