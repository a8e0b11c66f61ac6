#pragma once

#include <map>
#include <utility>
#include <vector>

#include "coxshadow/shadows.hpp"

namespace coxshadow {

// Positively folded gallery together with its load-bearing data.
struct DimensionedGallery {
  Gallery gallery;
  Orientation orientation;  // AtInfinity
  // position 0 = start vertex; positions 1..n = panels.
  std::vector<std::pair<int, Hyperplane>> load_bearing;
  std::int64_t dimension = 0;
  Weight end_vertex;
};

// Load-bearing pairs of a positively folded vertex gallery starting at the
// origin: at position 0 every wall through the origin with c0 on its positive
// side, except walls containing the unfolded direction of the gallery (they
// carry its initial stretch); at panel i the panel wall when c_i lands on its
// positive side.
std::vector<std::pair<int, Hyperplane>> load_bearing_pairs(const RootDatum& d, const Gallery& g,
                                                           const Orientation& o);

std::int64_t dimension(const RootDatum& d, const Gallery& g, const Orientation& o);

// The dimension bound for endpoint mu of a gallery of the type of lambda.
std::int64_t ls_dimension_bound(const RootDatum& d, const Weight& lambda, const Weight& mu);

// All positively folded galleries of the type traced by the segment from the
// origin to lambda, perturbed toward the antidominant direction (antidominant
// orientation, starts around the origin flanking the segment on the positive
// side of any wall containing it), attaining the dimension bound for their
// endpoint. For regular lambda the type is a minimal vertex gallery type and
// every alcove around the origin is a start.
std::vector<DimensionedGallery> ls_galleries(const RootDatum& d, const Weight& lambda);

// Multiset of LS-gallery end vertices; equals the character of V(lambda).
std::map<Weight, std::int64_t> gallery_character(const RootDatum& d, const Weight& lambda);

// Extreme points of the convex hull of the end vertices of all partial
// unfoldings of an LS-gallery.
std::vector<Weight> mv_polytope(const RootDatum& d, const Weight& lambda,
                                const DimensionedGallery& delta);

}  // namespace coxshadow
