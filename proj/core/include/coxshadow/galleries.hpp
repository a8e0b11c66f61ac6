#pragma once

#include <optional>
#include <vector>

#include "coxshadow/affineweyl.hpp"

namespace coxshadow {

// Combinatorial gallery: start alcove, type word and fold mask. The alcove
// track is recomputed on demand; equality is structural.
struct Gallery {
  AffineElement start;
  Word type;
  std::vector<char> folds;       // folds[i] != 0: the gallery folds at panel i+1
  bool has_start_vertex = false; // start vertex is the origin (type-0 vertex of start)
  bool end_vertex_requested = false;

  auto operator<=>(const Gallery&) const = default;
};

struct GalleryTrack {
  std::vector<AffineElement> alcoves;  // c_0, ..., c_n
  AffineElement end;
  std::optional<Weight> end_vertex;    // type-0 vertex of the final alcove
};

Gallery minimal_gallery(const RootDatum& d, const AffineElement& a, const AffineElement& b);

GalleryTrack evaluate(const RootDatum& d, const Gallery& g);

Gallery fold_at(const RootDatum& d, const Gallery& g, int i);    // i in 1..n, not folded
Gallery unfold_at(const RootDatum& d, const Gallery& g, int i);  // i in 1..n, folded

Gallery act(const RootDatum& d, const AffineElement& w, const Gallery& g);

// Vertex-to-vertex gallery from the origin to dominant lambda, running to the
// alcove around lambda of minimal length.
Gallery minimal_vertex_gallery(const RootDatum& d, const Weight& lambda);

}  // namespace coxshadow
