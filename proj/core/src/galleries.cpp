#include "coxshadow/galleries.hpp"

#include <limits>

namespace coxshadow {

Gallery minimal_gallery(const RootDatum& d, const AffineElement& a, const AffineElement& b) {
  Gallery g;
  g.start = a;
  g.type = reduced_word(d, aff_mul(d, aff_inv(d, a), b));
  g.folds.assign(g.type.size(), 0);
  return g;
}

GalleryTrack evaluate(const RootDatum& d, const Gallery& g) {
  GalleryTrack t;
  AffineElement c = g.start;
  t.alcoves.push_back(c);
  for (std::size_t i = 0; i < g.type.size(); ++i) {
    if (!g.folds[i]) c = aff_mul(d, c, letter_element(d, g.type[i]));
    t.alcoves.push_back(c);
  }
  t.end = c;
  if (g.end_vertex_requested) t.end_vertex = c.trans;
  return t;
}

namespace {

Gallery toggle(const RootDatum&, const Gallery& g, int i, bool expect_folded) {
  if (i < 1 || i > static_cast<int>(g.type.size()))
    throw InputError("fold index out of range: " + std::to_string(i));
  if (static_cast<bool>(g.folds[i - 1]) != expect_folded)
    throw PreconditionError(expect_folded ? "unfold_at: panel is not folded"
                                          : "fold_at: panel is already folded");
  Gallery r = g;
  r.folds[i - 1] = !r.folds[i - 1];
  return r;
}

}  // namespace

Gallery fold_at(const RootDatum& d, const Gallery& g, int i) { return toggle(d, g, i, false); }

Gallery unfold_at(const RootDatum& d, const Gallery& g, int i) { return toggle(d, g, i, true); }

Gallery act(const RootDatum& d, const AffineElement& w, const Gallery& g) {
  Gallery r = g;
  r.start = aff_mul(d, w, g.start);
  return r;
}

Gallery minimal_vertex_gallery(const RootDatum& d, const Weight& lambda) {
  if (!d.is_dominant(lambda))
    throw PreconditionError("minimal_vertex_gallery: lambda must be dominant");
  AffineElement tl = translation(d, lambda);
  AffineElement best = tl;
  std::int64_t best_len = std::numeric_limits<std::int64_t>::max();
  for (int w = 0; w < d.order(); ++w) {
    AffineElement cand = aff_mul(d, tl, AffineElement{w, Vec::zero(d.rank())});
    std::int64_t l = length(d, cand);
    if (l < best_len || (l == best_len && cand < best)) {
      best = cand;
      best_len = l;
    }
  }
  Gallery g = minimal_gallery(d, aff_identity(d), best);
  g.has_start_vertex = true;
  g.end_vertex_requested = true;
  return g;
}

}  // namespace coxshadow
