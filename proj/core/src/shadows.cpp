#include "coxshadow/shadows.hpp"

#include <algorithm>
#include <map>

namespace coxshadow {

std::set<AffineElement> shadow_frontier(const RootDatum& d, const Word& word,
                                        const std::set<AffineElement>& starts,
                                        const Orientation& o) {
  std::set<AffineElement> frontier = starts;
  for (int letter : word) {
    std::set<AffineElement> next;
    for (const auto& a : frontier) {
      next.insert(aff_mul(d, a, letter_element(d, letter)));
      if (side(d, o, wall_between(d, a, letter), a) == 1) next.insert(a);
    }
    frontier = std::move(next);
  }
  return frontier;
}

ShadowResult shadow_brute(const RootDatum& d, const AffineElement& x, const Orientation& o) {
  ShadowResult r;
  r.base = x;
  r.orientation = o;
  r.elements = shadow_frontier(d, reduced_word(d, x), {aff_identity(d)}, o);
  return r;
}

std::set<AffineElement> bruhat_interval(const RootDatum& d, const AffineElement& x) {
  return shadow_brute(d, x, Orientation::trivial_pos()).elements;
}

namespace {

struct RecKey {
  AffineElement x;
  int chamber;
  auto operator<=>(const RecKey&) const = default;
};

using Memo = std::map<RecKey, std::set<AffineElement>>;

std::set<AffineElement> rec_shadow(const RootDatum& d, const AffineElement& x, int u,
                                   Recursion strategy, Memo& memo) {
  RecKey key{x, u};
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  std::set<AffineElement> result;
  if (aff_is_identity(x)) {
    result.insert(x);
  } else if (strategy == Recursion::Right) {
    // Pick s with l(xs) < l(x); Shadow(x) = Shadow(xs)·s ∪ {z admitting the fold}.
    std::int64_t len = length(d, x);
    int s = -1;
    AffineElement xs;
    for (int i = 0; i <= d.rank(); ++i) {
      AffineElement cand = aff_mul(d, x, letter_element(d, i));
      if (length(d, cand) < len) {
        s = i;
        xs = cand;
        break;
      }
    }
    Orientation o = Orientation::at_infinity(u);
    for (const auto& z : rec_shadow(d, xs, u, strategy, memo)) {
      result.insert(aff_mul(d, z, letter_element(d, s)));
      if (side(d, o, wall_between(d, z, s), z) == 1) result.insert(z);
    }
  } else {
    // Pick s with l(sx) < l(x); Shadow_o(x) = s·Shadow_{so}(sx), plus
    // Shadow_o(sx) when the alcove s·a lies on the o-negative side of its wall.
    std::int64_t len = length(d, x);
    int s = -1;
    AffineElement sx;
    for (int i = 0; i <= d.rank(); ++i) {
      AffineElement cand = aff_mul(d, letter_element(d, i), x);
      if (length(d, cand) < len) {
        s = i;
        sx = cand;
        break;
      }
    }
    Orientation o = Orientation::at_infinity(u);
    int su = d.mult(d.gen(s).lin, u);
    AffineElement gs = letter_element(d, s);
    for (const auto& z : rec_shadow(d, sx, su, strategy, memo))
      result.insert(aff_mul(d, gs, z));
    Hyperplane wall{d.gen(s).wall_root, d.gen(s).wall_level};
    if (side(d, o, wall, gs) == -1) {
      for (const auto& z : rec_shadow(d, sx, u, strategy, memo)) result.insert(z);
    }
  }
  memo.emplace(key, result);
  return result;
}

}  // namespace

ShadowResult shadow_recursive(const RootDatum& d, const AffineElement& x, const Orientation& o,
                              Recursion strategy) {
  if (o.kind != Orientation::Kind::AtInfinity)
    throw PreconditionError("shadow_recursive: AtInfinity orientations only");
  Memo memo;
  ShadowResult r;
  r.base = x;
  r.orientation = o;
  r.elements = rec_shadow(d, x, o.chamber, strategy, memo);
  return r;
}

namespace {

void enumerate_rec(const RootDatum& d, const Word& word, const Orientation& o, Gallery& g,
                   AffineElement cur, std::size_t pos,
                   const std::function<void(const Gallery&, const GalleryTrack&)>& visit) {
  if (pos == word.size()) {
    visit(g, evaluate(d, g));
    return;
  }
  int letter = word[pos];
  g.folds[pos] = 0;
  enumerate_rec(d, word, o, g, aff_mul(d, cur, letter_element(d, letter)), pos + 1, visit);
  if (side(d, o, wall_between(d, cur, letter), cur) == 1) {
    g.folds[pos] = 1;
    enumerate_rec(d, word, o, g, cur, pos + 1, visit);
    g.folds[pos] = 0;
  }
}

}  // namespace

void enumerate_positively_folded(
    const RootDatum& d, const Word& word, const std::vector<AffineElement>& starts,
    const Orientation& o,
    const std::function<void(const Gallery&, const GalleryTrack&)>& visit) {
  for (const auto& start : starts) {
    Gallery g;
    g.start = start;
    g.type = word;
    g.folds.assign(word.size(), 0);
    enumerate_rec(d, word, o, g, start, 0, visit);
  }
}

std::set<Weight> vertex_shadow(const RootDatum& d, const Weight& lambda, const Orientation& o) {
  if (!d.is_dominant(lambda)) throw PreconditionError("vertex_shadow: lambda must be dominant");
  Gallery mg = minimal_vertex_gallery(d, lambda);
  std::set<AffineElement> starts;
  for (int w = 0; w < d.order(); ++w) starts.insert(AffineElement{w, Vec::zero(d.rank())});
  std::set<Weight> out;
  for (const auto& end : shadow_frontier(d, mg.type, starts, o)) out.insert(end.trans);
  return out;
}

ConvexityReport verify_convexity(const RootDatum& d, const Weight& lambda) {
  ConvexityReport rep;
  rep.lambda = lambda;
  rep.shadow = vertex_shadow(d, lambda, Orientation::at_infinity(d.longest_element()));
  std::vector<std::int64_t> lo(d.rank()), hi(d.rank());
  for (const auto& v : d.weyl_orbit(lambda))
    for (int i = 0; i < d.rank(); ++i) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
  Weight nu = Vec::zero(d.rank());
  for (int i = 0; i < d.rank(); ++i) nu[i] = lo[i];
  while (true) {
    if (d.convex_hull_membership(nu, lambda)) rep.hull_points.insert(nu);
    int i = 0;
    while (i < d.rank() && nu[i] == hi[i]) {
      nu[i] = lo[i];
      ++i;
    }
    if (i == d.rank()) break;
    nu[i] += 1;
  }
  rep.equal = rep.shadow == rep.hull_points;
  return rep;
}

}  // namespace coxshadow
