#include <doctest.h>

#include "coxshadow/shadows.hpp"

using namespace coxshadow;

namespace {
Weight wt(const RootDatum& d, std::initializer_list<std::int64_t> cs) {
  Weight v = Vec::zero(d.rank());
  int i = 0;
  for (auto c : cs) v[i++] = c;
  return v;
}

std::set<AffineElement> elems(const RootDatum& d, std::initializer_list<Word> words) {
  std::set<AffineElement> s;
  for (const Word& w : words) s.insert(from_word(d, w));
  return s;
}
}  // namespace

TEST_CASE("rank one shadows") {
  const RootDatum& a1 = RootDatum::get("A1~");
  AffineElement x = from_word(a1, {1, 0});
  Orientation anti = Orientation::at_infinity(a1.longest_element());
  CHECK(shadow_brute(a1, x, anti).elements == elems(a1, {{1, 0}, {0}, {1}}));
  CHECK(shadow_brute(a1, x, Orientation::at_infinity(a1.identity())).elements ==
        elems(a1, {{1, 0}}));
  CHECK(shadow_brute(a1, aff_identity(a1), anti).elements == elems(a1, {{}}));
  CHECK(shadow_recursive(a1, x, anti).elements == elems(a1, {{1, 0}, {0}, {1}}));
  CHECK(shadow_recursive(a1, x, anti, Recursion::Left).elements ==
        elems(a1, {{1, 0}, {0}, {1}}));
}

TEST_CASE("trivial-positive shadows are Bruhat intervals") {
  const RootDatum& a1 = RootDatum::get("A1~");
  CHECK(bruhat_interval(a1, from_word(a1, {1, 0})) == elems(a1, {{}, {0}, {1}, {1, 0}}));
  CHECK(bruhat_interval(a1, from_word(a1, {1})) == elems(a1, {{}, {1}}));

  const RootDatum& a2 = RootDatum::get("A2~");
  auto ball = length_ball(a2, 5);
  for (const auto& x : ball) {
    std::set<AffineElement> oracle;
    for (const auto& y : ball)
      if (bruhat_leq(a2, y, x)) oracle.insert(y);
    CHECK(bruhat_interval(a2, x) == oracle);
    CHECK(shadow_brute(a2, x, Orientation::alcove_towards(aff_identity(a2))).elements == oracle);
  }
}

TEST_CASE("recursive shadows agree with brute force") {
  for (const char* tag : {"A1~", "A2~"}) {
    const RootDatum& d = RootDatum::get(tag);
    for (const auto& x : length_ball(d, 5))
      for (int u = 0; u < d.order(); ++u) {
        Orientation o = Orientation::at_infinity(u);
        auto brute = shadow_brute(d, x, o).elements;
        CHECK(shadow_recursive(d, x, o, Recursion::Right).elements == brute);
        CHECK(shadow_recursive(d, x, o, Recursion::Left).elements == brute);
        CHECK(brute.count(x) == 1);
      }
  }
  const RootDatum& a1 = RootDatum::get("A1~");
  CHECK_THROWS_AS(shadow_recursive(a1, aff_identity(a1), Orientation::trivial_pos()),
                  PreconditionError);
}

TEST_CASE("chamber shadows are independent of the reduced word") {
  const RootDatum& a2 = RootDatum::get("A2~");
  for (const auto& x : length_ball(a2, 6))
    for (int u = 0; u < a2.order(); ++u) {
      Orientation o = Orientation::at_infinity(u);
      auto canonical =
          shadow_frontier(a2, reduced_word(a2, x), {aff_identity(a2)}, o);
      for (const auto& w : all_reduced_words(a2, x))
        CHECK(shadow_frontier(a2, w, {aff_identity(a2)}, o) == canonical);
    }
}

TEST_CASE("vertex shadows") {
  const RootDatum& a1 = RootDatum::get("A1~");
  Orientation anti = Orientation::at_infinity(a1.longest_element());
  CHECK(vertex_shadow(a1, wt(a1, {1}), anti) ==
        std::set<Weight>{wt(a1, {1}), wt(a1, {0}), wt(a1, {-1})});
  CHECK(vertex_shadow(a1, wt(a1, {0}), anti) == std::set<Weight>{wt(a1, {0})});

  const RootDatum& a2 = RootDatum::get("A2~");
  auto vs = vertex_shadow(a2, a2.theta_coroot(), Orientation::at_infinity(a2.longest_element()));
  CHECK(vs.size() == 7);
  CHECK(vs.count(wt(a2, {0, 0})) == 1);
  for (const auto& v : a2.weyl_orbit(a2.theta_coroot())) CHECK(vs.count(v) == 1);
  CHECK_THROWS_AS(vertex_shadow(a2, wt(a2, {1, 0}), anti), PreconditionError);
}

TEST_CASE("vertex shadows realize hull intersections") {
  const RootDatum& a1 = RootDatum::get("A1~");
  auto r1 = verify_convexity(a1, wt(a1, {1}));
  CHECK(r1.equal);
  CHECK(r1.shadow == std::set<Weight>{wt(a1, {-1}), wt(a1, {0}), wt(a1, {1})});
  auto r2 = verify_convexity(a1, wt(a1, {2}));
  CHECK(r2.equal);
  CHECK(r2.shadow.size() == 5);
  const RootDatum& a2 = RootDatum::get("A2~");
  auto r3 = verify_convexity(a2, a2.theta_coroot());
  CHECK(r3.equal);
  CHECK(r3.hull_points.size() == 7);
}

TEST_CASE("mask enumeration matches the frontier") {
  const RootDatum& a2 = RootDatum::get("A2~");
  for (const auto& x : length_ball(a2, 5))
    for (int u = 0; u < a2.order(); ++u) {
      Orientation o = Orientation::at_infinity(u);
      std::set<AffineElement> ends;
      enumerate_positively_folded(a2, reduced_word(a2, x), {aff_identity(a2)}, o,
                                  [&](const Gallery& g, const GalleryTrack& t) {
                                    CHECK(is_positively_folded(a2, o, g));
                                    ends.insert(t.end);
                                  });
      CHECK(ends == shadow_brute(a2, x, o).elements);
    }
}
