#include <doctest.h>

#include <algorithm>

#include "coxshadow/affineweyl.hpp"

using namespace coxshadow;

namespace {
Weight wt(const RootDatum& d, std::initializer_list<std::int64_t> cs) {
  Weight v = Vec::zero(d.rank());
  int i = 0;
  for (auto c : cs) v[i++] = c;
  return v;
}
}  // namespace

TEST_CASE("words evaluate to affine elements") {
  const RootDatum& a1 = RootDatum::get("A1~");
  // s1 then s0 is the translation by alpha^vee with trivial linear part
  CHECK(from_word(a1, {1, 0}) == AffineElement{a1.identity(), wt(a1, {1})});
  CHECK(from_word(a1, {}) == aff_identity(a1));
  const RootDatum& a2 = RootDatum::get("A2~");
  CHECK(from_word(a2, {1, 1}) == aff_identity(a2));
  CHECK_THROWS_AS(from_word(a2, {5}), InputError);
}

TEST_CASE("sample points are generic and transform correctly") {
  const RootDatum& a1 = RootDatum::get("A1~");
  const Vec alpha = a1.positive_root(0);
  const std::int64_t two_h = 2 * a1.coxeter_number();  // scale of the point
  // <alpha, P(x)> / (2h) is the position of the alcove midpoint defect:
  // identity alcove sits at 1/2, translation by alpha^vee shifts by 2.
  CHECK(a1.pair(alpha, sample_point_scaled(a1, aff_identity(a1))) == two_h / 2);
  CHECK(a1.pair(alpha, sample_point_scaled(a1, AffineElement{0, wt(a1, {1})})) == two_h * 5 / 2);
  // the generator fixing level 1 reflects 1/2 to 3/2
  CHECK(a1.pair(alpha, sample_point_scaled(a1, letter_element(a1, 1))) == two_h * 3 / 2);
  CHECK(a1.pair(alpha, sample_point_scaled(a1, letter_element(a1, 0))) == -two_h / 2);
}

TEST_CASE("walls between adjacent alcoves") {
  const RootDatum& a1 = RootDatum::get("A1~");
  CHECK(wall_between(a1, aff_identity(a1), 1) == Hyperplane{0, 1});
  CHECK(wall_between(a1, aff_identity(a1), 0) == Hyperplane{0, 0});
  CHECK(wall_between(a1, AffineElement{0, wt(a1, {1})}, 1) == Hyperplane{0, 3});
  // the wall is the fixed set of a s a^-1
  const RootDatum& a2 = RootDatum::get("A2~");
  for (const auto& a : length_ball(a2, 4))
    for (int s = 0; s <= a2.rank(); ++s) {
      Hyperplane h = wall_between(a2, a, s);
      AffineElement conj =
          aff_mul(a2, aff_mul(a2, a, letter_element(a2, s)), aff_inv(a2, a));
      CHECK(conj == reflection(a2, h));
    }
}

TEST_CASE("length and reduced words") {
  const RootDatum& a1 = RootDatum::get("A1~");
  CHECK(length(a1, aff_identity(a1)) == 0);
  AffineElement ta = AffineElement{0, wt(a1, {1})};
  CHECK(length(a1, ta) == 2);
  CHECK(reduced_word(a1, ta) == Word{1, 0});
  const RootDatum& a2 = RootDatum::get("A2~");
  CHECK(length(a2, translation(a2, a2.theta_coroot())) == 4);

  // round trip on a ball
  for (const auto& x : length_ball(a2, 8)) {
    Word w = reduced_word(a2, x);
    CHECK(from_word(a2, w) == x);
    CHECK(static_cast<std::int64_t>(w.size()) == length(a2, x));
  }
}

TEST_CASE("translation length formula") {
  for (const char* tag : {"A1~", "A2~", "C2~"}) {
    const RootDatum& d = RootDatum::get(tag);
    std::vector<Weight> pts;
    if (d.rank() == 1) {
      for (std::int64_t a = -4; a <= 4; ++a) pts.push_back(wt(d, {a}));
    } else {
      for (std::int64_t a = -4; a <= 4; ++a)
        for (std::int64_t b = -4; b <= 4; ++b) pts.push_back(wt(d, {a, b}));
    }
    for (const Weight& lam : pts) {
      std::int64_t expect = 0;
      for (int r = 0; r < d.num_positive_roots(); ++r)
        expect += std::abs(d.pair(d.positive_root(r), lam));
      CHECK(length(d, translation(d, lam)) == expect);
    }
  }
}

TEST_CASE("all reduced words of one element evaluate equally") {
  const RootDatum& a2 = RootDatum::get("A2~");
  for (const auto& x : length_ball(a2, 6)) {
    auto words = all_reduced_words(a2, x);
    CHECK(!words.empty());
    for (const auto& w : words) {
      CHECK(w.size() == words.front().size());
      CHECK(from_word(a2, w) == x);
    }
  }
}

TEST_CASE("Bruhat order by subwords") {
  const RootDatum& a1 = RootDatum::get("A1~");
  AffineElement s1s0 = from_word(a1, {1, 0});
  CHECK(bruhat_leq(a1, aff_identity(a1), s1s0));
  CHECK(bruhat_leq(a1, from_word(a1, {1}), s1s0));
  CHECK(bruhat_leq(a1, from_word(a1, {0}), s1s0));
  CHECK_FALSE(bruhat_leq(a1, from_word(a1, {1, 0, 1}), s1s0));

  // covering pairs agree with single-letter deletions
  const RootDatum& a2 = RootDatum::get("A2~");
  auto ball = length_ball(a2, 6);
  for (const auto& x : ball) {
    std::set<AffineElement> deletions;
    for (const auto& w : all_reduced_words(a2, x))
      for (std::size_t i = 0; i < w.size(); ++i) {
        Word sub = w;
        sub.erase(sub.begin() + static_cast<long>(i));
        AffineElement y = from_word(a2, sub);
        if (length(a2, y) == length(a2, x) - 1) deletions.insert(y);
      }
    for (const auto& y : ball) {
      if (length(a2, y) != length(a2, x) - 1) continue;
      CHECK(bruhat_leq(a2, y, x) == (deletions.count(y) == 1));
    }
  }
}

TEST_CASE("side tests never tie") {
  const RootDatum& a2 = RootDatum::get("A2~");
  const std::int64_t two_h = 2 * a2.coxeter_number();
  for (const auto& a : length_ball(a2, 10)) {
    Vec p = sample_point_scaled(a2, a);
    for (int r = 0; r < a2.num_positive_roots(); ++r)
      for (std::int64_t k = -10; k <= 10; ++k)
        CHECK(a2.pair(a2.positive_root(r), p) != two_h * k);
  }
}

TEST_CASE("length ball ordering is deterministic") {
  const RootDatum& c2 = RootDatum::get("C2~");
  auto ball = length_ball(c2, 5);
  CHECK(ball.front() == aff_identity(c2));
  for (std::size_t i = 1; i < ball.size(); ++i) {
    std::int64_t la = length(c2, ball[i - 1]), lb = length(c2, ball[i]);
    CHECK(la <= lb);
    if (la == lb) CHECK(reduced_word(c2, ball[i - 1]) < reduced_word(c2, ball[i]));
  }
}
