#include "coxshadow/affineweyl.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace coxshadow {

AffineElement aff_identity(const RootDatum& d) {
  return AffineElement{0, Vec::zero(d.rank())};
}

AffineElement aff_mul(const RootDatum& d, const AffineElement& a, const AffineElement& b) {
  return AffineElement{d.mult(a.lin, b.lin), d.w_act(a.lin, b.trans) + a.trans};
}

AffineElement aff_inv(const RootDatum& d, const AffineElement& a) {
  int li = d.inverse(a.lin);
  return AffineElement{li, -d.w_act(li, a.trans)};
}

bool aff_is_identity(const AffineElement& a) { return a.lin == 0 && a.trans.is_zero(); }

AffineElement letter_element(const RootDatum& d, int letter) {
  const auto& g = d.gen(letter);
  return AffineElement{g.lin, g.trans};
}

AffineElement translation(const RootDatum& d, const Weight& lambda) {
  return AffineElement{0, lambda};
}

AffineElement from_word(const RootDatum& d, const Word& w) {
  AffineElement x = aff_identity(d);
  for (int l : w) x = aff_mul(d, x, letter_element(d, l));
  return x;
}

Vec sample_point_scaled(const RootDatum& d, const AffineElement& x) {
  std::int64_t twoh = 2 * d.coxeter_number();
  return d.w_act(x.lin, d.rho_covec_doubled()) + x.trans * twoh;
}

int side_of(const RootDatum& d, const Hyperplane& h, const AffineElement& x) {
  std::int64_t v = d.pair(d.positive_root(h.root), sample_point_scaled(d, x)) -
                   2 * d.coxeter_number() * h.level;
  assert(v != 0);
  return v > 0 ? 1 : -1;
}

Hyperplane wall_between(const RootDatum& d, const AffineElement& a, int letter) {
  const auto& g = d.gen(letter);
  Vec beta = d.w_act_root(a.lin, d.positive_root(g.wall_root));
  std::int64_t level = g.wall_level + d.pair(beta, a.trans);
  bool neg = false;
  for (int i = 0; i < beta.n; ++i)
    if (beta[i] < 0) neg = true;
  if (neg) {
    beta = -beta;
    level = -level;
  }
  int idx = d.find_positive_root(beta);
  assert(idx >= 0);
  return Hyperplane{idx, level};
}

AffineElement reflection(const RootDatum& d, const Hyperplane& h) {
  return AffineElement{d.reflection_for_root(h.root), d.positive_coroot(h.root) * h.level};
}

std::int64_t length(const RootDatum& d, const AffineElement& x) {
  // Walls separating b0 from x.b0, counted per positive root direction.
  Vec p = sample_point_scaled(d, x);
  std::int64_t twoh = 2 * d.coxeter_number();
  std::int64_t len = 0;
  for (int r = 0; r < d.num_positive_roots(); ++r) {
    std::int64_t v = d.pair(d.positive_root(r), p);
    std::int64_t fl = v >= 0 ? v / twoh : -((-v + twoh - 1) / twoh);
    len += fl >= 0 ? fl : -fl;
  }
  return len;
}

Word reduced_word(const RootDatum& d, AffineElement x) {
  Word w;
  std::int64_t len = length(d, x);
  while (len > 0) {
    for (int i = 0; i <= d.rank(); ++i) {
      AffineElement xs = aff_mul(d, x, letter_element(d, i));
      std::int64_t l = length(d, xs);
      if (l < len) {
        w.push_back(i);
        x = xs;
        len = l;
        break;
      }
    }
  }
  std::reverse(w.begin(), w.end());
  return w;
}

namespace {

void all_words_rec(const RootDatum& d, const AffineElement& x, std::int64_t len, Word& suffix,
                   std::vector<Word>& out) {
  if (len == 0) {
    Word w(suffix.rbegin(), suffix.rend());
    out.push_back(w);
    return;
  }
  for (int i = 0; i <= d.rank(); ++i) {
    AffineElement xs = aff_mul(d, x, letter_element(d, i));
    if (length(d, xs) < len) {
      suffix.push_back(i);
      all_words_rec(d, xs, len - 1, suffix, out);
      suffix.pop_back();
    }
  }
}

}  // namespace

std::vector<Word> all_reduced_words(const RootDatum& d, const AffineElement& x) {
  std::vector<Word> out;
  Word suffix;
  all_words_rec(d, x, length(d, x), suffix, out);
  return out;
}

bool bruhat_leq(const RootDatum& d, const AffineElement& y, const AffineElement& x) {
  Word w = reduced_word(d, x);
  AffineElement cur = y;
  std::int64_t len = length(d, cur);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    AffineElement cs = aff_mul(d, cur, letter_element(d, *it));
    std::int64_t l = length(d, cs);
    if (l < len) {
      cur = cs;
      len = l;
    }
  }
  return aff_is_identity(cur);
}

std::vector<AffineElement> length_ball(const RootDatum& d, int radius) {
  std::set<AffineElement> seen;
  std::vector<AffineElement> frontier{aff_identity(d)};
  seen.insert(frontier[0]);
  std::vector<std::vector<AffineElement>> by_len(radius + 1);
  by_len[0] = frontier;
  for (int l = 1; l <= radius; ++l) {
    std::vector<AffineElement> next;
    for (const auto& x : frontier) {
      for (int i = 0; i <= d.rank(); ++i) {
        AffineElement xs = aff_mul(d, x, letter_element(d, i));
        if (length(d, xs) == l && seen.insert(xs).second) next.push_back(xs);
      }
    }
    frontier = next;
    by_len[l] = std::move(next);
  }
  std::vector<AffineElement> out;
  for (auto& level : by_len) {
    std::sort(level.begin(), level.end(), [&](const AffineElement& a, const AffineElement& b) {
      Word wa = reduced_word(d, a), wb = reduced_word(d, b);
      if (wa != wb) return wa < wb;
      return a < b;
    });
    for (const auto& x : level) out.push_back(x);
  }
  return out;
}

std::string word_str(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s;
}

}  // namespace coxshadow
