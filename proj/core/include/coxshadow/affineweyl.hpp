#pragma once

#include <cstdint>
#include <vector>

#include "coxshadow/rootdata.hpp"

namespace coxshadow {

// Element of the affine Weyl group W0 ⋉ Q^vee, acting as v -> lin(v) + trans.
// Doubles as the label of the alcove x·(fundamental alcove).
struct AffineElement {
  int lin = 0;   // W0 index
  Vec trans;     // coroot coordinates

  auto operator<=>(const AffineElement&) const = default;
};

// Affine reflection hyperplane {v : <alpha, v> = k}, alpha a positive root.
struct Hyperplane {
  int root = 0;            // index into positive_roots
  std::int64_t level = 0;  // k

  auto operator<=>(const Hyperplane&) const = default;
};

using Word = std::vector<int>;  // letters over {0, 1, ..., rank}

AffineElement aff_identity(const RootDatum& d);
AffineElement aff_mul(const RootDatum& d, const AffineElement& a, const AffineElement& b);
AffineElement aff_inv(const RootDatum& d, const AffineElement& a);
bool aff_is_identity(const AffineElement& a);
AffineElement letter_element(const RootDatum& d, int letter);
AffineElement translation(const RootDatum& d, const Weight& lambda);
AffineElement from_word(const RootDatum& d, const Word& w);

// 2h * (x . b0) with b0 = rho^vee / h, in coroot coordinates. All side tests
// against a hyperplane (alpha, k) reduce to comparing <alpha, P(x)> with 2h k,
// and the comparison never ties.
Vec sample_point_scaled(const RootDatum& d, const AffineElement& x);

// Sign of <alpha, x.b0> - k; always +1 or -1.
int side_of(const RootDatum& d, const Hyperplane& h, const AffineElement& x);

// The wall separating alcoves a and a·s_letter, with positive root.
Hyperplane wall_between(const RootDatum& d, const AffineElement& a, int letter);

// The affine reflection fixing h pointwise.
AffineElement reflection(const RootDatum& d, const Hyperplane& h);

std::int64_t length(const RootDatum& d, const AffineElement& x);

// Canonical reduced word: greedy right descent, smallest letter first.
Word reduced_word(const RootDatum& d, AffineElement x);

// All reduced words of x (exponential in general; intended for small lengths).
std::vector<Word> all_reduced_words(const RootDatum& d, const AffineElement& x);

// Subword test along the canonical reduced word of x.
bool bruhat_leq(const RootDatum& d, const AffineElement& y, const AffineElement& x);

// All x with l(x) <= radius, sorted by (length, canonical word lex).
std::vector<AffineElement> length_ball(const RootDatum& d, int radius);

std::string word_str(const Word& w);

}  // namespace coxshadow
