#pragma once

#include "coxshadow/galleries.hpp"

namespace coxshadow {

// Orientation of the affine Coxeter complex, evaluated exactly on
// (hyperplane, alcove) pairs. AtInfinity(u) is the Weyl chamber orientation
// whose positive side contains the cone in direction u·rho^vee; the
// antidominant orientation is AtInfinity(w0).
struct Orientation {
  enum class Kind { TrivialPos, TrivialNeg, AlcoveTowards, AtInfinity };

  Kind kind = Kind::TrivialPos;
  AffineElement towards;  // AlcoveTowards only
  int chamber = 0;        // AtInfinity only: W0 index u

  static Orientation trivial_pos() { return Orientation{Kind::TrivialPos, {}, 0}; }
  static Orientation trivial_neg() { return Orientation{Kind::TrivialNeg, {}, 0}; }
  static Orientation alcove_towards(const AffineElement& c) {
    return Orientation{Kind::AlcoveTowards, c, 0};
  }
  static Orientation at_infinity(int u) { return Orientation{Kind::AtInfinity, {}, u}; }

  auto operator<=>(const Orientation&) const = default;
};

// Value of the orientation on (wall of panel, adjacent alcove); exact, never 0.
int side(const RootDatum& d, const Orientation& o, const Hyperplane& h, const AffineElement& a);

// s·phi for AtInfinity orientations: AtInfinity(lin(s)·u).
Orientation left_translate_orientation(const RootDatum& d, int letter, const Orientation& o);

bool is_positively_folded(const RootDatum& d, const Orientation& o, const Gallery& g);
int positive_fold_count(const RootDatum& d, const Orientation& o, const Gallery& g);

std::string orientation_str(const RootDatum& d, const Orientation& o);

}  // namespace coxshadow
