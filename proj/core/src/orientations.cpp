#include "coxshadow/orientations.hpp"

#include <cassert>

namespace coxshadow {

int side(const RootDatum& d, const Orientation& o, const Hyperplane& h, const AffineElement& a) {
  switch (o.kind) {
    case Orientation::Kind::TrivialPos:
      return 1;
    case Orientation::Kind::TrivialNeg:
      return -1;
    case Orientation::Kind::AlcoveTowards:
      return side_of(d, h, a) == side_of(d, h, o.towards) ? 1 : -1;
    case Orientation::Kind::AtInfinity: {
      Vec dir = d.w_act(o.chamber, d.rho_covec_doubled());  // u . 2 rho^vee, regular
      std::int64_t ref = d.pair(d.positive_root(h.root), dir);
      assert(ref != 0);
      return side_of(d, h, a) == (ref > 0 ? 1 : -1) ? 1 : -1;
    }
  }
  return 1;
}

Orientation left_translate_orientation(const RootDatum& d, int letter, const Orientation& o) {
  if (o.kind != Orientation::Kind::AtInfinity)
    throw PreconditionError("left_translate_orientation: AtInfinity orientations only");
  return Orientation::at_infinity(d.mult(d.gen(letter).lin, o.chamber));
}

bool is_positively_folded(const RootDatum& d, const Orientation& o, const Gallery& g) {
  AffineElement c = g.start;
  for (std::size_t i = 0; i < g.type.size(); ++i) {
    if (g.folds[i]) {
      if (side(d, o, wall_between(d, c, g.type[i]), c) != 1) return false;
    } else {
      c = aff_mul(d, c, letter_element(d, g.type[i]));
    }
  }
  return true;
}

int positive_fold_count(const RootDatum& d, const Orientation& o, const Gallery& g) {
  if (!is_positively_folded(d, o, g)) return -1;
  int n = 0;
  for (char f : g.folds) n += f != 0;
  return n;
}

std::string orientation_str(const RootDatum& d, const Orientation& o) {
  switch (o.kind) {
    case Orientation::Kind::TrivialPos:
      return "triv+";
    case Orientation::Kind::TrivialNeg:
      return "triv-";
    case Orientation::Kind::AlcoveTowards:
      return "alcove:" + word_str(reduced_word(d, o.towards));
    case Orientation::Kind::AtInfinity:
      return "winf:" + word_str(Word(d.finite_reduced_word(o.chamber)));
  }
  return "?";
}

}  // namespace coxshadow
