#pragma once

#include <functional>
#include <set>

#include "coxshadow/orientations.hpp"

namespace coxshadow {

struct ShadowResult {
  AffineElement base;
  Orientation orientation;
  std::set<AffineElement> elements;
};

enum class Recursion { Right, Left };

// Frontier algorithm over the canonical reduced word of x: at each letter an
// alcove always admits the crossing, and admits the fold exactly when it sits
// on the positive side of the panel wall. Equivalent to enumerating all
// positively folded masks.
ShadowResult shadow_brute(const RootDatum& d, const AffineElement& x, const Orientation& o);
// Same, over an explicit (reduced) word and start set.
std::set<AffineElement> shadow_frontier(const RootDatum& d, const Word& word,
                                        const std::set<AffineElement>& starts,
                                        const Orientation& o);

// Shadow under the trivial positive orientation; equals the Bruhat interval [id, x].
std::set<AffineElement> bruhat_interval(const RootDatum& d, const AffineElement& x);

// Recursive shadow computation for Weyl chamber orientations, peeling letters
// on the right or on the left.
ShadowResult shadow_recursive(const RootDatum& d, const AffineElement& x, const Orientation& o,
                              Recursion strategy = Recursion::Right);

// Explicit slow oracle: every positively folded gallery of the given type from
// the given starts, reported with its fold mask.
void enumerate_positively_folded(
    const RootDatum& d, const Word& word, const std::vector<AffineElement>& starts,
    const Orientation& o,
    const std::function<void(const Gallery&, const GalleryTrack&)>& visit);

// End vertices of all o-positively folded galleries of the minimal vertex
// gallery type of lambda, started at every alcove around the origin.
std::set<Weight> vertex_shadow(const RootDatum& d, const Weight& lambda, const Orientation& o);

struct ConvexityReport {
  Weight lambda;
  std::set<Weight> shadow;      // vertex shadow under AtInfinity(w0)
  std::set<Weight> hull_points; // conv(W0.lambda) ∩ Q^vee
  bool equal = false;
};

// Kostant convexity at desk scale: vertex shadow vs exact hull intersection.
ConvexityReport verify_convexity(const RootDatum& d, const Weight& lambda);

}  // namespace coxshadow
