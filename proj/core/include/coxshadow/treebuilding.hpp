#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxshadow/errors.hpp"

namespace coxshadow {

// Finite ball of the (q+1)-regular tree around the origin, with an embedded
// base apartment (the integer line) and alternating vertex types. This is the
// rank-1 affine building; the base alcove is the edge (0, 1).
class TreeBall {
 public:
  TreeBall(int q, int radius);

  int q() const { return q_; }
  int radius() const { return radius_; }
  int num_vertices() const { return static_cast<int>(parent_.size()); }

  int depth(int v) const { return depth_[v]; }
  int type(int v) const { return depth_[v] % 2; }
  std::optional<int> apartment_position(int v) const { return position_[v]; }
  // Base apartment vertex at integer position p.
  int apartment_vertex(int p) const;

  std::vector<int> sphere(int n) const;  // vertices at distance n from origin

  // Retraction based at the fundamental alcove: the unique m with
  // |m| = d(v, 0) and |m - 1| = d(v, 1).
  int retract_to_alcove(int v) const;

  // Retraction based at the -infinity end of the base apartment: position of
  // the merge vertex plus the distance to it.
  int retract_to_infinity(int v) const;

  struct ConvexityReport {
    int n = 0;
    bool preimage_is_sphere = false;   // r^{-1}(W0.n) == sphere(0, n)
    std::vector<int> image;            // rho_infinity image, sorted
    std::map<int, int> fiber_sizes;    // image position -> fiber size
    bool image_matches = false;        // image == {-n, -n+2, ..., n}
  };

  ConvexityReport convexity_check(int n) const;

  // DOT export with both retraction images as vertex annotations.
  std::string to_dot() const;

 private:
  int q_;
  int radius_;
  std::vector<int> parent_;                  // toward the origin; -1 at origin
  std::vector<int> depth_;
  std::vector<std::optional<int>> position_; // base apartment only
  std::map<int, int> pos_index_;
};

}  // namespace coxshadow
