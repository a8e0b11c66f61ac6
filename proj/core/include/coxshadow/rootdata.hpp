#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "coxshadow/errors.hpp"
#include "coxshadow/vec.hpp"

namespace coxshadow {

// Element of the coroot lattice Q^vee, in simple-coroot coordinates.
using Weight = Vec;

// Finite crystallographic root system with its Weyl group, plus the affine
// generator registry (letter -> reflection) used by the affine layer.
//
// Conventions:
//   - roots are stored in simple-root coordinates, coroots in simple-coroot
//     coordinates; cartan[i][j] = <alpha_i, alpha_j^vee>;
//   - W0 elements are indexed 0..order-1 with 0 = identity; each element
//     carries exact integer matrices for its action on both coordinate
//     systems;
//   - rho and rho^vee are stored doubled so every pairing stays integral.
class RootDatum {
 public:
  struct GenInfo {
    int lin;         // W0 index of the linear part
    Vec trans;       // translation part, coroot coordinates
    int wall_root;   // index into positive_roots
    int wall_level;  // k of the fixed hyperplane {<alpha,v> = k}
  };

  // Cached registry lookup; throws ConfigError for unknown tags.
  static const RootDatum& get(const std::string& type_tag);
  static std::vector<std::string> supported_tags();

  const std::string& tag() const { return tag_; }
  int rank() const { return rank_; }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  int num_positive_roots() const { return static_cast<int>(positive_roots_.size()); }
  const Vec& positive_root(int idx) const { return positive_roots_[idx]; }
  const Vec& positive_coroot(int idx) const { return positive_coroots_[idx]; }
  int theta_index() const { return theta_index_; }
  const Vec& theta() const { return positive_roots_[theta_index_]; }
  const Vec& theta_coroot() const { return positive_coroots_[theta_index_]; }
  const Vec& rho_doubled() const { return rho2_; }          // 2*rho, root coords
  const Vec& rho_covec_doubled() const { return rho2v_; }   // 2*rho^vee, coroot coords
  int coxeter_number() const { return coxeter_number_; }

  // <alpha, v> for alpha in root coordinates and v in coroot coordinates.
  std::int64_t pair(const Vec& root, const Vec& coweight) const;
  // <rho, v>, exact for v in Q^vee.
  std::int64_t rho_pair(const Vec& coweight) const;

  // --- finite Weyl group -------------------------------------------------
  int order() const { return static_cast<int>(cow_action_.size()); }
  int identity() const { return 0; }
  int longest_element() const { return w0_; }
  int w_length(int w) const { return w_length_[w]; }
  int mult(int a, int b) const { return mult_[a][b]; }
  int inverse(int w) const { return inv_[w]; }
  int simple_reflection(int i) const { return simple_refl_[i]; }  // i in 1..rank
  Vec w_act(int w, const Vec& coweight) const { return cow_action_[w].apply(coweight); }
  Vec w_act_root(int w, const Vec& root) const { return root_action_[w].apply(root); }
  // Index of s_alpha for a positive root.
  int reflection_for_root(int root_idx) const { return refl_for_root_[root_idx]; }
  // Index of a positive root given its vector (sign-normalized); -1 if absent.
  int find_positive_root(const Vec& root) const;
  // Evaluate a word in the finite generators 1..rank.
  int finite_from_word(const std::vector<int>& letters) const;
  std::vector<int> finite_reduced_word(int w) const;

  // --- weights -----------------------------------------------------------
  bool is_dominant(const Weight& v) const;
  Weight dominant(const Weight& v) const;
  bool dominance_leq(const Weight& nu, const Weight& lambda) const;
  std::set<Weight> weyl_orbit(const Weight& lambda) const;

  // Weight multiplicities of the irreducible highest-weight module V(lambda)
  // of the dual group, by the Freudenthal recursion; cross-checked internally
  // against the Weyl dimension formula.
  std::map<Weight, std::int64_t> freudenthal_multiplicities(const Weight& lambda) const;

  // Exact membership of nu in the Euclidean convex hull of W0.lambda,
  // decided by rational linear programming over the orbit points.
  bool convex_hull_membership(const Weight& nu, const Weight& lambda) const;

  // --- affine generator registry ------------------------------------------
  int num_letters() const { return rank_ + 1; }
  const GenInfo& gen(int letter) const;

  // Versioned machine-readable dump of the registry entry.
  std::string registry_json() const;

  // Symmetrized invariant form on the coweight space, scaled to integers:
  // bform(x, y) for x, y in coroot coordinates.
  std::int64_t bform(const Vec& x, const Vec& y) const;

 private:
  explicit RootDatum(const std::string& tag);

  std::string tag_;
  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<Vec> positive_roots_;
  std::vector<Vec> positive_coroots_;
  std::vector<int> refl_for_root_;
  std::map<Vec, int> root_index_;
  Vec rho2_, rho2v_;
  int theta_index_ = -1;
  int coxeter_number_ = 0;

  std::vector<Mat> cow_action_;
  std::vector<Mat> root_action_;
  std::vector<std::vector<int>> mult_;
  std::vector<int> inv_;
  std::vector<int> w_length_;
  std::vector<int> simple_refl_;  // [0] unused
  int w0_ = -1;

  std::vector<GenInfo> gens_;
  std::vector<std::vector<std::int64_t>> bform_;  // on simple coroots

  void build_roots();
  void build_weyl_group();
  void build_gens();
  void build_bform();
  void check_invariants() const;
};

// Exact membership of p in the convex hull of an arbitrary finite point set,
// in coroot coordinates; rational simplex, no floating point.
bool convex_membership_points(const Weight& p, const std::vector<Weight>& points);

}  // namespace coxshadow
