#pragma once

#include <map>
#include <optional>

#include "coxshadow/lsmodel.hpp"

namespace coxshadow {

struct DirectionReport {
  bool nonempty = false;
  std::optional<std::int64_t> max_gallery_dim;
  std::vector<char> witness_folds;  // a max-dimension fold mask, when nonempty
};

struct AdlvReport {
  AffineElement x;
  Weight mu;
  std::map<int, DirectionReport> per_direction;  // key: W0 index u
  bool nonempty = false;
  std::optional<std::int64_t> raw_dim;  // max over nonempty directions; c(mu) not applied
};

// z lies in the Weyl chamber shadow of x in direction u; recursive computation
// with brute-force agreement asserted.
bool coset_nonempty(const RootDatum& d, const AffineElement& x, const AffineElement& z, int u);

// Max number of load-bearing panels over AtInfinity(u)-positively folded
// galleries of the reduced type of x from the fundamental alcove ending at z
// (alcove-to-alcove dimension, no start-vertex term). Empty when unreachable.
std::optional<std::int64_t> coset_dim(const RootDatum& d, const AffineElement& x,
                                      const AffineElement& z, int u);

AdlvReport adlv_nonempty(const RootDatum& d, const AffineElement& x, const Weight& mu);
std::optional<std::int64_t> adlv_dim_raw(const RootDatum& d, const AffineElement& x,
                                         const Weight& mu);

struct AdlvRow {
  AffineElement x;
  Word word;
  std::int64_t len = 0;
  bool nonempty = false;
  std::optional<std::int64_t> raw_dim;
  std::optional<int> witness_direction;
  std::vector<char> witness_folds;
};

// One row per element of the length ball, deterministic order.
std::vector<AdlvRow> adlv_table(const RootDatum& d, int radius, const Weight& mu);

struct MstRelationReport {
  bool applicable = false;
  std::int64_t residual = 0;  // raw_dim(x,mu) - raw_dim(x,0) + <rho, mu+>
};

// Diagnostic for the translation dimension relation; never an assertion.
MstRelationReport mst_relation_report(const RootDatum& d, const AffineElement& x,
                                      const Weight& mu);

}  // namespace coxshadow
