#include "coxshadow/adlv.hpp"

#include <cassert>

namespace coxshadow {

namespace {

struct EndpointData {
  std::int64_t max_dim = -1;
  std::vector<char> witness;
};

// Enumerate all AtInfinity(u)-positively folded galleries of the reduced type
// of x from the fundamental alcove; per endpoint keep the max panel dimension
// and one witness mask.
std::map<AffineElement, EndpointData> coset_galleries(const RootDatum& d, const AffineElement& x,
                                                      int u) {
  Word word = reduced_word(d, x);
  Orientation o = Orientation::at_infinity(u);
  std::map<AffineElement, EndpointData> out;
  enumerate_positively_folded(
      d, word, {aff_identity(d)}, o, [&](const Gallery& g, const GalleryTrack& t) {
        std::int64_t dim = 0;
        AffineElement c = g.start;
        for (std::size_t i = 0; i < word.size(); ++i) {
          Hyperplane h = wall_between(d, c, word[i]);
          if (!g.folds[i]) c = aff_mul(d, c, letter_element(d, word[i]));
          if (side(d, o, h, c) == 1) ++dim;
        }
        EndpointData& e = out[t.end];
        if (dim > e.max_dim) {
          e.max_dim = dim;
          e.witness = g.folds;
        }
      });
  return out;
}

}  // namespace

bool coset_nonempty(const RootDatum& d, const AffineElement& x, const AffineElement& z, int u) {
  Orientation o = Orientation::at_infinity(u);
  bool rec = shadow_recursive(d, x, o).elements.count(z) > 0;
  assert(rec == (shadow_brute(d, x, o).elements.count(z) > 0));
  return rec;
}

std::optional<std::int64_t> coset_dim(const RootDatum& d, const AffineElement& x,
                                      const AffineElement& z, int u) {
  auto galleries = coset_galleries(d, x, u);
  auto it = galleries.find(z);
  if (it == galleries.end()) return std::nullopt;
  return it->second.max_dim;
}

AdlvReport adlv_nonempty(const RootDatum& d, const AffineElement& x, const Weight& mu) {
  AdlvReport rep;
  rep.x = x;
  rep.mu = mu;
  for (int u = 0; u < d.order(); ++u) {
    AffineElement z = translation(d, d.w_act(u, mu));
    auto galleries = coset_galleries(d, x, u);
    DirectionReport dir;
    auto it = galleries.find(z);
    if (it != galleries.end()) {
      dir.nonempty = true;
      dir.max_gallery_dim = it->second.max_dim;
      dir.witness_folds = it->second.witness;
      rep.nonempty = true;
      if (!rep.raw_dim || it->second.max_dim > *rep.raw_dim) rep.raw_dim = it->second.max_dim;
    }
    rep.per_direction[u] = std::move(dir);
  }
  return rep;
}

std::optional<std::int64_t> adlv_dim_raw(const RootDatum& d, const AffineElement& x,
                                         const Weight& mu) {
  return adlv_nonempty(d, x, mu).raw_dim;
}

std::vector<AdlvRow> adlv_table(const RootDatum& d, int radius, const Weight& mu) {
  std::vector<AdlvRow> rows;
  for (const auto& x : length_ball(d, radius)) {
    AdlvReport rep = adlv_nonempty(d, x, mu);
    AdlvRow row;
    row.x = x;
    row.word = reduced_word(d, x);
    row.len = length(d, x);
    row.nonempty = rep.nonempty;
    row.raw_dim = rep.raw_dim;
    if (rep.nonempty) {
      for (const auto& [u, dir] : rep.per_direction) {
        if (dir.nonempty && dir.max_gallery_dim == rep.raw_dim) {
          row.witness_direction = u;
          row.witness_folds = dir.witness_folds;
          break;
        }
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

MstRelationReport mst_relation_report(const RootDatum& d, const AffineElement& x,
                                      const Weight& mu) {
  MstRelationReport rep;
  auto dm = adlv_dim_raw(d, x, mu);
  auto d0 = adlv_dim_raw(d, x, Vec::zero(d.rank()));
  if (!dm || !d0) return rep;
  rep.applicable = true;
  rep.residual = *dm - *d0 + d.rho_pair(d.dominant(mu));
  return rep;
}

}  // namespace coxshadow
