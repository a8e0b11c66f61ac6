#include "coxshadow/json_io.hpp"

#include <sstream>

namespace coxshadow {

using nlohmann::ordered_json;

ordered_json vec_json(const Vec& v) {
  std::vector<std::int64_t> out;
  for (int i = 0; i < v.n; ++i) out.push_back(v[i]);
  return out;
}

ordered_json gallery_json(const RootDatum& d, const Gallery& g) {
  ordered_json j;
  j["start"] = word_str(reduced_word(d, g.start));
  j["type"] = g.type;
  std::vector<int> folds;
  for (std::size_t i = 0; i < g.folds.size(); ++i)
    if (g.folds[i]) folds.push_back(static_cast<int>(i) + 1);
  j["folds"] = folds;
  return j;
}

ordered_json shadow_json(const RootDatum& d, const ShadowResult& r) {
  ordered_json j;
  j["type_tag"] = d.tag();
  j["word"] = reduced_word(d, r.base);
  j["orientation"] = orientation_str(d, r.orientation);
  std::vector<std::string> words;
  for (const auto& z : r.elements) words.push_back(word_str(reduced_word(d, z)));
  j["shadow"] = words;
  return j;
}

ordered_json vertex_shadow_json(const RootDatum& d, const Weight& lambda, const Orientation& o,
                                const std::set<Weight>& shadow) {
  ordered_json j;
  j["type_tag"] = d.tag();
  j["lambda"] = vec_json(lambda);
  j["orientation"] = orientation_str(d, o);
  ordered_json pts = ordered_json::array();
  for (const auto& v : shadow) pts.push_back(vec_json(v));
  j["vertex_shadow"] = pts;
  return j;
}

ordered_json character_json(const RootDatum& d, const Weight& lambda,
                            const std::vector<DimensionedGallery>& galleries,
                            const std::map<Weight, std::int64_t>& character) {
  ordered_json j;
  j["type_tag"] = d.tag();
  j["lambda"] = vec_json(lambda);
  ordered_json gs = ordered_json::array();
  for (const auto& g : galleries) {
    ordered_json e = gallery_json(d, g.gallery);
    e["end"] = vec_json(g.end_vertex);
    e["dim"] = g.dimension;
    gs.push_back(e);
  }
  j["galleries"] = gs;
  ordered_json ch = ordered_json::array();
  std::int64_t dim = 0;
  for (const auto& [w, m] : character) {
    ch.push_back({{"weight", vec_json(w)}, {"mult", m}});
    dim += m;
  }
  j["character"] = ch;
  j["dimension"] = dim;
  return j;
}

ordered_json adlv_table_json(const RootDatum& d, const std::vector<AdlvRow>& rows) {
  ordered_json j = ordered_json::array();
  for (const auto& r : rows) {
    ordered_json e;
    e["word"] = word_str(r.word);
    e["length"] = r.len;
    e["nonempty"] = r.nonempty;
    if (r.raw_dim) e["raw_dim"] = *r.raw_dim;
    if (r.witness_direction)
      e["witness_direction"] = word_str(Word(d.finite_reduced_word(*r.witness_direction)));
    if (r.nonempty) {
      std::vector<int> folds;
      for (std::size_t i = 0; i < r.witness_folds.size(); ++i)
        if (r.witness_folds[i]) folds.push_back(static_cast<int>(i) + 1);
      e["witness_folds"] = folds;
    }
    j.push_back(e);
  }
  return j;
}

std::string adlv_table_csv(const RootDatum& d, const std::vector<AdlvRow>& rows) {
  std::ostringstream os;
  os << "word,length,nonempty,raw_dim,witness_direction,witness_folds\n";
  for (const auto& r : rows) {
    os << "\"" << word_str(r.word) << "\"," << r.len << "," << (r.nonempty ? 1 : 0) << ",";
    if (r.raw_dim) os << *r.raw_dim;
    os << ",";
    if (r.witness_direction) os << "\"" << word_str(Word(d.finite_reduced_word(*r.witness_direction))) << "\"";
    os << ",\"";
    bool first = true;
    for (std::size_t i = 0; i < r.witness_folds.size(); ++i)
      if (r.witness_folds[i]) {
        if (!first) os << " ";
        os << (i + 1);
        first = false;
      }
    os << "\"\n";
  }
  return os.str();
}

std::string character_csv(const std::map<Weight, std::int64_t>& character) {
  std::ostringstream os;
  os << "weight,mult\n";
  for (const auto& [w, m] : character) os << "\"" << w.str() << "\"," << m << "\n";
  return os.str();
}

ordered_json convexity_json(const RootDatum& d, const ConvexityReport& rep) {
  ordered_json j;
  j["type_tag"] = d.tag();
  j["lambda"] = vec_json(rep.lambda);
  ordered_json sh = ordered_json::array(), hull = ordered_json::array(),
               diff = ordered_json::array();
  for (const auto& v : rep.shadow) sh.push_back(vec_json(v));
  for (const auto& v : rep.hull_points) hull.push_back(vec_json(v));
  for (const auto& v : rep.shadow)
    if (!rep.hull_points.count(v)) diff.push_back(vec_json(v));
  for (const auto& v : rep.hull_points)
    if (!rep.shadow.count(v)) diff.push_back(vec_json(v));
  j["vertex_shadow"] = sh;
  j["hull_points"] = hull;
  j["symmetric_difference"] = diff;
  j["equal"] = rep.equal;
  return j;
}

}  // namespace coxshadow
