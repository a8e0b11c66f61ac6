#pragma once

#include <nlohmann/json.hpp>

#include "coxshadow/adlv.hpp"
#include "coxshadow/lsmodel.hpp"
#include "coxshadow/shadows.hpp"

namespace coxshadow {

nlohmann::ordered_json vec_json(const Vec& v);
nlohmann::ordered_json gallery_json(const RootDatum& d, const Gallery& g);
nlohmann::ordered_json shadow_json(const RootDatum& d, const ShadowResult& r);
nlohmann::ordered_json vertex_shadow_json(const RootDatum& d, const Weight& lambda,
                                          const Orientation& o, const std::set<Weight>& shadow);
nlohmann::ordered_json character_json(const RootDatum& d, const Weight& lambda,
                                      const std::vector<DimensionedGallery>& galleries,
                                      const std::map<Weight, std::int64_t>& character);
nlohmann::ordered_json adlv_table_json(const RootDatum& d, const std::vector<AdlvRow>& rows);
std::string adlv_table_csv(const RootDatum& d, const std::vector<AdlvRow>& rows);
std::string character_csv(const std::map<Weight, std::int64_t>& character);
nlohmann::ordered_json convexity_json(const RootDatum& d, const ConvexityReport& rep);

}  // namespace coxshadow
