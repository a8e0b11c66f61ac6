#include <doctest.h>

#include <fstream>
#include <sstream>

#include "coxshadow/json_io.hpp"
#include "coxshadow/render.hpp"

using namespace coxshadow;
using nlohmann::ordered_json;

namespace {
std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}
}  // namespace

TEST_CASE("registry dumps match the frozen goldens") {
  for (const std::string& tag : RootDatum::supported_tags()) {
    const RootDatum& d = RootDatum::get(tag);
    std::string name = tag.substr(0, tag.size() - 1);  // strip the trailing ~
    std::string golden = read_file(std::string(GOLDEN_DIR) + "/registry_" + name + ".json");
    CHECK(d.registry_json() == golden);
  }
}

TEST_CASE("gallery serialization shape") {
  const RootDatum& a1 = RootDatum::get("A1~");
  Gallery g;
  g.start = aff_identity(a1);
  g.type = {1, 0};
  g.folds = {1, 0};
  ordered_json j = gallery_json(a1, g);
  CHECK(j["type"] == ordered_json::array({1, 0}));
  CHECK(j["folds"] == ordered_json::array({1}));
}

TEST_CASE("shadow serialization lists reduced words") {
  const RootDatum& a1 = RootDatum::get("A1~");
  ShadowResult r = shadow_brute(a1, from_word(a1, {1, 0}),
                                Orientation::at_infinity(a1.longest_element()));
  ordered_json j = shadow_json(a1, r);
  CHECK(j["shadow"].size() == 3);
}

TEST_CASE("svg rendering is byte stable and shades the requested alcoves") {
  RenderSpec spec;
  spec.type_tag = "A2~";
  spec.view_radius = 4;
  const RootDatum& d = RootDatum::get("A2~");
  ShadowResult r = shadow_brute(d, from_word(d, {1, 0}),
                                Orientation::at_infinity(d.longest_element()));
  for (const auto& y : r.elements) spec.highlight_alcoves.emplace_back(y, "shadow");
  spec.style = {{"shadow", "#f2c577"}};
  std::string one = render_svg(spec);
  std::string two = render_svg(spec);
  CHECK(one == two);
  // structural check: exactly one shaded polygon per shadow alcove
  std::size_t count = 0, pos = 0;
  while ((pos = one.find("#f2c577", pos)) != std::string::npos) {
    ++count;
    ++pos;
  }
  CHECK(count == r.elements.size());
  CHECK_THROWS_AS(render_svg(RenderSpec{.type_tag = "A1~"}), PreconditionError);
}
