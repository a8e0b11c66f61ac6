// coxshadow: shadows, gallery characters, ADLV tables and tree retraction
// checks for affine Coxeter complexes of rank <= 3.
//
// Exit codes: 0 success, 1 failed verification, 2 usage error, 3 unsupported
// input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "coxshadow/adlv.hpp"
#include "coxshadow/json_io.hpp"
#include "coxshadow/lsmodel.hpp"
#include "coxshadow/render.hpp"
#include "coxshadow/shadows.hpp"
#include "coxshadow/treebuilding.hpp"

namespace cx = coxshadow;
using nlohmann::ordered_json;

namespace {

int thread_cap() {
  // The computation core is single threaded and deterministic; the cap is
  // accepted and validated so callers can pin it without changing output.
  const char* env = std::getenv("COXSHADOW_THREADS");
  if (!env) return 1;
  int v = std::atoi(env);
  return v > 0 ? v : 1;
}

cx::Word parse_word(const std::string& s) {
  cx::Word w;
  if (s.empty()) return w;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t next = s.find(',', pos);
    if (next == std::string::npos) next = s.size();
    w.push_back(std::stoi(s.substr(pos, next - pos)));
    pos = next + 1;
  }
  return w;
}

cx::Weight parse_coweight(const cx::RootDatum& d, const std::string& s) {
  if (s == "theta") return d.theta_coroot();
  if (s == "rho") {
    cx::Vec r2 = d.rho_covec_doubled();
    cx::Vec r = cx::Vec::zero(d.rank());
    for (int i = 0; i < d.rank(); ++i) {
      if (r2[i] % 2 != 0)
        throw cx::InputError("rho^vee is not a lattice point for type " + d.tag());
      r[i] = r2[i] / 2;
    }
    return r;
  }
  cx::Word c = parse_word(s);
  if (static_cast<int>(c.size()) != d.rank())
    throw cx::InputError("coweight needs " + std::to_string(d.rank()) + " coordinates");
  cx::Weight v = cx::Vec::zero(d.rank());
  for (int i = 0; i < d.rank(); ++i) v[i] = c[i];
  return v;
}

cx::Orientation parse_orientation(const cx::RootDatum& d, const std::string& s) {
  if (s == "triv+") return cx::Orientation::trivial_pos();
  if (s == "triv-") return cx::Orientation::trivial_neg();
  if (s.rfind("alcove:", 0) == 0)
    return cx::Orientation::alcove_towards(cx::from_word(d, parse_word(s.substr(7))));
  if (s.rfind("winf:", 0) == 0) {
    std::string body = s.substr(5);
    if (body == "w0") return cx::Orientation::at_infinity(d.longest_element());
    if (body == "id" || body.empty()) return cx::Orientation::at_infinity(d.identity());
    for (int letter : parse_word(body))
      if (letter < 1 || letter > d.rank())
        throw cx::InputError("winf word must use finite letters 1.." + std::to_string(d.rank()));
    return cx::Orientation::at_infinity(d.finite_from_word(parse_word(body)));
  }
  throw cx::InputError("unknown orientation '" + s + "'");
}

void emit(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw cx::InputError("cannot open output path " + out_path);
  f << payload;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

struct Args {
  std::string type_tag = "A2~";
  std::string word;
  std::string lambda;
  std::string orientation = "winf:w0";
  std::string algorithm = "brute";
  std::string mu;
  std::string format = "json";
  std::string out;
  int radius = -1;
  int q = 2;
  int n = 0;
  bool verify = false;
};

void add_common(CLI::App* cmd, Args& a) {
  cmd->add_option("--type", a.type_tag, "root system tag (A1~, A2~, C2~, G2~, A3~)");
  cmd->add_option("--format", a.format, "json|csv|svg|dot")
      ->check(CLI::IsMember({"json", "csv", "svg", "dot"}));
  cmd->add_option("--out", a.out, "output path (default stdout)");
}

int cmd_shadow(const Args& a) {
  const cx::RootDatum& d = cx::RootDatum::get(a.type_tag);
  cx::AffineElement x = cx::from_word(d, parse_word(a.word));
  cx::Orientation o = parse_orientation(d, a.orientation);
  bool chamber = o.kind == cx::Orientation::Kind::AtInfinity;
  if (a.algorithm != "brute" && !chamber)
    throw cx::PreconditionError("recursive shadows need a winf orientation");

  cx::ShadowResult res;
  if (a.algorithm == "brute") {
    res = cx::shadow_brute(d, x, o);
  } else if (a.algorithm == "recursive") {
    res = cx::shadow_recursive(d, x, o);
  } else {
    res = cx::shadow_brute(d, x, o);
    cx::ShadowResult rec = cx::shadow_recursive(d, x, o);
    if (rec.elements != res.elements) {
      std::cerr << "verification failed: recursive and brute shadows differ\n";
      return 1;
    }
  }

  if (a.format == "svg") {
    cx::RenderSpec spec;
    spec.type_tag = a.type_tag;
    spec.view_radius = static_cast<int>(cx::length(d, x)) + 2;
    for (const auto& y : res.elements) spec.highlight_alcoves.emplace_back(y, "shadow");
    spec.highlight_alcoves.emplace_back(x, "base");
    spec.style = {{"shadow", "#f2c577"}, {"base", "#5b8dd6"}};
    emit(a.out, cx::render_svg(spec));
  } else {
    emit(a.out, dump(cx::shadow_json(d, res)));
  }
  return 0;
}

int cmd_character(const Args& a) {
  const cx::RootDatum& d = cx::RootDatum::get(a.type_tag);
  cx::Weight lambda = parse_coweight(d, a.lambda);
  if (!d.is_dominant(lambda)) throw cx::PreconditionError("lambda must be dominant");
  std::vector<cx::DimensionedGallery> gals = cx::ls_galleries(d, lambda);
  std::map<cx::Weight, std::int64_t> chr;
  for (const auto& g : gals) chr[g.end_vertex] += 1;
  if (a.verify) {
    if (chr != d.freudenthal_multiplicities(lambda)) {
      std::cerr << "verification failed: gallery character != weight multiplicities\n";
      return 1;
    }
  }
  if (a.format == "csv")
    emit(a.out, cx::character_csv(chr));
  else
    emit(a.out, dump(cx::character_json(d, lambda, gals, chr)));
  return 0;
}

int cmd_adlv(const Args& a) {
  const cx::RootDatum& d = cx::RootDatum::get(a.type_tag);
  cx::Weight mu = a.mu.empty() ? cx::Vec::zero(d.rank()) : parse_coweight(d, a.mu);
  if (!a.word.empty() || a.radius < 0) {
    cx::AffineElement x = cx::from_word(d, parse_word(a.word));
    cx::AdlvReport rep = cx::adlv_nonempty(d, x, mu);
    ordered_json j;
    j["type"] = d.tag();
    j["word"] = cx::word_str(cx::reduced_word(d, x));
    j["mu"] = cx::vec_json(mu);
    j["nonempty"] = rep.nonempty;
    if (rep.raw_dim)
      j["raw_dim"] = *rep.raw_dim;
    else
      j["raw_dim"] = nullptr;
    emit(a.out, dump(j));
    return 0;
  }
  std::vector<cx::AdlvRow> rows = cx::adlv_table(d, a.radius, mu);
  if (a.format == "csv")
    emit(a.out, cx::adlv_table_csv(d, rows));
  else
    emit(a.out, dump(cx::adlv_table_json(d, rows)));
  return 0;
}

int cmd_tree(const Args& a) {
  int radius = a.radius < 0 ? std::max(a.n, 1) + 1 : a.radius;
  cx::TreeBall t(a.q, radius);
  if (a.format == "dot") {
    emit(a.out, t.to_dot());
    return 0;
  }
  cx::TreeBall::ConvexityReport rep = t.convexity_check(a.n);
  ordered_json j;
  j["q"] = a.q;
  j["radius"] = radius;
  j["n"] = rep.n;
  j["preimage_is_sphere"] = rep.preimage_is_sphere;
  j["image"] = rep.image;
  ordered_json fibers = ordered_json::object();
  for (const auto& [p, c] : rep.fiber_sizes) fibers[std::to_string(p)] = c;
  j["fiber_sizes"] = fibers;
  j["image_matches"] = rep.image_matches;
  emit(a.out, dump(j));
  return (rep.preimage_is_sphere && rep.image_matches) ? 0 : 1;
}

int cmd_convexity(const Args& a) {
  const cx::RootDatum& d = cx::RootDatum::get(a.type_tag);
  cx::Weight lambda = parse_coweight(d, a.lambda);
  if (!d.is_dominant(lambda)) throw cx::PreconditionError("lambda must be dominant");
  cx::ConvexityReport rep = cx::verify_convexity(d, lambda);
  emit(a.out, dump(cx::convexity_json(d, rep)));
  return rep.equal ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  (void)thread_cap();

  CLI::App app{"folded-gallery calculus on affine Coxeter complexes"};
  app.require_subcommand(1);
  Args a;

  CLI::App* shadow = app.add_subcommand("shadow", "shadow of an element under an orientation");
  add_common(shadow, a);
  shadow->add_option("--word", a.word, "affine word, e.g. 1,0");
  shadow->add_option("--orientation", a.orientation, "triv+|triv-|alcove:<word>|winf:<word>|winf:w0");
  shadow->add_option("--algorithm", a.algorithm, "brute|recursive|both")
      ->check(CLI::IsMember({"brute", "recursive", "both"}));

  CLI::App* character = app.add_subcommand("character", "gallery character of V(lambda)");
  add_common(character, a);
  character->add_option("--lambda", a.lambda, "dominant coweight: coords, theta, or rho")
      ->required();
  character->add_flag("--verify", a.verify, "check against weight multiplicities");

  CLI::App* adlv = app.add_subcommand("adlv", "gallery nonemptiness/dimension reports");
  add_common(adlv, a);
  adlv->add_option("--word", a.word, "affine word (single report)");
  adlv->add_option("--radius", a.radius, "length-ball radius (table mode)");
  adlv->add_option("--mu", a.mu, "translation coweight");

  CLI::App* tree = app.add_subcommand("tree", "rank-1 tree retraction checks");
  add_common(tree, a);
  tree->add_option("--q", a.q, "tree is (q+1)-regular");
  tree->add_option("--n", a.n, "sphere radius to check");
  tree->add_option("--radius", a.radius, "ball radius (default n+1)");

  CLI::App* convexity = app.add_subcommand("convexity", "vertex shadow vs convex hull");
  add_common(convexity, a);
  convexity->add_option("--lambda", a.lambda, "dominant coweight: coords, theta, or rho")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (shadow->parsed()) return cmd_shadow(a);
    if (character->parsed()) return cmd_character(a);
    if (adlv->parsed()) return cmd_adlv(a);
    if (tree->parsed()) return cmd_tree(a);
    if (convexity->parsed()) return cmd_convexity(a);
  } catch (const cx::ConfigError& e) {
    std::cerr << "unsupported input: " << e.what() << "\n";
    return 3;
  } catch (const cx::PreconditionError& e) {
    std::cerr << "unsupported input: " << e.what() << "\n";
    return 3;
  } catch (const cx::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
