#include "coxshadow/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "coxshadow/rootdata.hpp"

namespace coxshadow {

namespace {

struct RatVec {
  // coroot coordinates, common denominator
  std::int64_t x = 0, y = 0, den = 1;
};

std::string fmt(double v) {
  char buf[32];
  // -0.000 and 0.000 must agree for byte stability
  if (std::abs(v) < 5e-4) v = 0.0;
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

}  // namespace

std::string render_svg(const RenderSpec& spec) {
  const RootDatum& d = RootDatum::get(spec.type_tag);
  if (d.rank() != 2) throw PreconditionError("render_svg: rank-2 complexes only");

  // Fundamental alcove vertices: 0 and the scaled fundamental coweights
  // omega_i^vee / m_i with theta = sum m_i alpha_i.
  const auto& A = d.cartan();
  std::int64_t det = static_cast<std::int64_t>(A[0][0]) * A[1][1] -
                     static_cast<std::int64_t>(A[0][1]) * A[1][0];
  const Vec& theta = d.theta();
  std::vector<RatVec> base(3);
  base[0] = RatVec{0, 0, 1};
  // omega_i^vee = A^{-1} e_i (columns of the inverse Cartan matrix).
  base[1] = RatVec{A[1][1], -A[1][0], det * theta[0]};
  base[2] = RatVec{-A[0][1], A[0][0], det * theta[1]};

  // Exact-angle embedding from the invariant form on the coweight plane.
  double g00 = static_cast<double>(d.bform(Vec{2, {1, 0}}, Vec{2, {1, 0}}));
  double g01 = static_cast<double>(d.bform(Vec{2, {1, 0}}, Vec{2, {0, 1}}));
  double g11 = static_cast<double>(d.bform(Vec{2, {0, 1}}, Vec{2, {0, 1}}));
  double e1x = std::sqrt(g00), e1y = 0.0;
  double e2x = g01 / e1x, e2y = std::sqrt(g11 - e2x * e2x);
  double unit = std::sqrt(g00);
  auto embed = [&](double cx, double cy, double& px, double& py) {
    px = spec.scale * (cx * e1x + cy * e2x) / unit;
    py = -spec.scale * (cx * e1y + cy * e2y) / unit;  // SVG y grows downward
  };

  auto alcove_points = [&](const AffineElement& a) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& v : base) {
      // lin(v) + trans, exactly, then embed.
      Vec num{2, {v.x, v.y}};
      Vec img = d.w_act(a.lin, num);
      double cx = static_cast<double>(img[0]) / static_cast<double>(v.den) +
                  static_cast<double>(a.trans[0]);
      double cy = static_cast<double>(img[1]) / static_cast<double>(v.den) +
                  static_cast<double>(a.trans[1]);
      double px, py;
      embed(cx, cy, px, py);
      pts.emplace_back(px, py);
    }
    return pts;
  };

  std::vector<AffineElement> ball = length_ball(d, spec.view_radius);
  double minx = 0, maxx = 0, miny = 0, maxy = 0;
  std::vector<std::pair<AffineElement, std::vector<std::pair<double, double>>>> polys;
  for (const auto& a : ball) {
    auto pts = alcove_points(a);
    for (const auto& [px, py] : pts) {
      minx = std::min(minx, px);
      maxx = std::max(maxx, px);
      miny = std::min(miny, py);
      maxy = std::max(maxy, py);
    }
    polys.emplace_back(a, std::move(pts));
  }
  double pad = spec.scale * 0.25;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(minx - pad) << " "
     << fmt(miny - pad) << " " << fmt(maxx - minx + 2 * pad) << " " << fmt(maxy - miny + 2 * pad)
     << "\">\n";
  auto fill_for = [&](const AffineElement& a) -> std::string {
    for (const auto& [alc, cls] : spec.highlight_alcoves) {
      if (alc == a) {
        auto it = spec.style.find(cls);
        return it == spec.style.end() ? "#888888" : it->second;
      }
    }
    return "none";
  };
  for (const auto& [a, pts] : polys) {
    os << "<polygon points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) os << " ";
      os << fmt(pts[i].first) << "," << fmt(pts[i].second);
    }
    os << "\" fill=\"" << fill_for(a) << "\" stroke=\"#555555\" stroke-width=\""
       << fmt(spec.scale * 0.02) << "\"/>\n";
  }
  for (const auto& [v, cls] : spec.highlight_vertices) {
    double px, py;
    embed(static_cast<double>(v[0]), static_cast<double>(v[1]), px, py);
    auto it = spec.style.find(cls);
    os << "<circle cx=\"" << fmt(px) << "\" cy=\"" << fmt(py) << "\" r=\""
       << fmt(spec.scale * 0.12) << "\" fill=\""
       << (it == spec.style.end() ? std::string("#cc0000") : it->second) << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace coxshadow
