#include "coxshadow/treebuilding.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace coxshadow {

TreeBall::TreeBall(int q, int radius) : q_(q), radius_(radius) {
  if (q < 2) throw PreconditionError("TreeBall: q must be >= 2");
  if (radius < 0) throw PreconditionError("TreeBall: radius must be >= 0");
  // Origin.
  parent_.push_back(-1);
  depth_.push_back(0);
  position_.push_back(0);
  pos_index_[0] = 0;
  std::vector<int> frontier{0};
  for (int dep = 1; dep <= radius; ++dep) {
    std::vector<int> next;
    auto add_child = [&](int par, std::optional<int> pos) {
      int id = static_cast<int>(parent_.size());
      parent_.push_back(par);
      depth_.push_back(dep);
      position_.push_back(pos);
      if (pos) pos_index_[*pos] = id;
      next.push_back(id);
      return id;
    };
    for (int v : frontier) {
      // Interior vertices have q+1 neighbors; the origin contributes two
      // apartment children, other apartment vertices one.
      int children = (v == 0) ? q + 1 : q;
      if (position_[v]) {
        int p = *position_[v];
        if (v == 0) {
          add_child(v, 1);
          add_child(v, -1);
          children -= 2;
        } else {
          add_child(v, p > 0 ? p + 1 : p - 1);
          children -= 1;
        }
      }
      for (int k = 0; k < children; ++k) add_child(v, std::nullopt);
    }
    frontier = std::move(next);
  }
}

int TreeBall::apartment_vertex(int p) const {
  auto it = pos_index_.find(p);
  if (it == pos_index_.end()) throw InputError("apartment position outside ball");
  return it->second;
}

std::vector<int> TreeBall::sphere(int n) const {
  std::vector<int> out;
  for (int v = 0; v < num_vertices(); ++v)
    if (depth_[v] == n) out.push_back(v);
  return out;
}

int TreeBall::retract_to_alcove(int v) const {
  // d(v, 1) = depth(v) +/- 1 depending on whether vertex 1 is an ancestor.
  int one = apartment_vertex(1);
  int cur = v;
  bool ancestor = false;
  while (cur != -1) {
    if (cur == one) {
      ancestor = true;
      break;
    }
    cur = parent_[cur];
  }
  int d0 = depth_[v];
  int d1 = ancestor ? d0 - 1 : d0 + 1;
  return d1 < d0 ? d0 : -d0;
}

int TreeBall::retract_to_infinity(int v) const {
  int cur = v;
  int dist = 0;
  while (!position_[cur]) {
    cur = parent_[cur];
    ++dist;
  }
  return *position_[cur] + dist;
}

TreeBall::ConvexityReport TreeBall::convexity_check(int n) const {
  if (n > radius_) throw PreconditionError("convexity_check: n exceeds ball radius");
  ConvexityReport rep;
  rep.n = n;
  std::vector<int> preimage;
  for (int v = 0; v < num_vertices(); ++v) {
    int m = retract_to_alcove(v);
    if (m == n || m == -n) preimage.push_back(v);
  }
  std::vector<int> sph = sphere(n);
  rep.preimage_is_sphere = preimage == sph;
  std::set<int> image;
  for (int v : preimage) {
    int p = retract_to_infinity(v);
    image.insert(p);
    rep.fiber_sizes[p] += 1;
  }
  rep.image.assign(image.begin(), image.end());
  std::vector<int> expect;
  for (int p = -n; p <= n; p += 2) expect.push_back(p);
  rep.image_matches = rep.image == expect;
  return rep;
}

std::string TreeBall::to_dot() const {
  std::ostringstream os;
  os << "graph treeball {\n  node [shape=circle];\n";
  for (int v = 0; v < num_vertices(); ++v) {
    os << "  v" << v << " [label=\"" << v;
    if (position_[v]) os << "\\npos " << *position_[v];
    os << "\\nr " << retract_to_alcove(v) << " rho " << retract_to_infinity(v)
       << "\"];\n";
  }
  for (int v = 1; v < num_vertices(); ++v) os << "  v" << parent_[v] << " -- v" << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace coxshadow
