#include "coxshadow/rootdata.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

namespace coxshadow {

namespace {

// Exact rational number on int64, always normalized.
struct Frac {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Frac() = default;
  Frac(std::int64_t n) : num(n), den(1) {}
  Frac(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(std::abs(num), den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  Frac operator+(const Frac& o) const { return Frac(num * o.den + o.num * den, den * o.den); }
  Frac operator-(const Frac& o) const { return Frac(num * o.den - o.num * den, den * o.den); }
  Frac operator*(const Frac& o) const { return Frac(num * o.num, den * o.den); }
  Frac operator/(const Frac& o) const { return Frac(num * o.den, den * o.num); }
  bool operator<(const Frac& o) const { return num * o.den < o.num * den; }
  bool operator==(const Frac& o) const { return num == o.num && den == o.den; }
  bool negative() const { return num < 0; }
  bool zero() const { return num == 0; }
};

// Phase-1 simplex deciding feasibility of  { t >= 0, A t = b }  exactly.
// Bland's rule; sizes here are tiny (rows <= rank+1, cols <= |W0|).
bool lp_feasible(std::vector<std::vector<Frac>> A, std::vector<Frac> b) {
  const std::size_t m = A.size();
  const std::size_t n = m ? A[0].size() : 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (b[i].negative()) {
      b[i] = Frac(0) - b[i];
      for (auto& v : A[i]) v = Frac(0) - v;
    }
  }
  // Tableau with one artificial variable per row; objective = sum of artificials.
  const std::size_t total = n + m;
  std::vector<std::vector<Frac>> T(m, std::vector<Frac>(total + 1));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) T[i][j] = A[i][j];
    T[i][n + i] = Frac(1);
    T[i][total] = b[i];
    basis[i] = n + i;
  }
  std::vector<Frac> obj(total + 1);  // reduced costs of minimizing artificial sum
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= total; ++j) obj[j] = obj[j] - T[i][j];
  for (std::size_t i = 0; i < m; ++i) obj[n + i] = Frac(0);

  while (true) {
    std::size_t pivot_col = total;
    for (std::size_t j = 0; j < total; ++j) {
      if (obj[j].negative()) {
        pivot_col = j;
        break;  // Bland
      }
    }
    if (pivot_col == total) break;
    std::size_t pivot_row = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (!(Frac(0) < T[i][pivot_col])) continue;
      if (pivot_row == m) {
        pivot_row = i;
        continue;
      }
      Frac cur = T[i][total] / T[i][pivot_col];
      Frac best = T[pivot_row][total] / T[pivot_row][pivot_col];
      if (cur < best || (cur == best && basis[i] < basis[pivot_row])) pivot_row = i;
    }
    if (pivot_row == m) break;  // unbounded; cannot happen with artificials
    Frac p = T[pivot_row][pivot_col];
    for (auto& v : T[pivot_row]) v = v / p;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == pivot_row || T[i][pivot_col].zero()) continue;
      Frac f = T[i][pivot_col];
      for (std::size_t j = 0; j <= total; ++j) T[i][j] = T[i][j] - f * T[pivot_row][j];
    }
    if (!obj[pivot_col].zero()) {
      Frac f = obj[pivot_col];
      for (std::size_t j = 0; j <= total; ++j) obj[j] = obj[j] - f * T[pivot_row][j];
    }
    basis[pivot_row] = pivot_col;
  }
  Frac value(0);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] >= n) value = value + T[i][total];
  return value.zero();
}

struct TypeEntry {
  const char* tag;
  int rank;
  int cartan[4][4];  // cartan[i][j] = <alpha_i, alpha_j^vee>
};

const TypeEntry kTypes[] = {
    {"A1~", 1, {{2}}},
    {"A2~", 2, {{2, -1}, {-1, 2}}},
    {"C2~", 2, {{2, -1}, {-2, 2}}},
    {"G2~", 2, {{2, -1}, {-3, 2}}},
    {"A3~", 3, {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}},
};

const TypeEntry* find_type(const std::string& tag) {
  for (const auto& t : kTypes)
    if (tag == t.tag) return &t;
  return nullptr;
}

std::int64_t height(const Vec& root) {
  std::int64_t h = 0;
  for (int i = 0; i < root.n; ++i) h += root[i];
  return h;
}

}  // namespace

const RootDatum& RootDatum::get(const std::string& type_tag) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<RootDatum>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(type_tag);
  if (it == cache.end()) {
    if (!find_type(type_tag)) {
      std::string msg = "unknown type tag '" + type_tag + "'; supported:";
      for (const auto& t : supported_tags()) msg += " " + t;
      throw ConfigError(msg);
    }
    it = cache.emplace(type_tag, std::unique_ptr<RootDatum>(new RootDatum(type_tag))).first;
  }
  return *it->second;
}

std::vector<std::string> RootDatum::supported_tags() {
  std::vector<std::string> tags;
  for (const auto& t : kTypes) tags.push_back(t.tag);
  return tags;
}

RootDatum::RootDatum(const std::string& tag) : tag_(tag) {
  const TypeEntry* t = find_type(tag);
  rank_ = t->rank;
  cartan_.assign(rank_, std::vector<int>(rank_));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) cartan_[i][j] = t->cartan[i][j];
  build_roots();
  build_weyl_group();
  build_gens();
  build_bform();
  check_invariants();
}

std::int64_t RootDatum::pair(const Vec& root, const Vec& coweight) const {
  std::int64_t s = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) s += root[i] * cartan_[i][j] * coweight[j];
  return s;
}

std::int64_t RootDatum::rho_pair(const Vec& coweight) const {
  std::int64_t doubled = pair(rho2_, coweight);
  assert(doubled % 2 == 0);
  return doubled / 2;
}

void RootDatum::build_roots() {
  // Closure of the simple (root, coroot) pairs under simple reflections.
  std::set<std::pair<Vec, Vec>> pos;
  std::vector<std::pair<Vec, Vec>> frontier;
  for (int i = 0; i < rank_; ++i) {
    Vec a = Vec::zero(rank_), av = Vec::zero(rank_);
    a[i] = 1;
    av[i] = 1;
    frontier.emplace_back(a, av);
    pos.emplace(a, av);
  }
  while (!frontier.empty()) {
    std::vector<std::pair<Vec, Vec>> next;
    for (const auto& [a, av] : frontier) {
      for (int i = 0; i < rank_; ++i) {
        // s_i on root coords and on coroot coords.
        std::int64_t pa = 0;
        for (int k = 0; k < rank_; ++k) pa += a[k] * cartan_[k][i];  // <a, alpha_i^vee>
        Vec ra = a;
        ra[i] -= pa;
        std::int64_t pav = 0;
        for (int k = 0; k < rank_; ++k) pav += cartan_[i][k] * av[k];  // <alpha_i, av-dual>
        Vec rav = av;
        rav[i] -= pav;
        bool negative = false;
        for (int k = 0; k < rank_; ++k)
          if (ra[k] < 0) negative = true;
        if (negative) continue;
        if (pos.emplace(ra, rav).second) next.emplace_back(ra, rav);
      }
    }
    frontier = std::move(next);
  }
  for (const auto& [a, av] : pos) {
    positive_roots_.push_back(a);
    positive_coroots_.push_back(av);
  }
  // std::set on the pair already sorts lexicographically by root coordinates.
  rho2_ = Vec::zero(rank_);
  rho2v_ = Vec::zero(rank_);
  std::int64_t max_h = -1;
  for (int i = 0; i < num_positive_roots(); ++i) {
    rho2_ += positive_roots_[i];
    rho2v_ += positive_coroots_[i];
    root_index_[positive_roots_[i]] = i;
    if (height(positive_roots_[i]) > max_h) {
      max_h = height(positive_roots_[i]);
      theta_index_ = i;
    }
  }
  coxeter_number_ = static_cast<int>(max_h) + 1;
}

int RootDatum::find_positive_root(const Vec& root) const {
  auto it = root_index_.find(root);
  return it == root_index_.end() ? -1 : it->second;
}

void RootDatum::build_weyl_group() {
  // Generator matrices.
  std::vector<Mat> gen_cow(rank_ + 1), gen_root(rank_ + 1);
  for (int i = 1; i <= rank_; ++i) {
    Mat mc = Mat::identity(rank_), mr = Mat::identity(rank_);
    for (int j = 0; j < rank_; ++j) {
      mc.a[i - 1][j] -= cartan_[i - 1][j];
      mr.a[i - 1][j] -= cartan_[j][i - 1];
    }
    gen_cow[i] = mc;
    gen_root[i] = mr;
  }
  std::map<Mat, int> index;
  cow_action_.push_back(Mat::identity(rank_));
  root_action_.push_back(Mat::identity(rank_));
  w_length_.push_back(0);
  index[cow_action_[0]] = 0;
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int w : frontier) {
      for (int i = 1; i <= rank_; ++i) {
        Mat m = cow_action_[w] * gen_cow[i];
        if (index.count(m)) continue;
        int id = static_cast<int>(cow_action_.size());
        index[m] = id;
        cow_action_.push_back(m);
        root_action_.push_back(root_action_[w] * gen_root[i]);
        w_length_.push_back(w_length_[w] + 1);
        next.push_back(id);
      }
    }
    frontier = std::move(next);
  }
  const int n = order();
  mult_.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mult_[a][b] = index.at(cow_action_[a] * cow_action_[b]);
  inv_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mult_[a][b] == 0) inv_[a] = b;
  simple_refl_.assign(rank_ + 1, -1);
  for (int i = 1; i <= rank_; ++i) simple_refl_[i] = index.at(gen_cow[i]);
  w0_ = 0;
  for (int a = 0; a < n; ++a)
    if (w_length_[a] > w_length_[w0_]) w0_ = a;
  refl_for_root_.assign(num_positive_roots(), -1);
  for (int r = 0; r < num_positive_roots(); ++r) {
    // s_alpha: v -> v - <alpha, v> alpha^vee.
    Mat m = Mat::identity(rank_);
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j) {
        std::int64_t aj = 0;  // <alpha, e_j>
        for (int k = 0; k < rank_; ++k) aj += positive_roots_[r][k] * cartan_[k][j];
        m.a[i][j] -= positive_coroots_[r][i] * aj;
      }
    refl_for_root_[r] = index.at(m);
  }
}

void RootDatum::build_gens() {
  gens_.resize(rank_ + 1);
  if (tag_ == "A1~") {
    // Readability convention for rank 1: s_0 reflects at 0, s_1 at 1.
    gens_[0] = GenInfo{refl_for_root_[0], Vec::zero(1), 0, 0};
    Vec av = positive_coroots_[0];
    gens_[1] = GenInfo{refl_for_root_[0], av, 0, 1};
    return;
  }
  gens_[0] = GenInfo{refl_for_root_[theta_index_], theta_coroot(), theta_index_, 1};
  for (int i = 1; i <= rank_; ++i) {
    Vec a = Vec::zero(rank_);
    a[i - 1] = 1;
    gens_[i] = GenInfo{simple_refl_[i], Vec::zero(rank_), root_index_.at(a), 0};
  }
}

const RootDatum::GenInfo& RootDatum::gen(int letter) const {
  if (letter < 0 || letter > rank_)
    throw InputError("letter " + std::to_string(letter) + " out of range for " + tag_);
  return gens_[letter];
}

void RootDatum::build_bform() {
  // Invariant form on the coweight space. With d_i = |alpha_i|^2/2 the squared
  // coroot lengths scale as 1/d_i, and
  //   bform(alpha_i^vee, alpha_j^vee) = cartan[j][i] / d_j,
  // symmetric because d_i cartan[j][i] = d_j cartan[i][j]. The d_i are fixed
  // (up to scale) by that same symmetry relation on the Cartan matrix.
  std::vector<Frac> d(rank_, Frac(0));
  d[0] = Frac(1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j) {
        if (i == j || cartan_[i][j] == 0) continue;
        if (!d[i].zero() && d[j].zero()) {
          d[j] = d[i] * Frac(cartan_[j][i], cartan_[i][j]);
          changed = true;
        }
      }
  }
  std::vector<Frac> e(rank_);
  for (int i = 0; i < rank_; ++i) e[i] = Frac(d[i].den, d[i].num);
  std::int64_t lcm = 1;
  for (const auto& f : e) lcm = std::lcm(lcm, f.den);
  bform_.assign(rank_, std::vector<std::int64_t>(rank_));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      bform_[i][j] = e[j].num * (lcm / e[j].den) * cartan_[j][i];
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) assert(bform_[i][j] == bform_[j][i]);
}

std::int64_t RootDatum::bform(const Vec& x, const Vec& y) const {
  std::int64_t s = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) s += x[i] * bform_[i][j] * y[j];
  return s;
}

bool RootDatum::is_dominant(const Weight& v) const {
  for (int i = 0; i < rank_; ++i) {
    Vec a = Vec::zero(rank_);
    a[i] = 1;
    if (pair(a, v) < 0) return false;
  }
  return true;
}

Weight RootDatum::dominant(const Weight& v) const {
  Weight cur = v;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < rank_; ++i) {
      Vec a = Vec::zero(rank_);
      a[i] = 1;
      std::int64_t p = pair(a, cur);
      if (p < 0) {
        Vec av = Vec::zero(rank_);
        av[i] = 1;
        cur = cur - av * p;
        moved = true;
      }
    }
  }
  return cur;
}

bool RootDatum::dominance_leq(const Weight& nu, const Weight& lambda) const {
  for (int i = 0; i < rank_; ++i)
    if (lambda[i] - nu[i] < 0) return false;
  return true;
}

std::set<Weight> RootDatum::weyl_orbit(const Weight& lambda) const {
  std::set<Weight> orbit;
  for (int w = 0; w < order(); ++w) orbit.insert(w_act(w, lambda));
  return orbit;
}

std::map<Weight, std::int64_t> RootDatum::freudenthal_multiplicities(const Weight& lambda) const {
  if (!is_dominant(lambda)) throw PreconditionError("freudenthal: lambda must be dominant");
  // Dominant candidates mu with lambda - mu a nonnegative coroot combination,
  // enumerated over the coordinate box of the orbit hull.
  std::vector<Weight> dominants;
  {
    std::vector<std::int64_t> lo(rank_), hi(rank_);
    for (const auto& v : weyl_orbit(lambda))
      for (int i = 0; i < rank_; ++i) {
        lo[i] = std::min(lo[i], v[i]);
        hi[i] = std::max(hi[i], v[i]);
      }
    Weight mu = Vec::zero(rank_);
    for (int i = 0; i < rank_; ++i) mu[i] = lo[i];
    while (true) {
      if (is_dominant(mu) && dominance_leq(mu, lambda)) dominants.push_back(mu);
      int i = 0;
      while (i < rank_ && mu[i] == hi[i]) {
        mu[i] = lo[i];
        ++i;
      }
      if (i == rank_) break;
      mu[i] += 1;
    }
  }
  // Sort by descending height of mu (ascending level of lambda - mu).
  std::sort(dominants.begin(), dominants.end(), [&](const Weight& a, const Weight& b) {
    std::int64_t la = 0, lb = 0;
    for (int i = 0; i < rank_; ++i) {
      la += lambda[i] - a[i];
      lb += lambda[i] - b[i];
    }
    if (la != lb) return la < lb;
    return a < b;
  });

  std::map<Weight, std::int64_t> mult;  // keyed by dominant representative
  auto lookup = [&](const Weight& v) -> std::int64_t {
    auto it = mult.find(dominant(v));
    return it == mult.end() ? 0 : it->second;
  };
  Vec lam2r = lambda * 2 + rho2v_;  // 2(lambda + rho^vee)
  for (const auto& mu : dominants) {
    if (mu == lambda) {
      mult[mu] = 1;
      continue;
    }
    if (!dominance_leq(mu, lambda)) continue;
    Vec mu2r = mu * 2 + rho2v_;
    std::int64_t denom = bform(lam2r, lam2r) - bform(mu2r, mu2r);
    assert(denom > 0);
    std::int64_t rhs = 0;
    for (int r = 0; r < num_positive_roots(); ++r) {
      const Vec& av = positive_coroots_[r];
      for (std::int64_t k = 1;; ++k) {
        Weight nu = mu + av * k;
        if (!dominance_leq(nu, lambda)) break;
        std::int64_t m = lookup(nu);
        if (m) rhs += m * bform(nu * 2, av * 2);
      }
    }
    assert((2 * rhs) % denom == 0);
    std::int64_t m = 2 * rhs / denom;
    if (m) mult[mu] = m;
  }
  // Expand over Weyl orbits.
  std::map<Weight, std::int64_t> full;
  std::int64_t dim = 0;
  for (const auto& [mu, m] : mult) {
    for (const auto& v : weyl_orbit(mu)) {
      full[v] = m;
      dim += m;
    }
  }
  // Cross-check against the Weyl dimension formula.
  Frac wdim(1);
  for (int r = 0; r < num_positive_roots(); ++r) {
    const Vec& av = positive_coroots_[r];
    wdim = wdim * Frac(bform(lam2r, av * 2), bform(rho2v_, av * 2));
  }
  assert(wdim.den == 1 && wdim.num == dim);
  return full;
}

bool convex_membership_points(const Weight& p, const std::vector<Weight>& points) {
  if (points.empty()) return false;
  const int rank = p.n;
  // Feasibility of: t >= 0, sum t_i = 1, sum t_i v_i = p.
  std::vector<std::vector<Frac>> A(rank + 1, std::vector<Frac>(points.size()));
  std::vector<Frac> b(rank + 1);
  for (std::size_t j = 0; j < points.size(); ++j) {
    for (int i = 0; i < rank; ++i) A[i][j] = Frac(points[j][i]);
    A[rank][j] = Frac(1);
  }
  for (int i = 0; i < rank; ++i) b[i] = Frac(p[i]);
  b[rank] = Frac(1);
  return lp_feasible(std::move(A), std::move(b));
}

bool RootDatum::convex_hull_membership(const Weight& nu, const Weight& lambda) const {
  if (!is_dominant(lambda)) throw PreconditionError("convex_hull_membership: lambda must be dominant");
  std::set<Weight> orbit_set = weyl_orbit(lambda);
  std::vector<Weight> orbit(orbit_set.begin(), orbit_set.end());
  return convex_membership_points(nu, orbit);
}

int RootDatum::finite_from_word(const std::vector<int>& letters) const {
  int w = 0;
  for (int l : letters) {
    if (l < 1 || l > rank_) throw InputError("finite letter out of range: " + std::to_string(l));
    w = mult_[w][simple_refl_[l]];
  }
  return w;
}

std::vector<int> RootDatum::finite_reduced_word(int w) const {
  std::vector<int> word;
  while (w != 0) {
    for (int i = 1; i <= rank_; ++i) {
      int ws = mult_[w][simple_refl_[i]];
      if (w_length_[ws] < w_length_[w]) {
        word.push_back(i);
        w = ws;
        break;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::string RootDatum::registry_json() const {
  nlohmann::ordered_json j;
  j["version"] = 1;
  j["tag"] = tag_;
  j["rank"] = rank_;
  j["cartan"] = cartan_;
  auto vec_list = [&](const std::vector<Vec>& vs) {
    std::vector<std::vector<std::int64_t>> out;
    for (const auto& v : vs) {
      std::vector<std::int64_t> row;
      for (int i = 0; i < v.n; ++i) row.push_back(v[i]);
      out.push_back(row);
    }
    return out;
  };
  auto vec_one = [&](const Vec& v) {
    std::vector<std::int64_t> row;
    for (int i = 0; i < v.n; ++i) row.push_back(v[i]);
    return row;
  };
  j["positive_roots"] = vec_list(positive_roots_);
  j["positive_coroots"] = vec_list(positive_coroots_);
  j["rho_doubled"] = vec_one(rho2_);
  j["theta"] = vec_one(theta());
  j["coxeter_number"] = coxeter_number_;
  j["weyl_order"] = order();
  j["longest_length"] = w_length_[w0_];
  nlohmann::ordered_json labels;
  for (int l = 0; l <= rank_; ++l) {
    labels.push_back({{"letter", l},
                      {"wall_root", vec_one(positive_roots_[gens_[l].wall_root])},
                      {"wall_level", gens_[l].wall_level}});
  }
  j["generator_labels"] = labels;
  return j.dump(2);
}

void RootDatum::check_invariants() const {
  assert(num_positive_roots() == w_length_[w0_]);
  for (int i = 0; i < rank_; ++i) {
    Vec av = Vec::zero(rank_);
    av[i] = 1;
    assert(pair(rho2_, av) == 2);  // <2 rho, alpha_i^vee> = 2
  }
  for (int i = 0; i < rank_; ++i) {
    assert(cartan_[i][i] == 2);
    for (int j = 0; j < rank_; ++j)
      if (i != j) assert(cartan_[i][j] <= 0);
  }
}

}  // namespace coxshadow
