#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

namespace coxshadow {

inline constexpr int kMaxRank = 4;

// Small integer vector with a fixed runtime dimension (<= kMaxRank).
// Unused slots are kept at zero so that default comparison is valid.
struct Vec {
  int n = 0;
  std::array<std::int64_t, kMaxRank> c{};

  static Vec zero(int dim) {
    Vec v;
    v.n = dim;
    return v;
  }

  std::int64_t& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  std::int64_t operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

  Vec operator+(const Vec& o) const {
    Vec r = *this;
    for (int i = 0; i < n; ++i) r.c[i] += o.c[i];
    return r;
  }
  Vec operator-(const Vec& o) const {
    Vec r = *this;
    for (int i = 0; i < n; ++i) r.c[i] -= o.c[i];
    return r;
  }
  Vec operator-() const {
    Vec r = *this;
    for (int i = 0; i < n; ++i) r.c[i] = -r.c[i];
    return r;
  }
  Vec operator*(std::int64_t k) const {
    Vec r = *this;
    for (int i = 0; i < n; ++i) r.c[i] *= k;
    return r;
  }
  Vec& operator+=(const Vec& o) {
    for (int i = 0; i < n; ++i) c[i] += o.c[i];
    return *this;
  }

  bool is_zero() const {
    for (int i = 0; i < n; ++i)
      if (c[i] != 0) return false;
    return true;
  }

  auto operator<=>(const Vec&) const = default;

  std::string str() const {
    std::string s = "(";
    for (int i = 0; i < n; ++i) {
      if (i) s += ",";
      s += std::to_string(c[i]);
    }
    return s + ")";
  }
};

// Square integer matrix acting on Vec by rows: (M v)_i = sum_j M[i][j] v_j.
struct Mat {
  int n = 0;
  std::array<std::array<std::int64_t, kMaxRank>, kMaxRank> a{};

  static Mat identity(int dim) {
    Mat m;
    m.n = dim;
    for (int i = 0; i < dim; ++i) m.a[i][i] = 1;
    return m;
  }

  Vec apply(const Vec& v) const {
    Vec r = Vec::zero(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r.c[i] += a[i][j] * v.c[j];
    return r;
  }

  Mat operator*(const Mat& o) const {
    Mat r;
    r.n = n;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::int64_t s = 0;
        for (int k = 0; k < n; ++k) s += a[i][k] * o.a[k][j];
        r.a[i][j] = s;
      }
    return r;
  }

  auto operator<=>(const Mat&) const = default;
};

}  // namespace coxshadow
