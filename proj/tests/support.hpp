#pragma once

// Generators and independent oracles shared by the unit tests. Nothing here
// calls into the code under test except for types.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "inscriber/kernel.hpp"

namespace testing_support {

using inscriber::Point;
using inscriber::Scalar;

// Bounded-denominator rationals from a fixed seed.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

  Scalar rational(int bound = 4, int den = 16) {
    const int q = integer(1, den);
    Scalar s(integer(-bound * q, bound * q), q);
    s.canonicalize();
    return s;
  }

  Point point(int m, int bound = 4, int den = 16) {
    Point p(m);
    for (auto& x : p) x = rational(bound, den);
    return p;
  }

  std::vector<Point> points(int count, int m, int bound = 4, int den = 16) {
    std::vector<Point> out;
    for (int i = 0; i < count; ++i) out.push_back(point(m, bound, den));
    return out;
  }

 private:
  std::mt19937_64 engine_;
};

// Determinant by the Leibniz expansion over all permutations.
inline Scalar leibniz_det(const std::vector<std::vector<Scalar>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Scalar total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Scalar term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline int sign_of(const Scalar& s) { return s > 0 ? 1 : (s < 0 ? -1 : 0); }

// Orientation sign from the edge-vector matrix.
inline int oracle_orientation(const std::vector<Point>& s) {
  std::vector<std::vector<Scalar>> m;
  for (std::size_t i = 1; i < s.size(); ++i) {
    std::vector<Scalar> row;
    for (std::size_t k = 0; k < s[0].size(); ++k) row.push_back(s[i][k] - s[0][k]);
    m.push_back(row);
  }
  return sign_of(leibniz_det(m));
}

// Sign of the classical lifted in-sphere determinant times the orientation:
// positive inside, zero on, negative outside.
inline int oracle_insphere(const std::vector<Point>& s, const Point& p) {
  std::vector<std::vector<Scalar>> m;
  auto row_of = [&](const Point& q) {
    std::vector<Scalar> row;
    Scalar sq = 0;
    for (std::size_t k = 0; k < q.size(); ++k) {
      row.push_back(q[k] - p[k]);
      sq += (q[k] - p[k]) * (q[k] - p[k]);
    }
    row.push_back(sq);
    return row;
  };
  for (const auto& q : s) m.push_back(row_of(q));
  const int o = oracle_orientation(s);
  // Inside means det * orientation has sign (-1)^m; m = 1 gives
  // (q0-p)(q1-p)(q1-q0), negative between the endpoints.
  return sign_of(leibniz_det(m)) * o * (s[0].size() % 2 == 0 ? 1 : -1);
}

inline Scalar sq_dist(const Point& a, const Point& b) {
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return s;
}

// A simplex in R^m with a positive-volume check by the oracle.
inline std::vector<Point> random_simplex(Gen& g, int m) {
  while (true) {
    auto s = g.points(m + 1, m);
    if (oracle_orientation(s) != 0) return s;
  }
}

}  // namespace testing_support
