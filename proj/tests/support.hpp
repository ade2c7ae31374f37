#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>
#include <vector>

#include "ehrhart/error.hpp"
#include "ehrhart/integer.hpp"

namespace testing {

using ehrhart::Int;
using ehrhart::IntMatrix;
using ehrhart::IntVector;

inline IntVector ints(std::initializer_list<long> v) { return ehrhart::to_ints(v); }

inline Int rand_int(std::mt19937_64& rng, long lo, long hi) {
  return Int(std::uniform_int_distribution<long>(lo, hi)(rng));
}

inline IntVector rand_vector(std::mt19937_64& rng, std::size_t len, long lo, long hi) {
  IntVector v(len);
  for (auto& x : v) x = rand_int(rng, lo, hi);
  return v;
}

/// h_0 = 1, the rest uniformly in [0, hi].
inline IntVector rand_h(std::mt19937_64& rng, std::size_t d, long hi) {
  IntVector h = rand_vector(rng, d + 1, 0, hi);
  h[0] = 1;
  return h;
}

inline IntMatrix standard_simplex(std::size_t d) {
  IntMatrix v(d + 1, IntVector(d, 0));
  for (std::size_t i = 0; i < d; ++i) v[i + 1][i] = 1;
  return v;
}

/// (0, e_1, ..., e_{d-1}, last).
inline IntMatrix standard_with_last(const IntVector& last) {
  IntMatrix v = standard_simplex(last.size());
  v.back() = last;
  return v;
}

/// Random unimodular matrix built from elementary row operations.
inline IntMatrix rand_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 12) {
  IntMatrix u = ehrhart::identity_matrix(n);
  if (n < 2) return u;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (int s = 0; s < steps; ++s) {
    const std::size_t a = pick(rng);
    std::size_t b = pick(rng);
    if (a == b) b = (b + 1) % n;
    const Int k = rand_int(rng, -2, 2);
    for (std::size_t j = 0; j < n; ++j) u[a][j] += k * u[b][j];
    if (s % 3 == 0) std::swap(u[a], u[b]);
  }
  return u;
}

/// Applies x -> x U + t to every row.
inline IntMatrix transform(const IntMatrix& rows, const IntMatrix& u, const IntVector& t) {
  IntMatrix out = ehrhart::multiply(rows, u);
  for (auto& r : out)
    for (std::size_t j = 0; j < r.size(); ++j) r[j] += t[j];
  return out;
}

/// Code of the ehrhart::Error thrown by f, nullopt when nothing is thrown.
template <typename F>
std::optional<ehrhart::ErrorCode> error_code_of(F&& f) {
  try {
    f();
  } catch (const ehrhart::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace testing
