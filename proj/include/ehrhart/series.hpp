#pragma once

#include <cstddef>

#include "ehrhart/integer.hpp"

namespace ehrhart::series {

/// h(t) = h_0 + ... + h_d t^d with h_0 = 1 and h_i >= 0; d is the ambient
/// degree bound of the rational function h(t) / (1 - t)^{d+1}.
struct HPolynomial {
  IntVector coeffs;

  std::size_t d() const { return coeffs.size() - 1; }
  const Int& operator[](std::size_t i) const { return coeffs[i]; }
  bool operator==(const HPolynomial&) const = default;
};

HPolynomial make_h_polynomial(IntVector coeffs);

/// g(m) = sum_i h_i C(m + d - i, d).
Int g_eval(const HPolynomial& h, const Int& m);

/// Coefficients a_0..a_{(d+1)(n-1)} of (1 + t + ... + t^{n-1})^{d+1}.
struct RepunitPower {
  long n = 1;
  std::size_t power = 1;
  IntVector a;

  /// a_k, zero outside the support (including negative k).
  Int at(long k) const;
  long top() const { return static_cast<long>(a.size()) - 1; }
};

RepunitPower repunit_power(long n, std::size_t d);

struct RepunitProperties {
  bool symmetric = true;                    // a_i = a_{top - i}
  bool strictly_log_concave = true;         // a_i^2 > a_{i-1} a_{i+1}
  bool strictly_increasing_to_middle = true;  // a_i > a_{i-1}, i <= top/2
};

RepunitProperties check_repunit_properties(const RepunitPower& rp);

IntVector multiply_polynomials(const IntVector& p, const IntVector& q);

/// U_n h: every n-th coefficient of h(t)(1 + ... + t^{n-1})^{d+1}, keeping
/// the length d + 1.
HPolynomial u_n_convolution(const HPolynomial& h, long n);

/// U_n h recovered from the values g(nm), m = 0..d, by forward
/// substitution in the triangular binomial system.
HPolynomial u_n_interpolation(const HPolynomial& h, long n);

/// max{i : h_i != 0}; throws AllZero.
std::size_t delta_degree(const IntVector& coeffs);

Int coefficient_sum(const IntVector& coeffs);

}  // namespace ehrhart::series
