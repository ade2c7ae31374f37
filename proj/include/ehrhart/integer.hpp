#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ehrhart {

using Int = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Int>;
using IntMatrix = std::vector<IntVector>;

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

/// Nonnegative remainder for b > 0.
inline Int mod_floor(const Int& a, const Int& b) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

/// num/den in lowest terms. Throws InvalidInput when den == 0.
Rational ratio(const Int& num, const Int& den);

Int floor(const Rational& q);
Int ceil(const Rational& q);
/// {q} = q - floor(q), in [0, 1).
Rational frac(const Rational& q);

/// C(x, k) as the degree-k polynomial x(x-1)...(x-k+1)/k!, valid for any
/// integer x including negatives.
Int binomial_poly(const Int& x, unsigned k);

Int factorial(unsigned k);

std::optional<std::int64_t> to_int64(const Int& v);

Int from_decimal(const std::string& text);

std::string to_string(std::span<const Int> seq);

IntVector to_ints(std::initializer_list<long> values);

Int determinant(const IntMatrix& m);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix identity_matrix(std::size_t n);

}  // namespace ehrhart
