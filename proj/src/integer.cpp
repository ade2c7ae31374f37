#include "ehrhart/integer.hpp"

#include <limits>
#include <sstream>

#include "ehrhart/error.hpp"

namespace ehrhart {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::AllZero: return "AllZero";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::AffinelyDependent: return "AffinelyDependent";
    case ErrorCode::MixedDimensions: return "MixedDimensions";
    case ErrorCode::VolumeCapExceeded: return "VolumeCapExceeded";
    case ErrorCode::NonPositiveDilation: return "NonPositiveDilation";
    case ErrorCode::BoxCapExceeded: return "BoxCapExceeded";
    case ErrorCode::InconsistentCounts: return "InconsistentCounts";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::NoClosedForm: return "NoClosedForm";
    case ErrorCode::CertificateMismatch: return "CertificateMismatch";
    case ErrorCode::TheoremViolated: return "TheoremViolated";
    case ErrorCode::RouteMismatch: return "RouteMismatch";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Rational ratio(const Int& num, const Int& den) {
  if (den == 0) throw Error(ErrorCode::InvalidInput, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Int floor(const Rational& q) { return floor_div(q.get_num(), q.get_den()); }

Int ceil(const Rational& q) { return ceil_div(q.get_num(), q.get_den()); }

Rational frac(const Rational& q) {
  Rational r = q - Rational(floor(q));
  r.canonicalize();
  return r;
}

Int binomial_poly(const Int& x, unsigned k) {
  Int num = 1;
  for (unsigned j = 0; j < k; ++j) num *= x - j;
  Int q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), factorial(k).get_mpz_t());
  return q;
}

Int factorial(unsigned k) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return f;
}

std::optional<std::int64_t> to_int64(const Int& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return std::nullopt;
}

Int from_decimal(const std::string& text) {
  Int v;
  if (text.empty() || v.set_str(text, 10) != 0)
    throw Error(ErrorCode::InvalidInput, "not a decimal integer: '" + text + "'");
  return v;
}

std::string to_string(std::span<const Int> seq) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out << ',';
    out << seq[i].get_str();
  }
  out << ')';
  return out.str();
}

IntVector to_ints(std::initializer_list<long> values) {
  IntVector out;
  out.reserve(values.size());
  for (long v : values) out.emplace_back(v);
  return out;
}

// Fraction-free Bareiss elimination.
Int determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  for (const auto& row : m)
    if (row.size() != n) throw Error(ErrorCode::InvalidInput, "determinant of a non-square matrix");
  IntMatrix a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t rows = a.size();
  const std::size_t inner = b.size();
  const std::size_t cols = inner ? b[0].size() : 0;
  IntMatrix out(rows, IntVector(cols, 0));
  for (std::size_t i = 0; i < rows; ++i) {
    if (a[i].size() != inner) throw Error(ErrorCode::InvalidInput, "matrix shape mismatch");
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix id(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

}  // namespace ehrhart
