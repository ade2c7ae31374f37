#include "ehrhart/series.hpp"

#include "ehrhart/error.hpp"
#include "ehrhart/exactseq.hpp"

namespace ehrhart::series {

namespace {

void require_positive(long n) {
  if (n < 1) throw Error(ErrorCode::NonPositiveDilation, "dilation factor must be >= 1, got " + std::to_string(n));
}

}  // namespace

HPolynomial make_h_polynomial(IntVector coeffs) {
  if (coeffs.empty()) throw Error(ErrorCode::InvalidInput, "empty h-polynomial");
  if (coeffs.front() != 1) throw Error(ErrorCode::InvalidInput, "h_0 must be 1, got " + to_string(coeffs));
  if (!exactseq::all_nonnegative(coeffs))
    throw Error(ErrorCode::InvalidInput, "negative coefficient in " + to_string(coeffs));
  return HPolynomial{std::move(coeffs)};
}

Int g_eval(const HPolynomial& h, const Int& m) {
  const std::size_t d = h.d();
  Int total = 0;
  for (std::size_t i = 0; i <= d; ++i)
    if (h[i] != 0) total += h[i] * binomial_poly(m + static_cast<long>(d - i), d);
  return total;
}

Int RepunitPower::at(long k) const {
  if (k < 0 || k > top()) return 0;
  return a[k];
}

RepunitPower repunit_power(long n, std::size_t d) {
  require_positive(n);
  const IntVector base(n, Int(1));
  RepunitPower rp{n, d + 1, IntVector{1}};
  // Square-and-multiply keeps the number of big products logarithmic.
  IntVector power = base;
  for (std::size_t e = d + 1; e > 0; e >>= 1) {
    if (e & 1) rp.a = multiply_polynomials(rp.a, power);
    if (e > 1) power = multiply_polynomials(power, power);
  }
  if (n >= 2 && d >= 1) {
    const RepunitProperties props = check_repunit_properties(rp);
    if (!props.symmetric || !props.strictly_log_concave || !props.strictly_increasing_to_middle)
      throw Error(ErrorCode::Internal, "repunit power lost symmetry or strict log-concavity");
  }
  return rp;
}

RepunitProperties check_repunit_properties(const RepunitPower& rp) {
  RepunitProperties props;
  const long top = rp.top();
  for (long i = 0; i <= top; ++i)
    if (rp.a[i] != rp.a[top - i]) props.symmetric = false;
  for (long i = 1; i < top; ++i)
    if (rp.a[i] * rp.a[i] <= rp.a[i - 1] * rp.a[i + 1]) props.strictly_log_concave = false;
  for (long i = 1; i <= top / 2; ++i)
    if (rp.a[i] <= rp.a[i - 1]) props.strictly_increasing_to_middle = false;
  return props;
}

IntVector multiply_polynomials(const IntVector& p, const IntVector& q) {
  if (p.empty() || q.empty()) return {};
  IntVector out(p.size() + q.size() - 1, 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
  }
  return out;
}

HPolynomial u_n_convolution(const HPolynomial& h, long n) {
  require_positive(n);
  const std::size_t d = h.d();
  const RepunitPower rp = repunit_power(n, d);
  const long s = static_cast<long>(delta_degree(h.coeffs));
  // Only c_{n i} for i <= d is needed: c_j = sum_k h_k a_{j-k}.
  IntVector out(d + 1, 0);
  for (std::size_t i = 0; i <= d; ++i) {
    const long j = n * static_cast<long>(i);
    for (long k = 0; k <= s; ++k)
      if (h[k] != 0) out[i] += h[k] * rp.at(j - k);
  }
  return HPolynomial{std::move(out)};
}

HPolynomial u_n_interpolation(const HPolynomial& h, long n) {
  require_positive(n);
  const std::size_t d = h.d();
  IntVector out(d + 1, 0);
  for (std::size_t m = 0; m <= d; ++m) {
    Int rest = g_eval(h, Int(n) * static_cast<long>(m));
    for (std::size_t i = 0; i < m; ++i) rest -= out[i] * binomial_poly(Int(static_cast<long>(m + d - i)), d);
    out[m] = rest;  // coefficient of delta_m in row m is C(d, d) = 1
  }
  return HPolynomial{std::move(out)};
}

std::size_t delta_degree(const IntVector& coeffs) { return exactseq::degree(coeffs); }

Int coefficient_sum(const IntVector& coeffs) {
  Int sum = 0;
  for (const Int& c : coeffs) sum += c;
  return sum;
}

}  // namespace ehrhart::series
