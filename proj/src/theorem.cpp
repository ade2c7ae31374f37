#include "ehrhart/theorem.hpp"

#include <algorithm>
#include <future>

#include "ehrhart/error.hpp"

namespace ehrhart::theorem {

namespace {

using exactseq::Property;
using exactseq::PropertyVerdict;

PropertyVerdict failed_verdict(Property p) {
  PropertyVerdict v{p};
  v.holds = false;
  return v;
}

bool chain_a_holds(const IntVector& x, std::size_t d) {
  for (std::size_t i = 1; d >= 1 && 2 * i <= d - 1; ++i)
    if (x[i] > x[d - i]) return false;
  return true;
}

bool chain_b_holds(const IntVector& x, std::size_t d) {
  for (std::size_t i = 1; 2 * i <= d; ++i)
    if (x[d + 1 - i] >= x[i]) return false;
  return true;
}

void require_admissible(const series::HPolynomial& h, long n, std::size_t i, std::size_t i_max) {
  const Hypotheses hyp = check_hypotheses(h);
  if (!hyp.all()) throw Error(ErrorCode::PreconditionViolated, "hypotheses fail for " + to_string(h.coeffs));
  const std::size_t d = h.d();
  const Bound b = thm_bound(series::delta_degree(h.coeffs), d);
  if (n < static_cast<long>(b.ai))
    throw Error(ErrorCode::PreconditionViolated,
                "n = " + std::to_string(n) + " is below max{s, d+1-s} = " + std::to_string(b.ai));
  if (i < 1 || i > i_max)
    throw Error(ErrorCode::PreconditionViolated,
                "i = " + std::to_string(i) + " outside 1.." + std::to_string(i_max));
}

// Support of h and prefix sums over it.
struct Support {
  std::vector<std::size_t> k;
  IntVector H;
  std::size_t last() const { return k.size() - 1; }
};

Support support_of(const series::HPolynomial& h) {
  Support s;
  for (std::size_t r = 0; r <= h.d(); ++r)
    if (h[r] != 0) {
      s.k.push_back(r);
      s.H.push_back(h[r]);
    }
  return s;
}

// Accumulates coefficient * pair / divisor, skipping zero coefficients.
struct SummandBuilder {
  std::vector<CertificateTerm> terms;
  Rational value = 0;
  bool pairs_ok = true;

  void add(std::size_t p, std::size_t q, const Int& coefficient, const Int& pair, int divisor = 1) {
    if (coefficient == 0) return;
    if (pair < 0) pairs_ok = false;
    terms.push_back({p, q, coefficient, pair, divisor});
    value += ratio(coefficient * pair, Int(divisor));
  }
};

Int integral(const Rational& q, const char* what) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() != 1) throw Error(ErrorCode::CertificateMismatch, std::string(what) + " is not an integer");
  return c.get_num();
}

}  // namespace

Hypotheses check_hypotheses(const series::HPolynomial& h) {
  Hypotheses out;
  out.h = h;
  out.d = h.d();
  out.nonnegative = exactseq::all_nonnegative(h.coeffs);
  out.h0_is_one = !h.coeffs.empty() && h[0] == 1;
  out.dimension_ok = out.d >= 5;
  const bool evaluable = out.nonnegative && out.h0_is_one;
  out.stanley_half = evaluable ? exactseq::check_stanley_half(h.coeffs) : failed_verdict(Property::StanleyHalf);
  out.hibi_half = evaluable ? exactseq::check_hibi_half(h.coeffs) : failed_verdict(Property::HibiHalf);
  return out;
}

Bound thm_bound(std::size_t s, std::size_t d) {
  if (s > d) throw Error(ErrorCode::PreconditionViolated, "degree s exceeds d");
  return {s, std::max(s, d + 1 - s)};
}

long lc_assertion_start(std::size_t s, std::size_t d) {
  // Below (d+1)/2 the top coefficients of U_n h can vanish, e.g. U_2 of
  // (1,0,0,0,0,0) is (1,15,15,1,0,0), so strictness is checked from there.
  return static_cast<long>(std::max(s, (d + 2) / 2));
}

SweepReport sweep(const series::HPolynomial& h, long n_max) {
  if (n_max < 1) throw Error(ErrorCode::BadParams, "n_max must be >= 1");
  SweepReport rep;
  rep.h = h;
  rep.d = h.d();
  rep.s = series::delta_degree(h.coeffs);
  rep.n_max = n_max;
  rep.hypotheses = check_hypotheses(h);
  rep.bound = thm_bound(rep.s, rep.d);
  rep.theorem_applies = rep.hypotheses.all();
  if (!rep.hypotheses.dimension_ok) rep.notes.push_back("d < 5: theorem hypotheses unmet, no assertion made");
  if (!rep.hypotheses.sequence_ok()) rep.notes.push_back("inequality hypotheses fail: no assertion made");

  const std::size_t d = rep.d;
  auto evaluate = [&](long n) {
    SweepRecord r;
    r.n = n;
    r.delta = series::u_n_convolution(h, n);
    const IntVector& x = r.delta.coeffs;
    r.strictly_log_concave = exactseq::is_log_concave(x, true).holds;
    r.chain_a = chain_a_holds(x, d);
    r.chain_b = chain_b_holds(x, d);
    r.alternatingly_increasing = exactseq::is_alternatingly_increasing(x, false).holds;
    r.strictly_alternatingly_increasing = exactseq::is_alternatingly_increasing(x, true).holds;
    r.at_or_above_bound = n >= static_cast<long>(rep.bound.ai);
    return r;
  };
  std::vector<std::future<SweepRecord>> jobs;
  for (long n = 1; n <= n_max; ++n) jobs.push_back(std::async(std::launch::async, evaluate, n));
  for (auto& job : jobs) rep.records.push_back(job.get());

  for (const SweepRecord& r : rep.records) {
    if (!rep.min_n_lc && r.strictly_log_concave) rep.min_n_lc = r.n;
    if (!rep.min_n_ai && r.strictly_alternatingly_increasing) rep.min_n_ai = r.n;
  }
  if (!rep.theorem_applies) return rep;

  const long lc_from = lc_assertion_start(rep.s, d);
  const long ai = static_cast<long>(rep.bound.ai);
  const bool top_exceeds_one = h[rep.s] > 1;
  for (const SweepRecord& r : rep.records) {
    auto violated = [&](const std::string& what) {
      throw Error(ErrorCode::TheoremViolated, what + " fails at n = " + std::to_string(r.n) + " for h = " +
                                                  to_string(h.coeffs) + ": " + to_string(r.delta.coeffs));
    };
    if (r.n >= lc_from && !r.strictly_log_concave) violated("strict log-concavity");
    if (r.n >= ai && !r.chain_a) violated("chain delta_i <= delta_{d-i}");
    if (r.n >= ai && !r.chain_b) violated("chain delta_{d+1-i} < delta_i");
    if (r.n > ai && !r.strictly_alternatingly_increasing) violated("strict alternating increase");
    if (r.n == ai && top_exceeds_one && !r.strictly_alternatingly_increasing)
      violated("strict alternating increase at the bound with h_s > 1");
  }
  if (lc_from > static_cast<long>(rep.s))
    rep.notes.push_back("strict log-concavity asserted from n = " + std::to_string(lc_from));
  return rep;
}

FrontCertificate certify_front(const series::HPolynomial& h, long n, std::size_t i) {
  const std::size_t d = h.d();
  require_admissible(h, n, i, (d - 1) / 2);
  const long s = static_cast<long>(series::delta_degree(h.coeffs));
  const series::RepunitPower a = series::repunit_power(n, d);
  const Support sup = support_of(h);
  const std::size_t L = sup.last();
  const auto& k = sup.k;
  const auto& H = sup.H;

  IntVector F(L + 1), T(L + 2, 0);
  for (std::size_t j = 0; j <= L; ++j) F[j] = H[j] + (j ? F[j - 1] : Int(0));
  for (std::size_t r = L + 1; r-- > 0;) T[r] = H[r] + T[r + 1];

  FrontCertificate c;
  c.d = d;
  c.n = n;
  c.i = i;
  c.k = k;
  c.match.resize(L + 1);
  for (std::size_t j = 0; j <= L; ++j) {
    if (F[j] <= H[L]) {
      c.match[j] = L;
      continue;
    }
    std::size_t r = 0;
    while (!(T[r + 1] < F[j] && F[j] <= T[r])) ++r;
    c.match[j] = r;
  }
  const auto& m = c.match;
  for (std::size_t j = 0; j <= L; ++j)
    if (j <= m[j]) c.pivot = j;
  const std::size_t t = c.pivot;
  c.pivot_ok = m[t] == t || m[t] == t + 1;
  for (std::size_t j = 0; j < L; ++j)
    if (static_cast<long>(k[j] + k[m[j]]) < s) c.front_degrees_ok = false;

  const long P = n * static_cast<long>(d - i);
  const long Q = n * static_cast<long>(i);
  auto A = [&](std::size_t p, std::size_t q) -> Int {
    const long kp = static_cast<long>(k[p]), kq = static_cast<long>(k[q]);
    return (a.at(P - kp) - a.at(Q - kq)) + (a.at(P - kq) - a.at(Q - kp));
  };

  const series::HPolynomial delta = series::u_n_convolution(h, n);
  c.direct = delta[d - i] - delta[i];

  if (L == 0) {
    // Single support index: only the diagonal pair, halved.
    c.lead = A(0, 0) / 2;
  } else {
    c.lead = A(0, L);
    if (c.lead < 0) c.pairs_nonnegative = false;
    for (std::size_t j = 1; j <= m[t]; ++j) {
      SummandBuilder f;
      if (m[t] == t + 1 && j == t + 1) {
        f.add(j, j, T[m[t]] - F[t], A(j, j), 2);
      } else if (m[t] == t && j == t && m[t] == m[t - 1]) {
        f.add(t, t, T[m[t - 1]] - F[t - 1], A(t, t), 2);
      } else if (m[j] < m[j - 1]) {
        const bool diagonal = m[t] == t && j == t;
        f.add(j, m[j - 1], T[m[j - 1]] - F[j - 1], A(j, m[j - 1]));
        for (std::size_t r = m[j] + 1; r < m[j - 1]; ++r) f.add(j, r, H[r], A(j, r));
        f.add(j, m[j], F[j] - T[m[j] + 1], A(j, m[j]), diagonal ? 2 : 1);
      } else {
        f.add(j, m[j], H[j], A(j, m[j]));
      }
      const Int value = integral(f.value, "summand");
      if (!f.pairs_ok) c.pairs_nonnegative = false;
      if (value < 0) c.summands_nonnegative = false;
      c.summands.emplace_back(j, value);
      c.terms.push_back(std::move(f.terms));
    }
  }
  c.decomposition = c.lead;
  for (const auto& [j, v] : c.summands) c.decomposition += v;
  if (c.decomposition != c.direct)
    throw Error(ErrorCode::CertificateMismatch,
                "delta_{d-i} - delta_i = " + c.direct.get_str() + " but the decomposition gives " +
                    c.decomposition.get_str());
  return c;
}

BackCertificate certify_back(const series::HPolynomial& h, long n, std::size_t i) {
  const std::size_t d = h.d();
  require_admissible(h, n, i, d / 2);
  const series::RepunitPower a = series::repunit_power(n, d);
  const Support sup = support_of(h);
  const std::size_t L = sup.last();
  const auto& k = sup.k;
  const auto& H = sup.H;

  // G(q) = H_1 + ... + H_q, T(j) = H_j + ... + H_L.
  IntVector G(L + 1, 0), T(L + 2, 0);
  for (std::size_t q = 1; q <= L; ++q) G[q] = G[q - 1] + H[q];
  for (std::size_t r = L + 1; r-- > 1;) T[r] = H[r] + T[r + 1];

  BackCertificate c;
  c.d = d;
  c.n = n;
  c.i = i;
  c.k = k;
  c.match.assign(L + 2, 0);  // match[L + 1] = 0
  for (std::size_t j = 1; j <= L; ++j) {
    if (H[1] >= T[j]) {
      c.match[j] = 1;
      continue;
    }
    std::size_t r = 2;
    while (!(G[r - 1] < T[j] && T[j] <= G[r])) ++r;
    c.match[j] = r;
  }
  const auto& nn = c.match;
  for (std::size_t j = 1; j <= L; ++j)
    if (k[j] + k[nn[j]] > d + 1) c.back_degrees_ok = false;
  for (std::size_t j = L; j >= 1; --j)
    if (j >= nn[j]) c.pivot = j;

  const long P = n * static_cast<long>(i);
  const long Q = n * static_cast<long>(d + 1 - i);
  auto B = [&](std::size_t p, std::size_t q) -> Int {
    const long kp = static_cast<long>(k[p]), kq = static_cast<long>(k[q]);
    return (a.at(P - kp) - a.at(Q - kq)) + (a.at(P - kq) - a.at(Q - kp));
  };

  const series::HPolynomial delta = series::u_n_convolution(h, n);
  c.direct = delta[i] - delta[d + 1 - i];
  c.b00 = B(0, 0);
  c.b00_positive = c.b00 > 0;

  Rational total = ratio(c.b00, Int(2));
  if (c.pivot) {
    const std::size_t tp = *c.pivot;
    c.pivot_ok = nn[tp] == tp || nn[tp] + 1 == tp;
    for (std::size_t j = nn[tp]; j <= L; ++j) {
      SummandBuilder g;
      if (nn[tp] + 1 == tp && j + 1 == tp) {
        g.add(j, j, G[nn[tp]] - T[tp], B(j, j), 2);
      } else if (nn[tp] == tp && j == tp && nn[tp + 1] == nn[tp]) {
        // H[r] is h_{k_r}: the coefficient at support position r.
        g.add(j, j, G[nn[tp]] - T[tp + 1], B(j, j), 2);
      } else if (nn[j + 1] < nn[j]) {
        const bool diagonal = nn[tp] == tp && j == tp;
        // n(L+1) = 0 makes the first coefficient vanish for j = L.
        g.add(j, nn[j + 1], G[nn[j + 1]] - T[j + 1], nn[j + 1] ? B(j, nn[j + 1]) : Int(0));
        for (std::size_t r = nn[j + 1] + 1; r < nn[j]; ++r) g.add(j, r, H[r], B(j, r));
        g.add(j, nn[j], T[j] - G[nn[j] - 1], B(j, nn[j]), diagonal ? 2 : 1);
      } else {
        g.add(j, nn[j], H[j], B(j, nn[j]));
      }
      const Int value = integral(g.value, "summand");
      if (!g.pairs_ok) c.pairs_nonnegative = false;
      if (value < 0) c.summands_nonnegative = false;
      total += value;
      c.summands.emplace_back(j, value);
      c.terms.push_back(std::move(g.terms));
    }
  }
  c.decomposition = integral(total, "B(0,0)/2 + sum of summands");
  if (c.decomposition != c.direct)
    throw Error(ErrorCode::CertificateMismatch,
                "delta_i - delta_{d+1-i} = " + c.direct.get_str() + " but the decomposition gives " +
                    c.decomposition.get_str());
  return c;
}

}  // namespace ehrhart::theorem
