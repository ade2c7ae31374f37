#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ehrhart/exactseq.hpp"
#include "ehrhart/integer.hpp"
#include "ehrhart/series.hpp"

/// Executable form of the dilation theorem: hypothesis checks, the bound on
/// n, sweeps over n, and checkers for the two pair-sum decompositions used
/// to prove the alternatingly increasing chains.
namespace ehrhart::theorem {

struct Hypotheses {
  series::HPolynomial h;
  std::size_t d = 0;
  bool nonnegative = true;
  bool h0_is_one = true;
  exactseq::PropertyVerdict stanley_half;  // Stanley sums up to floor(s/2)
  exactseq::PropertyVerdict hibi_half;  // Hibi sums up to floor((d+1)/2)
  bool dimension_ok = true;           // d >= 5

  bool sequence_ok() const { return nonnegative && h0_is_one && stanley_half.holds && hibi_half.holds; }
  bool all() const { return sequence_ok() && dimension_ok; }
};

/// Evaluates every check even when some fail; d is taken from h.
Hypotheses check_hypotheses(const series::HPolynomial& h);

struct Bound {
  std::size_t lc = 0;  // s
  std::size_t ai = 0;  // max{s, d + 1 - s}
};

/// Throws PreconditionViolated unless s <= d.
Bound thm_bound(std::size_t s, std::size_t d);

struct SweepRecord {
  long n = 0;
  series::HPolynomial delta;
  bool strictly_log_concave = false;
  bool chain_a = false;  // delta_i <= delta_{d-i}, 1 <= i <= floor((d-1)/2)
  bool chain_b = false;  // delta_{d+1-i} < delta_i, 1 <= i <= floor(d/2)
  bool alternatingly_increasing = false;
  bool strictly_alternatingly_increasing = false;
  bool at_or_above_bound = false;  // n >= max{s, d + 1 - s}
};

struct SweepReport {
  series::HPolynomial h;
  std::size_t d = 0;
  std::size_t s = 0;
  long n_max = 0;
  Hypotheses hypotheses;
  Bound bound;
  std::vector<SweepRecord> records;  // n = 1..n_max
  std::optional<long> min_n_lc;
  std::optional<long> min_n_ai;
  bool theorem_applies = false;  // hypotheses hold, including d >= 5
  std::vector<std::string> notes;
};

/// Computes U_n h for n = 1..n_max in parallel. When the hypotheses hold,
/// asserts strict log-concavity for n >= max{s, ceil((d+1)/2)}, both chains
/// for n >= max{s, d+1-s}, strict alternating increase above that bound and
/// at the bound when h_s > 1. Throws BadParams for n_max < 1 and
/// TheoremViolated on a failed assertion.
SweepReport sweep(const series::HPolynomial& h, long n_max);

/// Smallest n for which the strict log-concavity claim is asserted.
long lc_assertion_start(std::size_t s, std::size_t d);

/// One nonzero term coefficient * pair(p, q) / divisor with divisor 1 or 2.
struct CertificateTerm {
  std::size_t p = 0;
  std::size_t q = 0;
  Int coefficient;
  Int pair_value;
  int divisor = 1;
};

struct FrontCertificate {
  std::size_t d = 0;
  long n = 0;
  std::size_t i = 0;
  std::vector<std::size_t> k;      // support indices k_0 < ... < k_l
  std::vector<std::size_t> match;  // m(j), 0 <= j <= l
  std::size_t pivot = 0;           // t = max{j : j <= m(j)}
  Int lead;                        // A(0, l), or A(0, 0)/2 when l = 0
  std::vector<std::pair<std::size_t, Int>> summands;  // (j, f_j)
  std::vector<std::vector<CertificateTerm>> terms;    // terms of each f_j
  Int decomposition;
  Int direct;  // delta_{d-i} - delta_i
  bool pairs_nonnegative = true;
  bool summands_nonnegative = true;
  bool front_degrees_ok = true;  // k_j + k_{m(j)} >= s
  bool pivot_ok = true;  // m(t) in {t, t+1}
};

struct BackCertificate {
  std::size_t d = 0;
  long n = 0;
  std::size_t i = 0;
  std::vector<std::size_t> k;
  std::vector<std::size_t> match;  // n(j), 1 <= j <= l; entry 0 unused
  std::optional<std::size_t> pivot;  // t' = min{j : j >= n(j)}; absent when l = 0
  Int b00;                           // B(0, 0)
  std::vector<std::pair<std::size_t, Int>> summands;  // (j, g_j)
  std::vector<std::vector<CertificateTerm>> terms;
  Int decomposition;  // B(0, 0)/2 + sum g_j
  Int direct;         // delta_i - delta_{d+1-i}
  bool pairs_nonnegative = true;
  bool summands_nonnegative = true;
  bool b00_positive = true;
  bool back_degrees_ok = true;  // k_j + k_{n(j)} <= d + 1
  bool pivot_ok = true;  // n(t') in {t', t' - 1}
};

/// Throws PreconditionViolated outside 1 <= i <= floor((d-1)/2), below
/// n = max{s, d+1-s} or when the hypotheses fail; CertificateMismatch when
/// the decomposition differs from the direct difference.
FrontCertificate certify_front(const series::HPolynomial& h, long n, std::size_t i);

/// As certify_front with 1 <= i <= floor(d/2).
BackCertificate certify_back(const series::HPolynomial& h, long n, std::size_t i);

}  // namespace ehrhart::theorem
