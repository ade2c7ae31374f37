#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "ehrhart/integer.hpp"

/// Shape predicates on exact integer sequences (a_0, ..., a_d) and the
/// partial-sum inequality systems satisfied by every delta-vector.
namespace ehrhart::exactseq {

using IntSequence = std::span<const Int>;

enum class Property {
  Unimodal,
  LogConcave,
  AlternatinglyIncreasing,
  Stanley,
  Hibi,
  StanleyHalf,
  HibiHalf,
};

std::string_view to_string(Property p);

/// Outcome of one predicate. When `holds` is false, `witness` names the
/// indices of the first inequality that fails, in the order documented on
/// each predicate; `failures` lists the index of every failing inequality
/// for the predicates defined by an indexed family of inequalities.
struct PropertyVerdict {
  Property property;
  bool strict = false;
  bool holds = true;
  std::vector<std::size_t> witness;
  std::vector<std::size_t> failures;
};

/// Witness on failure: (i, j, k) with i < j < k, a_i > a_j < a_k; in strict
/// mode an equal adjacent pair is reported as (i, i + 1).
PropertyVerdict is_unimodal(IntSequence seq, bool strict = false);

/// Witness on failure: the largest i with a_i^2 < a_{i-1} a_{i+1} (<= when
/// strict); `failures` lists every such i in increasing order.
PropertyVerdict is_log_concave(IntSequence seq, bool strict = false);

/// Walks the chain a_0 <= a_d <= a_1 <= a_{d-1} <= ...; the witness is the
/// pair (lhs, rhs) of the first link with a_lhs > a_rhs (>= when strict).
PropertyVerdict is_alternatingly_increasing(IntSequence seq, bool strict = false);

/// sum_{j<=i} a_j <= sum_{j=s-i}^{s} a_j for 0 <= i <= s, s the degree.
/// Throws AllZero when every entry vanishes.
PropertyVerdict check_stanley(IntSequence seq);

/// sum_{j=d-i}^{d} a_j <= sum_{j=1}^{i+1} a_j for 0 <= i <= d - 1.
PropertyVerdict check_hibi(IntSequence seq);

/// The Stanley sums restricted
/// to 0 <= i <= floor(s/2).
PropertyVerdict check_stanley_half(IntSequence seq);

/// The Hibi sums for 0 <= i <= floor((d+1)/2), entries
/// outside 0..d read as zero.
PropertyVerdict check_hibi_half(IntSequence seq);

/// Exhaustively verifies b_i b_j >= b_{i-m} b_{j+m} (strict: > for m >= 1)
/// over every admissible (i, j, m). Throws PreconditionViolated unless the
/// sequence is nonnegative, zero-tailed and (strictly) log-concave.
bool products_dominate(IntSequence seq, bool strict = false);

/// Index of the last nonzero entry; throws AllZero.
std::size_t degree(IntSequence seq);

bool has_zero_tail(IntSequence seq);
bool all_nonnegative(IntSequence seq);

/// Re-evaluates the defining inequality named by a failed verdict's
/// witness; true iff that inequality indeed fails on `seq`.
bool witness_fails(const PropertyVerdict& verdict, IntSequence seq);

}  // namespace ehrhart::exactseq
