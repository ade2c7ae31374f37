#include "ehrhart/exactseq.hpp"

#include <algorithm>

#include "ehrhart/error.hpp"

namespace ehrhart::exactseq {

std::string_view to_string(Property p) {
  switch (p) {
    case Property::Unimodal: return "unimodal";
    case Property::LogConcave: return "log_concave";
    case Property::AlternatinglyIncreasing: return "alternatingly_increasing";
    case Property::Stanley: return "stanley_13";
    case Property::Hibi: return "hibi_14";
    case Property::StanleyHalf: return "stanley_half";
    case Property::HibiHalf: return "hibi_half";
  }
  return "unknown";
}

namespace {

// Order in which the alternating chain visits the indices: 0, d, 1, d-1, ...
std::vector<std::size_t> alternating_order(std::size_t d) {
  std::vector<std::size_t> order;
  std::size_t lo = 0;
  std::size_t hi = d;
  bool take_lo = true;
  while (lo <= hi) {
    if (take_lo) {
      order.push_back(lo++);
    } else {
      order.push_back(hi);
      if (hi == 0) break;
      --hi;
    }
    take_lo = !take_lo;
  }
  return order;
}

Int range_sum(IntSequence seq, long lo, long hi) {
  Int sum = 0;
  for (long j = std::max(lo, 0L); j <= hi && j < static_cast<long>(seq.size()); ++j) sum += seq[j];
  return sum;
}

void require_nonnegative(IntSequence seq, std::string_view what) {
  if (!all_nonnegative(seq))
    throw Error(ErrorCode::PreconditionViolated,
                std::string(what) + " requires nonnegative entries, got " + ehrhart::to_string(seq));
}

void record_failure(PropertyVerdict& v, std::size_t i) {
  if (v.holds) v.witness = {i};
  v.holds = false;
  v.failures.push_back(i);
}

// sum_{j<=i} a_j <= sum_{j=s-i}^{s} a_j for 0 <= i <= last.
PropertyVerdict stanley_sums(IntSequence seq, Property property, long last) {
  const long s = static_cast<long>(degree(seq));
  PropertyVerdict v{property};
  for (long i = 0; i <= last; ++i)
    if (range_sum(seq, 0, i) > range_sum(seq, s - i, s)) record_failure(v, i);
  return v;
}

// sum_{j=d-i}^{d} a_j <= sum_{j=1}^{i+1} a_j for 0 <= i <= last.
PropertyVerdict hibi_sums(IntSequence seq, Property property, long last) {
  const long d = static_cast<long>(seq.size()) - 1;
  PropertyVerdict v{property};
  for (long i = 0; i <= last; ++i)
    if (range_sum(seq, d - i, d) > range_sum(seq, 1, i + 1)) record_failure(v, i);
  return v;
}

}  // namespace

std::size_t degree(IntSequence seq) {
  for (std::size_t i = seq.size(); i-- > 0;)
    if (seq[i] != 0) return i;
  throw Error(ErrorCode::AllZero, "degree of the zero sequence is undefined");
}

bool has_zero_tail(IntSequence seq) {
  bool seen_zero = false;
  for (const Int& v : seq) {
    if (v == 0) seen_zero = true;
    else if (seen_zero) return false;
  }
  return true;
}

bool all_nonnegative(IntSequence seq) {
  return std::all_of(seq.begin(), seq.end(), [](const Int& v) { return v >= 0; });
}

PropertyVerdict is_unimodal(IntSequence seq, bool strict) {
  PropertyVerdict v{Property::Unimodal, strict};
  bool descending = false;
  std::size_t first_descent = 0;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    const int c = cmp(seq[i], seq[i + 1]);
    if (c == 0 && strict) {
      v.holds = false;
      v.witness = {i, i + 1};
      return v;
    }
    if (c > 0 && !descending) {
      descending = true;
      first_descent = i;
    } else if (c < 0 && descending) {
      v.holds = false;
      v.witness = {first_descent, i, i + 1};
      return v;
    }
  }
  return v;
}

PropertyVerdict is_log_concave(IntSequence seq, bool strict) {
  PropertyVerdict v{Property::LogConcave, strict};
  for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
    const Int lhs = seq[i] * seq[i];
    const Int rhs = seq[i - 1] * seq[i + 1];
    if (strict ? lhs <= rhs : lhs < rhs) record_failure(v, i);
  }
  if (!v.holds) v.witness = {v.failures.back()};
  return v;
}

PropertyVerdict is_alternatingly_increasing(IntSequence seq, bool strict) {
  PropertyVerdict v{Property::AlternatinglyIncreasing, strict};
  if (seq.empty()) return v;
  const auto order = alternating_order(seq.size() - 1);
  for (std::size_t k = 0; k + 1 < order.size(); ++k) {
    const Int& lhs = seq[order[k]];
    const Int& rhs = seq[order[k + 1]];
    if (strict ? lhs >= rhs : lhs > rhs) {
      if (v.holds) v.witness = {order[k], order[k + 1]};
      v.holds = false;
      v.failures.push_back(order[k]);
    }
  }
  return v;
}

PropertyVerdict check_stanley(IntSequence seq) {
  require_nonnegative(seq, "Stanley inequalities");
  const long s = static_cast<long>(degree(seq));
  return stanley_sums(seq, Property::Stanley, s);
}

PropertyVerdict check_hibi(IntSequence seq) {
  require_nonnegative(seq, "Hibi inequalities");
  return hibi_sums(seq, Property::Hibi, static_cast<long>(seq.size()) - 2);
}

PropertyVerdict check_stanley_half(IntSequence seq) {
  require_nonnegative(seq, "Stanley half-sums");
  const long s = static_cast<long>(degree(seq));
  return stanley_sums(seq, Property::StanleyHalf, s / 2);
}

PropertyVerdict check_hibi_half(IntSequence seq) {
  require_nonnegative(seq, "Hibi half-sums");
  const long d = static_cast<long>(seq.size()) - 1;
  return hibi_sums(seq, Property::HibiHalf, (d + 1) / 2);
}

bool products_dominate(IntSequence seq, bool strict) {
  if (!all_nonnegative(seq) || !has_zero_tail(seq))
    throw Error(ErrorCode::PreconditionViolated,
                "expected a nonnegative zero-tailed sequence, got " + ehrhart::to_string(seq));
  if (!is_log_concave(seq, strict).holds)
    throw Error(ErrorCode::PreconditionViolated,
                std::string(strict ? "strictly " : "") + "log-concave sequence expected, got " +
                    ehrhart::to_string(seq));
  const std::size_t n = seq.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Int lhs = seq[i] * seq[j];
      for (std::size_t m = strict ? 1 : 0; m <= i && j + m < n; ++m) {
        const Int rhs = seq[i - m] * seq[j + m];
        if (strict ? lhs <= rhs : lhs < rhs) return false;
      }
    }
  }
  return true;
}

bool witness_fails(const PropertyVerdict& verdict, IntSequence seq) {
  const auto& w = verdict.witness;
  auto in_range = [&](std::size_t i) { return i < seq.size(); };
  if (!std::all_of(w.begin(), w.end(), in_range)) return false;
  switch (verdict.property) {
    case Property::Unimodal:
      if (w.size() == 3) return w[0] < w[1] && w[1] < w[2] && seq[w[0]] > seq[w[1]] && seq[w[1]] < seq[w[2]];
      if (w.size() == 2) return verdict.strict && w[1] == w[0] + 1 && seq[w[0]] == seq[w[1]];
      return false;
    case Property::LogConcave: {
      if (w.size() != 1 || w[0] == 0 || w[0] + 1 >= seq.size()) return false;
      const Int lhs = seq[w[0]] * seq[w[0]];
      const Int rhs = seq[w[0] - 1] * seq[w[0] + 1];
      return verdict.strict ? lhs <= rhs : lhs < rhs;
    }
    case Property::AlternatinglyIncreasing:
      if (w.size() != 2) return false;
      return verdict.strict ? seq[w[0]] >= seq[w[1]] : seq[w[0]] > seq[w[1]];
    case Property::Stanley:
    case Property::StanleyHalf: {
      if (w.size() != 1) return false;
      const long s = static_cast<long>(degree(seq));
      const long i = static_cast<long>(w[0]);
      return range_sum(seq, 0, i) > range_sum(seq, s - i, s);
    }
    case Property::Hibi:
    case Property::HibiHalf: {
      if (w.size() != 1) return false;
      const long d = static_cast<long>(seq.size()) - 1;
      const long i = static_cast<long>(w[0]);
      return range_sum(seq, d - i, d) > range_sum(seq, 1, i + 1);
    }
  }
  return false;
}

}  // namespace ehrhart::exactseq
