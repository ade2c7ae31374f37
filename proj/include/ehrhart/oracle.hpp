#pragma once

#include <cstdint>
#include <vector>

#include "ehrhart/integer.hpp"
#include "ehrhart/simplex.hpp"

/// Naive lattice-point counting over the bounding box, with its own exact
/// barycentric membership test. Shares nothing with box-point enumeration.
namespace ehrhart::oracle {

inline constexpr std::uint64_t kDefaultOracleBoxCap = 100'000'000;

/// Number of integer points of the bounding box of mP.
Int bounding_box_size(const LatticeSimplex& simplex, const Int& m);

/// |mP ∩ Z^N| (or |mP° ∩ Z^N| when `interior`), relative interior when the
/// simplex is not full-dimensional. m = 0 gives 1 (resp. 0). Throws
/// NonPositiveDilation for m < 0 and BoxCapExceeded above `cap`.
Int brute_count(const LatticeSimplex& simplex, const Int& m, bool interior,
                std::uint64_t cap = kDefaultOracleBoxCap);

struct CountTable {
  std::vector<Int> counts;           // i(P, m), m = 0..m_max
  std::vector<Int> interior_counts;  // |mP° ∩ Z^N|, entry 0 is 0
};

CountTable count_table(const LatticeSimplex& simplex, unsigned m_max, bool with_interior = true,
                       std::uint64_t cap = kDefaultOracleBoxCap);

/// Solves sum_i delta_i C(m + d - i, d) = i(P, m) for m = 0..d by forward
/// substitution; extra counts beyond m = d are checked against the result.
/// Throws InconsistentCounts on a bad constant term, a negative entry or a
/// disagreeing extra count, and InvalidInput when fewer than d + 1 counts
/// are given.
IntVector delta_from_counts(const std::vector<Int>& counts, std::size_t d);

/// sum_i delta_i C(m + d - i, d), valid for negative m.
Int ehrhart_value(const IntVector& delta, const Int& m);

struct ReciprocityRow {
  unsigned m = 0;
  Int interior;     // brute-force count
  Int reciprocal;   // (-1)^d i(P, -m)
  bool ok = false;
};

struct ReciprocityReport {
  IntVector delta;  // recovered from brute counts
  std::vector<ReciprocityRow> rows;
  bool all_ok() const;
};

ReciprocityReport reciprocity_check(const LatticeSimplex& simplex, unsigned m_max,
                                    std::uint64_t cap = kDefaultOracleBoxCap);

}  // namespace ehrhart::oracle
