#pragma once

#include "ehrhart/integer.hpp"

namespace ehrhart {

/// U * W * V = S with U, V unimodular and S diagonal, s_1 | s_2 | ... .
struct SnfDecomposition {
  IntMatrix U;
  IntMatrix V;
  IntMatrix S;

  /// The diagonal of S (length min(rows, cols)), all entries >= 0.
  IntVector invariant_factors() const;
};

/// Deterministic Smith normal form of an arbitrary (rectangular) integer
/// matrix by repeated minimal-pivot row and column reduction.
SnfDecomposition smith_normal_form(const IntMatrix& W);

/// Checks every postcondition of a decomposition against its input:
/// the product identity, |det U| = |det V| = 1, S diagonal and
/// nonnegative, and the divisibility chain.
bool snf_postconditions_hold(const IntMatrix& W, const SnfDecomposition& snf);

}  // namespace ehrhart
