#include "ehrhart/snf.hpp"

#include <utility>

#include "ehrhart/error.hpp"

namespace ehrhart {

namespace {

void swap_columns(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (auto& row : m) std::swap(row[a], row[b]);
}

// row_dst -= q * row_src
void sub_row(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
  for (std::size_t j = 0; j < m[dst].size(); ++j) m[dst][j] -= q * m[src][j];
}

void sub_col(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
  for (auto& row : m) row[dst] -= q * row[src];
}

Int tdiv(const Int& a, const Int& b) {
  Int q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

IntVector SnfDecomposition::invariant_factors() const {
  IntVector diag;
  const std::size_t rows = S.size();
  const std::size_t cols = rows ? S[0].size() : 0;
  for (std::size_t k = 0; k < std::min(rows, cols); ++k) diag.push_back(S[k][k]);
  return diag;
}

SnfDecomposition smith_normal_form(const IntMatrix& W) {
  const std::size_t rows = W.size();
  const std::size_t cols = rows ? W[0].size() : 0;
  for (const auto& r : W)
    if (r.size() != cols) throw Error(ErrorCode::InvalidInput, "ragged matrix");

  SnfDecomposition out{identity_matrix(rows), identity_matrix(cols), W};
  IntMatrix& S = out.S;
  IntMatrix& U = out.U;
  IntMatrix& V = out.V;

  for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
    bool finished = false;
    while (!finished) {
      // Smallest nonzero magnitude in the trailing block becomes the pivot.
      std::size_t pi = rows, pj = cols;
      Int best;
      for (std::size_t i = k; i < rows; ++i)
        for (std::size_t j = k; j < cols; ++j)
          if (S[i][j] != 0 && (pi == rows || abs(S[i][j]) < best)) {
            best = abs(S[i][j]);
            pi = i;
            pj = j;
          }
      if (pi == rows) return out;  // trailing block is zero

      std::swap(S[k], S[pi]);
      std::swap(U[k], U[pi]);
      swap_columns(S, k, pj);
      swap_columns(V, k, pj);

      bool clean = true;
      for (std::size_t i = k + 1; i < rows; ++i) {
        if (S[i][k] == 0) continue;
        const Int q = tdiv(S[i][k], S[k][k]);
        sub_row(S, i, k, q);
        sub_row(U, i, k, q);
        if (S[i][k] != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (S[k][j] == 0) continue;
        const Int q = tdiv(S[k][j], S[k][k]);
        sub_col(S, j, k, q);
        sub_col(V, j, k, q);
        if (S[k][j] != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce s_k | every trailing entry by folding an offending row in.
      finished = true;
      for (std::size_t i = k + 1; i < rows && finished; ++i)
        for (std::size_t j = k + 1; j < cols; ++j)
          if (mod_floor(S[i][j], abs(S[k][k])) != 0) {
            for (std::size_t c = 0; c < cols; ++c) S[k][c] += S[i][c];
            for (std::size_t c = 0; c < rows; ++c) U[k][c] += U[i][c];
            finished = false;
            break;
          }
    }
    if (S[k][k] < 0) {
      for (auto& v : S[k]) v = -v;
      for (auto& v : U[k]) v = -v;
    }
  }
  return out;
}

bool snf_postconditions_hold(const IntMatrix& W, const SnfDecomposition& snf) {
  const std::size_t rows = W.size();
  const std::size_t cols = rows ? W[0].size() : 0;
  if (snf.U.size() != rows || snf.V.size() != cols || snf.S.size() != rows) return false;
  if (multiply(multiply(snf.U, W), snf.V) != snf.S) return false;
  if (abs(determinant(snf.U)) != 1 || abs(determinant(snf.V)) != 1) return false;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (i != j && snf.S[i][j] != 0) return false;
  const IntVector diag = snf.invariant_factors();
  for (std::size_t k = 0; k < diag.size(); ++k) {
    if (diag[k] < 0) return false;
    if (k + 1 < diag.size()) {
      if (diag[k] == 0) {
        if (diag[k + 1] != 0) return false;
      } else if (mod_floor(diag[k + 1], diag[k]) != 0) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace ehrhart
