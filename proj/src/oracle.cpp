#include "ehrhart/oracle.hpp"

#include <algorithm>
#include <thread>

#include "ehrhart/error.hpp"

namespace ehrhart::oracle {

namespace {

using Int128 = __int128;

// value(x) = sum_c coeff[c] x_c + constant
struct LinearForm {
  IntVector coeff;
  Int constant;
};

struct Membership {
  std::vector<LinearForm> barycentric;  // scaled barycentric coordinates
  std::vector<LinearForm> residual;     // must vanish on the affine hull
};

// Gauss-Jordan inverse of a square rational matrix; empty when singular.
std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return {};
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const Rational p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

// Rank of a set of rational column vectors.
std::size_t rank_of(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t j = c; j < cols; ++j) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

Membership build_membership(const IntMatrix& vertices, const Int& m) {
  const std::size_t k = vertices.size();  // d + 1
  const std::size_t N = vertices.front().size();
  auto entry = [&](std::size_t i, std::size_t c) -> Int { return c < N ? vertices[i][c] : Int(1); };

  // Greedily pick k columns of the homogeneous matrix that are independent.
  std::vector<std::size_t> chosen;
  std::vector<std::vector<Rational>> picked;
  for (std::size_t c = N + 1; c-- > 0 && chosen.size() < k;) {
    std::vector<Rational> column(k);
    for (std::size_t i = 0; i < k; ++i) column[i] = entry(i, c);
    picked.push_back(column);
    if (rank_of(picked) == picked.size())
      chosen.push_back(c);
    else
      picked.pop_back();
  }
  if (chosen.size() != k) throw Error(ErrorCode::AffinelyDependent, "vertices are affinely dependent");

  // lambda W_C = y_C with W_C[i][j] = entry(i, chosen[j]).
  std::vector<std::vector<Rational>> wc(k, std::vector<Rational>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) wc[i][j] = entry(i, chosen[j]);
  const auto inv = invert(wc);
  if (inv.empty()) throw Error(ErrorCode::Internal, "selected columns are singular");

  Int scale = 1;
  for (const auto& row : inv)
    for (const auto& q : row) scale = lcm(scale, Int(q.get_den()));

  Membership out;
  out.barycentric.assign(k, LinearForm{IntVector(N, 0), 0});
  // lambda_i = sum_j y_{chosen[j]} inv[j][i]
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Rational g = inv[j][i] * scale;
      g.canonicalize();
      const Int gi = g.get_num();
      if (chosen[j] < N)
        out.barycentric[i].coeff[chosen[j]] += gi;
      else
        out.barycentric[i].constant += gi * m;
    }
  for (std::size_t c = 0; c <= N; ++c) {
    if (std::find(chosen.begin(), chosen.end(), c) != chosen.end()) continue;
    LinearForm r{IntVector(N, 0), 0};
    if (c < N)
      r.coeff[c] += scale;
    else
      r.constant += scale * m;
    for (std::size_t i = 0; i < k; ++i) {
      const Int w = entry(i, c);
      for (std::size_t x = 0; x < N; ++x) r.coeff[x] -= out.barycentric[i].coeff[x] * w;
      r.constant -= out.barycentric[i].constant * w;
    }
    out.residual.push_back(std::move(r));
  }
  return out;
}

struct Box {
  IntVector lo, hi;
};

Box bounding_box(const IntMatrix& vertices, const Int& m) {
  const std::size_t N = vertices.front().size();
  Box b{IntVector(N), IntVector(N)};
  for (std::size_t c = 0; c < N; ++c) {
    Int lo = vertices[0][c], hi = vertices[0][c];
    for (const auto& v : vertices) {
      lo = std::min(lo, v[c]);
      hi = std::max(hi, v[c]);
    }
    b.lo[c] = lo * m;
    b.hi[c] = hi * m;
  }
  return b;
}

template <class T>
T convert(const Int& v);

template <>
Int convert<Int>(const Int& v) {
  return v;
}

template <>
Int128 convert<Int128>(const Int& v) {
  // Exact for |v| < 2^126, guaranteed by the caller.
  const bool neg = v < 0;
  Int a = abs(v);
  Int128 out = 0;
  const Int base = Int(1) << 63;
  Int hi = a / base, lo = a % base;
  out = static_cast<Int128>(hi.get_ui()) << 63;
  out += static_cast<Int128>(lo.get_ui());
  return neg ? -out : out;
}

// Counts points of the box slice lo[0] in [first, last) satisfying the
// membership test, with all form values maintained incrementally.
template <class T>
std::uint64_t scan(const Membership& mem, const Box& box, const Int& first, const Int& last, bool interior) {
  const std::size_t N = box.lo.size();
  std::vector<const LinearForm*> forms;
  for (const auto& f : mem.barycentric) forms.push_back(&f);
  for (const auto& f : mem.residual) forms.push_back(&f);
  const std::size_t nb = mem.barycentric.size();
  const std::size_t nf = forms.size();

  std::vector<std::vector<T>> step(N, std::vector<T>(nf));
  std::vector<std::vector<T>> rewind(N, std::vector<T>(nf));
  std::vector<T> value(nf);
  std::vector<Int> start = box.lo;
  start[0] = first;
  for (std::size_t f = 0; f < nf; ++f) {
    Int v = forms[f]->constant;
    for (std::size_t c = 0; c < N; ++c) {
      v += forms[f]->coeff[c] * start[c];
      step[c][f] = convert<T>(forms[f]->coeff[c]);
      rewind[c][f] = convert<T>(forms[f]->coeff[c] * (box.hi[c] - box.lo[c]));
    }
    value[f] = convert<T>(v);
  }
  std::vector<long> pos(N, 0), extent(N);
  for (std::size_t c = 0; c < N; ++c) extent[c] = Int(box.hi[c] - box.lo[c]).get_si();
  extent[0] = Int(last - first).get_si() - 1;

  std::uint64_t count = 0;
  for (;;) {
    bool inside = true;
    for (std::size_t f = 0; f < nf && inside; ++f) {
      if (f < nb)
        inside = interior ? value[f] > 0 : value[f] >= 0;
      else
        inside = value[f] == 0;
    }
    if (inside) ++count;
    std::size_t c = N;
    while (c-- > 0) {
      if (pos[c] < extent[c]) {
        ++pos[c];
        for (std::size_t f = 0; f < nf; ++f) value[f] += step[c][f];
        break;
      }
      pos[c] = 0;
      if (c == 0) return count;
      for (std::size_t f = 0; f < nf; ++f) value[f] -= rewind[c][f];
    }
  }
}

bool fits_int128(const Membership& mem, const Box& box) {
  const Int limit = Int(1) << 120;
  auto ok = [&](const LinearForm& f) {
    Int bound = abs(f.constant);
    for (std::size_t c = 0; c < box.lo.size(); ++c)
      bound += abs(f.coeff[c]) * (std::max(abs(box.lo[c]), abs(box.hi[c])) + 1);
    return bound < limit;
  };
  return std::all_of(mem.barycentric.begin(), mem.barycentric.end(), ok) &&
         std::all_of(mem.residual.begin(), mem.residual.end(), ok);
}

}  // namespace

Int bounding_box_size(const LatticeSimplex& simplex, const Int& m) {
  const Box box = bounding_box(simplex.vertices(), m);
  Int size = 1;
  for (std::size_t c = 0; c < box.lo.size(); ++c) size *= box.hi[c] - box.lo[c] + 1;
  return size;
}

Int brute_count(const LatticeSimplex& simplex, const Int& m, bool interior, std::uint64_t cap) {
  if (m < 0) throw Error(ErrorCode::NonPositiveDilation, "dilation factor must be >= 0");
  if (m == 0) return interior ? 0 : 1;
  const Int size = bounding_box_size(simplex, m);
  if (size > Int(static_cast<unsigned long>(cap)))
    throw Error(ErrorCode::BoxCapExceeded,
                "bounding box of " + m.get_str() + "P has " + size.get_str() + " points, cap is " + std::to_string(cap));

  const Membership mem = build_membership(simplex.vertices(), m);
  const Box box = bounding_box(simplex.vertices(), m);
  if (box.lo.empty()) return 1;
  const bool fast = fits_int128(mem, box);

  const long width = Int(box.hi[0] - box.lo[0]).get_si() + 1;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  if (size < Int(1 << 16)) workers = 1;
  workers = static_cast<unsigned>(std::min<long>(workers, width));
  std::vector<std::uint64_t> partial(workers, 0);
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w) {
    const Int first = box.lo[0] + Int(width * static_cast<long>(w) / static_cast<long>(workers));
    const Int last = box.lo[0] + Int(width * static_cast<long>(w + 1) / static_cast<long>(workers));
    if (first == last) continue;
    threads.emplace_back([&, first, last, w] {
      partial[w] = fast ? scan<Int128>(mem, box, first, last, interior) : scan<Int>(mem, box, first, last, interior);
    });
  }
  for (auto& t : threads) t.join();
  Int total = 0;
  for (auto p : partial) total += Int(static_cast<unsigned long>(p));
  return total;
}

CountTable count_table(const LatticeSimplex& simplex, unsigned m_max, bool with_interior, std::uint64_t cap) {
  CountTable t;
  for (unsigned m = 0; m <= m_max; ++m) {
    t.counts.push_back(brute_count(simplex, Int(m), false, cap));
    if (with_interior) t.interior_counts.push_back(m == 0 ? Int(0) : brute_count(simplex, Int(m), true, cap));
  }
  return t;
}

Int ehrhart_value(const IntVector& delta, const Int& m) {
  const std::size_t d = delta.size() - 1;
  Int total = 0;
  for (std::size_t i = 0; i <= d; ++i)
    if (delta[i] != 0) total += delta[i] * binomial_poly(m + static_cast<long>(d - i), static_cast<unsigned>(d));
  return total;
}

IntVector delta_from_counts(const std::vector<Int>& counts, std::size_t d) {
  if (counts.size() < d + 1)
    throw Error(ErrorCode::InvalidInput, "need counts for m = 0.." + std::to_string(d));
  if (counts[0] != 1) throw Error(ErrorCode::InconsistentCounts, "i(P, 0) must be 1, got " + counts[0].get_str());
  IntVector delta(d + 1, 0);
  for (std::size_t m = 0; m <= d; ++m) {
    Int rest = counts[m];
    for (std::size_t i = 0; i < m; ++i)
      rest -= delta[i] * binomial_poly(Int(static_cast<unsigned long>(m + d - i)), static_cast<unsigned>(d));
    if (rest < 0)
      throw Error(ErrorCode::InconsistentCounts, "negative delta_" + std::to_string(m) + " = " + rest.get_str());
    delta[m] = rest;
  }
  for (std::size_t m = d + 1; m < counts.size(); ++m) {
    const Int expected = ehrhart_value(delta, Int(static_cast<unsigned long>(m)));
    if (expected != counts[m])
      throw Error(ErrorCode::InconsistentCounts, "count at m = " + std::to_string(m) + " is " + counts[m].get_str() +
                                                     ", the recovered polynomial gives " + expected.get_str());
  }
  return delta;
}

bool ReciprocityReport::all_ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const ReciprocityRow& r) { return r.ok; });
}

ReciprocityReport reciprocity_check(const LatticeSimplex& simplex, unsigned m_max, std::uint64_t cap) {
  const std::size_t d = simplex.dim();
  std::vector<Int> counts;
  for (unsigned m = 0; m <= d; ++m) counts.push_back(brute_count(simplex, Int(m), false, cap));
  ReciprocityReport rep;
  rep.delta = delta_from_counts(counts, d);
  for (unsigned m = 1; m <= m_max; ++m) {
    ReciprocityRow row;
    row.m = m;
    row.interior = brute_count(simplex, Int(m), true, cap);
    row.reciprocal = ehrhart_value(rep.delta, -Int(m));
    if (d % 2 == 1) row.reciprocal = -row.reciprocal;
    row.ok = row.interior == row.reciprocal;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace ehrhart::oracle
