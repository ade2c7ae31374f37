#include "ehrhart/simplex.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "ehrhart/error.hpp"
#include "ehrhart/exactseq.hpp"

namespace ehrhart {

namespace {

// Coset data of Z^{d+1} modulo the row lattice of the lattice homogeneous
// matrix W. With U W V = S, the representatives a V^{-1}, 0 <= a_k < s_k,
// have fractional coefficients r = frac(a S^{-1} U). Scaling by the
// exponent e = s_last gives integer steps step[k][i] = U_{k,i} e / s_k.
struct CosetWalk {
  std::vector<std::size_t> digits;            // positions k with s_k > 1
  std::vector<std::int64_t> radix;            // s_k for those positions
  std::vector<std::vector<std::int64_t>> step;  // per digit, mod e
  std::int64_t exponent = 1;
  std::uint64_t count = 1;
  std::size_t width = 0;  // d + 1
};

constexpr std::int64_t kMaxExponent = std::int64_t{1} << 40;

CosetWalk prepare_walk(const LatticeSimplex& simplex, std::uint64_t cap) {
  const IntMatrix W = simplex.lattice_homogeneous_matrix();
  const SnfDecomposition snf = smith_normal_form(W);
  const IntVector factors = snf.invariant_factors();
  const Int volume = std::accumulate(factors.begin(), factors.end(), Int(1),
                                     [](const Int& a, const Int& b) { return a * b; });
  if (volume == 0) throw Error(ErrorCode::Internal, "singular homogeneous matrix");
  if (volume > Int(static_cast<unsigned long>(cap)))
    throw Error(ErrorCode::VolumeCapExceeded, "normalized volume " + volume.get_str() +
                                                  " exceeds the box-point cap " + std::to_string(cap));
  const Int& e = factors.back();
  if (e > kMaxExponent) throw Error(ErrorCode::VolumeCapExceeded, "invariant factor too large");

  CosetWalk walk;
  walk.exponent = e.get_si();
  walk.count = volume.get_ui();
  const std::size_t n = factors.size();
  walk.width = n;
  for (std::size_t k = 0; k < n; ++k) {
    if (factors[k] == 1) continue;
    walk.digits.push_back(k);
    walk.radix.push_back(factors[k].get_si());
    std::vector<std::int64_t> row(n);
    const Int scale = e / factors[k];
    for (std::size_t i = 0; i < n; ++i) row[i] = mod_floor(snf.U[k][i] * scale, e).get_si();
    walk.step.push_back(std::move(row));
  }
  return walk;
}

// Visits representatives with linear index in [begin, end). The callback
// receives the scaled numerators num_i = e * r_i.
template <typename Visit>
void walk_cosets(const CosetWalk& walk, std::uint64_t begin, std::uint64_t end, Visit&& visit) {
  const std::size_t n = walk.width;
  const std::size_t nd = walk.digits.size();
  const std::int64_t e = walk.exponent;
  std::vector<std::int64_t> a(nd, 0);
  std::uint64_t rest = begin;
  for (std::size_t k = nd; k-- > 0;) {
    a[k] = static_cast<std::int64_t>(rest % walk.radix[k]);
    rest /= walk.radix[k];
  }
  std::vector<std::int64_t> num(n, 0);
  for (std::size_t k = 0; k < nd; ++k)
    for (std::size_t i = 0; i < n; ++i)
      num[i] = static_cast<std::int64_t>((num[i] + static_cast<__int128>(a[k]) * walk.step[k][i]) % e);

  for (std::uint64_t idx = begin; idx < end; ++idx) {
    visit(std::as_const(num));
    // Odometer, last digit fastest. Wrapping a digit adds its step too,
    // since s_k * step_k = U_k * e = 0 mod e.
    for (std::size_t k = nd; k-- > 0;) {
      for (std::size_t i = 0; i < n; ++i) {
        num[i] += walk.step[k][i];
        if (num[i] >= e) num[i] -= e;
      }
      if (++a[k] < walk.radix[k]) break;
      a[k] = 0;
    }
  }
}

std::int64_t degree_of(const std::vector<std::int64_t>& num, std::int64_t e) {
  std::int64_t total = 0;
  for (auto v : num) total += v;
  if (total % e != 0) throw Error(ErrorCode::Internal, "box point with non-integral degree");
  return total / e;
}

}  // namespace

LatticeSimplex LatticeSimplex::from_vertices(IntMatrix vertices) {
  if (vertices.empty()) throw Error(ErrorCode::InvalidInput, "a simplex needs at least one vertex");
  const std::size_t N = vertices.front().size();
  for (const auto& v : vertices)
    if (v.size() != N) throw Error(ErrorCode::MixedDimensions, "vertices of unequal length");
  const std::size_t d = vertices.size() - 1;
  if (d == 0) return LatticeSimplex(std::move(vertices), IntMatrix(1));
  if (d > N)
    throw Error(ErrorCode::AffinelyDependent,
                std::to_string(d + 1) + " vertices in dimension " + std::to_string(N));

  IntMatrix diffs(d, IntVector(N));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t c = 0; c < N; ++c) diffs[i][c] = vertices[i + 1][c] - vertices[0][c];

  const SnfDecomposition snf = smith_normal_form(diffs);
  const IntVector factors = snf.invariant_factors();
  if (std::any_of(factors.begin(), factors.end(), [](const Int& s) { return s == 0; }))
    throw Error(ErrorCode::AffinelyDependent, "difference vectors are linearly dependent");

  IntMatrix coords;
  if (d == N) {
    coords = vertices;
  } else {
    // Rows of V^{-1} form a basis of Z^N whose first d rows span the
    // saturation of the difference lattice; diffs * V gives coordinates.
    const IntMatrix in_basis = multiply(diffs, snf.V);
    coords.assign(d + 1, IntVector(d, 0));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t c = d; c < N; ++c)
        if (in_basis[i][c] != 0) throw Error(ErrorCode::Internal, "projection left the span");
      std::copy_n(in_basis[i].begin(), d, coords[i + 1].begin());
    }
  }
  return LatticeSimplex(std::move(vertices), std::move(coords));
}

IntMatrix LatticeSimplex::homogeneous_matrix() const {
  IntMatrix W = vertices_;
  for (auto& row : W) row.emplace_back(1);
  return W;
}

IntMatrix LatticeSimplex::lattice_homogeneous_matrix() const {
  IntMatrix W = coords_;
  for (auto& row : W) row.emplace_back(1);
  return W;
}

Int LatticeSimplex::normalized_volume() const { return abs(determinant(lattice_homogeneous_matrix())); }

DeltaVector make_delta_vector(IntVector values) {
  if (values.empty()) throw Error(ErrorCode::InvalidInput, "empty delta-vector");
  if (values.front() != 1)
    throw Error(ErrorCode::InvalidInput, "delta_0 must be 1, got " + to_string(values));
  if (!exactseq::all_nonnegative(values))
    throw Error(ErrorCode::InvalidInput, "negative delta entry in " + to_string(values));
  return DeltaVector{std::move(values)};
}

std::vector<BoxPoint> enumerate_box_points(const LatticeSimplex& simplex, std::uint64_t cap) {
  const CosetWalk walk = prepare_walk(simplex, cap);
  const IntMatrix W = simplex.homogeneous_matrix();
  const std::size_t n = simplex.dim() + 1;
  const Int e = walk.exponent;
  std::vector<BoxPoint> points;
  points.reserve(walk.count);
  walk_cosets(walk, 0, walk.count, [&](const std::vector<std::int64_t>& num) {
    BoxPoint p;
    p.r.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      Rational r{Int(num[i]), e};
      r.canonicalize();
      p.r.push_back(r);
    }
    p.alpha.assign(W.front().size(), 0);
    for (std::size_t c = 0; c < p.alpha.size(); ++c) {
      Int acc = 0;
      for (std::size_t i = 0; i < n; ++i) acc += Int(num[i]) * W[i][c];
      if (mod_floor(acc, e) != 0) throw Error(ErrorCode::Internal, "non-integral box point");
      p.alpha[c] = acc / e;
    }
    p.degree = p.alpha.back();
    points.push_back(std::move(p));
  });
  return points;
}

DeltaVector delta_vector(const LatticeSimplex& simplex, std::uint64_t cap) {
  const CosetWalk walk = prepare_walk(simplex, cap);
  const std::size_t d = simplex.dim();
  const std::int64_t e = walk.exponent;

  constexpr std::uint64_t kParallelThreshold = 1 << 16;
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = walk.count >= kParallelThreshold ? hw : 1;

  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(d + 1, 0));
  auto run = [&](unsigned w) {
    const std::uint64_t begin = walk.count * w / workers;
    const std::uint64_t end = walk.count * (w + 1) / workers;
    auto& hist = partial[w];
    walk_cosets(walk, begin, end, [&](const std::vector<std::int64_t>& num) {
      const std::int64_t deg = degree_of(num, e);
      if (deg < 0 || static_cast<std::size_t>(deg) > d)
        throw Error(ErrorCode::Internal, "box point degree out of range");
      ++hist[deg];
    });
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          run(w);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    for (auto& t : pool) t.join();
    for (auto& err : errors)
      if (err) std::rethrow_exception(err);
  }

  IntVector values(d + 1, 0);
  for (const auto& hist : partial)
    for (std::size_t i = 0; i <= d; ++i) values[i] += Int(static_cast<unsigned long>(hist[i]));
  if (values[0] != 1) throw Error(ErrorCode::Internal, "expected exactly one box point of degree 0");
  return DeltaVector{std::move(values)};
}

Int ehrhart_eval(const DeltaVector& delta, const Int& m) {
  const std::size_t d = delta.dim();
  Int total = 0;
  for (std::size_t i = 0; i <= d; ++i)
    if (delta[i] != 0) total += delta[i] * binomial_poly(m + static_cast<long>(d - i), d);
  return total;
}

Int interior_count(const DeltaVector& delta, const Int& m) {
  if (m < 1) throw Error(ErrorCode::NonPositiveDilation, "interior count needs m >= 1, got " + m.get_str());
  const Int value = ehrhart_eval(delta, -m);
  return delta.dim() % 2 == 0 ? value : Int(-value);
}

std::size_t min_interior_dilation(const DeltaVector& delta) {
  return delta.dim() + 1 - exactseq::degree(delta.values);
}

LatticeSimplex dilate(const LatticeSimplex& simplex, const Int& n) {
  if (n < 1) throw Error(ErrorCode::NonPositiveDilation, "dilation factor must be >= 1, got " + n.get_str());
  IntMatrix scaled = simplex.vertices();
  for (auto& v : scaled)
    for (auto& x : v) x *= n;
  return LatticeSimplex::from_vertices(std::move(scaled));
}

bool BasicFactsReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const FactCheck& c) { return !c.applicable || c.passed; });
}

BasicFactsReport basic_facts_check(const LatticeSimplex& simplex, const DeltaVector& delta,
                                   const std::optional<PointCounts>& counts) {
  BasicFactsReport report;
  const std::size_t d = delta.dim();
  auto add = [&](std::string name, bool applicable, bool passed, std::string detail) {
    report.checks.push_back({std::move(name), applicable, applicable && passed, std::move(detail)});
  };

  if (simplex.dim() != d) {
    add("dimension", true, false,
        "simplex dimension " + std::to_string(simplex.dim()) + " vs delta length " + std::to_string(d + 1));
    return report;
  }

  const Int lattice_points = counts ? counts->lattice_points : ehrhart_eval(delta, 1);
  const Int interior_points = counts ? counts->interior_points : interior_count(delta, 1);
  const Int delta1 = d >= 1 ? delta[1] : Int(0);

  add("delta_0 = 1", true, delta[0] == 1, "delta_0 = " + delta[0].get_str());
  add("nonnegative", true, exactseq::all_nonnegative(delta.values), to_string(delta.values));
  add("delta_1 = i(P,1) - (d+1)", true, delta1 == lattice_points - static_cast<long>(d + 1),
      "delta_1 = " + delta1.get_str() + ", i(P,1) = " + lattice_points.get_str());
  add("delta_d = |P° ∩ Z^N|", true, delta[d] == interior_points,
      "delta_d = " + delta[d].get_str() + ", interior = " + interior_points.get_str());
  add("delta_1 >= delta_d", d >= 1, delta1 >= delta[d], delta1.get_str() + " vs " + delta[d].get_str());

  bool lower_bound = true;
  for (std::size_t i = 1; i < d; ++i)
    if (delta1 > delta[i]) lower_bound = false;
  add("delta_1 <= delta_i when delta_d > 0", d >= 2 && delta[d] > 0, lower_bound, "");

  const Int volume = simplex.normalized_volume();
  Int sum = 0;
  for (const Int& v : delta.values) sum += v;
  add("sum delta = normalized volume", true, sum == volume,
      "sum = " + sum.get_str() + ", volume = " + volume.get_str());
  return report;
}

}  // namespace ehrhart
