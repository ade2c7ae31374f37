#include <optional>
#include <random>
#include <set>

#include "doctest.h"
#include "ehrhart/exactseq.hpp"
#include "ehrhart/oracle.hpp"
#include "ehrhart/simplex.hpp"
#include "support.hpp"

using namespace ehrhart;
using testing::ints;

namespace {

const IntMatrix kP3 = {ints({0, 0, 0, 0, 0, 0}), ints({1, 0, 0, 0, 0, 0}),    ints({0, 1, 0, 0, 0, 0}),
                       ints({0, 0, 1, 0, 0, 0}), ints({0, 0, 0, 1, 0, 0}),    ints({2, 2, 2, 2, 3, 0}),
                       ints({16, 16, 16, 16, 3, 30})};
const IntMatrix kP4 = {ints({0, 0, 0, 0, 0, 0}), ints({1, 0, 0, 0, 0, 0}),    ints({0, 1, 0, 0, 0, 0}),
                       ints({0, 0, 1, 0, 0, 0}), ints({0, 0, 0, 1, 0, 0}),    ints({2, 2, 2, 2, 3, 0}),
                       ints({22, 22, 22, 22, 3, 42})};
const IntMatrix kTetra = {ints({1, 0, 0}), ints({0, 1, 0}), ints({0, 0, 1}), ints({2, 2, 2})};
const IntVector kOddLast = ints({12, 17, 17, 17, 18});

DeltaVector delta_of(const IntMatrix& v) { return delta_vector(LatticeSimplex::from_vertices(v)); }

Int series_sum(const IntVector& v) {
  Int t = 0;
  for (const Int& x : v) t += x;
  return t;
}

}  // namespace

TEST_SUITE("simplex") {
  TEST_CASE("construction and validation") {
    const auto unit = LatticeSimplex::from_vertices(testing::standard_simplex(3));
    CHECK(unit.dim() == 3);
    CHECK(unit.ambient_dim() == 3);
    CHECK(unit.normalized_volume() == 1);
    CHECK(testing::error_code_of([] {
            LatticeSimplex::from_vertices({ints({0, 0, 0}), ints({1, 0, 0}), ints({2, 0, 0})});
          }) == ErrorCode::AffinelyDependent);
    CHECK(testing::error_code_of([] { LatticeSimplex::from_vertices({ints({0, 0}), ints({1})}); }) ==
          ErrorCode::MixedDimensions);
    CHECK(testing::error_code_of([] { LatticeSimplex::from_vertices({}); }) == ErrorCode::InvalidInput);
    CHECK(testing::error_code_of([] {
            LatticeSimplex::from_vertices({ints({0}), ints({1}), ints({2})});
          }) == ErrorCode::AffinelyDependent);
    const auto p3 = LatticeSimplex::from_vertices(kP3);
    CHECK(p3.dim() == 6);
    CHECK(p3.normalized_volume() == 90);
  }

  TEST_CASE("homogeneous matrix has a column of ones") {
    const auto s = LatticeSimplex::from_vertices(kTetra);
    const IntMatrix w = s.homogeneous_matrix();
    REQUIRE(w.size() == 4);
    for (const auto& row : w) CHECK(row.back() == 1);
    CHECK(abs(determinant(w)) == s.normalized_volume());
  }

  TEST_CASE("box points of unimodular and small simplices") {
    const auto unit = enumerate_box_points(LatticeSimplex::from_vertices(testing::standard_simplex(4)));
    REQUIRE(unit.size() == 1);
    CHECK(unit[0].degree == 0);

    const auto tetra = LatticeSimplex::from_vertices(kTetra);
    const auto pts = enumerate_box_points(tetra);
    CHECK(pts.size() == 5);
    const auto w = tetra.homogeneous_matrix();
    int degree_zero = 0;
    std::set<IntVector> distinct;
    for (const BoxPoint& p : pts) {
      // alpha = sum r_i (v_i, 1), each r_i in [0, 1), degree = sum r_i.
      IntVector alpha(w[0].size(), 0);
      Rational total = 0;
      for (std::size_t i = 0; i < p.r.size(); ++i) {
        CHECK(p.r[i] >= 0);
        CHECK(p.r[i] < 1);
        total += p.r[i];
      }
      for (std::size_t c = 0; c < w[0].size(); ++c) {
        Rational x = 0;
        for (std::size_t i = 0; i < p.r.size(); ++i) x += p.r[i] * w[i][c];
        CHECK(x.get_den() == 1);
        alpha[c] = x.get_num();
      }
      CHECK(alpha == p.alpha);
      CHECK(Rational(p.degree) == total);
      CHECK(p.degree == p.alpha.back());
      if (p.degree == 0) ++degree_zero;
      distinct.insert(p.alpha);
    }
    CHECK(degree_zero == 1);
    CHECK(distinct.size() == 5);
    CHECK(delta_vector(tetra).values == ints({1, 1, 2, 1}));
  }

  TEST_CASE("odd ceiling instance has 18 box points") {
    const auto s = LatticeSimplex::from_vertices(testing::standard_with_last(kOddLast));
    CHECK(enumerate_box_points(s).size() == 18);
    CHECK(delta_vector(s).values == ints({1, 2, 6, 3, 5, 1}));
  }

  TEST_CASE("box points come in a reproducible order") {
    const auto s = LatticeSimplex::from_vertices(testing::standard_with_last(kOddLast));
    const auto a = enumerate_box_points(s);
    const auto b = enumerate_box_points(s);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].alpha == b[i].alpha);
  }

  TEST_CASE("delta-vectors of the sextics") {
    CHECK(delta_of(kP3).values == ints({1, 6, 20, 22, 23, 15, 3}));
    CHECK(delta_of(kP4).values == ints({1, 7, 28, 31, 32, 23, 4}));
    for (std::size_t d = 1; d <= 6; ++d) {
      IntVector expected(d + 1, 0);
      expected[0] = 1;
      CHECK(delta_of(testing::standard_simplex(d)).values == expected);
    }
  }

  TEST_CASE("volume cap") {
    const auto s = LatticeSimplex::from_vertices(kP3);
    CHECK(testing::error_code_of([&] { delta_vector(s, 89); }) == ErrorCode::VolumeCapExceeded);
    CHECK(delta_vector(s, 90).values.size() == 7);
  }

  TEST_CASE("lower-dimensional simplices use the induced lattice") {
    // Segment from 0 to (3,3): three primitive steps along (1,1).
    const auto seg = LatticeSimplex::from_vertices({ints({0, 0}), ints({3, 3})});
    CHECK(seg.dim() == 1);
    CHECK(seg.normalized_volume() == 3);
    CHECK(delta_vector(seg).values == ints({1, 2}));
    // conv(e1, e2, e3) is unimodular in its plane.
    const auto skew = LatticeSimplex::from_vertices({ints({1, 0, 0}), ints({0, 1, 0}), ints({0, 0, 1})});
    CHECK(delta_vector(skew).values == ints({1, 0, 0}));
    // 2 * conv(0, e1, e2) placed in 3-space.
    const auto doubled = LatticeSimplex::from_vertices({ints({0, 0, 0}), ints({2, 0, 0}), ints({0, 2, 0})});
    CHECK(delta_vector(doubled).values == ints({1, 3, 0}));
  }

  TEST_CASE("Ehrhart polynomial evaluation") {
    for (std::size_t d = 1; d <= 5; ++d) {
      IntVector unit(d + 1, 0);
      unit[0] = 1;
      const DeltaVector delta{unit};
      for (long m = 0; m <= 6; ++m)
        CHECK(ehrhart_eval(delta, Int(m)) == binomial_poly(Int(m + static_cast<long>(d)), d));
    }
    const DeltaVector tetra{ints({1, 1, 2, 1})};
    CHECK(ehrhart_eval(tetra, Int(1)) == 5);
    CHECK(ehrhart_eval(tetra, Int(0)) == 1);
    CHECK(ehrhart_eval(DeltaVector{ints({1, 6, 20, 22, 23, 15, 3})}, Int(0)) == 1);
  }

  TEST_CASE("interior counts by reciprocity") {
    CHECK(interior_count(DeltaVector{ints({1, 6, 20, 22, 23, 15, 3})}, Int(1)) == 3);
    for (std::size_t d = 1; d <= 6; ++d) {
      IntVector unit(d + 1, 0);
      unit[0] = 1;
      CHECK(interior_count(DeltaVector{unit}, Int(static_cast<long>(d))) == 0);
      CHECK(interior_count(DeltaVector{unit}, Int(static_cast<long>(d) + 1)) == 1);
    }
    CHECK(interior_count(DeltaVector{ints({1, 1, 2, 1})}, Int(1)) == 1);
    CHECK(testing::error_code_of([] { interior_count(DeltaVector{ints({1, 0})}, Int(0)); }) ==
          ErrorCode::NonPositiveDilation);
  }

  TEST_CASE("first dilation with an interior point") {
    CHECK(min_interior_dilation(DeltaVector{ints({1, 6, 20, 22, 23, 15, 3})}) == 1);
    CHECK(min_interior_dilation(DeltaVector{ints({1, 0, 0, 0})}) == 4);
    CHECK(min_interior_dilation(DeltaVector{ints({1, 2, 6, 3, 5, 1})}) == 1);
  }

  TEST_CASE("dilation") {
    const auto s = LatticeSimplex::from_vertices(kTetra);
    CHECK(dilate(s, Int(1)).vertices() == s.vertices());
    CHECK(testing::error_code_of([&] { dilate(s, Int(0)); }) == ErrorCode::NonPositiveDilation);
    for (long n = 1; n <= 4; ++n) {
      Int scale = 1;
      for (std::size_t k = 0; k < s.dim(); ++k) scale *= n;
      CHECK(dilate(s, Int(n)).normalized_volume() == scale * s.normalized_volume());
    }
    const auto tri = LatticeSimplex::from_vertices(testing::standard_simplex(2));
    // Counts C(2m+2, 2) = 1, 6, 15 invert to (1, 3, 0).
    CHECK(delta_vector(dilate(tri, Int(2))).values == ints({1, 3, 0}));
    CHECK(oracle::delta_from_counts({Int(1), Int(6), Int(15)}, 2) == ints({1, 3, 0}));
  }

  TEST_CASE("basic facts with independent counts") {
    const auto p3 = LatticeSimplex::from_vertices(kP3);
    const auto d3 = delta_vector(p3);
    const PointCounts counts{oracle::brute_count(p3, Int(1), false), oracle::brute_count(p3, Int(1), true)};
    CHECK(counts.lattice_points == 13);
    CHECK(counts.interior_points == 3);
    const auto report = basic_facts_check(p3, d3, counts);
    CHECK(report.all_passed());

    const auto unit = LatticeSimplex::from_vertices(testing::standard_simplex(4));
    CHECK(basic_facts_check(unit, delta_vector(unit)).all_passed());
    CHECK(delta_vector(unit)[1] == 0);

    const auto odd = LatticeSimplex::from_vertices(testing::standard_with_last(kOddLast));
    const auto dodd = delta_vector(odd);
    CHECK(dodd[1] == 2);
    const auto odd_report = basic_facts_check(
        odd, dodd, PointCounts{oracle::brute_count(odd, Int(1), false), oracle::brute_count(odd, Int(1), true)});
    CHECK(odd_report.all_passed());
    bool lower_bound_applied = false;
    for (const auto& c : odd_report.checks)
      if (c.name.find("delta_1 <= delta_i") != std::string::npos) lower_bound_applied = c.applicable && c.passed;
    CHECK(lower_bound_applied);
  }

  TEST_CASE("basic facts catch a wrong delta-vector") {
    const auto tetra = LatticeSimplex::from_vertices(kTetra);
    const auto report = basic_facts_check(tetra, DeltaVector{ints({1, 2, 1, 1})},
                                          PointCounts{Int(5), Int(1)});
    CHECK_FALSE(report.all_passed());
  }

  TEST_CASE("property: enumeration count, Stanley and Hibi on random simplices") {
    std::mt19937_64 rng(4242);
    int built = 0;
    while (built < 150) {
      const std::size_t d = 2 + built % 4;
      IntMatrix v;
      for (std::size_t i = 0; i <= d; ++i) v.push_back(testing::rand_vector(rng, d, -3, 3));
      std::optional<LatticeSimplex> s;
      try {
        s = LatticeSimplex::from_vertices(v);
      } catch (const Error& e) {
        REQUIRE(e.code() == ErrorCode::AffinelyDependent);
        continue;
      }
      ++built;
      const auto pts = enumerate_box_points(*s);
      const auto delta = delta_vector(*s);
      const Int det = abs(determinant(s->homogeneous_matrix()));
      CHECK(Int(static_cast<unsigned long>(pts.size())) == det);
      CHECK(series_sum(delta.values) == det);
      CHECK(delta[0] == 1);
      int zero = 0;
      for (const auto& p : pts) {
        CHECK(p.degree >= 0);
        CHECK(p.degree <= static_cast<long>(d));
        if (p.degree == 0) ++zero;
      }
      CHECK(zero == 1);
      CHECK(exactseq::check_stanley(delta.values).holds);
      CHECK(exactseq::check_hibi(delta.values).holds);
    }
  }

  TEST_CASE("property: unimodular transforms and translations preserve the delta-vector") {
    std::mt19937_64 rng(5150);
    const IntMatrix bases[] = {kTetra, testing::standard_with_last(kOddLast), testing::standard_with_last(ints({1, 3, 5})),
                               testing::standard_with_last(ints({2, 3, 7, 11}))};
    for (const IntMatrix& base : bases) {
      const DeltaVector expected = delta_of(base);
      const std::size_t n = base[0].size();
      for (int trial = 0; trial < 10; ++trial) {
        const IntMatrix u = testing::rand_unimodular(rng, n);
        REQUIRE(abs(determinant(u)) == 1);
        const IntMatrix moved = testing::transform(base, u, testing::rand_vector(rng, n, -5, 5));
        CHECK(delta_of(moved) == expected);
      }
    }
  }

  TEST_CASE("property: Ehrhart values match brute-force counts in low dimension") {
    std::mt19937_64 rng(8080);
    int built = 0;
    while (built < 40) {
      const std::size_t d = 1 + built % 4;
      IntMatrix v;
      for (std::size_t i = 0; i <= d; ++i) v.push_back(testing::rand_vector(rng, d, -2, 2));
      std::optional<LatticeSimplex> s;
      try {
        s = LatticeSimplex::from_vertices(v);
      } catch (const Error&) {
        continue;
      }
      ++built;
      const auto delta = delta_vector(*s);
      for (long m = 1; m <= 2; ++m) {
        CHECK(ehrhart_eval(delta, Int(m)) == oracle::brute_count(*s, Int(m), false));
        CHECK(interior_count(delta, Int(m)) == oracle::brute_count(*s, Int(m), true));
      }
      CHECK(basic_facts_check(*s, delta,
                              PointCounts{oracle::brute_count(*s, Int(1), false), oracle::brute_count(*s, Int(1), true)})
                .all_passed());
    }
  }
}
