#include <random>

#include "doctest.h"
#include "ehrhart/families.hpp"
#include "ehrhart/oracle.hpp"
#include "ehrhart/simplex.hpp"
#include "support.hpp"

using namespace ehrhart;
using namespace ehrhart::oracle;
using testing::ints;

namespace {

const IntMatrix kTetra = {ints({1, 0, 0}), ints({0, 1, 0}), ints({0, 0, 1}), ints({2, 2, 2})};

LatticeSimplex make(const IntMatrix& v) { return LatticeSimplex::from_vertices(v); }

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("direct counts") {
    const auto tri = make(testing::standard_simplex(2));
    CHECK(brute_count(tri, Int(3), false) == 10);
    CHECK(brute_count(tri, Int(0), false) == 1);
    CHECK(brute_count(tri, Int(0), true) == 0);
    const auto tetra = make(kTetra);
    CHECK(brute_count(tetra, Int(1), true) == 1);
    CHECK(brute_count(tetra, Int(1), false) == 5);
    CHECK(bounding_box_size(tetra, Int(1)) == 27);
    CHECK(testing::error_code_of([&] { brute_count(tetra, Int(-1), false); }) == ErrorCode::NonPositiveDilation);
    CHECK(testing::error_code_of([&] { brute_count(tetra, Int(1), false, 26); }) == ErrorCode::BoxCapExceeded);
    const auto unit3 = make(testing::standard_simplex(3));
    CHECK(brute_count(unit3, Int(4), true) == 1);
    CHECK(brute_count(unit3, Int(3), true) == 0);
  }

  TEST_CASE("lower-dimensional counts use the relative interior") {
    const auto seg = make({ints({0, 0}), ints({3, 3})});
    CHECK(brute_count(seg, Int(1), false) == 4);
    CHECK(brute_count(seg, Int(1), true) == 2);
    const auto skew = make({ints({1, 0, 0}), ints({0, 1, 0}), ints({0, 0, 1})});
    CHECK(brute_count(skew, Int(2), false) == 6);
    CHECK(brute_count(skew, Int(3), true) == 1);
  }

  TEST_CASE("delta-vectors recovered from counts") {
    for (std::size_t d = 1; d <= 4; ++d) {
      IntVector unit(d + 1, 0);
      unit[0] = 1;
      CHECK(delta_from_counts(count_table(make(testing::standard_simplex(d)), d, false).counts, d) == unit);
    }
    const CountTable t = count_table(make(kTetra), 3);
    CHECK(t.counts == ints({1, 5, 16, 39}));
    CHECK(t.interior_counts == ints({0, 1, 6, 19}));
    CHECK(delta_from_counts(t.counts, 3) == ints({1, 1, 2, 1}));
    CHECK(delta_from_counts({Int(1), Int(6), Int(15)}, 2) == ints({1, 3, 0}));
  }

  TEST_CASE("inconsistent counts are rejected") {
    CHECK(testing::error_code_of([] { delta_from_counts({Int(1), Int(6)}, 2); }) == ErrorCode::InvalidInput);
    CHECK(testing::error_code_of([] { delta_from_counts({Int(2), Int(6), Int(15)}, 2); }) ==
          ErrorCode::InconsistentCounts);
    // Solving 1, 2, 3 for d = 2 gives (1, -1, 0).
    CHECK(testing::error_code_of([] { delta_from_counts({Int(1), Int(2), Int(3)}, 2); }) ==
          ErrorCode::InconsistentCounts);
    // An extra count that the recovered polynomial does not reproduce.
    CHECK(testing::error_code_of([] { delta_from_counts({Int(1), Int(6), Int(15), Int(27)}, 2); }) ==
          ErrorCode::InconsistentCounts);
    CHECK(delta_from_counts({Int(1), Int(6), Int(15), Int(28)}, 2) == ints({1, 3, 0}));
  }

  TEST_CASE("reciprocity") {
    const auto rep = reciprocity_check(make(kTetra), 3);
    CHECK(rep.all_ok());
    CHECK(rep.delta == ints({1, 1, 2, 1}));
    REQUIRE(rep.rows.size() == 3);
    CHECK(rep.rows[0].interior == 1);
    const auto unit3 = reciprocity_check(make(testing::standard_simplex(3)), 4);
    CHECK(unit3.all_ok());
    CHECK(unit3.rows.back().m == 4);
    CHECK(unit3.rows.back().interior == 1);
    CHECK(ehrhart_value(ints({1, 0, 0, 0}), Int(-4)) == -1);
  }

  TEST_CASE("odd instance: one interior point at m = 1") {
    const auto odd = families::build_simplex({families::Family::OddCeiling, 2, 0, 1});
    CHECK(brute_count(odd, Int(1), true) == 1);
    CHECK(brute_count(odd, Int(1), false) == 8);
    CHECK(brute_count(odd, Int(2), false) == ehrhart_eval(delta_vector(odd), Int(2)));
  }

  TEST_CASE("sextic counts at m = 1") {
    const auto p3 = families::build_simplex({families::Family::SexticP3});
    CHECK(brute_count(p3, Int(1), false) == 13);
    CHECK(brute_count(p3, Int(1), true) == 3);
  }

  TEST_CASE("property: oracle agrees with enumeration, counts are monotone") {
    std::mt19937_64 rng(606);
    int built = 0;
    while (built < 40) {
      const std::size_t d = 1 + built % 4;
      IntMatrix v;
      for (std::size_t i = 0; i <= d; ++i) v.push_back(testing::rand_vector(rng, d, -2, 2));
      LatticeSimplex s = make(testing::standard_simplex(1));
      try {
        s = make(v);
      } catch (const Error&) {
        continue;
      }
      ++built;
      const unsigned m_max = static_cast<unsigned>(std::max<std::size_t>(d, 3));
      const CountTable t = count_table(s, m_max);
      CHECK(delta_from_counts(t.counts, d) == delta_vector(s).values);
      for (unsigned m = 1; m <= m_max; ++m) {
        CHECK(t.counts[m] > t.counts[m - 1]);
        CHECK(t.interior_counts[m] >= t.interior_counts[m - 1]);
      }
      CHECK(reciprocity_check(s, 3).all_ok());
    }
  }
}
