#include <random>

#include "doctest.h"
#include "ehrhart/simplex.hpp"
#include "ehrhart/snf.hpp"
#include "support.hpp"

using namespace ehrhart;
using testing::ints;

TEST_SUITE("snf") {
  TEST_CASE("identity is its own normal form") {
    const IntMatrix id = identity_matrix(4);
    const auto snf = smith_normal_form(id);
    CHECK(snf.S == id);
    CHECK(snf_postconditions_hold(id, snf));
  }

  TEST_CASE("diag(2,3) becomes diag(1,6)") {
    const IntMatrix w = {ints({2, 0}), ints({0, 3})};
    const auto snf = smith_normal_form(w);
    CHECK(snf.invariant_factors() == ints({1, 6}));
    CHECK(snf_postconditions_hold(w, snf));
  }

  TEST_CASE("homogenized tetrahedron with five box points") {
    const IntMatrix w = {ints({1, 0, 0, 1}), ints({0, 1, 0, 1}), ints({0, 0, 1, 1}), ints({2, 2, 2, 1})};
    const auto snf = smith_normal_form(w);
    Int product = 1;
    for (const Int& s : snf.invariant_factors()) product *= s;
    CHECK(product == 5);
    CHECK(abs(determinant(w)) == 5);
    CHECK(snf_postconditions_hold(w, snf));
  }

  TEST_CASE("zero and rectangular matrices") {
    const IntMatrix z = {ints({0, 0, 0}), ints({0, 0, 0})};
    const auto sz = smith_normal_form(z);
    CHECK(sz.invariant_factors() == ints({0, 0}));
    CHECK(snf_postconditions_hold(z, sz));
    const IntMatrix r = {ints({2, 4, 6}), ints({3, 5, 7})};
    const auto sr = smith_normal_form(r);
    CHECK(sr.invariant_factors() == ints({1, 2}));
    CHECK(snf_postconditions_hold(r, sr));
  }

  TEST_CASE("a wrong decomposition fails the postcondition check") {
    const IntMatrix w = {ints({2, 0}), ints({0, 3})};
    auto snf = smith_normal_form(w);
    snf.S[1][1] = 3;
    CHECK_FALSE(snf_postconditions_hold(w, snf));
  }

  TEST_CASE("deterministic output") {
    const IntMatrix w = {ints({4, 6, 2}), ints({8, -2, 0}), ints({1, 1, 5})};
    const auto a = smith_normal_form(w);
    const auto b = smith_normal_form(w);
    CHECK(a.U == b.U);
    CHECK(a.V == b.V);
    CHECK(a.S == b.S);
  }

  TEST_CASE("property: random matrices satisfy every postcondition") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 500; ++trial) {
      const std::size_t rows = 1 + rng() % 5;
      const std::size_t cols = 1 + rng() % 5;
      IntMatrix w;
      for (std::size_t i = 0; i < rows; ++i) w.push_back(testing::rand_vector(rng, cols, -9, 9));
      const auto snf = smith_normal_form(w);
      REQUIRE(snf_postconditions_hold(w, snf));
      if (rows == cols) {
        Int product = 1;
        for (const Int& s : snf.invariant_factors()) product *= s;
        CHECK(product == abs(determinant(w)));
      }
    }
  }
}
