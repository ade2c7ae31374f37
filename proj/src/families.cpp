#include "ehrhart/families.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "ehrhart/error.hpp"

namespace ehrhart::families {

namespace {

IntVector unit(std::size_t N, std::size_t i) {
  IntVector v(N, 0);
  v[i] = 1;
  return v;
}

// v_0 = 0, v_i = e_i for 1 <= i <= d-1, and the given last vertex.
LatticeSimplex standard_with_last(const IntVector& last) {
  const std::size_t d = last.size();
  IntMatrix vertices;
  vertices.emplace_back(d, 0);
  for (std::size_t i = 0; i + 1 < d; ++i) vertices.push_back(unit(d, i));
  vertices.push_back(last);
  return LatticeSimplex::from_vertices(std::move(vertices));
}

IntMatrix sextic_vertices(long big, long six) {
  IntMatrix v;
  v.emplace_back(6, 0);
  for (std::size_t i = 0; i < 4; ++i) v.push_back(unit(6, i));
  v.push_back(to_ints({2, 2, 2, 2, 3, 0}));
  v.push_back(to_ints({big, big, big, big, 3, six}));
  return v;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::BadParams, what);
}

long ceil_half(long x) { return (x + 1) / 2; }

Rational q(const Int& num, const Int& den) { return ratio(num, den); }

// Histogram of ceil(value(j)) over j = 0..M-1; nullopt if a value leaves 0..d.
std::optional<DeltaVector> histogram(std::size_t d, const Int& M,
                                     const std::function<Rational(const Int&)>& value) {
  IntVector counts(d + 1, 0);
  for (Int j = 0; j < M; ++j) {
    const Int v = ehrhart::ceil(value(j));
    if (v < 0 || v > static_cast<long>(d)) return std::nullopt;
    counts[v.get_ui()] += 1;
  }
  if (counts[0] != 1) return std::nullopt;
  return DeltaVector{std::move(counts)};
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::OddCeiling: return "odd33";
    case Family::EvenCeiling: return "even33";
    case Family::UnimodalNotLc: return "unimodal34";
    case Family::AiNotLc: return "ainotlc35";
    case Family::SexticP3: return "sextic34-p3";
    case Family::SexticP4: return "sextic34-p4";
    case Family::AiTetrahedron: return "remark36";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::OddCeiling, Family::EvenCeiling, Family::UnimodalNotLc, Family::AiNotLc,
                   Family::SexticP3, Family::SexticP4, Family::AiTetrahedron})
    if (to_string(f) == name) return f;
  throw Error(ErrorCode::BadParams, "unknown family '" + std::string(name) + "'");
}

std::string_view to_string(CeilingReading r) {
  return r == CeilingReading::FloorTerm ? "floor-term" : "fractional-part";
}

void validate(const FamilyParams& params) {
  switch (params.family) {
    case Family::OddCeiling:
    case Family::EvenCeiling:
      require(params.l >= 2, "l must be >= 2");
      require(params.m >= 1, "m must be >= 1");
      break;
    case Family::UnimodalNotLc:
      require(params.d >= 5 && params.d % 2 == 1, "d must be odd and >= 5");
      require(params.m >= 1, "m must be >= 1");
      break;
    case Family::AiNotLc:
      require(params.d >= 4, "d must be >= 4");
      require(params.m >= 1, "m must be >= 1");
      break;
    case Family::SexticP3:
    case Family::SexticP4:
    case Family::AiTetrahedron:
      break;
  }
}

std::size_t dimension(const FamilyParams& params) {
  validate(params);
  switch (params.family) {
    case Family::OddCeiling: return 2 * params.l + 1;
    case Family::EvenCeiling: return 2 * params.l + 2;
    case Family::UnimodalNotLc:
    case Family::AiNotLc: return params.d;
    case Family::SexticP3:
    case Family::SexticP4: return 6;
    case Family::AiTetrahedron: return 3;
  }
  return 0;
}

std::optional<Int> modulus(const FamilyParams& params) {
  validate(params);
  const long l = params.l, d = params.d, m = params.m;
  switch (params.family) {
    case Family::OddCeiling: return Int(2 * (2 * m + 1) * (l + 1));
    case Family::EvenCeiling: return Int(2 * (3 * m + 1) * (l + 1));
    case Family::UnimodalNotLc: return Int(2 * (d - 1) * m + 2);
    case Family::AiNotLc: return Int((ceil_half(d + 1) * m + 1) * ceil_half(d + 2));
    default: return std::nullopt;
  }
}

LatticeSimplex build_simplex(const FamilyParams& params) {
  validate(params);
  const std::size_t d = dimension(params);
  const long m = params.m;
  IntVector last(d, 0);
  switch (params.family) {
    case Family::OddCeiling: {
      const Int M = *modulus(params);
      last[0] = M - 2 * (params.l + 1) * m;
      for (std::size_t i = 1; i + 1 < d; ++i) last[i] = M - 1;
      last[d - 1] = M;
      return standard_with_last(last);
    }
    case Family::EvenCeiling: {
      const Int M = *modulus(params);
      last[0] = last[1] = M - 2 * (params.l + 1) * m;
      for (std::size_t i = 2; i + 1 < d; ++i) last[i] = M - 1;
      last[d - 1] = M;
      return standard_with_last(last);
    }
    case Family::UnimodalNotLc: {
      const Int M = *modulus(params);
      last[0] = M - static_cast<long>(d) + 1;
      for (std::size_t i = 1; i + 1 < d; ++i) last[i] = M - 1;
      last[d - 1] = M;
      return standard_with_last(last);
    }
    case Family::AiNotLc: {
      const Int M = *modulus(params);
      const std::size_t half = d / 2;
      for (std::size_t i = 0; i < half; ++i) last[i] = M - ceil_half(params.d + 2) * m;
      for (std::size_t i = half; i + 1 < d; ++i) last[i] = M - 1;
      last[d - 1] = M;
      return standard_with_last(last);
    }
    case Family::SexticP3: return LatticeSimplex::from_vertices(sextic_vertices(16, 30));
    case Family::SexticP4: return LatticeSimplex::from_vertices(sextic_vertices(22, 42));
    case Family::AiTetrahedron:
      return LatticeSimplex::from_vertices({to_ints({1, 0, 0}), to_ints({0, 1, 0}), to_ints({0, 0, 1}),
                                            to_ints({2, 2, 2})});
  }
  throw Error(ErrorCode::BadParams, "unhandled family");
}

DeltaVector closed_form_delta(const FamilyParams& params) {
  validate(params);
  const long m = params.m;
  switch (params.family) {
    case Family::OddCeiling:
    case Family::EvenCeiling:
      throw Error(ErrorCode::NoClosedForm, std::string(to_string(params.family)) + " has no closed-form delta-vector");
    case Family::UnimodalNotLc: {
      // (1, m, 2m, ..., 2m, 2m+1 at (d-1)/2, 2m, ..., 2m, m)
      const long d = params.d;
      IntVector v(d + 1, Int(2 * m));
      v[0] = 1;
      v[1] = m;
      v[d] = m;
      v[(d - 1) / 2] = 2 * m + 1;
      return DeltaVector{std::move(v)};
    }
    case Family::AiNotLc: {
      const long d = params.d;
      IntVector v(d + 1, 0);
      v[0] = 1;
      if (d % 2 == 1) {
        // (1, m+1, ..., (d'-1)m+1, 2d'm+1, (d'-1)m, ..., m)
        const long dp = (d + 1) / 2;
        for (long i = 1; i < dp; ++i) v[i] = i * m + 1;
        v[dp] = 2 * dp * m + 1;
        for (long k = 1; k < dp; ++k) v[dp + k] = (dp - k) * m;
      } else {
        // (1, m+1, ..., (d'-1)m+1, (2d'+1)m+1, d'm, ..., m)
        const long dp = d / 2;
        for (long i = 1; i < dp; ++i) v[i] = i * m + 1;
        v[dp] = (2 * dp + 1) * m + 1;
        for (long k = 1; k <= dp; ++k) v[dp + k] = (dp - k + 1) * m;
      }
      return DeltaVector{std::move(v)};
    }
    case Family::SexticP3: return DeltaVector{to_ints({1, 6, 20, 22, 23, 15, 3})};
    case Family::SexticP4: return DeltaVector{to_ints({1, 7, 28, 31, 32, 23, 4})};
    case Family::AiTetrahedron: return DeltaVector{to_ints({1, 1, 2, 1})};
  }
  throw Error(ErrorCode::BadParams, "unhandled family");
}

std::optional<DeltaVector> ceiling_histogram(const FamilyParams& params, CeilingReading reading) {
  validate(params);
  const std::size_t d = dimension(params);
  const bool fractional = reading == CeilingReading::FractionalPart;
  const long l = params.l, m = params.m;
  switch (params.family) {
    case Family::OddCeiling: {
      // ceil(2l j / M + {2(l+1)m j / M})
      const Int M = *modulus(params);
      return histogram(d, M, [&](const Int& j) -> Rational {
        return q(2 * l * j, M) + frac(q(2 * (l + 1) * m * j, M));
      });
    }
    case Family::EvenCeiling: {
      // ceil(2l j / M + 2 {2(l+1)m j / M})
      const Int M = *modulus(params);
      return histogram(d, M, [&](const Int& j) -> Rational {
        return q(2 * l * j, M) + 2 * frac(q(2 * (l + 1) * m * j, M));
      });
    }
    case Family::UnimodalNotLc: {
      // floor-term reading: ceil(x + floor(x)), x = (d-1) j / M
      const Int M = *modulus(params);
      const long dm1 = params.d - 1;
      return histogram(d, M, [&](const Int& j) -> Rational {
        const Rational x = q(dm1 * j, M);
        return x + (fractional ? frac(x) : Rational(ehrhart::floor(x)));
      });
    }
    case Family::AiNotLc: {
      const Int M = *modulus(params);
      if (params.d % 2 == 1) {
        // floor-term reading: ceil(d' j / M + floor(m j / (d'm + 1)) (d' - 1))
        const long dp = (params.d + 1) / 2;
        return histogram(d, M, [&](const Int& j) -> Rational {
          const Rational y = q(m * j, Int(dp * m + 1));
          const Rational part = fractional ? frac(y) : Rational(ehrhart::floor(y));
          return q(dp * j, M) + part * (dp - 1);
        });
      }
      // ceil(d' j / M + {m j / (d'm + m + 1)} d')
      const long dp = params.d / 2;
      return histogram(d, M, [&](const Int& j) -> Rational {
        return q(dp * j, M) + frac(q(m * j, Int(dp * m + m + 1))) * dp;
      });
    }
    default:
      throw Error(ErrorCode::BadParams,
                  std::string(to_string(params.family)) + " has no ceiling-function description");
  }
}

CeilingHistogram ceiling_histogram(const FamilyParams& params) {
  const bool ambiguous = params.family == Family::UnimodalNotLc ||
                         (params.family == Family::AiNotLc && params.d % 2 == 1);
  std::optional<DeltaVector> expected;
  if (params.family != Family::OddCeiling && params.family != Family::EvenCeiling) expected = closed_form_delta(params);
  auto acceptable = [&](const std::optional<DeltaVector>& h) {
    return h && (!expected || *h == *expected);
  };

  const auto floored = ceiling_histogram(params, CeilingReading::FloorTerm);
  if (acceptable(floored) || !ambiguous) {
    CeilingHistogram out{floored ? *floored : DeltaVector{IntVector(dimension(params) + 1, 0)}};
    out.floor_reading_consistent = acceptable(floored);
    if (!out.floor_reading_consistent) out.note = "floor-term ceiling formula leaves 0..d or disagrees";
    return out;
  }
  const auto alternative = ceiling_histogram(params, CeilingReading::FractionalPart);
  CeilingHistogram out{alternative ? *alternative : DeltaVector{IntVector(dimension(params) + 1, 0)},
                       CeilingReading::FractionalPart, false};
  out.note = floored ? "floor-term reading gives " + ehrhart::to_string(floored->values) +
                           "; fractional-part reading used"
                     : "floor-term reading leaves 0..d; fractional-part reading used";
  if (!acceptable(alternative)) out.note += " (fractional-part reading also disagrees)";
  return out;
}

PredictedProperties predicted_properties(const FamilyParams& params) {
  validate(params);
  switch (params.family) {
    case Family::OddCeiling:
    case Family::EvenCeiling: return {false, std::nullopt, std::nullopt, "non-unimodal"};
    case Family::UnimodalNotLc: return {true, false, false, "unimodal, neither log-concave nor alternatingly increasing"};
    case Family::AiNotLc: return {true, false, true, "alternatingly increasing, not log-concave"};
    case Family::SexticP3:
    case Family::SexticP4: return {true, true, false, "log-concave, not alternatingly increasing"};
    case Family::AiTetrahedron: return {true, false, true, "alternatingly increasing, not log-concave"};
  }
  return {};
}

CeilingFamilyBounds check_ceiling_family_bounds(const FamilyParams& params, const DeltaVector& delta) {
  if (params.family != Family::OddCeiling && params.family != Family::EvenCeiling)
    throw Error(ErrorCode::BadParams, "bounds apply to odd33/even33 only");
  validate(params);
  const std::size_t d = dimension(params);
  if (delta.dim() != d) throw Error(ErrorCode::InvalidInput, "delta-vector has the wrong length");
  const long l = params.l, m = params.m;
  const long c = params.family == Family::OddCeiling ? 2 : 3;
  CeilingFamilyBounds b;
  b.delta_1_small = delta[1] <= m + 1;
  b.delta_l_large = delta[l] >= c * m + 2;
  b.delta_l1_small = delta[l + 1] <= c * m + 1;
  Int tail = 0;
  for (long i = l + 2; i <= 2 * l; ++i) tail = std::max(tail, delta[i]);
  b.tail_max_large = tail >= c * m + 2;
  b.interior_is_m = delta[d] == m;
  return b;
}

std::size_t expected_lc_failure_index(const FamilyParams& params) {
  if (params.family != Family::AiNotLc) throw Error(ErrorCode::BadParams, "ainotlc35 only");
  validate(params);
  const long dp = params.d % 2 == 1 ? (params.d + 1) / 2 : params.d / 2;
  return static_cast<std::size_t>(dp + 1);
}

}  // namespace ehrhart::families
