#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ehrhart/integer.hpp"
#include "ehrhart/simplex.hpp"

/// The explicit simplex constructions with prescribed delta-vector shapes,
/// together with the closed forms and ceiling-function counts predicted
/// for them. Box-point enumeration is the ground truth they are checked
/// against.
namespace ehrhart::families {

enum class Family {
  OddCeiling,        // non-unimodal, d = 2l + 1
  EvenCeiling,       // non-unimodal, d = 2l + 2
  UnimodalNotLc,   // unimodal, neither log-concave nor alternatingly increasing
  AiNotLc,    // alternatingly increasing, not log-concave
  SexticP3,  // log-concave, not alternatingly increasing
  SexticP4,
  AiTetrahedron,     // dimension 3, alternatingly increasing, not log-concave
};

std::string_view to_string(Family f);
/// Accepts the CLI names (odd33, even33, unimodal34, ainotlc35,
/// sextic34-p3, sextic34-p4, remark36); throws BadParams.
Family parse_family(std::string_view name);

/// `l` is used by OddCeiling/EvenCeiling, `d` by UnimodalNotLc/AiNotLc, `m` by all
/// four parametrized families.
struct FamilyParams {
  Family family;
  long l = 0;
  long d = 0;
  long m = 0;
};

/// Throws BadParams when the parameters are out of range.
void validate(const FamilyParams& params);

std::size_t dimension(const FamilyParams& params);

/// The modulus M (equal to the normalized volume) of the parametrized
/// families; nullopt for the literal vertex lists.
std::optional<Int> modulus(const FamilyParams& params);

LatticeSimplex build_simplex(const FamilyParams& params);

/// Throws NoClosedForm for OddCeiling/EvenCeiling.
DeltaVector closed_form_delta(const FamilyParams& params);

enum class CeilingReading {
  FloorTerm,
  FractionalPart,  // {x} in place of the floor term
};

std::string_view to_string(CeilingReading r);

struct CeilingHistogram {
  DeltaVector delta;
  CeilingReading reading = CeilingReading::FloorTerm;
  bool floor_reading_consistent = true;
  std::string note;  // set when the floor-term reading was rejected
};

/// Histogram of the family's ceiling function over j = 0..M-1, evaluated
/// with exact rationals. For UnimodalNotLc and odd AiNotLc the floor-term
/// formula has a floor where a fractional part is consistent; both are
/// evaluated and the reading agreeing with the closed form (and landing in
/// 0..d) is returned. Throws BadParams for families without such a formula.
CeilingHistogram ceiling_histogram(const FamilyParams& params);

/// Histogram of one specific reading; values outside 0..d are rejected by
/// returning nullopt.
std::optional<DeltaVector> ceiling_histogram(const FamilyParams& params, CeilingReading reading);

struct PredictedProperties {
  std::optional<bool> unimodal;
  std::optional<bool> log_concave;
  std::optional<bool> alternatingly_increasing;
  std::string label;
};

PredictedProperties predicted_properties(const FamilyParams& params);

/// The four bounds that certify non-unimodality of OddCeiling/EvenCeiling plus the
/// interior count delta_d = m.
struct CeilingFamilyBounds {
  bool delta_1_small = false;   // delta_1 <= m + 1
  bool delta_l_large = false;   // delta_l >= 2m+2 (odd) / 3m+2 (even)
  bool delta_l1_small = false;  // delta_{l+1} <= 2m+1 / 3m+1
  bool tail_max_large = false;  // max delta_{l+2..2l} >= 2m+2 / 3m+2
  bool interior_is_m = false;   // delta_d = m
  bool all() const {
    return delta_1_small && delta_l_large && delta_l1_small && tail_max_large && interior_is_m;
  }
};

CeilingFamilyBounds check_ceiling_family_bounds(const FamilyParams& params, const DeltaVector& delta);

/// Index c = d' + 1 of the log-concavity failure delta_{c-1} delta_{c+1} >
/// delta_c^2 named for AiNotLc.
std::size_t expected_lc_failure_index(const FamilyParams& params);

}  // namespace ehrhart::families
