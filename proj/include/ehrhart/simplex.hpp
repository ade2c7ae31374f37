#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ehrhart/integer.hpp"
#include "ehrhart/snf.hpp"

namespace ehrhart {

inline constexpr std::uint64_t kDefaultBoxPointCap = 10'000'000;

/// A lattice simplex conv(v_0, ..., v_d) in Z^N with affinely independent
/// vertices. When d < N the simplex also carries integer coordinates of its
/// vertices with respect to a basis of the saturated lattice aff(F) ∩ Z^N,
/// so volumes and box points are measured in the induced lattice.
class LatticeSimplex {
 public:
  /// Throws MixedDimensions (ragged input), AffinelyDependent, or
  /// InvalidInput (no vertices).
  static LatticeSimplex from_vertices(IntMatrix vertices);

  const IntMatrix& vertices() const { return vertices_; }
  std::size_t dim() const { return vertices_.size() - 1; }
  std::size_t ambient_dim() const { return vertices_.front().size(); }

  /// Vertex coordinates in the induced lattice (rows of length d).
  const IntMatrix& lattice_coordinates() const { return coords_; }

  /// Rows (v_i, 1) in ambient coordinates: (d+1) x (N+1).
  IntMatrix homogeneous_matrix() const;
  /// Rows (w_i, 1) in induced-lattice coordinates: (d+1) x (d+1).
  IntMatrix lattice_homogeneous_matrix() const;

  /// |det| of the lattice homogeneous matrix, i.e. d! * relative volume.
  Int normalized_volume() const;

 private:
  LatticeSimplex(IntMatrix vertices, IntMatrix coords)
      : vertices_(std::move(vertices)), coords_(std::move(coords)) {}

  IntMatrix vertices_;
  IntMatrix coords_;
};

/// An integer point alpha = sum r_i (v_i, 1) of the half-open fundamental
/// parallelepiped, 0 <= r_i < 1.
struct BoxPoint {
  std::vector<Rational> r;
  IntVector alpha;  // ambient coordinates, length N + 1
  Int degree;       // last coordinate of alpha
};

struct DeltaVector {
  IntVector values;

  std::size_t dim() const { return values.size() - 1; }
  const Int& operator[](std::size_t i) const { return values[i]; }
  bool operator==(const DeltaVector&) const = default;
};

/// Validates delta_0 = 1 and nonnegativity; throws InvalidInput otherwise.
DeltaVector make_delta_vector(IntVector values);

/// Lists Λ_F in lexicographic order of the Smith coordinates of the coset
/// representatives. Throws VolumeCapExceeded when the normalized volume
/// exceeds `cap`.
std::vector<BoxPoint> enumerate_box_points(const LatticeSimplex& simplex,
                                           std::uint64_t cap = kDefaultBoxPointCap);

/// Degree histogram of the box points. Large enumerations are split into
/// independent coset ranges across worker threads.
DeltaVector delta_vector(const LatticeSimplex& simplex, std::uint64_t cap = kDefaultBoxPointCap);

/// i(P, m) = sum_i delta_i C(m + d - i, d), polynomial binomials so that
/// negative m evaluates the Ehrhart polynomial.
Int ehrhart_eval(const DeltaVector& delta, const Int& m);

/// |m P° ∩ Z^N| = (-1)^d i(P, -m); throws NonPositiveDilation for m < 1.
Int interior_count(const DeltaVector& delta, const Int& m);

/// d + 1 - s, the first dilation with an interior lattice point.
std::size_t min_interior_dilation(const DeltaVector& delta);

/// nP; throws NonPositiveDilation for n < 1.
LatticeSimplex dilate(const LatticeSimplex& simplex, const Int& n);

/// Independently obtained counts i(P, 1) and |P° ∩ Z^N|.
struct PointCounts {
  Int lattice_points;
  Int interior_points;
};

struct FactCheck {
  std::string name;
  bool applicable = true;
  bool passed = true;
  std::string detail;
};

struct BasicFactsReport {
  std::vector<FactCheck> checks;
  bool all_passed() const;
};

/// Verifies the elementary facts every delta-vector obeys. Without
/// `counts`, i(P, 1) and the interior count come from the Ehrhart
/// polynomial itself, which makes the first two checks consistency checks
/// only; pass brute-force counts to make them independent.
BasicFactsReport basic_facts_check(const LatticeSimplex& simplex, const DeltaVector& delta,
                                   const std::optional<PointCounts>& counts = std::nullopt);

}  // namespace ehrhart
