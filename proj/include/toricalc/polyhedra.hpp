#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "toricalc/lattice_linalg.hpp"

namespace toricalc {

/// a . p >= b
struct Inequality {
  IntVector a;
  BigInt b;

  bool operator==(const Inequality&) const = default;
};

/// H-representation {p in R^dim : a_i . p >= b_i}. The list is a
/// presentation, not a canonical form; redundant and repeated rows are kept.
struct Polyhedron {
  std::size_t dim = 0;
  std::vector<Inequality> inequalities;

  Polyhedron() = default;
  Polyhedron(std::size_t d, std::vector<Inequality> ineqs);

  std::size_t size() const noexcept { return inequalities.size(); }
  bool contains(std::span<const BigInt> p) const;
  bool contains(std::span<const BigRat> p) const;

  bool operator==(const Polyhedron&) const = default;
};

/// conv(vertices) + cone(rays) + span(lineality).
///
/// When lineality is present `vertices` stays empty and `base_points` holds
/// one point on each minimal face so the decomposition remains exact.
struct VRepresentation {
  bool empty = true;
  std::vector<RatVector> vertices;
  std::vector<IntVector> rays;
  std::vector<IntVector> lineality;
  std::vector<RatVector> base_points;

  bool bounded() const noexcept { return rays.empty() && lineality.empty(); }
  /// Vertices, or base points when lineality is present.
  const std::vector<RatVector>& points() const noexcept {
    return lineality.empty() ? vertices : base_points;
  }
};

struct Face {
  std::set<std::size_t> active;
  std::size_t dim = 0;
  RatVector witness;

  bool operator==(const Face&) const = default;
};

struct FVector {
  std::vector<std::size_t> counts;
  bool is_simple = false;
};

/// Extreme rays and lineality basis of {x : c . x >= 0 for all c}, computed by
/// double description with the constraints inserted in order. Rays are
/// primitive, sorted and taken modulo the lineality space.
struct ConeGenerators {
  std::vector<IntVector> rays;
  std::vector<IntVector> lineality;
};
ConeGenerators cone_generators(std::size_t dim,
                               std::span<const IntVector> constraints);

/// Saturated lattice basis (Hermite form) of the rational span of `vectors`.
std::vector<IntVector> saturated_span_basis(std::span<const IntVector> vectors,
                                            std::size_t dim);

VRepresentation vrep(const Polyhedron& p);

/// Exact feasibility of {a.x = b for eqs, a.x >= b for ineqs} by
/// Fourier-Motzkin elimination over the rationals.
bool fourier_motzkin_feasible(std::size_t dim,
                              std::span<const Inequality> equalities,
                              std::span<const Inequality> inequalities);

/// The face cut out by forcing the inequalities in `tight` (0-based) to
/// equality; nullopt when that system is infeasible.
std::optional<Face> face(const Polyhedron& p, const std::set<std::size_t>& tight);

/// Vertex/ray incidence structure of a polyhedron, for repeated face queries.
class FaceOracle {
public:
  explicit FaceOracle(const Polyhedron& p);

  const Polyhedron& polyhedron() const noexcept { return poly_; }
  const VRepresentation& generators() const noexcept { return vrep_; }

  std::optional<Face> face(const std::set<std::size_t>& tight) const;
  bool face_empty(const std::set<std::size_t>& tight) const;
  /// Closed active sets of every nonempty face.
  std::vector<Face> all_faces() const;
  std::size_t dimension() const;

private:
  std::set<std::size_t> closure(const std::vector<std::size_t>& points,
                                const std::vector<std::size_t>& rays) const;

  Polyhedron poly_;
  VRepresentation vrep_;
  // tight_points_[k] = indices tight at base point k; tight_rays_[k] = indices
  // with a . ray == 0.
  std::vector<std::vector<bool>> tight_points_;
  std::vector<std::vector<bool>> tight_rays_;
};

FVector f_vector(const Polyhedron& p);

/// Integer points of a bounded polyhedron, lexicographically sorted.
std::vector<IntVector> lattice_points(const Polyhedron& p);

Polyhedron dilate(const Polyhedron& p, const BigInt& m);
Polyhedron product(const Polyhedron& p, const Polyhedron& q);
Polyhedron recession_cone(const Polyhedron& p);

/// {p : a_i . p >= r * b_i}. For r >= 1 this is r * P; r = 0 gives the
/// recession cone of the presentation and is defined even for empty P.
Polyhedron scaled(const Polyhedron& p, const BigInt& r);

// Common polyhedra.
Polyhedron interval(long lo, long hi);
Polyhedron half_line();
Polyhedron standard_simplex(std::size_t d);
Polyhedron unit_cube(std::size_t d);
Polyhedron positive_orthant(std::size_t d);

} // namespace toricalc
