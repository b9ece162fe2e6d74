#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "toricalc/lattice_linalg.hpp"
#include "toricalc/polyhedra.hpp"

namespace toricalc {

/// {x in R^dim : c . x >= 0 for every c in inequalities}.
struct Cone {
  std::size_t dim = 0;
  std::vector<IntVector> inequalities;

  bool contains(std::span<const BigInt> x) const;
};

/// A lattice point (p, r) of the homogenized cone; r is the grading.
struct GradedSemigroupElement {
  IntVector point;
  BigInt degree;

  bool operator<(const GradedSemigroupElement& o) const {
    if (degree != o.degree) return degree < o.degree;
    return point < o.point;
  }
  bool operator==(const GradedSemigroupElement&) const = default;
};

/// Pair of exponent vectors over the generator list with equal image.
struct Binomial {
  std::vector<std::size_t> lhs;
  std::vector<std::size_t> rhs;

  auto operator<=>(const Binomial&) const = default;
};

struct DegreeRelations {
  std::size_t monomial_count = 0;
  std::size_t hilbert_value = 0;
  std::size_t kernel_dimension = 0;
  std::vector<Binomial> binomials;
};

struct RingPresentation {
  std::vector<GradedSemigroupElement> generators;
  std::map<std::size_t, DegreeRelations> relations_by_degree;
};

/// {(a_i, -b_i) . (p, r) >= 0} plus r >= 0, in that order.
Cone homogenize(const Polyhedron& p);

/// Minimal generating set of C ∩ Z^dim, lexicographically sorted. Throws
/// NotPointed when C contains a line.
std::vector<IntVector> hilbert_basis(const Cone& c);

/// Hilbert basis of homogenize(p), sorted by degree then point.
std::vector<GradedSemigroupElement> graded_generators(const Polyhedron& p);

/// Number of lattice points of r * P.
std::size_t hilbert_function(const Polyhedron& p, std::size_t r);

/// Generators plus, for each degree 0..max_degree, the relation kernel
/// dimension and a spanning set of binomials.
RingPresentation relation_space(const Polyhedron& p, std::size_t max_degree);

} // namespace toricalc
