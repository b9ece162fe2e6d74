#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "toricalc/cones_semigroups.hpp"
#include "toricalc/lattice_linalg.hpp"
#include "toricalc/polyhedra.hpp"

namespace toricalc {

/// A subtorus G of T^n acting on C^n, linearized on the trivial bundle.
///
/// Rows of `weights` are cocharacters spanning G: the one-parameter subgroup
/// of row w acts by s . x_i = s^{w_i} x_i. The linearization acts on the
/// bundle coordinate t by the character lambda^alpha.
struct LinearizedAction {
  std::size_t n = 0;
  IntegerMatrix weights;
  IntVector linearization;

  LinearizedAction() = default;
  /// Throws std::invalid_argument on shape mismatch or dependent rows.
  LinearizedAction(std::size_t n, IntegerMatrix weights, IntVector linearization);
};

/// Row i of `a` is the image of e_i in t = Z^n / rowlattice(W).
struct QuotientData {
  IntegerMatrix a;
  std::size_t d = 0;
};

/// Zero-based coordinate indices at which a point vanishes.
struct Support {
  std::set<std::size_t> indices;

  auto operator<=>(const Support&) const = default;
};

struct BettiNumbers {
  /// b_0, b_2, ..., b_{2d}.
  std::vector<BigInt> values;
  /// False when the polyhedron is unbounded; the polynomial is still reported
  /// but carries no topological claim.
  bool bounded = true;
};

struct InvariantValue {
  BigRat value;
  std::size_t degree = 0;

  bool operator==(const InvariantValue&) const = default;
};

struct ProjComparison {
  bool equal = false;
  std::optional<BigRat> scale;
  /// Set when no rational scale exists although the values pass the pairwise
  /// consistency test, so the images may still agree over C.
  std::string diagnostic;
};

QuotientData quotient_projection(const LinearizedAction& action);
Polyhedron delta(const LinearizedAction& action);
LinearizedAction group_from_delta(const Polyhedron& p);

/// Exponent vector (r_1, ..., r_n, r) of the invariant monomial for (p, r).
IntVector invariant_monomial(const LinearizedAction& action,
                             std::span<const BigInt> p, const BigInt& r);
IntVector invariant_monomial(const QuotientData& q, const LinearizedAction& action,
                             std::span<const BigInt> p, const BigInt& r);

/// Invariant monomials of degree r whose x-exponents are all <= bound,
/// through lattice points of r * Delta.
std::vector<IntVector> invariant_monomials(const LinearizedAction& action,
                                           std::size_t r, std::size_t bound);

bool is_semistable(const LinearizedAction& action, const Support& support);
std::vector<Support> minimal_unstable_supports(const LinearizedAction& action);

BettiNumbers betti(const Polyhedron& p);
std::map<std::size_t, std::size_t> orbit_census(const Polyhedron& p);

/// Values of each generator monomial of degree <= max_degree at x (t = 1).
std::vector<InvariantValue> evaluate_invariants(const LinearizedAction& action,
                                                std::span<const BigRat> x,
                                                std::size_t max_degree);

ProjComparison proj_compare(std::span<const InvariantValue> v,
                            std::span<const InvariantValue> w);
bool proj_equal(std::span<const InvariantValue> v,
                std::span<const InvariantValue> w);

/// lambda^alpha for lambda in T^n.
BigRat character_value(const LinearizedAction& action, std::span<const BigRat> lambda);

/// The element of G with lambda_i = prod_k s_k^{W_ki}.
RatVector group_element(const LinearizedAction& action, std::span<const BigRat> s);

} // namespace toricalc
