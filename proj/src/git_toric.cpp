#include "toricalc/git_toric.hpp"

#include <algorithm>
#include <stdexcept>

#include "toricalc/errors.hpp"

namespace toricalc {

LinearizedAction::LinearizedAction(std::size_t n_, IntegerMatrix weights_,
                                   IntVector linearization_)
    : n(n_), weights(std::move(weights_)), linearization(std::move(linearization_)) {
  if (weights.rows() > 0 && weights.cols() != n)
    throw std::invalid_argument("action: weight rows must have length n");
  if (weights.rows() == 0) weights = IntegerMatrix(0, n);
  if (linearization.size() != n)
    throw std::invalid_argument("action: linearization must have length n");
  if (rank(weights) != weights.rows())
    throw std::invalid_argument("action: weight rows are linearly dependent");
}

namespace {

BigRat power(const BigRat& base, const BigInt& exponent) {
  if (!exponent.fits_slong_p()) throw std::invalid_argument("exponent too large");
  long e = exponent.get_si();
  if (e == 0) return 1;
  if (base == 0) {
    if (e < 0) throw std::invalid_argument("zero raised to a negative power");
    return 0;
  }
  unsigned long ue = static_cast<unsigned long>(e < 0 ? -e : e);
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), ue);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), ue);
  BigRat out = e > 0 ? BigRat(num, den) : BigRat(den, num);
  out.canonicalize();
  return out;
}

// Rational k-th roots of q, positive first.
std::vector<BigRat> rational_roots(const BigRat& q, unsigned long k) {
  if (q == 0) return {BigRat(0)};
  if (q < 0 && k % 2 == 0) return {};
  BigInt num = abs(q.get_num()), den = q.get_den();
  BigInt rn, rd;
  if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), k)) return {};
  if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), k)) return {};
  BigRat root(rn, rd);
  root.canonicalize();
  if (q < 0) return {BigRat(-root)};
  if (k % 2 == 0) return {root, BigRat(-root)};
  return {root};
}

} // namespace

QuotientData quotient_projection(const LinearizedAction& action) {
  const std::size_t k = action.weights.rows();
  const std::size_t n = action.n;
  NormalForm s = snf(action.weights);
  for (std::size_t i = 0; i < k; ++i)
    if (s.D(i, i) != 1)
      throw DomainError(ErrorKind::TorsionQuotient,
                        "row lattice of the weights is not saturated");
  // Z^n -> Z^n V; the last n - k coordinates kill rowlattice(W).
  const std::size_t d = n - k;
  IntegerMatrix images(d, n);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < n; ++i) images(j, i) = (*s.V)(i, k + j);
  // Fix the basis of t by putting the images in Hermite form.
  QuotientData q;
  q.d = d;
  q.a = hnf(images).D.transpose();
  return q;
}

Polyhedron delta(const LinearizedAction& action) {
  QuotientData q = quotient_projection(action);
  Polyhedron p;
  p.dim = q.d;
  for (std::size_t i = 0; i < action.n; ++i)
    p.inequalities.push_back({q.a.row(i), action.linearization[i]});
  return p;
}

LinearizedAction group_from_delta(const Polyhedron& p) {
  const std::size_t n = p.size();
  std::vector<IntVector> rows;
  IntVector alpha;
  for (const auto& q : p.inequalities) {
    rows.push_back(q.a);
    alpha.push_back(q.b);
  }
  IntegerMatrix a = IntegerMatrix::from_rows(rows, p.dim);
  if (rank(a) != p.dim)
    throw DomainError(ErrorKind::NonSpanning, "inequality normals do not span");
  auto factors = invariant_factors(a);
  if (!std::all_of(factors.begin(), factors.end(), [](const BigInt& f) { return f == 1; }))
    throw DomainError(ErrorKind::NonSpanning,
                      "inequality normals span a proper sublattice");
  return LinearizedAction(n, integer_kernel_basis(a.transpose()), std::move(alpha));
}

IntVector invariant_monomial(const QuotientData& q, const LinearizedAction& action,
                             std::span<const BigInt> p, const BigInt& r) {
  if (p.size() != q.d) throw std::invalid_argument("invariant_monomial: point has wrong length");
  if (r < 0) throw DomainError(ErrorKind::NotInSemigroup, "negative degree");
  IntVector out(action.n + 1);
  for (std::size_t i = 0; i < action.n; ++i) {
    IntVector ai = q.a.row(i);
    out[i] = dot(ai, p) - r * action.linearization[i];
    if (out[i] < 0)
      throw DomainError(ErrorKind::NotInSemigroup, "point lies outside r * Delta");
  }
  out[action.n] = r;
  return out;
}

IntVector invariant_monomial(const LinearizedAction& action,
                             std::span<const BigInt> p, const BigInt& r) {
  return invariant_monomial(quotient_projection(action), action, p, r);
}

std::vector<IntVector> invariant_monomials(const LinearizedAction& action,
                                           std::size_t r, std::size_t bound) {
  QuotientData q = quotient_projection(action);
  const BigInt rr(static_cast<unsigned long>(r));
  const BigInt bb(static_cast<unsigned long>(bound));
  // 0 <= p . a_i - r alpha_i <= bound
  Polyhedron slice;
  slice.dim = q.d;
  for (std::size_t i = 0; i < action.n; ++i) {
    IntVector ai = q.a.row(i);
    IntVector neg = ai;
    for (auto& x : neg) x = -x;
    BigInt lo = rr * action.linearization[i];
    slice.inequalities.push_back({std::move(ai), lo});
    slice.inequalities.push_back({std::move(neg), BigInt(-(lo + bb))});
  }
  std::vector<IntVector> out;
  for (const auto& p : lattice_points(slice))
    out.push_back(invariant_monomial(q, action, p, rr));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_semistable(const LinearizedAction& action, const Support& support) {
  for (std::size_t i : support.indices)
    if (i >= action.n) throw std::invalid_argument("support index out of range");
  return face(delta(action), support.indices).has_value();
}

std::vector<Support> minimal_unstable_supports(const LinearizedAction& action) {
  const std::size_t n = action.n;
  if (n > 24) throw std::invalid_argument("minimal_unstable_supports: n too large");
  FaceOracle oracle(delta(action));
  const std::size_t count = std::size_t{1} << n;
  auto to_set = [n](std::size_t mask) {
    std::set<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) s.insert(i);
    return s;
  };
  std::vector<bool> unstable(count);
  for (std::size_t mask = 0; mask < count; ++mask)
    unstable[mask] = oracle.face_empty(to_set(mask));

  std::vector<Support> out;
  for (std::size_t mask = 0; mask < count; ++mask) {
    if (!unstable[mask]) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < n && minimal; ++i)
      if ((mask & (std::size_t{1} << i)) && unstable[mask ^ (std::size_t{1} << i)])
        minimal = false;
    if (minimal) out.push_back(Support{to_set(mask)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

BettiNumbers betti(const Polyhedron& p) {
  FVector f = f_vector(p);
  if (!f.is_simple) throw DomainError(ErrorKind::NotSimple, "betti requires a simple polyhedron");
  const std::size_t d = f.counts.size() - 1;
  // sum_i f_i (q - 1)^i expanded in powers of q.
  BettiNumbers out;
  out.values.assign(d + 1, BigInt(0));
  for (std::size_t i = 0; i <= d; ++i) {
    BigInt binom = 1;
    for (std::size_t k = 0; k <= i; ++k) {
      // binom = C(i, k)
      BigInt term = binom * static_cast<unsigned long>(f.counts[i]);
      if ((i - k) % 2 == 1) term = -term;
      out.values[k] += term;
      binom = binom * static_cast<unsigned long>(i - k) / static_cast<unsigned long>(k + 1);
    }
  }
  out.bounded = vrep(p).bounded();
  return out;
}

std::map<std::size_t, std::size_t> orbit_census(const Polyhedron& p) {
  FVector f = f_vector(p);
  std::map<std::size_t, std::size_t> out;
  for (std::size_t i = 0; i < f.counts.size(); ++i) out[i] = f.counts[i];
  return out;
}

std::vector<InvariantValue> evaluate_invariants(const LinearizedAction& action,
                                                std::span<const BigRat> x,
                                                std::size_t max_degree) {
  if (x.size() != action.n)
    throw std::invalid_argument("evaluate_invariants: point has wrong length");
  QuotientData q = quotient_projection(action);
  Polyhedron p = delta(action);
  std::vector<InvariantValue> out;
  for (const auto& g : graded_generators(p)) {
    if (g.degree > max_degree) continue;
    IntVector e = invariant_monomial(q, action, g.point, g.degree);
    BigRat value = 1;
    for (std::size_t i = 0; i < action.n; ++i) value *= power(x[i], e[i]);
    out.push_back(InvariantValue{value, g.degree.get_ui()});
  }
  return out;
}

ProjComparison proj_compare(std::span<const InvariantValue> v,
                            std::span<const InvariantValue> w) {
  if (v.size() != w.size())
    throw std::invalid_argument("proj_equal: value lists differ in length");
  for (std::size_t j = 0; j < v.size(); ++j)
    if (v[j].degree != w[j].degree)
      throw std::invalid_argument("proj_equal: degree lists differ");

  auto all_zero = [](std::span<const InvariantValue> xs) {
    return std::all_of(xs.begin(), xs.end(), [](const InvariantValue& x) {
      return x.degree == 0 || x.value == 0;
    });
  };
  if (all_zero(v) || all_zero(w))
    throw DomainError(ErrorKind::AllZero, "point is unstable; it has no image in Proj");

  ProjComparison out;
  std::optional<std::size_t> anchor;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if ((v[j].value == 0) != (w[j].value == 0)) return out;
    if (v[j].degree == 0 && v[j].value != w[j].value) return out;
    if (v[j].degree > 0 && v[j].value != 0 &&
        (!anchor || v[j].degree < v[*anchor].degree))
      anchor = j;
  }

  const BigRat q0 = w[*anchor].value / v[*anchor].value;
  for (const BigRat& s : rational_roots(q0, v[*anchor].degree)) {
    bool ok = true;
    for (std::size_t j = 0; j < v.size() && ok; ++j)
      ok = w[j].value == power(s, BigInt(static_cast<unsigned long>(v[j].degree))) * v[j].value;
    if (ok) {
      out.equal = true;
      out.scale = s;
      return out;
    }
  }

  // Necessary condition for a complex scale: q_j^{d_k} = q_k^{d_j}.
  bool consistent = true;
  for (std::size_t j = 0; j < v.size() && consistent; ++j) {
    if (v[j].degree == 0 || v[j].value == 0) continue;
    BigRat qj = w[j].value / v[j].value;
    for (std::size_t k = j + 1; k < v.size() && consistent; ++k) {
      if (v[k].degree == 0 || v[k].value == 0) continue;
      BigRat qk = w[k].value / v[k].value;
      consistent = power(qj, BigInt(static_cast<unsigned long>(v[k].degree))) ==
                   power(qk, BigInt(static_cast<unsigned long>(v[j].degree)));
    }
  }
  if (consistent)
    out.diagnostic = "no rational scale exists; the images may coincide over an "
                     "algebraic closure";
  return out;
}

bool proj_equal(std::span<const InvariantValue> v, std::span<const InvariantValue> w) {
  return proj_compare(v, w).equal;
}

BigRat character_value(const LinearizedAction& action, std::span<const BigRat> lambda) {
  if (lambda.size() != action.n) throw std::invalid_argument("character_value: wrong length");
  BigRat out = 1;
  for (std::size_t i = 0; i < action.n; ++i) out *= power(lambda[i], action.linearization[i]);
  return out;
}

RatVector group_element(const LinearizedAction& action, std::span<const BigRat> s) {
  if (s.size() != action.weights.rows())
    throw std::invalid_argument("group_element: one parameter per weight row");
  RatVector lambda(action.n, BigRat(1));
  for (std::size_t k = 0; k < s.size(); ++k)
    for (std::size_t i = 0; i < action.n; ++i)
      lambda[i] *= power(s[k], action.weights(k, i));
  return lambda;
}

} // namespace toricalc
