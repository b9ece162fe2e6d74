#include "toricalc/cones_semigroups.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "toricalc/errors.hpp"

namespace toricalc {

bool Cone::contains(std::span<const BigInt> x) const {
  return std::all_of(inequalities.begin(), inequalities.end(),
                     [&](const IntVector& c) { return dot(c, x) >= 0; });
}

Cone homogenize(const Polyhedron& p) {
  Cone c;
  c.dim = p.dim + 1;
  for (const auto& q : p.inequalities) {
    IntVector row = q.a;
    row.push_back(-q.b);
    c.inequalities.push_back(std::move(row));
  }
  IntVector height(c.dim, BigInt(0));
  height[p.dim] = 1;
  c.inequalities.push_back(std::move(height));
  return c;
}

namespace {

// Column indices giving an invertible k x k submatrix of the k x m matrix
// `basis` (full row rank).
std::vector<std::size_t> independent_columns(const IntegerMatrix& basis) {
  std::vector<std::size_t> cols;
  std::vector<IntVector> chosen;
  for (std::size_t j = 0; j < basis.cols() && cols.size() < basis.rows(); ++j) {
    chosen.push_back(basis.col(j));
    if (rank(chosen, basis.rows()) == chosen.size()) cols.push_back(j);
    else chosen.pop_back();
  }
  return cols;
}

IntegerMatrix select_columns(const IntegerMatrix& m,
                             const std::vector<std::size_t>& cols) {
  IntegerMatrix out(m.rows(), cols.size());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(i, cols[j]);
  return out;
}

RatVector to_rat(std::span<const BigInt> v) {
  return RatVector(v.begin(), v.end());
}

IntVector to_integral(const RatVector& v) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].get_den() != 1) throw std::logic_error("expected an integral vector");
    out[i] = v[i].get_num();
  }
  return out;
}

// Coordinates of lattice vectors in a lattice basis (rows of `basis`).
class LatticeCoordinates {
public:
  explicit LatticeCoordinates(const IntegerMatrix& basis)
      : cols_(independent_columns(basis)),
        system_(select_columns(basis, cols_).transpose()) {}

  RatVector operator()(std::span<const BigInt> x) const {
    RatVector rhs;
    for (std::size_t j : cols_) rhs.emplace_back(x[j]);
    auto sol = solve(system_, rhs);
    if (!sol) throw std::logic_error("lattice basis is not independent");
    return *sol;
  }

private:
  std::vector<std::size_t> cols_;
  IntegerMatrix system_;
};

IntegerMatrix unimodular_inverse(const IntegerMatrix& v) {
  const std::size_t n = v.rows();
  IntegerMatrix inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    RatVector e(n, BigRat(0));
    e[j] = 1;
    auto col = solve(v, e);
    if (!col) throw std::logic_error("matrix is not invertible");
    for (std::size_t i = 0; i < n; ++i) {
      if ((*col)[i].get_den() != 1) throw std::logic_error("matrix is not unimodular");
      inv(i, j) = (*col)[i].get_num();
    }
  }
  return inv;
}

// Nonzero lattice points sum(l_j * r_j), 0 <= l_j < 1, of the simplicial cone
// spanned by `rays`, expressed through the lattice `coords`.
void parallelepiped_points(const std::vector<IntVector>& rays,
                           const IntegerMatrix& basis,
                           const LatticeCoordinates& coords,
                           std::vector<IntVector>& out) {
  const std::size_t k = rays.size();
  const std::size_t m = basis.cols();
  // C: ray coordinates in the lattice basis, one row per ray.
  IntegerMatrix c(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    IntVector row = to_integral(coords(rays[i]));
    for (std::size_t j = 0; j < k; ++j) c(i, j) = row[j];
  }
  // Z^k / rowlattice(C) is represented by z * V^{-1}, 0 <= z_j < d_j.
  NormalForm s = snf(c);
  IntegerMatrix v_inv = unimodular_inverse(*s.V);
  IntegerMatrix c_t = c.transpose();

  std::vector<BigInt> bound(k);
  for (std::size_t j = 0; j < k; ++j) bound[j] = s.D(j, j);
  IntVector z(k, BigInt(0));
  for (;;) {
    IntVector y(k, BigInt(0));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) y[j] += z[i] * v_inv(i, j);
    // lambda = y * C^{-1}, reduced into [0, 1).
    auto lambda = solve(c_t, to_rat(y));
    RatVector frac(k);
    for (std::size_t j = 0; j < k; ++j) {
      BigInt fl;
      mpz_fdiv_q(fl.get_mpz_t(), (*lambda)[j].get_num_mpz_t(),
                 (*lambda)[j].get_den_mpz_t());
      frac[j] = (*lambda)[j] - fl;
    }
    RatVector x(m, BigRat(0));
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t t = 0; t < m; ++t) x[t] += frac[j] * rays[j][t];
    IntVector xi = to_integral(x);
    if (!is_zero(xi)) out.push_back(std::move(xi));

    std::size_t j = 0;
    while (j < k) {
      ++z[j];
      if (z[j] < bound[j]) break;
      z[j] = 0;
      ++j;
    }
    if (j == k) break;
  }
}

void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

} // namespace

std::vector<IntVector> hilbert_basis(const Cone& cone) {
  ConeGenerators g = cone_generators(cone.dim, cone.inequalities);
  if (!g.lineality.empty())
    throw DomainError(ErrorKind::NotPointed, "cone contains a line");
  const auto& rays = g.rays;
  const std::size_t k = rank(rays, cone.dim);
  if (k == 0) return {};

  // Every simplicial cone on k independent extreme rays. Together they cover
  // the cone, so their parallelepiped points and the rays generate it.
  IntegerMatrix lattice =
      IntegerMatrix::from_rows(saturated_span_basis(rays, cone.dim), cone.dim);
  LatticeCoordinates coords(lattice);
  std::vector<IntVector> candidates = rays;
  for_each_subset(rays.size(), k, [&](const std::vector<std::size_t>& idx) {
    std::vector<IntVector> sub;
    for (std::size_t i : idx) sub.push_back(rays[i]);
    if (rank(sub, cone.dim) != k) return;
    parallelepiped_points(sub, lattice, coords, candidates);
  });
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());

  // x is reducible iff x - g lies in the cone for some other candidate g.
  std::vector<IntVector> basis;
  IntVector diff(cone.dim);
  for (const auto& x : candidates) {
    bool reducible = false;
    for (const auto& other : candidates) {
      if (&other == &x) continue;
      for (std::size_t t = 0; t < cone.dim; ++t) diff[t] = x[t] - other[t];
      if (cone.contains(diff)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(x);
  }
  return basis;
}

std::vector<GradedSemigroupElement> graded_generators(const Polyhedron& p) {
  std::vector<GradedSemigroupElement> out;
  for (auto& h : hilbert_basis(homogenize(p))) {
    GradedSemigroupElement e;
    e.degree = h.back();
    h.pop_back();
    e.point = std::move(h);
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t hilbert_function(const Polyhedron& p, std::size_t r) {
  return lattice_points(scaled(p, BigInt(static_cast<unsigned long>(r)))).size();
}

RingPresentation relation_space(const Polyhedron& p, std::size_t max_degree) {
  if (!vrep(p).bounded())
    throw DomainError(ErrorKind::Unbounded, "relation_space needs a bounded polyhedron");
  RingPresentation out;
  out.generators = graded_generators(p);
  const auto& gens = out.generators;
  std::vector<std::size_t> degree(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].degree == 0)
      throw DomainError(ErrorKind::Unbounded, "degree-0 generators present");
    degree[i] = gens[i].degree.get_ui();
  }

  for (std::size_t r = 0; r <= max_degree; ++r) {
    // Monomials of degree r, enumerated in lexicographic order of exponents.
    std::map<IntVector, std::vector<std::vector<std::size_t>>> by_image;
    std::size_t monomials = 0;
    std::vector<std::size_t> e(gens.size(), 0);
    std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t i,
                                                             std::size_t left) {
      if (i == gens.size()) {
        if (left != 0) return;
        IntVector image(p.dim, BigInt(0));
        for (std::size_t g = 0; g < gens.size(); ++g)
          for (std::size_t t = 0; t < p.dim; ++t) image[t] += e[g] * gens[g].point[t];
        by_image[image].push_back(e);
        ++monomials;
        return;
      }
      for (std::size_t x = 0; x * degree[i] <= left; ++x) {
        e[i] = x;
        walk(i + 1, left - x * degree[i]);
      }
      e[i] = 0;
    };
    walk(0, r);

    DegreeRelations rel;
    rel.monomial_count = monomials;
    rel.hilbert_value = hilbert_function(p, r);
    if (rel.hilbert_value > monomials)
      throw std::logic_error("relation_space: generators do not span degree " +
                             std::to_string(r));
    rel.kernel_dimension = monomials - rel.hilbert_value;
    for (const auto& [image, group] : by_image)
      for (std::size_t j = 1; j < group.size(); ++j)
        rel.binomials.push_back(Binomial{group.front(), group[j]});
    std::sort(rel.binomials.begin(), rel.binomials.end());
    if (rel.binomials.size() != rel.kernel_dimension)
      throw std::logic_error("relation_space: image count disagrees with hilbert_function");
    out.relations_by_degree.emplace(r, std::move(rel));
  }
  return out;
}

} // namespace toricalc
