#include "toricalc/polyhedra.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "toricalc/errors.hpp"

namespace toricalc {

Polyhedron::Polyhedron(std::size_t d, std::vector<Inequality> ineqs)
    : dim(d), inequalities(std::move(ineqs)) {
  for (const auto& ineq : inequalities)
    if (ineq.a.size() != dim)
      throw std::invalid_argument("Polyhedron: inequality length differs from dim");
}

bool Polyhedron::contains(std::span<const BigInt> p) const {
  return std::all_of(inequalities.begin(), inequalities.end(),
                     [&](const Inequality& q) { return dot(q.a, p) >= q.b; });
}

bool Polyhedron::contains(std::span<const BigRat> p) const {
  return std::all_of(inequalities.begin(), inequalities.end(),
                     [&](const Inequality& q) { return dot(q.a, p) >= q.b; });
}

namespace {

bool adjacent(const IntVector& p, const IntVector& n,
              std::span<const IntVector> processed, std::size_t dim,
              std::size_t lineality_dim) {
  std::vector<IntVector> common;
  for (const auto& c : processed)
    if (dot(c, p) == 0 && dot(c, n) == 0) common.push_back(c);
  if (common.size() + lineality_dim + 2 < dim) return false;
  return dim - rank(common, dim) == lineality_dim + 2;
}

} // namespace

ConeGenerators cone_generators(std::size_t dim,
                               std::span<const IntVector> constraints) {
  std::vector<IntVector> lineality;
  for (std::size_t i = 0; i < dim; ++i) {
    IntVector e(dim, BigInt(0));
    e[i] = 1;
    lineality.push_back(std::move(e));
  }
  std::vector<IntVector> rays;
  std::vector<IntVector> processed;

  for (const auto& c : constraints) {
    if (c.size() != dim)
      throw std::invalid_argument("cone_generators: constraint length mismatch");
    if (is_zero(c)) continue;

    auto hit = std::find_if(lineality.begin(), lineality.end(),
                            [&](const IntVector& l) { return dot(c, l) != 0; });
    if (hit != lineality.end()) {
      // Split one lineality direction off into a ray; project the rest onto
      // c . x = 0 along it.
      IntVector l0 = *hit;
      lineality.erase(hit);
      BigInt s0 = dot(c, l0);
      if (s0 < 0) {
        for (auto& x : l0) x = -x;
        s0 = -s0;
      }
      auto project = [&](IntVector v) {
        BigInt s = dot(c, v);
        for (std::size_t k = 0; k < dim; ++k) v[k] = s0 * v[k] - s * l0[k];
        return primitive(std::move(v));
      };
      for (auto& l : lineality) l = project(std::move(l));
      for (auto& r : rays) r = project(std::move(r));
      rays.push_back(primitive(std::move(l0)));
      processed.push_back(c);
      continue;
    }

    std::vector<IntVector> pos, zero, neg;
    for (auto& r : rays) {
      BigInt s = dot(c, r);
      if (s > 0) pos.push_back(std::move(r));
      else if (s == 0) zero.push_back(std::move(r));
      else neg.push_back(std::move(r));
    }
    std::vector<IntVector> next;
    next.reserve(pos.size() + zero.size());
    for (const auto& p : pos)
      for (const auto& n : neg) {
        if (!adjacent(p, n, processed, dim, lineality.size())) continue;
        BigInt sp = dot(c, p);
        BigInt sn = -dot(c, n);
        IntVector combo(dim);
        for (std::size_t k = 0; k < dim; ++k) combo[k] = sp * n[k] + sn * p[k];
        next.push_back(primitive(std::move(combo)));
      }
    for (auto& p : pos) next.push_back(std::move(p));
    for (auto& z : zero) next.push_back(std::move(z));
    rays = std::move(next);
    processed.push_back(c);
  }

  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  return ConeGenerators{std::move(rays),
                        saturated_span_basis(lineality, dim)};
}

std::vector<IntVector> saturated_span_basis(std::span<const IntVector> vectors,
                                            std::size_t dim) {
  if (vectors.empty()) return {};
  // The double kernel is the saturation of the span.
  IntegerMatrix m = IntegerMatrix::from_rows(vectors, dim);
  IntegerMatrix perp = integer_kernel_basis(m);
  return integer_kernel_basis(perp).row_list();
}

VRepresentation vrep(const Polyhedron& p) {
  const std::size_t d = p.dim;
  std::vector<IntVector> constraints;
  constraints.reserve(p.size() + 1);
  for (const auto& q : p.inequalities) {
    IntVector c = q.a;
    c.push_back(-q.b);
    constraints.push_back(std::move(c));
  }
  IntVector height(d + 1, BigInt(0));
  height[d] = 1;
  constraints.push_back(height);

  ConeGenerators g = cone_generators(d + 1, constraints);
  VRepresentation out;
  std::vector<RatVector> points;
  for (const auto& r : g.rays) {
    if (r[d] > 0) {
      RatVector v(d);
      for (std::size_t k = 0; k < d; ++k) {
        v[k] = BigRat(r[k], r[d]);
        v[k].canonicalize();
      }
      points.push_back(std::move(v));
    } else {
      out.rays.emplace_back(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(d));
    }
  }
  // Lineality of the homogenized cone lies at height 0.
  for (const auto& l : g.lineality)
    out.lineality.emplace_back(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(d));
  out.lineality = saturated_span_basis(out.lineality, d);

  out.empty = points.empty();
  if (out.empty) {
    out.rays.clear();
    out.lineality.clear();
    return out;
  }
  std::sort(points.begin(), points.end());
  std::sort(out.rays.begin(), out.rays.end());
  if (out.lineality.empty()) out.vertices = std::move(points);
  else out.base_points = std::move(points);
  return out;
}

namespace {

// Row form of an affine constraint: coeffs . x >= rhs (or = rhs).
struct RatRow {
  RatVector coeffs;
  BigRat rhs;
};

RatRow to_rat_row(const Inequality& q) {
  RatRow r;
  r.coeffs.reserve(q.a.size());
  for (const auto& x : q.a) r.coeffs.emplace_back(x);
  r.rhs = q.b;
  return r;
}

// Scale so that the first nonzero coefficient has absolute value 1. Positive
// scaling keeps the direction of an inequality.
void normalize(RatRow& r) {
  for (const auto& x : r.coeffs) {
    if (x == 0) continue;
    BigRat s = abs(x);
    for (auto& y : r.coeffs) y /= s;
    r.rhs /= s;
    return;
  }
}

} // namespace

bool fourier_motzkin_feasible(std::size_t dim,
                              std::span<const Inequality> equalities,
                              std::span<const Inequality> inequalities) {
  std::vector<RatRow> eqs, ineqs;
  for (const auto& q : equalities) eqs.push_back(to_rat_row(q));
  for (const auto& q : inequalities) ineqs.push_back(to_rat_row(q));

  // Gaussian elimination of the equalities.
  for (std::size_t e = 0; e < eqs.size(); ++e) {
    const RatRow& piv = eqs[e];
    std::size_t var = dim;
    for (std::size_t k = 0; k < dim; ++k)
      if (piv.coeffs[k] != 0) {
        var = k;
        break;
      }
    if (var == dim) {
      if (piv.rhs != 0) return false;
      continue;
    }
    auto eliminate = [&](RatRow& row) {
      if (row.coeffs[var] == 0) return;
      BigRat f = row.coeffs[var] / piv.coeffs[var];
      for (std::size_t k = 0; k < dim; ++k) row.coeffs[k] -= f * piv.coeffs[k];
      row.rhs -= f * piv.rhs;
    };
    for (std::size_t o = e + 1; o < eqs.size(); ++o) eliminate(eqs[o]);
    for (auto& row : ineqs) eliminate(row);
  }

  // Fourier-Motzkin on what remains. Rows are normalized and deduplicated
  // keeping the tightest right-hand side.
  auto compress = [](std::vector<RatRow>& rows) {
    std::map<RatVector, BigRat> best;
    for (auto& r : rows) {
      normalize(r);
      auto [it, inserted] = best.emplace(r.coeffs, r.rhs);
      if (!inserted && r.rhs > it->second) it->second = r.rhs;
    }
    rows.clear();
    for (auto& [c, b] : best) rows.push_back(RatRow{c, b});
  };

  compress(ineqs);
  for (std::size_t var = 0; var < dim; ++var) {
    std::vector<RatRow> pos, neg, next;
    for (auto& r : ineqs) {
      if (r.coeffs[var] > 0) pos.push_back(std::move(r));
      else if (r.coeffs[var] < 0) neg.push_back(std::move(r));
      else next.push_back(std::move(r));
    }
    for (const auto& p : pos)
      for (const auto& n : neg) {
        BigRat fp = -n.coeffs[var];
        BigRat fn = p.coeffs[var];
        RatRow combo;
        combo.coeffs.resize(dim);
        for (std::size_t k = 0; k < dim; ++k)
          combo.coeffs[k] = fp * p.coeffs[k] + fn * n.coeffs[k];
        combo.coeffs[var] = 0;
        combo.rhs = fp * p.rhs + fn * n.rhs;
        next.push_back(std::move(combo));
      }
    ineqs = std::move(next);
    compress(ineqs);
    for (const auto& r : ineqs)
      if (std::all_of(r.coeffs.begin(), r.coeffs.end(),
                      [](const BigRat& x) { return x == 0; }) &&
          r.rhs > 0)
        return false;
  }
  return std::all_of(ineqs.begin(), ineqs.end(),
                     [](const RatRow& r) { return r.rhs <= 0; });
}

FaceOracle::FaceOracle(const Polyhedron& p) : poly_(p), vrep_(vrep(p)) {
  for (const auto& v : vrep_.points()) {
    std::vector<bool> t(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
      t[i] = dot(p.inequalities[i].a, v) == p.inequalities[i].b;
    tight_points_.push_back(std::move(t));
  }
  for (const auto& r : vrep_.rays) {
    std::vector<bool> t(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
      t[i] = dot(p.inequalities[i].a, r) == 0;
    tight_rays_.push_back(std::move(t));
  }
}

std::set<std::size_t>
FaceOracle::closure(const std::vector<std::size_t>& points,
                    const std::vector<std::size_t>& rays) const {
  std::set<std::size_t> active;
  for (std::size_t i = 0; i < poly_.size(); ++i) {
    bool all = std::all_of(points.begin(), points.end(),
                           [&](std::size_t k) { return tight_points_[k][i]; }) &&
               std::all_of(rays.begin(), rays.end(),
                           [&](std::size_t k) { return tight_rays_[k][i]; });
    if (all) active.insert(i);
  }
  return active;
}

bool FaceOracle::face_empty(const std::set<std::size_t>& tight) const {
  for (const auto& t : tight_points_)
    if (std::all_of(tight.begin(), tight.end(), [&](std::size_t i) { return t[i]; }))
      return false;
  return true;
}

std::optional<Face> FaceOracle::face(const std::set<std::size_t>& tight) const {
  for (std::size_t i : tight)
    if (i >= poly_.size()) throw std::invalid_argument("face: index out of range");
  auto on_face = [&](const std::vector<bool>& t) {
    return std::all_of(tight.begin(), tight.end(), [&](std::size_t i) { return t[i]; });
  };
  std::vector<std::size_t> pts, rys;
  for (std::size_t k = 0; k < tight_points_.size(); ++k)
    if (on_face(tight_points_[k])) pts.push_back(k);
  if (pts.empty()) return std::nullopt;
  for (std::size_t k = 0; k < tight_rays_.size(); ++k)
    if (on_face(tight_rays_[k])) rys.push_back(k);

  const auto& points = vrep_.points();
  const std::size_t d = poly_.dim;
  Face f;
  f.active = closure(pts, rys);

  // Affine hull directions: point differences, rays, lineality.
  std::vector<IntVector> directions;
  for (std::size_t k = 1; k < pts.size(); ++k) {
    RatVector diff(d);
    for (std::size_t j = 0; j < d; ++j) diff[j] = points[pts[k]][j] - points[pts[0]][j];
    directions.push_back(primitive(diff));
  }
  for (std::size_t k : rys) directions.push_back(vrep_.rays[k]);
  for (const auto& l : vrep_.lineality) directions.push_back(l);
  f.dim = rank(directions, d);

  // Barycenter of the points plus the sum of the rays is relatively interior.
  f.witness.assign(d, BigRat(0));
  for (std::size_t k : pts)
    for (std::size_t j = 0; j < d; ++j) f.witness[j] += points[k][j];
  for (auto& x : f.witness) x /= BigRat(static_cast<long>(pts.size()));
  for (std::size_t k : rys)
    for (std::size_t j = 0; j < d; ++j) f.witness[j] += vrep_.rays[k][j];
  return f;
}

std::size_t FaceOracle::dimension() const {
  if (vrep_.empty) return 0;
  auto whole = face({});
  return whole ? whole->dim : 0;
}

std::vector<Face> FaceOracle::all_faces() const {
  std::vector<Face> faces;
  auto whole = face({});
  if (!whole) return faces;
  std::set<std::set<std::size_t>> seen{whole->active};
  std::deque<Face> queue{*whole};
  while (!queue.empty()) {
    Face cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t j = 0; j < poly_.size(); ++j) {
      if (cur.active.contains(j)) continue;
      auto tight = cur.active;
      tight.insert(j);
      auto sub = face(tight);
      if (!sub || !seen.insert(sub->active).second) continue;
      queue.push_back(*sub);
    }
    faces.push_back(std::move(cur));
  }
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    return a.dim != b.dim ? a.dim < b.dim : a.active < b.active;
  });
  return faces;
}

std::optional<Face> face(const Polyhedron& p, const std::set<std::size_t>& tight) {
  std::vector<Inequality> eqs, ineqs;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (tight.contains(i)) eqs.push_back(p.inequalities[i]);
    else ineqs.push_back(p.inequalities[i]);
  }
  for (std::size_t i : tight)
    if (i >= p.size()) throw std::invalid_argument("face: index out of range");
  if (!fourier_motzkin_feasible(p.dim, eqs, ineqs)) return std::nullopt;
  return FaceOracle(p).face(tight);
}

FVector f_vector(const Polyhedron& p) {
  FaceOracle oracle(p);
  const auto& g = oracle.generators();
  if (g.empty) throw DomainError(ErrorKind::EmptyPolyhedron, "f_vector of an empty polyhedron");
  if (!g.lineality.empty())
    throw DomainError(ErrorKind::LinealityPresent, "f_vector requires a pointed polyhedron");

  auto faces = oracle.all_faces();
  const std::size_t d = faces.back().dim;
  FVector out;
  out.counts.assign(d + 1, 0);
  for (const auto& f : faces) ++out.counts[f.dim];

  // Simple: every vertex lies on exactly d facets.
  out.is_simple = true;
  if (d > 0) {
    std::vector<const Face*> facets;
    for (const auto& f : faces)
      if (f.dim + 1 == d) facets.push_back(&f);
    for (const auto& f : faces) {
      if (f.dim != 0) continue;
      std::size_t count = 0;
      for (const Face* facet : facets)
        if (std::includes(f.active.begin(), f.active.end(), facet->active.begin(),
                          facet->active.end()))
          ++count;
      if (count != d) out.is_simple = false;
    }
  }
  return out;
}

std::vector<IntVector> lattice_points(const Polyhedron& p) {
  VRepresentation v = vrep(p);
  if (v.empty) return {};
  if (!v.bounded()) throw DomainError(ErrorKind::Unbounded, "lattice_points of an unbounded polyhedron");
  const std::size_t d = p.dim;
  IntVector lo(d), hi(d);
  for (std::size_t j = 0; j < d; ++j) {
    BigRat mn = v.vertices.front()[j], mx = mn;
    for (const auto& x : v.vertices) {
      mn = std::min(mn, x[j]);
      mx = std::max(mx, x[j]);
    }
    mpz_fdiv_q(lo[j].get_mpz_t(), mn.get_num_mpz_t(), mn.get_den_mpz_t());
    mpz_cdiv_q(hi[j].get_mpz_t(), mx.get_num_mpz_t(), mx.get_den_mpz_t());
  }
  std::vector<IntVector> out;
  IntVector cur = lo;
  for (;;) {
    if (p.contains(cur)) out.push_back(cur);
    std::size_t j = d;
    while (j > 0) {
      --j;
      if (cur[j] < hi[j]) {
        ++cur[j];
        for (std::size_t k = j + 1; k < d; ++k) cur[k] = lo[k];
        break;
      }
      if (j == 0) return out;
    }
    if (d == 0) return out;
  }
}

Polyhedron scaled(const Polyhedron& p, const BigInt& r) {
  if (r < 0) throw std::invalid_argument("scaled: negative factor");
  Polyhedron out = p;
  for (auto& q : out.inequalities) q.b *= r;
  return out;
}

Polyhedron dilate(const Polyhedron& p, const BigInt& m) {
  if (m < 1) throw std::invalid_argument("dilate: factor must be positive");
  return scaled(p, m);
}

Polyhedron product(const Polyhedron& p, const Polyhedron& q) {
  Polyhedron out;
  out.dim = p.dim + q.dim;
  for (const auto& ineq : p.inequalities) {
    IntVector a = ineq.a;
    a.resize(out.dim, BigInt(0));
    out.inequalities.push_back({std::move(a), ineq.b});
  }
  for (const auto& ineq : q.inequalities) {
    IntVector a(p.dim, BigInt(0));
    a.insert(a.end(), ineq.a.begin(), ineq.a.end());
    out.inequalities.push_back({std::move(a), ineq.b});
  }
  return out;
}

Polyhedron recession_cone(const Polyhedron& p) {
  if (vrep(p).empty)
    throw DomainError(ErrorKind::EmptyPolyhedron, "recession cone of an empty polyhedron");
  return scaled(p, 0);
}

Polyhedron interval(long lo, long hi) {
  return Polyhedron(1, {{to_int_vector({1}), BigInt(lo)},
                        {to_int_vector({-1}), BigInt(-hi)}});
}

Polyhedron half_line() { return Polyhedron(1, {{to_int_vector({1}), BigInt(0)}}); }

Polyhedron standard_simplex(std::size_t d) {
  Polyhedron out = positive_orthant(d);
  out.inequalities.push_back({IntVector(d, BigInt(-1)), BigInt(-1)});
  return out;
}

Polyhedron unit_cube(std::size_t d) {
  Polyhedron out;
  for (std::size_t k = 0; k < d; ++k) out = product(out, interval(0, 1));
  return out;
}

Polyhedron positive_orthant(std::size_t d) {
  Polyhedron out;
  out.dim = d;
  for (std::size_t k = 0; k < d; ++k) {
    IntVector a(d, BigInt(0));
    a[k] = 1;
    out.inequalities.push_back({std::move(a), BigInt(0)});
  }
  return out;
}

} // namespace toricalc
