#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "nashfan/dd.hpp"
#include "nashfan/int_vector.hpp"
#include "nashfan/linalg.hpp"

namespace nashfan {

namespace detail {

// Orthogonal projection of h onto the span of the cone (the complement of the
// equality space), returned as a primitive integer vector. Facet normals are
// only determined modulo the equality space; this fixes the representative.
inline IntVector project_off_equalities(const IntVector& h,
                                        const std::vector<IntVector>& eqs) {
  if (eqs.empty()) return h.primitive();
  std::size_t k = eqs.size();
  // solve (E E^T) c = E h, then h' = h - E^T c
  std::vector<std::vector<Rat>> a(k, std::vector<Rat>(k + 1));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = Rat(eqs[i].dot(eqs[j]));
    a[i][k] = Rat(eqs[i].dot(h));
  }
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (p < k && a[p][c] == 0) ++p;
    if (p == k) throw std::logic_error("equality rows are dependent");
    std::swap(a[c], a[p]);
    for (std::size_t i = 0; i < k; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rat f = a[i][c] / a[c][c];
      for (std::size_t j = c; j <= k; ++j) a[i][j] -= f * a[c][j];
    }
  }
  std::vector<Rat> coef(k);
  for (std::size_t i = 0; i < k; ++i) coef[i] = a[i][k] / a[i][i];

  Int den = 1;
  for (const Rat& c : coef) den = lcm(den, c.get_den());
  IntVector out = h * den;
  for (std::size_t i = 0; i < k; ++i) {
    Rat scaled = coef[i] * den;
    out += eqs[i] * Int(-scaled.get_num());
  }
  return out.primitive();
}

}  // namespace detail

/// Pointed rational polyhedral cone in canonical form: primitive extreme rays
/// sorted lexicographically, irredundant primitive facet normals, and a
/// Hermite-normal-form basis of the orthogonal complement of the span. The V-
/// and H-representations always describe the same set.
class Cone {
 public:
  static Cone from_rays(std::size_t ambient_dim, std::vector<IntVector> rays) {
    std::set<IntVector> prim;
    for (const auto& r : rays) {
      if (r.dim() != ambient_dim)
        throw std::invalid_argument("ray dimension does not match ambient dimension");
      if (r.is_zero()) continue;
      prim.insert(r.primitive());
    }
    std::vector<IntVector> gens(prim.begin(), prim.end());

    Cone c;
    c.ambient_dim_ = ambient_dim;
    if (gens.empty()) {
      for (std::size_t i = 0; i < ambient_dim; ++i) {
        IntVector e(ambient_dim);
        e[i] = 1;
        c.equalities_.push_back(e);
      }
      return c;
    }

    dd::Description dual = dd::compute(ambient_dim, {}, gens);
    std::vector<IntVector> span_rows = dual.rays;
    span_rows.insert(span_rows.end(), dual.lineality.begin(), dual.lineality.end());
    if (rank(IntMatrix(span_rows)) < ambient_dim)
      throw std::invalid_argument("cone is not pointed");

    dd::Description primal = dd::compute(ambient_dim, dual.lineality, dual.rays);
    c.rays_ = primal.rays;

    c.equalities_ = kernel_basis(IntMatrix(c.rays_));
    std::set<IntVector> normals;
    for (const auto& h : dual.rays)
      normals.insert(detail::project_off_equalities(h, c.equalities_));
    c.inequalities_.assign(normals.begin(), normals.end());
    return c;
  }

  static Cone from_constraints(std::size_t ambient_dim,
                               const std::vector<IntVector>& equalities,
                               const std::vector<IntVector>& inequalities) {
    dd::Description desc = dd::compute(ambient_dim, equalities, inequalities);
    if (!desc.lineality.empty())
      throw std::invalid_argument("cone is not pointed");
    return from_rays(ambient_dim, desc.rays);
  }

  std::size_t ambient_dim() const { return ambient_dim_; }
  const std::vector<IntVector>& rays() const { return rays_; }
  const std::vector<IntVector>& inequalities() const { return inequalities_; }
  const std::vector<IntVector>& equalities() const { return equalities_; }

  std::size_t dim() const { return ambient_dim_ - equalities_.size(); }
  bool is_full_dimensional() const { return equalities_.empty(); }

  bool contains(const IntVector& v) const {
    for (const auto& e : equalities_)
      if (e.dot(v) != 0) return false;
    for (const auto& h : inequalities_)
      if (h.dot(v) < 0) return false;
    return true;
  }

  bool contains_in_relative_interior(const IntVector& v) const {
    for (const auto& e : equalities_)
      if (e.dot(v) != 0) return false;
    for (const auto& h : inequalities_)
      if (h.dot(v) <= 0) return false;
    return true;
  }

  bool operator==(const Cone& o) const {
    return ambient_dim_ == o.ambient_dim_ && rays_ == o.rays_ &&
           equalities_ == o.equalities_ && inequalities_ == o.inequalities_;
  }

  bool operator<(const Cone& o) const {
    if (rays_ != o.rays_) return rays_ < o.rays_;
    if (equalities_ != o.equalities_) return equalities_ < o.equalities_;
    return inequalities_ < o.inequalities_;
  }

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<IntVector> rays_;
  std::vector<IntVector> inequalities_;
  std::vector<IntVector> equalities_;
};

/// {u : u.v >= 0 for all v in c}. Only defined for full-dimensional cones;
/// anything lower-dimensional has a non-pointed dual.
inline Cone dual_cone(const Cone& c) {
  if (c.rays().empty() || !c.is_full_dimensional())
    throw std::invalid_argument("degenerate cone");
  return Cone::from_constraints(c.ambient_dim(), {}, c.rays());
}

struct Facet {
  Cone cone;
  IntVector inward_normal;
};

/// One entry per facet of a full-dimensional cone.
inline std::vector<Facet> facets(const Cone& c) {
  if (!c.is_full_dimensional())
    throw std::invalid_argument("cone is not full-dimensional");
  std::vector<Facet> out;
  for (const auto& h : c.inequalities()) {
    std::vector<IntVector> incident;
    for (const auto& r : c.rays())
      if (h.dot(r) == 0) incident.push_back(r);
    out.push_back(Facet{Cone::from_rays(c.ambient_dim(), incident), h});
  }
  return out;
}

/// Primitive sum of the canonical rays; lies strictly inside every facet.
inline IntVector relative_interior_point(const Cone& c) {
  if (c.rays().empty()) throw std::invalid_argument("degenerate cone");
  IntVector s(c.ambient_dim());
  for (const auto& r : c.rays()) s += r;
  return s.primitive();
}

/// Closure of {x in ambient : e.x = 0, h.x >= 0}; may be lower-dimensional.
inline Cone cone_from_constraints(const std::vector<IntVector>& eqs,
                                  const std::vector<IntVector>& ineqs,
                                  const Cone& ambient) {
  std::vector<IntVector> all_eqs = ambient.equalities();
  all_eqs.insert(all_eqs.end(), eqs.begin(), eqs.end());
  std::vector<IntVector> all_ineqs = ambient.inequalities();
  all_ineqs.insert(all_ineqs.end(), ineqs.begin(), ineqs.end());
  return Cone::from_constraints(ambient.ambient_dim(), all_eqs, all_ineqs);
}

/// Regularity test: the primitive ray generators form a lattice basis.
inline bool is_smooth(const Cone& c) {
  if (c.rays().size() != c.ambient_dim()) return false;
  Int d = determinant(IntMatrix(c.rays()));
  return d == 1 || d == -1;
}

}  // namespace nashfan
