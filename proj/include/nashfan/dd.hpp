#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "nashfan/int_vector.hpp"
#include "nashfan/linalg.hpp"

namespace nashfan {
namespace dd {

/// Generator description of {x : e.x = 0, h.x >= 0}: a lineality basis plus
/// extreme rays of the pointed part.
struct Description {
  std::vector<IntVector> rays;
  std::vector<IntVector> lineality;
};

namespace detail {

struct Ray {
  IntVector v;
  std::set<std::size_t> tight;  // indices of processed inequalities with h.v = 0
};

// Combinatorial adjacency: r1, r2 span a 2-face iff no third ray is tight on
// every constraint tight at both.
inline bool adjacent(const std::vector<Ray>& rays, std::size_t i, std::size_t j) {
  std::vector<std::size_t> common;
  std::set_intersection(rays[i].tight.begin(), rays[i].tight.end(),
                        rays[j].tight.begin(), rays[j].tight.end(),
                        std::back_inserter(common));
  for (std::size_t k = 0; k < rays.size(); ++k) {
    if (k == i || k == j) continue;
    if (std::includes(rays[k].tight.begin(), rays[k].tight.end(),
                      common.begin(), common.end()))
      return false;
  }
  return true;
}

}  // namespace detail

/// Incremental double description. Equalities are processed first so that the
/// lineality space shrinks before any ray splitting happens; the combinatorial
/// adjacency test is then valid throughout (the tracked lineality is always
/// the exact lineality space of the intermediate cone).
inline Description compute(std::size_t ambient_dim,
                           const std::vector<IntVector>& equalities,
                           const std::vector<IntVector>& inequalities) {
  std::vector<IntVector> lineality;
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    IntVector e(ambient_dim);
    e[i] = 1;
    lineality.push_back(e);
  }
  std::vector<detail::Ray> rays;
  std::size_t ineq_index = 0;

  auto process = [&](const IntVector& c, bool is_equality) {
    if (c.is_zero()) return;
    std::size_t l0 = lineality.size();
    for (std::size_t i = 0; i < lineality.size(); ++i)
      if (lineality[i].dot(c) != 0) {
        l0 = i;
        break;
      }
    if (l0 < lineality.size()) {
      IntVector b = lineality[l0];
      Int bc = b.dot(c);
      if (bc < 0) {
        b = -b;
        bc = -bc;
      }
      std::vector<IntVector> new_lin;
      for (std::size_t i = 0; i < lineality.size(); ++i) {
        if (i == l0) continue;
        new_lin.push_back((lineality[i] * bc - b * lineality[i].dot(c)).primitive());
      }
      lineality = std::move(new_lin);
      for (auto& r : rays) {
        r.v = (r.v * bc - b * r.v.dot(c)).primitive();
        if (!is_equality) r.tight.insert(ineq_index);
      }
      if (!is_equality) rays.push_back(detail::Ray{b.primitive(), {}});
      return;
    }
    // lineality lies in the hyperplane of c; split the rays
    std::vector<std::size_t> pos, zero, neg;
    std::vector<Int> vals(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) {
      vals[i] = rays[i].v.dot(c);
      int s = sign(vals[i]);
      (s > 0 ? pos : s < 0 ? neg : zero).push_back(i);
    }
    if (neg.empty() && (is_equality ? pos.empty() : true)) {
      if (!is_equality)
        for (std::size_t i : zero) rays[i].tight.insert(ineq_index);
      return;  // constraint already satisfied everywhere
    }
    std::vector<detail::Ray> next;
    for (std::size_t i : zero) {
      detail::Ray r = rays[i];
      if (!is_equality) r.tight.insert(ineq_index);
      next.push_back(std::move(r));
    }
    if (!is_equality)
      for (std::size_t i : pos) next.push_back(rays[i]);
    std::set<IntVector> seen;
    for (const auto& r : next) seen.insert(r.v);
    for (std::size_t i : pos)
      for (std::size_t j : neg) {
        if (!detail::adjacent(rays, i, j)) continue;
        IntVector w = (rays[j].v * vals[i] - rays[i].v * vals[j]).primitive();
        if (w.is_zero() || seen.count(w)) continue;
        seen.insert(w);
        detail::Ray nr;
        nr.v = std::move(w);
        std::set_intersection(rays[i].tight.begin(), rays[i].tight.end(),
                              rays[j].tight.begin(), rays[j].tight.end(),
                              std::inserter(nr.tight, nr.tight.begin()));
        if (!is_equality) nr.tight.insert(ineq_index);
        next.push_back(std::move(nr));
      }
    rays = std::move(next);
  };

  for (const auto& e : equalities) process(e, true);
  for (const auto& h : inequalities) {
    process(h, false);
    ++ineq_index;
  }

  Description out;
  for (auto& r : rays) out.rays.push_back(std::move(r.v));
  std::sort(out.rays.begin(), out.rays.end());
  if (!lineality.empty()) {
    HermiteResult hr = hermite_normal_form(IntMatrix(lineality));
    for (std::size_t i = 0; i < hr.rank; ++i) out.lineality.push_back(hr.h.row(i));
  }
  return out;
}

}  // namespace dd
}  // namespace nashfan
