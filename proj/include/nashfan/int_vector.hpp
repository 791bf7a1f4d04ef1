#pragma once

#include <algorithm>
#include <cassert>
#include <compare>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "nashfan/numeric.hpp"

namespace nashfan {

/// Dense integer vector with arbitrary-precision entries. Used for exponent
/// vectors, weight vectors and hyperplane normals alike.
class IntVector {
 public:
  IntVector() = default;
  explicit IntVector(std::size_t dim) : e_(dim, Int(0)) {}
  IntVector(std::initializer_list<long> xs) {
    e_.reserve(xs.size());
    for (long x : xs) e_.emplace_back(x);
  }
  explicit IntVector(std::vector<Int> entries) : e_(std::move(entries)) {}

  std::size_t dim() const { return e_.size(); }
  const Int& operator[](std::size_t i) const { return e_[i]; }
  Int& operator[](std::size_t i) { return e_[i]; }
  const std::vector<Int>& entries() const { return e_; }

  bool is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Int& x) { return x == 0; });
  }

  bool is_nonnegative() const {
    return std::all_of(e_.begin(), e_.end(), [](const Int& x) { return x >= 0; });
  }

  Int dot(const IntVector& o) const {
    assert(dim() == o.dim());
    Int s = 0;
    for (std::size_t i = 0; i < e_.size(); ++i) s += e_[i] * o.e_[i];
    return s;
  }

  /// Sum of absolute values of the entries.
  Int l1_norm() const {
    Int s = 0;
    for (const Int& x : e_) s += abs(x);
    return s;
  }

  /// gcd of the entries (0 for the zero vector).
  Int content() const {
    Int g = 0;
    for (const Int& x : e_) g = nashfan::gcd(g, x);
    return g;
  }

  /// Divides out the content; direction is preserved, zero stays zero.
  IntVector primitive() const {
    Int g = content();
    if (g <= 1) return *this;
    IntVector r(dim());
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = exact_div(e_[i], g);
    return r;
  }

  bool is_primitive() const { return content() == 1; }

  IntVector operator+(const IntVector& o) const {
    assert(dim() == o.dim());
    IntVector r(dim());
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
  }

  IntVector operator-(const IntVector& o) const {
    assert(dim() == o.dim());
    IntVector r(dim());
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
  }

  IntVector operator-() const {
    IntVector r(dim());
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
    return r;
  }

  IntVector operator*(const Int& c) const {
    IntVector r(dim());
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * c;
    return r;
  }

  IntVector& operator+=(const IntVector& o) {
    assert(dim() == o.dim());
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
  }

  bool operator==(const IntVector& o) const { return e_ == o.e_; }
  bool operator!=(const IntVector& o) const { return e_ != o.e_; }

  /// Lexicographic order on entries; the canonical total order used for
  /// sorting rays, normals and exponent vectors.
  std::strong_ordering operator<=>(const IntVector& o) const {
    std::size_t n = std::min(dim(), o.dim());
    for (std::size_t i = 0; i < n; ++i) {
      int c = cmp(e_[i], o.e_[i]);
      if (c < 0) return std::strong_ordering::less;
      if (c > 0) return std::strong_ordering::greater;
    }
    if (dim() < o.dim()) return std::strong_ordering::less;
    if (dim() > o.dim()) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (i) os << ',';
      os << e_[i];
    }
    os << ')';
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const IntVector& v) {
    return os << v.to_string();
  }

 private:
  std::vector<Int> e_;
};

inline IntVector operator*(const Int& c, const IntVector& v) { return v * c; }

/// Two vectors pointing the same way (positive multiples of each other).
inline bool parallel_same_direction(const IntVector& a, const IntVector& b) {
  return !a.is_zero() && !b.is_zero() && a.primitive() == b.primitive();
}

}  // namespace nashfan
