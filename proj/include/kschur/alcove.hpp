#pragma once

/**
 * @file alcove.hpp
 * @brief Exact geometry of V = R^{k+1} / (1, ..., 1).
 *
 * The affine (diamond) action of W on V, its linear part (the star action),
 * weights and labels, alcove centroids and the resolution of a point to the
 * alcove containing it. Alcoves are A_w = w^{-1} <> A_empty, where
 *
 *   A_empty = { a : a_1 >= a_2 >= ... >= a_{k+1} >= a_1 - 1 }.
 *
 * Points are stored as one representative of their class; equality compares
 * consecutive differences, which are invariant under adding (1, ..., 1).
 */

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "kschur/affine_permutation.hpp"

namespace kschur {

using Rational = boost::multiprecision::cpp_rational;

class RationalPoint {
 public:
  /// The origin.
  explicit RationalPoint(int k) : coords_(static_cast<std::size_t>(k) + 1) {
    detail::require_rank(k);
  }

  explicit RationalPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
    if (coords_.size() < 2) throw std::invalid_argument("a point of V needs k+1 >= 2 coordinates");
  }

  static RationalPoint from_integers(std::span<const std::int64_t> coords) {
    std::vector<Rational> c;
    c.reserve(coords.size());
    for (auto v : coords) c.emplace_back(v);
    return RationalPoint(std::move(c));
  }

  static RationalPoint from_integers(std::initializer_list<std::int64_t> coords) {
    return from_integers(std::span<const std::int64_t>(coords.begin(), coords.size()));
  }

  int k() const { return static_cast<int>(coords_.size()) - 1; }
  std::size_t dim() const { return coords_.size(); }
  std::span<const Rational> coords() const { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }

  RationalPoint operator+(const RationalPoint& o) const { return combine(o, +1); }
  RationalPoint operator-(const RationalPoint& o) const { return combine(o, -1); }

  RationalPoint operator*(const Rational& s) const {
    RationalPoint out = *this;
    for (auto& c : out.coords_) c *= s;
    return out;
  }

  /// Equality in V: all consecutive differences agree.
  friend bool operator==(const RationalPoint& a, const RationalPoint& b) {
    if (a.dim() != b.dim()) return false;
    for (std::size_t i = 0; i + 1 < a.dim(); ++i)
      if (a.coords_[i] - a.coords_[i + 1] != b.coords_[i] - b.coords_[i + 1]) return false;
    return true;
  }

  /// The representative whose last coordinate is zero.
  RationalPoint normalized() const {
    RationalPoint out = *this;
    const Rational last = coords_.back();
    for (auto& c : out.coords_) c -= last;
    return out;
  }

  /// Every coordinate of some representative is an integer.
  bool is_integral() const {
    const RationalPoint n = normalized();
    for (const auto& c : n.coords_)
      if (boost::multiprecision::denominator(c) != 1) return false;
    return true;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) s += ", ";
      s += coords_[i].str();
    }
    return s + ")";
  }

 private:
  RationalPoint combine(const RationalPoint& o, int sign) const {
    if (o.dim() != dim()) throw std::invalid_argument("points of different dimension");
    RationalPoint out = *this;
    for (std::size_t i = 0; i < coords_.size(); ++i)
      out.coords_[i] += sign > 0 ? o.coords_[i] : -o.coords_[i];
    return out;
  }

  std::vector<Rational> coords_;
};

/// A weight: a point of V with an integral representative.
using WeightVector = RationalPoint;

namespace detail {

inline void check_point_residue(Residue i, const RationalPoint& p) {
  if (i < 0 || i > p.k()) throw std::out_of_range("generator index out of range");
}

}  // namespace detail

/// s_i <> p: swap a_i, a_{i+1}; s_0 maps (a_1, ..., a_n) to (a_n + 1, ..., a_1 - 1).
inline RationalPoint diamond(Residue i, RationalPoint p) {
  detail::check_point_residue(i, p);
  const std::size_t n = p.dim();
  if (i == 0) {
    Rational first = p[0];
    p[0] = p[n - 1] + 1;
    p[n - 1] = first - 1;
  } else {
    std::swap(p[static_cast<std::size_t>(i) - 1], p[static_cast<std::size_t>(i)]);
  }
  return p;
}

/// s_i * p: the linear part of the diamond action.
inline RationalPoint star(Residue i, RationalPoint p) {
  detail::check_point_residue(i, p);
  const std::size_t n = p.dim();
  if (i == 0)
    std::swap(p[0], p[n - 1]);
  else
    std::swap(p[static_cast<std::size_t>(i) - 1], p[static_cast<std::size_t>(i)]);
  return p;
}

/// Word acting on a point, rightmost letter first.
inline RationalPoint diamond(std::span<const Residue> word, RationalPoint p) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) p = diamond(*it, std::move(p));
  return p;
}

inline RationalPoint star(std::span<const Residue> word, RationalPoint p) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) p = star(*it, std::move(p));
  return p;
}

inline RationalPoint diamond(const AffinePermutation& w, RationalPoint p) {
  return diamond(window_to_word(w), std::move(p));
}

inline RationalPoint star(const AffinePermutation& w, RationalPoint p) {
  return star(window_to_word(w), std::move(p));
}

/// L(eta) = (sum of coordinates) mod (k+1), for an integral representative.
inline Residue label(const WeightVector& eta) {
  if (!eta.is_integral()) throw std::invalid_argument("label: not a weight");
  Rational sum = 0;
  for (const auto& c : eta.coords()) sum += c;
  const boost::multiprecision::cpp_int total = boost::multiprecision::numerator(sum);
  const boost::multiprecision::cpp_int n = eta.dim();
  boost::multiprecision::cpp_int m = total % n;
  if (m < 0) m += n;
  return static_cast<Residue>(m);
}

/// Lambda_i = (1^i, 0^{k+1-i}); Lambda_0 is the origin.
inline WeightVector fundamental_weight(int i, int k) {
  if (i < 0 || i > k) throw std::out_of_range("fundamental weight index out of range");
  RationalPoint p(k);
  for (int j = 0; j < i; ++j) p[static_cast<std::size_t>(j)] = 1;
  return p;
}

/// alpha_i = e_i - e_{i+1} for i >= 1, alpha_0 = e_{k+1} - e_1.
inline WeightVector simple_root(int i, int k) {
  if (i < 0 || i > k) throw std::out_of_range("simple root index out of range");
  RationalPoint p(k);
  const std::size_t n = p.dim();
  if (i == 0) {
    p[n - 1] = 1;
    p[0] = -1;
  } else {
    p[static_cast<std::size_t>(i) - 1] = 1;
    p[static_cast<std::size_t>(i)] = -1;
  }
  return p;
}

/// G_empty = (k/(k+1), (k-1)/(k+1), ..., 1/(k+1), 0).
inline RationalPoint fundamental_centroid(int k) {
  RationalPoint p(k);
  for (int j = 0; j <= k; ++j) p[static_cast<std::size_t>(j)] = Rational(k - j, k + 1);
  return p;
}

/// G_w = w^{-1} <> G_empty.
inline RationalPoint centroid(const AffinePermutation& w) {
  return diamond(w.inverse(), fundamental_centroid(w.k()));
}

/// Weak decrease of the coordinates.
inline bool is_dominant(const RationalPoint& p) {
  for (std::size_t i = 0; i + 1 < p.dim(); ++i)
    if (p[i] < p[i + 1]) return false;
  return true;
}

class PointOnWall : public std::domain_error {
 public:
  explicit PointOnWall(const RationalPoint& p)
      : std::domain_error("point on wall: " + p.to_string()) {}
};

/**
 * The element w whose alcove A_w contains p in its interior, so that
 * w <> p lies inside A_empty. Walls are reflected greedily, smallest violated
 * index first (the affine wall s_0 counts as index 0). Throws PointOnWall
 * when p lies on a wall.
 */
inline AffinePermutation point_to_word(RationalPoint p) {
  const int k = p.k();
  const std::size_t n = p.dim();
  AffinePermutation w(k);
  for (;;) {
    const Rational affine_gap = p[0] - p[n - 1];
    if (affine_gap == 1) throw PointOnWall(p);
    Residue violated = -1;
    if (affine_gap > 1) violated = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (p[i] == p[i + 1]) throw PointOnWall(p);
      if (violated < 0 && p[i] < p[i + 1]) violated = static_cast<Residue>(i + 1);
    }
    if (violated < 0) return w;
    p = diamond(violated, std::move(p));
    w = w.generator_times(violated);
  }
}

/// z_gamma: the pseudo-translation of the fundamental alcove in direction gamma.
inline AffinePermutation pseudo_translation(const WeightVector& gamma) {
  if (!gamma.is_integral()) throw std::invalid_argument("pseudo_translation: not a weight");
  const RationalPoint target = fundamental_centroid(gamma.k()) + gamma;
  AffinePermutation z = point_to_word(target);
  if (!(centroid(z) == target)) throw std::logic_error("pseudo_translation: centroid mismatch");
  return z;
}

inline bool is_root_lattice(const WeightVector& alpha) {
  if (!alpha.is_integral()) return false;
  Rational sum = 0;
  for (const auto& c : alpha.coords()) sum += c;
  return sum == 0;
}

/// t_alpha, with t_alpha <> v = v - alpha; alpha must lie in the root lattice
/// (integral coordinates summing to zero in the given representative).
inline AffinePermutation translation(const WeightVector& alpha) {
  if (!is_root_lattice(alpha)) throw std::invalid_argument("translation: not in the root lattice");
  return pseudo_translation(alpha);
}

/**
 * The window bracket [v]: the representative of v whose coordinates sum to
 * (k+2 choose 2). Throws if that representative is not integral.
 */
inline std::vector<std::int64_t> window_bracket(const RationalPoint& v) {
  const auto n = static_cast<std::int64_t>(v.dim());
  Rational sum = 0;
  for (const auto& c : v.coords()) sum += c;
  const Rational shift = (Rational(n * (n + 1) / 2) - sum) / n;
  std::vector<std::int64_t> out;
  out.reserve(v.dim());
  for (const auto& c : v.coords()) {
    const Rational y = c + shift;
    if (boost::multiprecision::denominator(y) != 1)
      throw std::domain_error("window bracket of a non-integral point");
    out.push_back(static_cast<std::int64_t>(boost::multiprecision::numerator(y)));
  }
  return out;
}

/// The coordinates in reverse order.
inline RationalPoint reversed(const RationalPoint& p) {
  std::vector<Rational> c(p.coords().rbegin(), p.coords().rend());
  return RationalPoint(std::move(c));
}

}  // namespace kschur
