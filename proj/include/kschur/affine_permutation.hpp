#pragma once

/**
 * @file affine_permutation.hpp
 * @brief The affine symmetric group of type A_k^(1) in window notation.
 *
 * An element w is a bijection of Z with w(i + n) = w(i) + n, n = k + 1, and
 * sum_{i=1}^{n} w(i) = (k+2 choose 2). It is stored as its window
 * [w(1), ..., w(n)], which is unique per group element, so windows serve as
 * canonical keys everywhere else in the library.
 *
 * Words s_{i_1} s_{i_2} ... s_{i_m} are sequences of residues read left to
 * right; the group element of a word is the composition
 * s_{i_1} o s_{i_2} o ... o s_{i_m}.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace kschur {

/// A generator index in {0, ..., k}.
using Residue = int;

/// A word in the generators, read left to right.
using Word = std::vector<Residue>;

enum class Side { left, right };

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out))
    throw std::overflow_error("affine permutation window entry overflow");
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::overflow_error("affine permutation window entry overflow");
  return out;
}

/// Floor division for a positive divisor.
inline std::int64_t floor_div(std::int64_t a, std::int64_t n) {
  std::int64_t q = a / n;
  if ((a % n != 0) && (a < 0)) --q;
  return q;
}

/// Representative of a modulo n in {0, ..., n-1}.
inline std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t m = a % n;
  return m < 0 ? m + n : m;
}

inline void require_rank(int k) {
  if (k < 1) throw std::invalid_argument("rank parameter k must be >= 1");
}

}  // namespace detail

inline Residue residue(std::int64_t a, int k) {
  return static_cast<Residue>(detail::mod(a, k + 1));
}

class AffinePermutation {
 public:
  using Entry = std::int64_t;

  /// The identity of the group generated by s_0, ..., s_k.
  explicit AffinePermutation(int k) : k_(k) {
    detail::require_rank(k);
    window_.resize(static_cast<std::size_t>(k) + 1);
    std::iota(window_.begin(), window_.end(), Entry{1});
  }

  /// Validates the window; throws std::invalid_argument on a non-element.
  AffinePermutation(int k, std::vector<Entry> window)
      : k_(k), window_(std::move(window)) {
    detail::require_rank(k);
    validate();
  }

  static AffinePermutation identity(int k) { return AffinePermutation(k); }

  int k() const { return k_; }
  int n() const { return k_ + 1; }
  std::span<const Entry> window() const { return window_; }

  /// w(j) for any integer j, extended periodically.
  Entry operator()(Entry j) const {
    const Entry nn = n();
    const Entry q = detail::floor_div(j - 1, nn);
    const Entry pos = j - q * nn;  // in 1..n
    return detail::checked_add(window_[static_cast<std::size_t>(pos - 1)],
                               detail::checked_mul(q, nn));
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < window_.size(); ++i)
      if (window_[i] != static_cast<Entry>(i + 1)) return false;
    return true;
  }

  /// w * s_i.
  AffinePermutation times_generator(Residue i) const {
    check_residue(i);
    AffinePermutation out = *this;
    auto& w = out.window_;
    if (i == 0) {
      const Entry nn = n();
      const Entry first = w.front();
      w.front() = detail::checked_add(w.back(), -nn);
      w.back() = detail::checked_add(first, nn);
    } else {
      std::swap(w[static_cast<std::size_t>(i) - 1], w[static_cast<std::size_t>(i)]);
    }
    return out;
  }

  /// s_i * w.
  AffinePermutation generator_times(Residue i) const {
    check_residue(i);
    AffinePermutation out = *this;
    for (auto& v : out.window_) {
      const Residue res = residue(v, k_);
      if (res == i)
        v = detail::checked_add(v, 1);
      else if (res == (i + 1) % n())
        v = detail::checked_add(v, -1);
    }
    return out;
  }

  /// True iff length(w * s_i) < length(w).
  bool has_right_descent(Residue i) const {
    check_residue(i);
    return (*this)(i) > (*this)(i + 1);
  }

  /// True iff length(s_i * w) < length(w).
  bool has_left_descent(Residue i) const { return inverse().has_right_descent(i); }

  /// Periodic inversion count: sum_{1<=i<j<=n} |floor((w(j) - w(i)) / n)|.
  std::int64_t length() const {
    const Entry nn = n();
    std::int64_t len = 0;
    for (std::size_t i = 0; i < window_.size(); ++i)
      for (std::size_t j = i + 1; j < window_.size(); ++j) {
        const Entry q = detail::floor_div(window_[j] - window_[i], nn);
        len = detail::checked_add(len, q < 0 ? -q : q);
      }
    return len;
  }

  AffinePermutation inverse() const {
    const Entry nn = n();
    std::vector<Entry> inv(window_.size());
    for (std::size_t j = 0; j < window_.size(); ++j) {
      const Entry v = window_[j];
      const Entry q = detail::floor_div(v - 1, nn);
      const Entry pos = v - q * nn;
      inv[static_cast<std::size_t>(pos - 1)] =
          detail::checked_add(static_cast<Entry>(j + 1), -detail::checked_mul(q, nn));
    }
    AffinePermutation out(k_);
    out.window_ = std::move(inv);
    return out;
  }

  /// Composition (*this) o rhs as bijections of Z.
  AffinePermutation operator*(const AffinePermutation& rhs) const {
    if (rhs.k_ != k_) throw std::invalid_argument("multiply: mismatched rank k");
    AffinePermutation out(k_);
    for (std::size_t j = 0; j < window_.size(); ++j) out.window_[j] = (*this)(rhs.window_[j]);
    return out;
  }

  /// Lexicographic on (k, window); used for reproducible display order.
  friend auto operator<=>(const AffinePermutation&, const AffinePermutation&) = default;
  friend bool operator==(const AffinePermutation&, const AffinePermutation&) = default;

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < window_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(window_[i]);
    }
    return s + "]";
  }

 private:
  void check_residue(Residue i) const {
    if (i < 0 || i > k_) throw std::out_of_range("generator index out of range");
  }

  void validate() const {
    const std::size_t nn = static_cast<std::size_t>(n());
    if (window_.size() != nn)
      throw std::invalid_argument("window must have k+1 entries");
    std::vector<bool> seen(nn, false);
    std::int64_t sum = 0;
    for (Entry v : window_) {
      const auto r = static_cast<std::size_t>(detail::mod(v, static_cast<Entry>(nn)));
      if (seen[r]) throw std::invalid_argument("window residues are not a permutation");
      seen[r] = true;
      sum = detail::checked_add(sum, v);
    }
    const auto expected = static_cast<std::int64_t>((nn + 1) * nn / 2);
    if (sum != expected)
      throw std::invalid_argument("window entries must sum to (k+2 choose 2)");
  }

  int k_;
  std::vector<Entry> window_;
};

inline AffinePermutation generator_apply(const AffinePermutation& w, Residue i, Side side) {
  return side == Side::right ? w.times_generator(i) : w.generator_times(i);
}

inline AffinePermutation generator(int k, Residue i) {
  return AffinePermutation(k).times_generator(i);
}

/// Group element of an arbitrary (not necessarily reduced) word.
inline AffinePermutation word_to_window(int k, std::span<const Residue> word) {
  AffinePermutation w(k);
  for (Residue i : word) w = w.times_generator(i);
  return w;
}

inline AffinePermutation word_to_window(int k, std::initializer_list<Residue> word) {
  return word_to_window(k, std::span<const Residue>(word.begin(), word.size()));
}

/// Reduced word, peeling the smallest right descent at every step.
inline Word window_to_word(AffinePermutation w) {
  Word reversed;
  reversed.reserve(static_cast<std::size_t>(w.length()));
  while (!w.is_identity()) {
    Residue i = 0;
    while (!w.has_right_descent(i)) ++i;
    reversed.push_back(i);
    w = w.times_generator(i);
  }
  return Word(reversed.rbegin(), reversed.rend());
}

inline AffinePermutation multiply(const AffinePermutation& a, const AffinePermutation& b) {
  return a * b;
}

inline AffinePermutation inverse(const AffinePermutation& a) { return a.inverse(); }

inline std::int64_t length(const AffinePermutation& w) { return w.length(); }

/// Letters rotated by m: s_{i_1 + m} ... s_{i_l + m}.
inline Word shift_word(std::span<const Residue> word, int m, int k) {
  Word out;
  out.reserve(word.size());
  for (Residue i : word) out.push_back(residue(static_cast<std::int64_t>(i) + m, k));
  return out;
}

/// Letters negated: s_{-i_1} ... s_{-i_l}.
inline Word hat_word(std::span<const Residue> word, int k) {
  Word out;
  out.reserve(word.size());
  for (Residue i : word) out.push_back(residue(-static_cast<std::int64_t>(i), k));
  return out;
}

/// The Dynkin rotation w^(m), i.e. conjugation by j -> j + m: w^(m)(j) = w(j - m) + m.
inline AffinePermutation shift_automorphism(const AffinePermutation& w, int m) {
  std::vector<AffinePermutation::Entry> win(static_cast<std::size_t>(w.n()));
  for (std::size_t j = 0; j < win.size(); ++j) {
    const auto jj = static_cast<std::int64_t>(j + 1);
    win[j] = detail::checked_add(w(jj - m), m);
  }
  return AffinePermutation(w.k(), std::move(win));
}

/// The Dynkin reflection i -> -i, i.e. conjugation by j -> 1 - j: hat(w)(j) = 1 - w(1 - j).
inline AffinePermutation hat_automorphism(const AffinePermutation& w) {
  std::vector<AffinePermutation::Entry> win(static_cast<std::size_t>(w.n()));
  for (std::size_t j = 0; j < win.size(); ++j) {
    const auto jj = static_cast<std::int64_t>(j + 1);
    win[j] = detail::checked_add(1, -w(1 - jj));
  }
  return AffinePermutation(w.k(), std::move(win));
}

/// Minimal length representative of w W_0 (no right descent outside s_0).
inline bool is_affine_grassmannian(const AffinePermutation& w) {
  auto win = w.window();
  return std::is_sorted(win.begin(), win.end());
}

inline std::string word_to_string(std::span<const Residue> word, char letter = 's') {
  if (word.empty()) return "1";
  std::string s;
  for (Residue i : word) {
    s += letter;
    s += '_';
    s += std::to_string(i);
  }
  return s;
}

}  // namespace kschur

template <>
struct std::hash<kschur::AffinePermutation> {
  std::size_t operator()(const kschur::AffinePermutation& w) const noexcept {
    std::size_t h = static_cast<std::size_t>(w.k()) * 0x9e3779b97f4a7c15ULL;
    for (auto v : w.window())
      h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};
