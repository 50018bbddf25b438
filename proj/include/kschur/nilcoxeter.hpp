#pragma once

/**
 * @file nilcoxeter.hpp
 * @brief The affine nilCoxeter algebra in its standard basis {u(w) : w in W}.
 *
 * u(x) u(y) = u(xy) when len(xy) = len(x) + len(y) and 0 otherwise, so a
 * product of basis elements is computed by folding a reduced word of the
 * right factor into the window of the left factor, one generator at a time.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "kschur/affine_permutation.hpp"
#include "kschur/partition.hpp"

namespace kschur {

using Integer = boost::multiprecision::cpp_int;

/// Formal integer combination of cores.
using CoreSum = std::map<Partition, Integer>;

/// u(w) u_i (right) or u_i u(w) (left); nullopt when the length does not grow.
inline std::optional<AffinePermutation> basis_times_generator(const AffinePermutation& w, Residue i,
                                                              Side side) {
  if (side == Side::right) {
    if (w.has_right_descent(i)) return std::nullopt;
    return w.times_generator(i);
  }
  if (w.has_left_descent(i)) return std::nullopt;
  return w.generator_times(i);
}

/// u(w) u_{i_1} ... u_{i_m}, or nullopt if the product vanishes.
inline std::optional<AffinePermutation> basis_times_word(AffinePermutation w,
                                                         std::span<const Residue> word) {
  for (Residue i : word) {
    if (w.has_right_descent(i)) return std::nullopt;
    w = w.times_generator(i);
  }
  return w;
}

/// The basis element u_{i_1} ... u_{i_m} of a word, or nullopt if the word is not reduced.
inline std::optional<AffinePermutation> word_element(int k, std::span<const Residue> word) {
  return basis_times_word(AffinePermutation(k), word);
}

class AlgebraElement {
 public:
  using Terms = std::unordered_map<AffinePermutation, Integer>;

  /// The zero element.
  explicit AlgebraElement(int k) : k_(k) { detail::require_rank(k); }

  static AlgebraElement zero(int k) { return AlgebraElement(k); }

  static AlgebraElement unit(int k) { return basis(AffinePermutation(k)); }

  static AlgebraElement basis(const AffinePermutation& w, Integer coeff = 1) {
    AlgebraElement e(w.k());
    e.add_term(w, coeff);
    return e;
  }

  /// u_i.
  static AlgebraElement generator(int k, Residue i) { return basis(kschur::generator(k, i)); }

  /// u of a word; zero when the word is not reduced.
  static AlgebraElement of_word(int k, std::span<const Residue> word) {
    if (auto w = word_element(k, word)) return basis(*w);
    return AlgebraElement(k);
  }

  int k() const { return k_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Integer coefficient(const AffinePermutation& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add_term(const AffinePermutation& w, const Integer& coeff) {
    if (w.k() != k_) throw std::invalid_argument("algebra element: mismatched rank k");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    check_same_k(o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }

  AlgebraElement& operator-=(const AlgebraElement& o) {
    check_same_k(o);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }

  AlgebraElement& operator*=(const Integer& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [w, c] : terms_) c *= s;
    }
    return *this;
  }

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const Integer& s) { return a *= s; }
  friend AlgebraElement operator*(const Integer& s, AlgebraElement a) { return a *= s; }

  /// Bilinear product. Each key of b is expanded into a reduced word once.
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    a.check_same_k(b);
    AlgebraElement out(a.k_);
    for (const auto& [wb, cb] : b.terms_) {
      const Word word = window_to_word(wb);
      for (const auto& [wa, ca] : a.terms_)
        if (auto prod = basis_times_word(wa, word)) out.add_term(*prod, ca * cb);
    }
    return out;
  }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.k_ == b.k_ && a.terms_ == b.terms_;
  }

  /// Terms ordered by window, lexicographically.
  std::vector<std::pair<AffinePermutation, Integer>> sorted_terms() const {
    std::vector<std::pair<AffinePermutation, Integer>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : sorted_terms()) {
      if (!s.empty()) s += c < 0 ? " - " : " + ";
      else if (c < 0) s += "-";
      const Integer mag = c < 0 ? Integer(-c) : c;
      if (mag != 1) s += mag.str() + "*";
      s += word_to_string(window_to_word(w), 'u');
    }
    return s;
  }

 private:
  void check_same_k(const AlgebraElement& o) const {
    if (o.k_ != k_) throw std::invalid_argument("algebra element: mismatched rank k");
  }

  int k_;
  Terms terms_;
};

inline AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) { return a * b; }

/// Every coefficient positive.
inline bool is_positive(const AlgebraElement& e) {
  return std::all_of(e.terms().begin(), e.terms().end(),
                     [](const auto& t) { return t.second > 0; });
}

/// Every support element has the given length.
inline bool is_homogeneous(const AlgebraElement& e, std::int64_t degree) {
  return std::all_of(e.terms().begin(), e.terms().end(),
                     [&](const auto& t) { return t.first.length() == degree; });
}

/// u(w) acting on a core; nullopt for zero.
inline std::optional<Partition> act_on_core(const AffinePermutation& w, const Partition& core) {
  return u_word_action(window_to_word(w), core, w.k());
}

/// Linear extension of the action of the generators on cores.
inline CoreSum act_on_core(const AlgebraElement& a, const Partition& core) {
  CoreSum out;
  for (const auto& [w, c] : a.terms()) {
    if (auto image = act_on_core(w, core)) {
      auto& slot = out[*image];
      slot += c;
      if (slot == 0) out.erase(*image);
    }
  }
  return out;
}

/// The cyclically decreasing word of a strict subset D of {0, ..., k}.
inline Word cyclically_decreasing_word(std::span<const Residue> subset, int k) {
  std::vector<bool> in(static_cast<std::size_t>(k) + 1, false);
  for (Residue i : subset) {
    if (i < 0 || i > k) throw std::out_of_range("cyclic subset entry out of range");
    in[static_cast<std::size_t>(i)] = true;
  }
  const auto missing = std::find(in.begin(), in.end(), false);
  if (missing == in.end())
    throw std::invalid_argument("cyclically decreasing element needs a strict subset");
  const int m = static_cast<int>(missing - in.begin());
  // Walking down from m-1 puts j+1 ahead of j for every pair inside D.
  Word word;
  for (int step = 1; step <= k; ++step) {
    const Residue j = residue(static_cast<std::int64_t>(m) - step, k);
    if (in[static_cast<std::size_t>(j)]) word.push_back(j);
  }
  return word;
}

/// u_D as a group element.
inline AffinePermutation cyclically_decreasing(std::span<const Residue> subset, int k) {
  return word_to_window(k, cyclically_decreasing_word(subset, k));
}

/// All size-m subsets of {0, ..., n-1} in lexicographic order.
inline std::vector<std::vector<Residue>> subsets_of_size(int n, int m) {
  std::vector<std::vector<Residue>> out;
  if (m < 0 || m > n) return out;
  std::vector<Residue> cur(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) cur[static_cast<std::size_t>(i)] = i;
  for (;;) {
    out.push_back(cur);
    int i = m - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - m + i) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < m; ++j)
      cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j) - 1] + 1;
  }
  return out;
}

/// h_i = sum of u_D over the i-subsets D.
inline AlgebraElement h(int i, int k) {
  detail::require_rank(k);
  if (i < 0 || i > k) throw std::invalid_argument("h_i needs 0 <= i <= k");
  AlgebraElement out(k);
  for (const auto& subset : subsets_of_size(k + 1, i)) out.add_term(cyclically_decreasing(subset, k), 1);
  return out;
}

/// H_mu = h_{mu_1} h_{mu_2} ... in the given order.
inline AlgebraElement h_product(std::span<const int> mu, int k) {
  AlgebraElement out = AlgebraElement::unit(k);
  for (int part : mu) {
    if (part > k) throw std::invalid_argument("h_product: part larger than k");
    out = out * h(part, k);
  }
  return out;
}

inline AlgebraElement h_product(const Partition& mu, int k) { return h_product(mu.parts(), k); }

}  // namespace kschur
