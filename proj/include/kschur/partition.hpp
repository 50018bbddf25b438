#pragma once

/**
 * @file partition.hpp
 * @brief k-bounded partitions, (k+1)-cores and the actions of W and of the
 * nilCoxeter generators on cores.
 *
 * Cells are (row, col), 1-based; row 1 is the longest row. Diagrams are drawn
 * in French convention, so the "top" row of a diagram is its last row and
 * reading words go from the last row to the first, right to left in a row.
 */

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "kschur/affine_permutation.hpp"

namespace kschur {

/// Weakly decreasing positive parts, no trailing zeros; empty is the empty partition.
class Partition {
 public:
  Partition() = default;

  /// Drops trailing zeros; throws if the parts are not weakly decreasing and nonnegative.
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
      if (i && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  std::span<const int> parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  /// Row i (1-based); 0 beyond the last row.
  int row(std::size_t i) const { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }

  int size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }

  int largest() const { return parts_.empty() ? 0 : parts_.front(); }

  Partition conjugate() const {
    std::vector<int> out(static_cast<std::size_t>(largest()), 0);
    for (int p : parts_)
      for (int j = 0; j < p; ++j) ++out[static_cast<std::size_t>(j)];
    return Partition(std::move(out));
  }

  /// Column j (1-based) height.
  int column(int j) const {
    int h = 0;
    for (int p : parts_)
      if (p >= j) ++h;
    return h;
  }

  bool contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (std::size_t i = 1; i <= inner.length(); ++i)
      if (inner.row(i) > row(i)) return false;
    return true;
  }

  /// Hook length of cell (i, j); the cell must belong to the diagram.
  int hook(int i, int j) const {
    return row(static_cast<std::size_t>(i)) - j + column(j) - i + 1;
  }

  /// Parts of both partitions, merged and sorted.
  Partition union_with(const Partition& other) const {
    std::vector<int> all(parts_);
    all.insert(all.end(), other.parts_.begin(), other.parts_.end());
    std::sort(all.begin(), all.end(), std::greater<>());
    return Partition(std::move(all));
  }

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

 private:
  std::vector<int> parts_;
};

/// A skew diagram outer/inner with inner contained in outer.
struct SkewShape {
  Partition outer;
  Partition inner;

  SkewShape(Partition outer_, Partition inner_ = {})
      : outer(std::move(outer_)), inner(std::move(inner_)) {
    if (!outer.contains(inner)) throw std::invalid_argument("skew shape: inner not contained in outer");
  }
};

/// (col - row) mod (k+1).
inline Residue content(int row, int col, int k) {
  return residue(static_cast<std::int64_t>(col) - row, k);
}

inline bool is_k_bounded(const Partition& p, int k) { return p.largest() <= k; }

inline void require_k_bounded(const Partition& p, int k) {
  if (!is_k_bounded(p, k))
    throw std::invalid_argument("partition " + p.to_string() + " is not " + std::to_string(k) +
                                "-bounded");
}

/// True iff no cell has hook length k+1.
inline bool is_core(const Partition& p, int k) {
  const Partition conj = p.conjugate();
  for (std::size_t i = 1; i <= p.length(); ++i)
    for (int j = 1; j <= p.row(i); ++j) {
      const int hook = p.row(i) - j + conj.row(static_cast<std::size_t>(j)) - static_cast<int>(i) + 1;
      if (hook == k + 1) return false;
    }
  return true;
}

/// Rows of the addable cells of residue i.
inline std::vector<std::size_t> addable_rows(const Partition& p, Residue i, int k) {
  std::vector<std::size_t> rows;
  for (std::size_t r = 1; r <= p.length() + 1; ++r) {
    const bool addable = r == 1 || p.row(r - 1) > p.row(r);
    if (addable && content(static_cast<int>(r), p.row(r) + 1, k) == i) rows.push_back(r);
  }
  return rows;
}

/// Rows of the removable cells of residue i.
inline std::vector<std::size_t> removable_rows(const Partition& p, Residue i, int k) {
  std::vector<std::size_t> rows;
  for (std::size_t r = 1; r <= p.length(); ++r) {
    const bool removable = p.row(r) > p.row(r + 1);
    if (removable && content(static_cast<int>(r), p.row(r), k) == i) rows.push_back(r);
  }
  return rows;
}

namespace detail {

inline Partition adjust_rows(const Partition& p, std::span<const std::size_t> rows, int delta) {
  std::vector<int> parts(p.parts().begin(), p.parts().end());
  parts.resize(p.length() + 1, 0);
  for (std::size_t r : rows) parts[r - 1] += delta;
  return Partition(std::move(parts));
}

inline void check_core_action(bool has_addable, bool has_removable) {
  if (has_addable && has_removable)
    throw std::logic_error("core has an addable and a removable cell of the same residue");
}

}  // namespace detail

/// s_i acting on a (k+1)-core.
inline Partition s_action(const Partition& core, Residue i, int k) {
  const auto add = addable_rows(core, i, k);
  const auto rem = removable_rows(core, i, k);
  detail::check_core_action(!add.empty(), !rem.empty());
  if (!add.empty()) return detail::adjust_rows(core, add, +1);
  if (!rem.empty()) return detail::adjust_rows(core, rem, -1);
  return core;
}

/// u_i acting on a (k+1)-core; nullopt stands for the zero of the module.
inline std::optional<Partition> u_action(const Partition& core, Residue i, int k) {
  const auto add = addable_rows(core, i, k);
  detail::check_core_action(!add.empty(), !removable_rows(core, i, k).empty());
  if (add.empty()) return std::nullopt;
  return detail::adjust_rows(core, add, +1);
}

/// Applies a word to a core through u_action, rightmost letter first.
inline std::optional<Partition> u_word_action(std::span<const Residue> word, Partition core, int k) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    auto next = u_action(core, *it, k);
    if (!next) return std::nullopt;
    core = std::move(*next);
  }
  return core;
}

/// Applies a word to a core through s_action, rightmost letter first.
inline Partition s_word_action(std::span<const Residue> word, Partition core, int k) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) core = s_action(core, *it, k);
  return core;
}

/// Residues of the cells of outer/inner, from the last row up to row 1, right to left.
inline Word skew_reading_word(const SkewShape& shape, int k) {
  Word word;
  for (std::size_t r = shape.outer.length(); r >= 1; --r)
    for (int c = shape.outer.row(r); c > shape.inner.row(r); --c)
      word.push_back(content(static_cast<int>(r), c, k));
  return word;
}

/// Reading word of the k-bounded partition's own cells; a reduced word for w_lambda.
inline Word reading_word(const Partition& lambda, int k) {
  return skew_reading_word(SkewShape(lambda), k);
}

/// The (k+1)-core c(lambda) of a k-bounded partition, obtained as w_lambda acting on the empty core.
inline Partition bounded_to_core(const Partition& lambda, int k) {
  require_k_bounded(lambda, k);
  const Word word = reading_word(lambda, k);
  auto core = u_word_action(word, Partition{}, k);
  if (!core) throw std::logic_error("reading word of " + lambda.to_string() + " kills the empty core");
  return *core;
}

/// p(kappa): row i counts the cells of row i with hook length at most k.
inline Partition core_to_bounded(const Partition& core, int k) {
  if (!is_core(core, k)) throw std::invalid_argument(core.to_string() + " is not a (k+1)-core");
  const Partition conj = core.conjugate();
  std::vector<int> parts;
  for (std::size_t i = 1; i <= core.length(); ++i) {
    int count = 0;
    for (int j = 1; j <= core.row(i); ++j) {
      const int hook = core.row(i) - j + conj.row(static_cast<std::size_t>(j)) - static_cast<int>(i) + 1;
      if (hook <= k) ++count;
    }
    parts.push_back(count);
  }
  return Partition(std::move(parts));
}

/// w_lambda, the affine Grassmannian element with w_lambda(empty) = c(lambda).
inline AffinePermutation w_of_partition(const Partition& lambda, int k) {
  require_k_bounded(lambda, k);
  return word_to_window(k, reading_word(lambda, k));
}

/// The core reached by u(w) from the empty core, or nullopt when the action vanishes.
inline std::optional<Partition> element_core(const AffinePermutation& w) {
  return u_word_action(window_to_word(w), Partition{}, w.k());
}

/// All partitions of n with parts at most max_part, in reverse lexicographic order.
inline std::vector<Partition> partitions_of(int n, int max_part) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int bound) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, bound); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, max_part);
  return out;
}

/**
 * All partitions fitting inside a box with at most max_rows rows and max_cols
 * columns, in colex order: rows padded to max_rows and compared from the last.
 */
inline std::vector<Partition> partitions_in_box(int max_rows, int max_cols) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int bound) {
    out.emplace_back(cur);
    if (static_cast<int>(cur.size()) == max_rows) return;
    for (int p = 1; p <= bound; ++p) {
      cur.push_back(p);
      rec(p);
      cur.pop_back();
    }
  };
  rec(max_cols);
  const auto rows = static_cast<std::size_t>(max_rows);
  std::sort(out.begin(), out.end(), [rows](const Partition& a, const Partition& b) {
    for (std::size_t i = rows; i >= 1; --i)
      if (a.row(i) != b.row(i)) return a.row(i) < b.row(i);
    return false;
  });
  return out;
}

}  // namespace kschur

template <>
struct std::hash<kschur::Partition> {
  std::size_t operator()(const kschur::Partition& p) const noexcept {
    std::size_t h = 0;
    for (int v : p.parts()) h = h * 1000003u + static_cast<std::size_t>(v);
    return h;
  }
};
