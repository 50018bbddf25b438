#pragma once

/**
 * @file rectangle.hpp
 * @brief Four expansions of the k-Schur function of a maximal rectangle.
 *
 * R = (c^r) with c + r = k + 1. Each formula is a sum of (k+1 choose c)
 * standard-basis elements of length rc:
 *
 *   X_R  reading words of (R, nu)/nu over the partitions nu inside R,
 *   Y_R  pseudo-translations z_gamma over 0/1 weights gamma with c ones,
 *   Z_R  products u_A u_{A+1} ... u_{A+r-1} over c-subsets A of residues,
 *   W_R  explicit windows j_B over c-subsets B of {1, ..., k+1}.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kschur/affine_permutation.hpp"
#include "kschur/alcove.hpp"
#include "kschur/nilcoxeter.hpp"
#include "kschur/partition.hpp"

namespace kschur {

struct RectangleSpec {
  int k;
  int c;  ///< columns
  int r;  ///< rows

  RectangleSpec(int k_, int c_, int r_) : k(k_), c(c_), r(r_) {
    detail::require_rank(k);
    if (c < 1 || r < 1 || c + r != k + 1)
      throw std::invalid_argument("maximal rectangle needs c, r >= 1 and c + r = k + 1");
  }

  static RectangleSpec with_rows(int k, int rows) { return RectangleSpec(k, k + 1 - rows, rows); }

  Partition shape() const { return Partition(std::vector<int>(static_cast<std::size_t>(r), c)); }

  /// (r^c), the conjugate rectangle.
  RectangleSpec transpose() const { return RectangleSpec(k, r, c); }

  bool contains(const Partition& nu) const { return nu.length() <= static_cast<std::size_t>(r) && nu.largest() <= c; }

  std::string to_string() const {
    return "(" + std::to_string(c) + "^" + std::to_string(r) + "), k=" + std::to_string(k);
  }

  friend bool operator==(const RectangleSpec&, const RectangleSpec&) = default;
};

/// Every maximal rectangle for this k, by increasing row count.
inline std::vector<RectangleSpec> maximal_rectangles(int k) {
  std::vector<RectangleSpec> out;
  for (int rows = 1; rows <= k; ++rows) out.push_back(RectangleSpec::with_rows(k, rows));
  return out;
}

/// The partitions inside R.
inline std::vector<Partition> partitions_in(const RectangleSpec& R) { return partitions_in_box(R.r, R.c); }

inline void require_inside(const RectangleSpec& R, const Partition& nu) {
  if (!R.contains(nu)) throw std::invalid_argument(nu.to_string() + " is not contained in " + R.to_string());
}

/// (R, nu): the rows of R followed by the rows of nu.
inline Partition stacked(const RectangleSpec& R, const Partition& nu) {
  require_inside(R, nu);
  std::vector<int> parts(static_cast<std::size_t>(R.r), R.c);
  parts.insert(parts.end(), nu.parts().begin(), nu.parts().end());
  return Partition(std::move(parts));
}

/// V_{(R,nu)/nu}.
inline Word stacked_reading_word(const RectangleSpec& R, const Partition& nu) {
  return skew_reading_word(SkewShape(stacked(R, nu), nu), R.k);
}

inline AlgebraElement formula_X(const RectangleSpec& R) {
  AlgebraElement out(R.k);
  for (const auto& nu : partitions_in(R)) out += AlgebraElement::of_word(R.k, stacked_reading_word(R, nu));
  return out;
}

/// Gamma: the 0/1 weights with exactly c ones, ordered by the positions of the ones.
inline std::vector<WeightVector> gamma_set(const RectangleSpec& R) {
  std::vector<WeightVector> out;
  for (const auto& ones : subsets_of_size(R.k + 1, R.c)) {
    RationalPoint g(R.k);
    for (Residue i : ones) g[static_cast<std::size_t>(i)] = 1;
    out.push_back(std::move(g));
  }
  return out;
}

/// 0/1 vector with exactly c ones; exact check on the stored representative.
inline bool in_gamma(const RectangleSpec& R, const WeightVector& gamma) {
  if (gamma.k() != R.k) return false;
  int ones = 0;
  for (const auto& x : gamma.coords()) {
    if (x == 1)
      ++ones;
    else if (x != 0)
      return false;
  }
  return ones == R.c;
}

inline AlgebraElement formula_Y(const RectangleSpec& R) {
  AlgebraElement out(R.k);
  for (const auto& gamma : gamma_set(R)) out.add_term(pseudo_translation(gamma), 1);
  return out;
}

/// The word of u_A u_{A+1} ... u_{A+r-1}.
inline Word v_tilde_word(const RectangleSpec& R, std::span<const Residue> subset) {
  if (subset.size() != static_cast<std::size_t>(R.c)) throw std::invalid_argument("v_tilde needs a c-subset");
  Word word;
  std::vector<Residue> shifted(subset.begin(), subset.end());
  for (int d = 0; d < R.r; ++d) {
    for (std::size_t j = 0; j < shifted.size(); ++j)
      shifted[j] = residue(static_cast<std::int64_t>(subset[j]) + d, R.k);
    const Word part = cyclically_decreasing_word(shifted, R.k);
    word.insert(word.end(), part.begin(), part.end());
  }
  return word;
}

inline AlgebraElement formula_Z(const RectangleSpec& R) {
  AlgebraElement out(R.k);
  for (const auto& subset : subsets_of_size(R.k + 1, R.c)) out += AlgebraElement::of_word(R.k, v_tilde_word(R, subset));
  return out;
}

/// j_B for a c-subset B of {1, ..., k+1}: entry i is i - r if i in B, else i + c.
inline AffinePermutation j_window(const RectangleSpec& R, std::span<const int> subset) {
  if (subset.size() != static_cast<std::size_t>(R.c)) throw std::invalid_argument("j_B needs a c-subset");
  std::vector<AffinePermutation::Entry> win(static_cast<std::size_t>(R.k) + 1);
  for (std::size_t i = 0; i < win.size(); ++i) win[i] = static_cast<AffinePermutation::Entry>(i + 1) + R.c;
  for (int b : subset) {
    if (b < 1 || b > R.k + 1) throw std::out_of_range("j_B entry out of range");
    win[static_cast<std::size_t>(b) - 1] = b - R.r;
  }
  return AffinePermutation(R.k, std::move(win));
}

inline AlgebraElement formula_W(const RectangleSpec& R) {
  AlgebraElement out(R.k);
  for (auto subset : subsets_of_size(R.k + 1, R.c)) {
    for (auto& b : subset) ++b;
    out.add_term(j_window(R, subset), 1);
  }
  return out;
}

/**
 * phi(nu): the residues i with nu_{r-j+1} - 2r + 1 + j <= i < nu_{r-j} - 2r + 1 + j
 * for some 0 <= j <= r, where nu_0 = c. Sorted.
 */
inline std::vector<Residue> phi(const Partition& nu, const RectangleSpec& R) {
  require_inside(R, nu);
  auto part = [&](int d) { return d == 0 ? R.c : nu.row(static_cast<std::size_t>(d)); };
  std::vector<Residue> out;
  for (int j = 0; j <= R.r; ++j) {
    const int offset = -2 * R.r + 1 + j;
    for (int i = part(R.r - j + 1) + offset; i < part(R.r - j) + offset; ++i) out.push_back(residue(i, R.k));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// psi(nu) = w_nu * Lambda_c.
inline WeightVector psi(const Partition& nu, const RectangleSpec& R) {
  require_inside(R, nu);
  return star(w_of_partition(nu, R.k), fundamental_weight(R.c, R.k));
}

/// psi^{-1}: the partition inside R mapped to gamma.
inline Partition psi_inverse(const WeightVector& gamma, const RectangleSpec& R) {
  if (!in_gamma(R, gamma)) throw std::invalid_argument("psi_inverse: " + gamma.to_string() + " is not in Gamma");
  for (const auto& nu : partitions_in(R))
    if (psi(nu, R) == gamma) return nu;
  throw std::logic_error("psi is not onto Gamma");
}

/// tau(gamma) = psi^t(psi^{-1}(gamma)^t), a weight with r ones.
inline WeightVector tau(const WeightVector& gamma, const RectangleSpec& R) {
  return psi(psi_inverse(gamma, R).conjugate(), R.transpose());
}

/// The direction w_lambda * Lambda_c of the one term of X_R surviving on c(lambda).
inline WeightVector surviving_direction(const RectangleSpec& R, const Partition& lambda) {
  return star(w_of_partition(lambda, R.k), fundamental_weight(R.c, R.k));
}

/**
 * X_R acting on c(lambda). X_R has exactly one term that does not kill the
 * core; the result is that image. Throws std::logic_error if the action
 * produces anything other than a single core with coefficient 1.
 */
inline Partition single_term_action(const RectangleSpec& R, const Partition& lambda,
                                    const AlgebraElement& x_r) {
  const CoreSum image = act_on_core(x_r, bounded_to_core(lambda, R.k));
  if (image.size() != 1 || image.begin()->second != 1)
    throw std::logic_error("X_R on c" + lambda.to_string() + " is not a single term");
  return image.begin()->first;
}

inline Partition single_term_action(const RectangleSpec& R, const Partition& lambda) {
  return single_term_action(R, lambda, formula_X(R));
}

}  // namespace kschur
