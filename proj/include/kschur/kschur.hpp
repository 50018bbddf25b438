#pragma once

/**
 * @file kschur.hpp
 * @brief k-Schur functions in the standard basis of the affine nilCoxeter algebra.
 *
 * The coefficient of u(w_nu) in s_rho^(k) is delta_{nu,rho}, because s_rho^(k)
 * sends the empty core to c(rho) and distinct affine Grassmannian elements
 * send the empty core to distinct cores. Writing H_lambda = h_{lambda_1} ... ,
 * the coefficient K of u(w_nu) in H_lambda is therefore the multiplicity of
 * s_nu^(k) in H_lambda, and
 *
 *   s_lambda^(k) = H_lambda - sum_{nu != lambda} K_{nu,lambda} s_nu^(k).
 *
 * Only nu dominating lambda occur, so the recursion terminates; the table
 * still tracks in-progress entries and reports a cycle as a logic error.
 */

#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "kschur/affine_permutation.hpp"
#include "kschur/nilcoxeter.hpp"
#include "kschur/partition.hpp"

namespace kschur {

/// Coefficients of s_lambda^(k) in the H_mu basis.
using HExpansion = std::map<Partition, Integer>;

/// The k-bounded partition indexing an affine Grassmannian element.
inline Partition grassmannian_partition(const AffinePermutation& w) {
  auto core = element_core(w);
  if (!core) throw std::logic_error("affine Grassmannian element kills the empty core");
  return core_to_bounded(*core, w.k());
}

/**
 * Memoized k-Schur functions for one k. Lookups take a shared lock and
 * insertions an exclusive one; computation runs without holding the lock, so
 * concurrent callers may duplicate work but always insert equal values.
 */
class KSchurTable {
 public:
  explicit KSchurTable(int k) : k_(k) { detail::require_rank(k); }

  int k() const { return k_; }

  AlgebraElement kschur(const Partition& lambda) {
    require_k_bounded(lambda, k_);
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(lambda); it != table_.end()) return it->second.element;
      if (auto it = seeded_.find(lambda); it != seeded_.end()) return it->second;
    }
    return entry(lambda).element;
  }

  HExpansion h_expansion(const Partition& lambda) { return entry(lambda).h_coeffs; }

  /// Seeds the table, e.g. from a persisted cache. The h-expansion is left empty
  /// and recomputed on demand.
  void insert(const Partition& lambda, AlgebraElement element) {
    require_k_bounded(lambda, k_);
    std::unique_lock lock(mutex_);
    seeded_.insert_or_assign(lambda, std::move(element));
  }

  /// Snapshot of every standard-basis expansion known to the table.
  std::map<Partition, AlgebraElement> elements() const {
    std::shared_lock lock(mutex_);
    std::map<Partition, AlgebraElement> out;
    for (const auto& [p, e] : seeded_) out.insert_or_assign(p, e);
    for (const auto& [p, e] : table_) out.insert_or_assign(p, e.element);
    return out;
  }

  std::size_t cached() const {
    std::shared_lock lock(mutex_);
    return table_.size() + seeded_.size();
  }

 private:
  struct Entry {
    AlgebraElement element;
    HExpansion h_coeffs;
  };

  Entry entry(const Partition& lambda) {
    require_k_bounded(lambda, k_);
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(lambda); it != table_.end()) return it->second;
    }
    std::set<Partition> in_progress;
    return compute(lambda, in_progress);
  }

  Entry compute(const Partition& lambda, std::set<Partition>& in_progress) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(lambda); it != table_.end()) return it->second;
    }
    if (!in_progress.insert(lambda).second)
      throw std::logic_error("k-Schur recursion revisited " + lambda.to_string());

    const AlgebraElement h_lambda = h_product(lambda, k_);
    Entry out{h_lambda, HExpansion{{lambda, Integer(1)}}};
    bool diagonal_seen = false;
    for (const auto& [w, coeff] : h_lambda.terms()) {
      if (!is_affine_grassmannian(w)) continue;
      const Partition nu = grassmannian_partition(w);
      if (nu == lambda) {
        if (coeff != 1) throw std::logic_error("k-Kostka diagonal is not 1");
        diagonal_seen = true;
        continue;
      }
      const Entry sub = compute(nu, in_progress);
      out.element -= sub.element * coeff;
      for (const auto& [mu, c] : sub.h_coeffs) {
        auto& slot = out.h_coeffs[mu];
        slot -= c * coeff;
        if (slot == 0) out.h_coeffs.erase(mu);
      }
    }
    if (!diagonal_seen) throw std::logic_error("u(w_lambda) missing from H_lambda");

    in_progress.erase(lambda);
    std::unique_lock lock(mutex_);
    return table_.try_emplace(lambda, std::move(out)).first->second;
  }

  int k_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<Partition, Entry> table_;
  std::unordered_map<Partition, AlgebraElement> seeded_;
};

/// s_lambda^(k) with a fresh table.
inline AlgebraElement kschur(const Partition& lambda, int k) { return KSchurTable(k).kschur(lambda); }

inline HExpansion kschur_h_expansion(const Partition& lambda, int k) {
  return KSchurTable(k).h_expansion(lambda);
}

/// sum_mu coeff_mu H_mu.
inline AlgebraElement expand_h(const HExpansion& coeffs, int k) {
  AlgebraElement out(k);
  for (const auto& [mu, c] : coeffs) out += h_product(mu, k) * c;
  return out;
}

/**
 * c_{lambda,mu}^{nu,(k)}: the coefficient of u(w) in s_lambda^(k), where w is
 * the unique element with u(w) c(mu) = c(nu), if it exists.
 */
inline Integer lr_coefficient(KSchurTable& table, const Partition& lambda, const Partition& mu,
                              const Partition& nu) {
  const int k = table.k();
  require_k_bounded(lambda, k);
  require_k_bounded(mu, k);
  require_k_bounded(nu, k);
  if (nu.size() != lambda.size() + mu.size()) return 0;
  const AffinePermutation w = w_of_partition(nu, k) * w_of_partition(mu, k).inverse();
  if (w.length() != nu.size() - mu.size()) return 0;
  const auto image = act_on_core(w, bounded_to_core(mu, k));
  if (!image || *image != bounded_to_core(nu, k)) return 0;
  return table.kschur(lambda).coefficient(w);
}

inline Integer lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu, int k) {
  KSchurTable table(k);
  return lr_coefficient(table, lambda, mu, nu);
}

/**
 * The k-Pieri targets of lambda: every mu with u_mu = u_D u_lambda for an
 * i-subset D, i.e. u_D u(w_lambda) nonzero and affine Grassmannian.
 */
inline std::vector<Partition> pieri_targets(const Partition& lambda, int i, int k) {
  const AffinePermutation w_lambda = w_of_partition(lambda, k);
  std::vector<Partition> out;
  for (const auto& subset : subsets_of_size(k + 1, i)) {
    const Word y = cyclically_decreasing_word(subset, k);
    auto prod = word_element(k, y);
    auto full = basis_times_word(*prod, window_to_word(w_lambda));
    if (full && is_affine_grassmannian(*full)) out.push_back(grassmannian_partition(*full));
  }
  return out;
}

}  // namespace kschur
