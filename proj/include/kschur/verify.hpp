#pragma once

/**
 * @file verify.hpp
 * @brief Exhaustive checks of the rectangle identities, returned as
 * structured reports.
 */

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "kschur/kschur.hpp"
#include "kschur/nilcoxeter.hpp"
#include "kschur/partition.hpp"
#include "kschur/rectangle.hpp"

namespace kschur {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
  double millis = 0.0;
};

struct Report {
  std::vector<CheckResult> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
  }

  std::size_t failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; }));
  }

  void merge(Report other) {
    checks.insert(checks.end(), std::make_move_iterator(other.checks.begin()),
                  std::make_move_iterator(other.checks.end()));
  }
};

namespace detail {

/// Runs body, which returns an empty string on success or a failure description.
inline CheckResult timed_check(std::string suite, std::string name, const std::function<std::string()>& body) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult out{std::move(suite), std::move(name), false, {}, 0.0};
  try {
    out.detail = body();
    out.passed = out.detail.empty();
  } catch (const std::exception& e) {
    out.detail = std::string("exception: ") + e.what();
  }
  out.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

inline std::string binomial_count_detail(const AlgebraElement& e, const RectangleSpec& R) {
  std::size_t expected = subsets_of_size(R.k + 1, R.c).size();
  if (e.size() != expected)
    return "expected " + std::to_string(expected) + " terms, got " + std::to_string(e.size());
  if (!is_positive(e) || !std::all_of(e.terms().begin(), e.terms().end(), [](const auto& t) { return t.second == 1; }))
    return "coefficients are not all 1";
  if (!is_homogeneous(e, static_cast<std::int64_t>(R.r) * R.c)) return "support not of length rc";
  return {};
}

}  // namespace detail

/// X_R = Y_R = Z_R = W_R for every maximal rectangle with k <= kmax.
inline Report verify_equivalences(int kmax) {
  Report report;
  for (int k = 1; k <= kmax; ++k)
    for (const auto& R : maximal_rectangles(k))
      report.checks.push_back(detail::timed_check("equiv", R.to_string(), [&]() -> std::string {
        const AlgebraElement x = formula_X(R);
        if (auto d = detail::binomial_count_detail(x, R); !d.empty()) return "X_R: " + d;
        if (formula_Y(R) != x) return "X_R != Y_R";
        if (formula_Z(R) != x) return "X_R != Z_R";
        if (formula_W(R) != x) return "X_R != W_R";
        return {};
      }));
  return report;
}

/**
 * X_R = s_R^(k), and X_R c(lambda) = c(lambda u R) for every k-bounded lambda
 * with |lambda| <= max_size.
 */
inline Report verify_main(const RectangleSpec& R, KSchurTable& table, int max_size) {
  Report report;
  const AlgebraElement x = formula_X(R);
  report.checks.push_back(detail::timed_check("main", "X_R = s_R " + R.to_string(), [&]() -> std::string {
    return table.kschur(R.shape()) == x ? std::string{} : "X_R differs from the k-Schur expansion";
  }));
  report.checks.push_back(detail::timed_check("main", "X_R c(lambda) = c(lambda u R) " + R.to_string(), [&]() -> std::string {
    for (int n = 0; n <= max_size; ++n)
      for (const auto& lambda : partitions_of(n, R.k)) {
        const Partition image = single_term_action(R, lambda, x);
        if (image != bounded_to_core(lambda.union_with(R.shape()), R.k))
          return "wrong image for lambda = " + lambda.to_string();
      }
    return {};
  }));
  return report;
}

/// X_R u_i = u_{i+c} X_R for every i.
inline Report verify_commutation(const RectangleSpec& R) {
  Report report;
  const AlgebraElement x = formula_X(R);
  for (Residue i = 0; i <= R.k; ++i)
    report.checks.push_back(detail::timed_check(
        "commute", R.to_string() + ", i=" + std::to_string(i), [&]() -> std::string {
          const AlgebraElement lhs = x * AlgebraElement::generator(R.k, i);
          const AlgebraElement rhs = AlgebraElement::generator(R.k, residue(i + R.c, R.k)) * x;
          return lhs == rhs ? std::string{} : "X_R u_i != u_{i+c} X_R";
        }));
  return report;
}

/// h_i s_lambda = sum of s_mu over the k-Pieri targets, for |lambda| <= max_size.
inline Report verify_pieri(KSchurTable& table, int max_size) {
  Report report;
  const int k = table.k();
  for (int n = 0; n <= max_size; ++n)
    for (const auto& lambda : partitions_of(n, k))
      report.checks.push_back(detail::timed_check(
          "pieri", "k=" + std::to_string(k) + ", lambda=" + lambda.to_string(), [&]() -> std::string {
            const AlgebraElement s = table.kschur(lambda);
            for (int i = 1; i <= k; ++i) {
              AlgebraElement rhs(k);
              for (const auto& mu : pieri_targets(lambda, i, k)) rhs += table.kschur(mu);
              if (h(i, k) * s != rhs) return "fails for h_" + std::to_string(i);
            }
            return {};
          }));
  return report;
}

}  // namespace kschur
