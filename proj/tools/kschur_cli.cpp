// Command-line front end: k-Schur expansions, rectangle formulas,
// verification suites, core utilities and k-Littlewood-Richardson coefficients.
//
// Exit codes: 0 success / all checks pass, 1 verification failure, 2 usage error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kschur/serialize.hpp"
#include "kschur/verify.hpp"

namespace {

using namespace kschur;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// "6,4,3,1"; the empty string is the empty partition.
Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw UsageError("bad partition '" + text + "'");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw UsageError("bad partition '" + text + "'");
    }
    if (used != item.size()) throw UsageError("bad partition '" + text + "'");
    parts.push_back(v);
  }
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

/// "2,0,1" or, when every letter is a single digit, "201".
Word parse_word(const std::string& text, int k) {
  Word word;
  try {
    if (text.find(',') != std::string::npos) {
      std::stringstream in(text);
      std::string item;
      while (std::getline(in, item, ',')) word.push_back(std::stoi(item));
    } else {
      for (char ch : text) {
        if (ch < '0' || ch > '9') throw UsageError("bad word '" + text + "'");
        word.push_back(ch - '0');
      }
    }
  } catch (const std::logic_error&) {
    throw UsageError("bad word '" + text + "'");
  }
  for (Residue i : word)
    if (i < 0 || i > k) throw UsageError("letter out of range in word '" + text + "'");
  return word;
}

Partition bounded(const std::string& text, int k) {
  Partition p = parse_partition(text);
  if (!is_k_bounded(p, k)) throw UsageError("partition " + p.to_string() + " is not " + std::to_string(k) + "-bounded");
  return p;
}

std::string partition_text(const Partition& p) {
  std::string s;
  for (int v : p.parts()) s += (s.empty() ? "" : ",") + std::to_string(v);
  return s.empty() ? "()" : s;
}

void print_expansion(const ExpansionDocument& doc, const std::string& format, const std::string& title) {
  if (format == "json") {
    std::cout << to_json(doc).dump(2) << "\n";
    return;
  }
  std::cout << title << " (" << doc.element.size() << " terms)\n";
  for (const auto& [w, c] : doc.element.sorted_terms())
    std::cout << "  " << c << "  " << word_to_string(window_to_word(w), 'u') << "  " << w.to_string() << "\n";
}

struct CacheOptions {
  std::string dir;
  bool disabled = false;

  std::filesystem::path path() const { return dir.empty() ? default_cache_dir() : std::filesystem::path(dir); }
};

void persist(const KSchurTable& table, const CacheOptions& cache) {
  if (cache.disabled) return;
  try {
    save_cache(table, cache.path());
  } catch (const std::exception& e) {
    std::cerr << "warning: could not write cache: " << e.what() << "\n";
  }
}

void seed(KSchurTable& table, const CacheOptions& cache) {
  if (!cache.disabled) load_cache(table, cache.path());
}

Json report_to_json(const Report& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks)
    checks.push_back(Json{{"suite", c.suite}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}, {"millis", c.millis}});
  return Json{{"passed", report.passed()}, {"failures", report.failures()}, {"checks", std::move(checks)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-Schur functions in the affine nilCoxeter algebra"};
  app.require_subcommand(1);

  CacheOptions cache;
  app.add_option("--cache-dir", cache.dir, "Cache directory (default: $KSCHUR_CACHE_DIR, then ~/.cache/kschur)");
  app.add_flag("--no-cache", cache.disabled, "Neither read nor write the k-Schur cache");

  std::string format = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  // kschur
  int k = 0;
  std::string partition;
  auto* kschur_cmd = app.add_subcommand("kschur", "Standard-basis expansion of a k-Schur function");
  kschur_cmd->add_option("--k", k, "Rank parameter k")->required()->check(CLI::PositiveNumber);
  kschur_cmd->add_option("--partition", partition, "k-bounded partition, comma separated ('' for empty)")->required();
  add_format(kschur_cmd);

  // rect
  int rows = 0;
  std::string formula = "all";
  auto* rect_cmd = app.add_subcommand("rect", "Rectangle formulas X, Y, Z, W for R = ((k+1-rows)^rows)");
  rect_cmd->add_option("--k", k, "Rank parameter k")->required()->check(CLI::PositiveNumber);
  rect_cmd->add_option("--rows", rows, "Number of rows, 1 <= rows <= k")->required();
  rect_cmd->add_option("--formula", formula, "Formula to emit")->check(CLI::IsMember({"x", "y", "z", "w", "all"}));
  add_format(rect_cmd);

  // verify
  int kmax = 0;
  std::string suite = "all";
  int max_size = -1;
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites; prints a JSON report");
  verify_cmd->add_option("--kmax", kmax, "Largest k to check")->required()->check(CLI::PositiveNumber);
  verify_cmd->add_option("--suite", suite, "Suite to run")->check(CLI::IsMember({"equiv", "main", "commute", "pieri", "all"}));
  verify_cmd->add_option("--max-size", max_size,
                         "Largest |lambda| for the core-action and Pieri checks (default 6 for main, 4 for pieri)");

  // core
  std::string word_text;
  auto* core_cmd = app.add_subcommand("core", "Cores and k-bounded partitions");
  core_cmd->require_subcommand(1);
  auto* act_cmd = core_cmd->add_subcommand("act", "Apply u_{i_1} ... u_{i_m} (rightmost first) to a core");
  auto* to_core_cmd = core_cmd->add_subcommand("to-core", "The (k+1)-core of a k-bounded partition");
  auto* to_bounded_cmd = core_cmd->add_subcommand("to-bounded", "The k-bounded partition of a (k+1)-core");
  auto* word_cmd = core_cmd->add_subcommand("word", "Reduced word and window of w_lambda");
  for (auto* sub : {act_cmd, to_core_cmd, to_bounded_cmd, word_cmd}) {
    sub->add_option("--k", k, "Rank parameter k")->required()->check(CLI::PositiveNumber);
    sub->add_option("--partition", partition, "Partition, comma separated ('' for empty)")->required();
    add_format(sub);
  }
  act_cmd->add_option("--word", word_text, "Generator indices, e.g. 1 or 2,0,1")->required();

  // lr
  std::string lambda_text, mu_text, nu_text;
  auto* lr_cmd = app.add_subcommand("lr", "k-Littlewood-Richardson coefficient c_{lambda,mu}^{nu}");
  lr_cmd->add_option("--k", k, "Rank parameter k")->required()->check(CLI::PositiveNumber);
  lr_cmd->add_option("--lambda", lambda_text, "k-bounded partition")->required();
  lr_cmd->add_option("--mu", mu_text, "k-bounded partition")->required();
  lr_cmd->add_option("--nu", nu_text, "k-bounded partition")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*kschur_cmd) {
      const Partition lambda = bounded(partition, k);
      KSchurTable table(k);
      seed(table, cache);
      ExpansionDocument doc{k, lambda, table.kschur(lambda)};
      persist(table, cache);
      print_expansion(doc, format, "s_" + lambda.to_string() + "^(" + std::to_string(k) + ")");
      return EXIT_SUCCESS;
    }

    if (*rect_cmd) {
      if (rows < 1 || rows > k) throw UsageError("--rows must satisfy 1 <= rows <= k");
      const RectangleSpec R = RectangleSpec::with_rows(k, rows);
      std::vector<std::pair<std::string, AlgebraElement>> out;
      if (formula == "x" || formula == "all") out.emplace_back("x", formula_X(R));
      if (formula == "y" || formula == "all") out.emplace_back("y", formula_Y(R));
      if (formula == "z" || formula == "all") out.emplace_back("z", formula_Z(R));
      if (formula == "w" || formula == "all") out.emplace_back("w", formula_W(R));
      bool equal = true;
      for (const auto& [name, e] : out) equal = equal && e == out.front().second;
      if (format == "json") {
        Json j;
        for (const auto& [name, e] : out) j["formulas"][name] = to_json(ExpansionDocument{k, R, e});
        if (formula == "all") j["equal"] = equal;
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& [name, e] : out) {
          std::string upper = name;
          upper[0] = static_cast<char>(upper[0] - 'a' + 'A');
          print_expansion(ExpansionDocument{k, R, e}, format, upper + "_R for R = " + R.to_string());
        }
        if (formula == "all") std::cout << "equal: " << (equal ? "true" : "false") << "\n";
      }
      return equal ? EXIT_SUCCESS : kExitFailure;
    }

    if (*verify_cmd) {
      Report report;
      const bool all = suite == "all";
      if (all || suite == "equiv") report.merge(verify_equivalences(kmax));
      for (int kk = 1; kk <= kmax; ++kk) {
        const bool needs_table = all || suite == "main" || suite == "pieri";
        std::optional<KSchurTable> table;
        if (needs_table) {
          table.emplace(kk);
          seed(*table, cache);
        }
        for (const auto& R : maximal_rectangles(kk)) {
          if (all || suite == "main") report.merge(verify_main(R, *table, max_size < 0 ? 6 : max_size));
          if (all || suite == "commute") report.merge(verify_commutation(R));
        }
        if (all || suite == "pieri") report.merge(verify_pieri(*table, max_size < 0 ? 4 : max_size));
        if (table) persist(*table, cache);
      }
      std::cout << report_to_json(report).dump(2) << "\n";
      return report.passed() ? EXIT_SUCCESS : kExitFailure;
    }

    if (*core_cmd) {
      const Partition p = parse_partition(partition);
      auto emit_partition = [&](const std::optional<Partition>& result) {
        if (format == "json")
          std::cout << (result ? partition_to_json(*result) : Json(nullptr)).dump() << "\n";
        else
          std::cout << (result ? partition_text(*result) : std::string("0")) << "\n";
      };
      if (*act_cmd) {
        if (!is_core(p, k)) throw UsageError(p.to_string() + " is not a " + std::to_string(k + 1) + "-core");
        emit_partition(u_word_action(parse_word(word_text, k), p, k));
      } else if (*to_core_cmd) {
        emit_partition(bounded_to_core(bounded(partition, k), k));
      } else if (*to_bounded_cmd) {
        if (!is_core(p, k)) throw UsageError(p.to_string() + " is not a " + std::to_string(k + 1) + "-core");
        emit_partition(core_to_bounded(p, k));
      } else {
        const Partition lambda = bounded(partition, k);
        const AffinePermutation w = w_of_partition(lambda, k);
        const Word word = window_to_word(w);
        const Partition core = bounded_to_core(lambda, k);
        if (format == "json") {
          std::cout << Json{{"word", word},
                            {"window", std::vector<std::int64_t>(w.window().begin(), w.window().end())},
                            {"core", partition_to_json(core)}}
                           .dump()
                    << "\n";
        } else {
          std::cout << word_to_string(word) << "  " << w.to_string() << "  core " << partition_text(core) << "\n";
        }
      }
      return EXIT_SUCCESS;
    }

    if (*lr_cmd) {
      const Partition lambda = bounded(lambda_text, k);
      const Partition mu = bounded(mu_text, k);
      const Partition nu = bounded(nu_text, k);
      KSchurTable table(k);
      seed(table, cache);
      const Integer c = lr_coefficient(table, lambda, mu, nu);
      persist(table, cache);
      std::cout << c << "\n";
      return EXIT_SUCCESS;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return EXIT_SUCCESS;
}
