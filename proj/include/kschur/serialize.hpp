#pragma once

/**
 * @file serialize.hpp
 * @brief JSON documents for expansions and the persisted k-Schur cache.
 *
 * Expansion document:
 *   {"k": int,
 *    "index": [int, ...] | {"rows": int, "cols": int},
 *    "terms": [{"window": [int, ...], "word": [int, ...], "coeff": int}, ...]}
 *
 * Terms are sorted by window. The window is authoritative; the word is a
 * reduced word kept for readability. A coefficient outside the int64 range
 * is written as a decimal string.
 */

#include <cstdint>
#include <limits>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>
#include <variant>
#include <vector>

#include <unistd.h>

#include <nlohmann/json.hpp>

#include "kschur/kschur.hpp"
#include "kschur/nilcoxeter.hpp"
#include "kschur/partition.hpp"
#include "kschur/rectangle.hpp"

namespace kschur {

using Json = nlohmann::json;

inline Json integer_to_json(const Integer& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(c);
  return c.str();
}

inline Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("coefficient must be an integer or a decimal string");
}

inline Json partition_to_json(const Partition& p) { return Json(std::vector<int>(p.parts().begin(), p.parts().end())); }

inline Partition partition_from_json(const Json& j) { return Partition(j.get<std::vector<int>>()); }

/// Terms of an element; with_words adds a reduced word per term.
inline Json terms_to_json(const AlgebraElement& e, bool with_words = true) {
  Json terms = Json::array();
  for (const auto& [w, c] : e.sorted_terms()) {
    Json t;
    t["window"] = std::vector<std::int64_t>(w.window().begin(), w.window().end());
    if (with_words) t["word"] = window_to_word(w);
    t["coeff"] = integer_to_json(c);
    terms.push_back(std::move(t));
  }
  return terms;
}

using ExpansionIndex = std::variant<Partition, RectangleSpec>;

struct ExpansionDocument {
  int k;
  ExpansionIndex index;
  AlgebraElement element;

  friend bool operator==(const ExpansionDocument&, const ExpansionDocument&) = default;
};

inline Json to_json(const ExpansionDocument& doc) {
  Json j;
  j["k"] = doc.k;
  if (const auto* p = std::get_if<Partition>(&doc.index)) {
    j["index"] = partition_to_json(*p);
  } else {
    const auto& R = std::get<RectangleSpec>(doc.index);
    j["index"] = Json{{"rows", R.r}, {"cols", R.c}};
  }
  j["terms"] = terms_to_json(doc.element);
  return j;
}

inline ExpansionDocument expansion_from_json(const Json& j) {
  const int k = j.at("k").get<int>();
  const Json& index = j.at("index");
  ExpansionIndex idx = index.is_array()
                           ? ExpansionIndex(partition_from_json(index))
                           : ExpansionIndex(RectangleSpec(k, index.at("cols").get<int>(), index.at("rows").get<int>()));
  AlgebraElement e(k);
  for (const auto& t : j.at("terms")) {
    const AffinePermutation w(k, t.at("window").get<std::vector<std::int64_t>>());
    if (t.contains("word") && word_to_window(k, t.at("word").get<Word>()) != w)
      throw std::invalid_argument("term word does not match its window");
    const Integer c = integer_from_json(t.at("coeff"));
    if (c == 0) throw std::invalid_argument("zero coefficient in document");
    e.add_term(w, c);
  }
  return {k, std::move(idx), std::move(e)};
}

/**
 * Directory of the persisted cache: $KSCHUR_CACHE_DIR, else
 * $XDG_CACHE_HOME/kschur, else $HOME/.cache/kschur, else ./.kschur-cache.
 */
inline std::filesystem::path default_cache_dir() {
  if (const char* dir = std::getenv("KSCHUR_CACHE_DIR"); dir && *dir) return dir;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "kschur";
  if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "kschur";
  return ".kschur-cache";
}

inline std::filesystem::path cache_file(const std::filesystem::path& dir, int k) {
  return dir / ("kschur-k" + std::to_string(k) + ".json");
}

/// {"k": int, "entries": [{"index": [int, ...], "terms": [{"window", "coeff"}, ...]}, ...]}
inline Json cache_to_json(const KSchurTable& table) {
  Json entries = Json::array();
  for (const auto& [lambda, e] : table.elements())
    entries.push_back(Json{{"index", partition_to_json(lambda)}, {"terms", terms_to_json(e, false)}});
  return Json{{"k", table.k()}, {"entries", std::move(entries)}};
}

/// Seeds the table from the cache file. A missing file is silent; a corrupt
/// one is reported on stderr and ignored. Returns the number of entries loaded.
inline std::size_t load_cache(KSchurTable& table, const std::filesystem::path& dir) {
  const auto path = cache_file(dir, table.k());
  std::ifstream in(path);
  if (!in) return 0;
  try {
    const Json j = Json::parse(in);
    if (j.at("k").get<int>() != table.k()) throw std::invalid_argument("cache k mismatch");
    std::vector<std::pair<Partition, AlgebraElement>> loaded;
    for (const auto& entry : j.at("entries")) {
      Partition lambda = partition_from_json(entry.at("index"));
      AlgebraElement e(table.k());
      for (const auto& t : entry.at("terms"))
        e.add_term(AffinePermutation(table.k(), t.at("window").get<std::vector<std::int64_t>>()),
                   integer_from_json(t.at("coeff")));
      loaded.emplace_back(std::move(lambda), std::move(e));
    }
    for (auto& [lambda, e] : loaded) table.insert(lambda, std::move(e));
    return loaded.size();
  } catch (const std::exception& e) {
    std::cerr << "warning: ignoring unreadable cache " << path << ": " << e.what() << "\n";
    return 0;
  }
}

/// Writes the cache atomically (temporary file, then rename).
inline void save_cache(const KSchurTable& table, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const auto path = cache_file(dir, table.k());
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << cache_to_json(table).dump() << "\n";
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace kschur
