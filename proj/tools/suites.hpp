#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "iwasawa/fields.hpp"
#include "json.hpp"

namespace iwasawa::cli {

using Json = nlohmann::ordered_json;

struct SuiteConfig {
  std::string suite;
  std::optional<i64> p;
  std::optional<int> n;
  std::optional<int> prec;
  std::optional<int> samples;
  std::optional<i64> f_max;
  std::vector<i64> l;        // efe moduli
  std::optional<double> tol;
  std::string field;               // empty: the suite default
  int stabilize = 10;
  int cap = 200;
  std::uint64_t seed = 1;
  int threads = 1;
};

struct Check {
  std::string name;
  bool pass;
  Json data;
};

struct Report {
  std::string suite;
  Json params;
  std::vector<Check> checks;
  std::uint64_t seed;
  bool all_pass() const;
  Json to_json() const;
  /// One row per check: suite,name,status,data.
  std::string to_csv() const;
};

const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown suite or bad parameters.
Report run_suite(const SuiteConfig& cfg);

/// "Q", "cyclotomic:m" or "quadratic:D".
AbelianField parse_field(const std::string& s);

}  // namespace iwasawa::cli
