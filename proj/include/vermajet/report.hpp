#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "vermajet/discriminant.hpp"
#include "vermajet/plethysm.hpp"

namespace vermajet {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "vermajet/1";

enum class Format { json, csv };
Format format_from_string(const std::string& name);

/// One grassmannian case; l runs over [l_min, l_max]. l_max = 0 means min(d - 1, 3).
struct CaseSpec {
  int m = 1;
  int n = 1;
  int d = 1;
  int l_min = 1;
  int l_max = 0;
};

struct DiscCase {
  int d = 2;
  int l = 1;
};

struct MultiCase {
  int m = 1;
  int n = 1;
  std::vector<int> degrees;
  int l = 1;
};

struct JacobiCase {
  int size = 2;                // sl(size)
  std::size_t samples = 0;     // 0 = every basis triple
};

struct SuiteConfig {
  std::vector<CaseSpec> cases;
  std::vector<DiscCase> disc;
  std::vector<MultiCase> multi;
  std::vector<JacobiCase> jacobi;
  Caps caps;
  int disc_cap = kDefaultDiscriminantCap;
  std::size_t action_vectors = 50;
  Format format = Format::json;
  std::uint64_t seed = 1;
  bool timings = false;
};

SuiteConfig default_desk_suite();

/// Missing keys take their defaults. Throws std::invalid_argument on bad values.
SuiteConfig suite_config_from_json(const Json& j);
Json to_json(const SuiteConfig& config);
SuiteConfig load_suite_config(const std::string& path);

struct Report {
  Json body;
  std::vector<std::string> failures;

  bool pass() const { return failures.empty(); }
};

Report filtration_report(int m, int n, int d, int l_max, const Caps& caps = {});
Report taylor_report(int m, int n, int d, int l, const Caps& caps = {});
Report split_report(int m, int n, int d, int l, const Caps& caps = {});
Report serre_report(int m, int n, int d, const Caps& caps = {});
Report duality_report(int m, int n, int d, int l, const Caps& caps = {});
Report disc_report(int d, int l, std::uint64_t seed = 1, int cap = kDefaultDiscriminantCap);
Report suite_report(const SuiteConfig& config);

/// JSON: two-space indented, key order fixed. CSV: suite records one per row,
/// other reports flattened to key,value rows.
std::string render(const Report& report, Format format);

/// Command-line entry point. Exit codes: 0 pass, 1 invariant failed,
/// 2 invalid input, 3 size cap exceeded.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace vermajet
