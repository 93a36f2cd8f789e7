// Prints one PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.

#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "vermajet/discriminant.hpp"
#include "vermajet/filtration.hpp"
#include "vermajet/jets.hpp"
#include "vermajet/report.hpp"

using namespace vermajet;

namespace {

struct Tally {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
};

Tally tally(const Json& records, const std::set<std::string>& checks, const std::function<bool(const Json&)>& keep = {}) {
  Tally t;
  for (const auto& r : records) {
    if (!checks.count(r["check"].get<std::string>())) continue;
    if (keep && !keep(r)) continue;
    const auto status = r["status"].get<std::string>();
    if (status == "pass") ++t.passed;
    else if (status == "fail") ++t.failed;
    else if (status == "skipped") ++t.skipped;
  }
  return t;
}

bool clean(const Tally& t) { return t.passed > 0 && t.failed == 0; }

bool has_case(const Json& records, const std::string& check, const std::string& where) {
  for (const auto& r : records) {
    if (r["check"] == check && r["case"] == where && r["status"] == "pass") return true;
  }
  return false;
}

int level_of(const Json& r) {
  const auto where = r["case"].get<std::string>();
  const auto pos = where.find(" l=");
  return pos == std::string::npos ? 0 : std::stoi(where.substr(pos + 3));
}

}  // namespace

int main(int argc, char** argv) {
  const SuiteConfig config = argc > 1 ? load_suite_config(argv[1]) : default_desk_suite();
  const Report report = suite_report(config);
  const Json& rec = report.body["records"];

  struct Line {
    int id;
    std::string title;
    bool pass;
    std::string detail;
  };
  std::vector<Line> lines;
  auto add = [&](int id, std::string title, bool pass, const Tally& t) {
    lines.push_back({id, std::move(title), pass, std::to_string(t.passed) + " exact checks"});
  };

  {
    const auto t = tally(rec, {"filtration_dim"});
    const bool direct = canonical_filtration(2, 2, 3, 2).levels[2].dim == 15;
    add(1, "dim U_l(g)v = binom(mn+l, mn) for l < d", clean(t) && direct && has_case(rec, "filtration_dim", "m=2 n=2 d=3 l=2"), t);
  }
  {
    const auto t = tally(rec, {"pbw_independent"});
    add(2, "PBW vectors z^a v are independent", clean(t), t);
  }
  {
    const auto t = tally(rec, {"verma_split"});
    const auto low = tally(rec, {"verma_split"}, [](const Json& r) { return level_of(r) <= 2; });
    add(3, "U_l(g) = U_l(n) + ann_l(v) in dimension", clean(t) && low.skipped == 0, t);
  }
  {
    const auto t = tally(rec, {"char_ideal"});
    add(4, "x (y - rho(y)) v = 0 for deg x <= l - 1", clean(t), t);
  }
  {
    const auto t = tally(rec, {"lowering_power"});
    add(5, "lowering powers on v", clean(t), t);
  }
  {
    const auto t = tally(rec, {"taylor_rank"});
    add(6, "Taylor rank = binom(mn+l, mn) for 1 <= l <= d", clean(t), t);
  }
  {
    const auto t = tally(rec, {"kernel_dim", "section_count"});
    const bool gr24 = section_space(2, 2, 2).dim() == 20 && weyl_dim_oracle(2, 2, 2) == 20;
    add(7, "kernel = h0 - binom(mn+l, mn), h0 by hook-content", clean(t) && gr24, t);
  }
  {
    const auto t = tally(rec, {"duality_dim", "duality_pairing"});
    add(8, "U_l(g)v dual to the jet fiber, pairing vanishes", clean(t), t);
  }
  {
    auto t = tally(rec, {"projective_rule"});
    bool sweep = true;
    for (int n = 1; n <= 3; ++n) {
      for (int d = 1; d <= 5; ++d) {
        for (int l = 1; l <= d; ++l) {
          ++t.passed;
          sweep = sweep && projective_rule_check(n, d, l, config.caps);
        }
      }
    }
    add(9, "projective space: Taylor rows = monomial jet rule", clean(t) && sweep, t);
  }
  {
    const auto t = tally(rec, {"multi_filtration"});
    const bool direct = multi_filtration(1, 1, {2, 3}, 1) == 4 && multi_filtration(2, 2, {2, 2}, 1) == 10;
    add(10, "direct sums of highest weight vectors", clean(t) && direct, t);
  }
  {
    const auto t = tally(rec, {"disc_oracle", "disc_jacobian", "disc_membership", "disc_distinct_roots", "disc_certified"});
    bool envelope = true;
    for (int d = 2; d <= 4; ++d) envelope = envelope && has_case(rec, "disc_oracle", "d=" + std::to_string(d) + " l=1");
    for (const char* c : {"d=3 l=1", "d=4 l=1", "d=3 l=2", "d=4 l=2"}) envelope = envelope && has_case(rec, "disc_jacobian", c);
    envelope = envelope && has_case(rec, "disc_certified", "d=2 l=1") && has_case(rec, "disc_certified", "d=3 l=1");
    add(11, "multiple-root eliminants, Jacobian ranks, certificates", clean(t) && envelope, t);
  }
  {
    const auto t = tally(rec, {"jacobi", "action_law", "rank_nullity"});
    bool jacobi = false;
    for (const auto& c : config.jacobi) jacobi = jacobi || (c.size == 4 && c.samples >= 200);
    jacobi = jacobi && has_case(rec, "jacobi", "sl2") && has_case(rec, "jacobi", "sl3");
    const auto laws = tally(rec, {"action_law"});
    add(12, "Jacobi, action law, rank-nullity", clean(t) && jacobi && laws.passed == config.cases.size(), t);
  }

  bool all = true;
  for (const auto& l : lines) {
    std::cout << (l.pass ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << l.id << "  " << l.title << "  (" << l.detail << ")\n";
    all = all && l.pass;
  }
  std::cout << (all ? "ALL PASS" : "SOME FAILED") << "  " << report.body["summary"].dump() << "\n";
  return all ? 0 : 1;
}
