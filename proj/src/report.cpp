#include "vermajet/report.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "vermajet/filtration.hpp"
#include "vermajet/jets.hpp"
#include "vermajet/lie.hpp"
#include "vermajet/linalg.hpp"

namespace vermajet {

namespace {

void require_case(int m, int n, int d) {
  if (m < 1 || n < 1) throw std::invalid_argument("need m >= 1 and n >= 1");
  if (d < 1) throw std::invalid_argument("need d >= 1");
}

std::uint64_t expected_dim(int m, int n, int l) {
  const auto mn = static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(n);
  return binomial(mn + static_cast<std::uint64_t>(l), mn);
}

Json header(const std::string& command) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  return j;
}

void finish(Report& r) {
  r.body["failures"] = r.failures;
  r.body["verdict"] = r.pass() ? "pass" : "fail";
}

std::string label(int m, int n, int d) {
  return "m=" + std::to_string(m) + " n=" + std::to_string(n) + " d=" + std::to_string(d);
}

std::string label(int m, int n, int d, int l) { return label(m, n, d) + " l=" + std::to_string(l); }

std::string disc_label(int d, int l) { return "d=" + std::to_string(d) + " l=" + std::to_string(l); }

class Recorder {
 public:
  void check(const std::string& name, const std::string& where, Json value, Json expected, bool ok) {
    push(name, where, std::move(value), std::move(expected), ok ? "pass" : "fail");
    if (!ok) failures_.push_back(name + " [" + where + "]");
  }
  void info(const std::string& name, const std::string& where, Json value) {
    push(name, where, std::move(value), nullptr, "info");
  }
  void skip(const std::string& name, const std::string& where, const std::string& reason) {
    push(name, where, reason, nullptr, "skipped");
  }

  Json& records() { return records_; }
  std::vector<std::string>& failures() { return failures_; }

 private:
  void push(const std::string& name, const std::string& where, Json value, Json expected, const char* status) {
    Json rec;
    rec["check"] = name;
    rec["case"] = where;
    rec["value"] = std::move(value);
    rec["expected"] = std::move(expected);
    rec["status"] = status;
    records_.push_back(std::move(rec));
  }

  Json records_ = Json::array();
  std::vector<std::string> failures_;
};

std::vector<Rational> distinct_root_form(int d) {
  // prod_{k=1..d} (x_0 - k x_1)
  std::vector<Rational> c{Rational(1)};
  for (int k = 1; k <= d; ++k) {
    std::vector<Rational> next(c.size() + 1, Rational(0));
    for (std::size_t j = 0; j < c.size(); ++j) {
      next[j] += c[j];
      next[j + 1] -= c[j] * k;
    }
    c = std::move(next);
  }
  return c;
}

}  // namespace

Format format_from_string(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw std::invalid_argument("unknown format: " + name);
}

Report filtration_report(int m, int n, int d, int l_max, const Caps& caps) {
  require_case(m, n, d);
  const auto f = canonical_filtration(m, n, d, l_max, caps);
  Report r;
  r.body = header("filtration");
  r.body["m"] = m;
  r.body["n"] = n;
  r.body["d"] = d;
  r.body["lmax"] = l_max;
  const auto dims = f.dims();
  Json expected = Json::array();
  bool ok = true;
  for (int l = 0; l <= l_max; ++l) {
    expected.push_back(expected_dim(m, n, l));
    if (l < d && dims[static_cast<std::size_t>(l)] != expected_dim(m, n, l)) ok = false;
  }
  r.body["dims"] = dims;
  r.body["expected"] = expected;
  r.body["formula_ok"] = ok;
  r.body["asserted_through"] = std::min(l_max, d - 1);
  r.body["weyl_dim"] = f.full_dim;
  Json saturated = Json::array();
  for (const auto& level : f.levels) saturated.push_back(level.saturated);
  r.body["saturated"] = saturated;
  if (!ok) r.failures.push_back("filtration_dim");
  finish(r);
  return r;
}

Report taylor_report(int m, int n, int d, int l, const Caps& caps) {
  require_case(m, n, d);
  const auto t = taylor_matrix(m, n, d, l, caps);
  const std::size_t h0 = t.sections.dim();
  const std::uint64_t expected = expected_dim(m, n, l);
  const std::uint64_t weyl = weyl_dim_oracle(m, n, d);
  const bool asserted = l >= 1 && l <= d;
  Report r;
  r.body = header("taylor");
  r.body["m"] = m;
  r.body["n"] = n;
  r.body["d"] = d;
  r.body["l"] = l;
  r.body["rank"] = t.rank;
  r.body["expected"] = expected;
  r.body["kernel"] = h0 - t.rank;
  r.body["h0"] = h0;
  r.body["weyl_dim"] = weyl;
  r.body["jets"] = t.jets.size();
  r.body["asserted"] = asserted;
  if (asserted) {
    if (t.rank != expected) r.failures.push_back("taylor_rank");
    if (h0 != weyl) r.failures.push_back("section_count");
  }
  finish(r);
  return r;
}

Report split_report(int m, int n, int d, int l, const Caps& caps) {
  require_case(m, n, d);
  if (l < 1) throw std::invalid_argument("split needs l >= 1");
  Report r;
  r.body = header("split");
  r.body["m"] = m;
  r.body["n"] = n;
  r.body["d"] = d;
  r.body["l"] = l;
  if (l < d) {
    const auto s = verma_split_check(m, n, d, l, caps);
    r.body["dim_Ul_g"] = s.dim_Ul_g;
    r.body["dim_Ul_n"] = s.dim_Ul_n;
    r.body["dim_ann"] = s.dim_ann;
    r.body["rank_g"] = s.rank_g;
    r.body["rank_n"] = s.rank_n;
    r.body["split_holds"] = s.split_holds;
    r.body["asserted"] = true;
    if (!s.split_holds) r.failures.push_back("verma_split");
  } else {
    // Past the range of the statement: dimensions only.
    const auto eval_g = evaluation_matrix(m, n, d, l, SubalgebraTag::all, caps);
    const auto eval_n = evaluation_matrix(m, n, d, l, SubalgebraTag::n, caps);
    const auto rank_g = static_cast<std::size_t>(rank(eval_g));
    r.body["dim_Ul_g"] = eval_g.rows();
    r.body["dim_Ul_n"] = eval_n.rows();
    r.body["dim_ann"] = static_cast<std::size_t>(eval_g.rows()) - rank_g;
    r.body["rank_g"] = rank_g;
    r.body["rank_n"] = rank(eval_n);
    r.body["asserted"] = false;
  }
  finish(r);
  return r;
}

Report serre_report(int m, int n, int d, const Caps& caps) {
  require_case(m, n, d);
  Report r;
  r.body = header("serre");
  r.body["m"] = m;
  r.body["n"] = n;
  r.body["d"] = d;
  Json roots = Json::array();
  for (const auto& rec : serre_power_check(m, n, d, caps)) {
    const int expected = rec.root == m ? d + 1 : 1;
    Json j;
    j["root"] = rec.root;
    j["expected_power"] = rec.expected_power;
    j["nilpotency"] = rec.nilpotency;
    j["ok"] = rec.ok && rec.nilpotency == expected;
    roots.push_back(j);
    if (!j["ok"].get<bool>()) r.failures.push_back("lowering_power root " + std::to_string(rec.root));
  }
  r.body["roots"] = roots;
  finish(r);
  return r;
}

Report duality_report(int m, int n, int d, int l, const Caps& caps) {
  require_case(m, n, d);
  if (l < 1 || l > d) throw std::invalid_argument("duality needs 1 <= l <= d");
  Report r;
  r.body = header("duality");
  r.body["m"] = m;
  r.body["n"] = n;
  r.body["d"] = d;
  r.body["l"] = l;
  if (l < d) {
    const auto dr = duality_check(m, n, d, l, caps);
    r.body["filtration_dim"] = dr.filtration_dim;
    r.body["taylor_rank"] = dr.taylor_rank;
    r.body["pairings_checked"] = dr.pairings_checked;
    r.body["dim_match"] = dr.dim_match;
    r.body["pairing_vanishes"] = dr.pairing_vanishes;
    r.body["asserted"] = true;
    if (!dr.dim_match) r.failures.push_back("duality_dim");
    if (!dr.pairing_vanishes) r.failures.push_back("duality_pairing");
  } else {
    const auto f = canonical_filtration(m, n, d, l, caps);
    r.body["filtration_dim"] = f.levels.back().dim;
    r.body["taylor_rank"] = taylor_matrix(m, n, d, l, caps).rank;
    r.body["asserted"] = false;
  }
  finish(r);
  return r;
}

Report disc_report(int d, int l, std::uint64_t seed, int cap) {
  const Eliminant e = multiple_root_eliminant(d, l, seed, cap);
  const auto names = coefficient_names(d);
  Report r;
  r.body = header("disc");
  r.body["d"] = d;
  r.body["l"] = l;
  Json gens = Json::array();
  for (const auto& g : e.generators) gens.push_back(g.str(names));
  r.body["generators"] = gens;
  r.body["degrees"] = e.degrees();
  if (e.generators.empty()) r.failures.push_back("disc_generators");

  if (l == 1) {
    const auto oracle = classical_discriminant_oracle(d, cap);
    const bool match = !e.generators.empty() &&
                       (e.generators[0] == oracle.generators[0] || e.generators[0] == -oracle.generators[0]);
    r.body["oracle_match"] = match;
    if (!match) r.failures.push_back("disc_oracle");
  }

  std::mt19937_64 rng(seed);
  Json ranks = Json::array();
  bool jac_ok = true;
  for (int k = 0; k < 5; ++k) {
    const auto rk = parametrization_jacobian_rank(d, l, random_sample(d, l, rng));
    ranks.push_back(rk);
    if (rk != static_cast<std::size_t>(d - l + 1)) jac_ok = false;
  }
  r.body["jacobian_ranks"] = ranks;
  r.body["jacobian_expected"] = d - l + 1;
  if (!jac_ok) r.failures.push_back("disc_jacobian");

  bool on_locus = true;
  for (int k = 0; k < 10; ++k) {
    const auto f = parametrized_form(d, l, random_sample(d, l, rng));
    for (const auto& g : e.generators) {
      if (!evaluate(g, f).is_zero()) on_locus = false;
    }
  }
  r.body["samples_on_locus"] = on_locus;
  if (!on_locus) r.failures.push_back("disc_membership");

  const BinaryForm distinct{distinct_root_form(d)};
  const bool nonzero = std::any_of(e.generators.begin(), e.generators.end(),
                                   [&](const Polynomial& g) { return !evaluate(g, distinct).is_zero(); });
  r.body["distinct_roots_nonzero"] = nonzero;
  if (!nonzero) r.failures.push_back("disc_distinct_roots");

  const auto w = irreducibility_witness(d, l, seed, cap);
  r.body["irreducibility"] = to_string(w.verdict);
  r.body["evidence"] = w.evidence;
  if (l == 1 && d <= 4 && w.verdict != Verdict::certified) r.failures.push_back("disc_certified");
  finish(r);
  return r;
}

namespace {

void audit(const RationalMatrix& m, std::size_t& count, bool& ok) {
  ++count;
  if (!check_rank_nullity(m).holds) ok = false;
}

void run_case(const SuiteConfig& config, const CaseSpec& c, Recorder& rec) {
  const int m = c.m;
  const int n = c.n;
  const int d = c.d;
  const int l_max = c.l_max > 0 ? c.l_max : std::max(1, std::min(d - 1, 3));
  const Caps& caps = config.caps;
  const auto ctx = build_context(m, n);
  const PlethysmModule module(ctx, d, caps.ambient);
  std::size_t audited = 0;
  bool audit_ok = true;

  const auto f = canonical_filtration(m, n, d, l_max, caps);
  for (int l = c.l_min; l <= l_max; ++l) {
    const auto dim = f.levels[static_cast<std::size_t>(l)].dim;
    if (l < d) {
      rec.check("filtration_dim", label(m, n, d, l), dim, expected_dim(m, n, l), dim == expected_dim(m, n, l));
    } else {
      rec.info("filtration_dim", label(m, n, d, l), dim);
    }
  }

  for (int l = c.l_min; l <= l_max && l < d; ++l) {
    const auto where = label(m, n, d, l);
    const auto pbw = pbw_filtration(m, n, d, l, caps);
    rec.check("pbw_independent", where, pbw.rank, expected_dim(m, n, l),
              pbw.independent && pbw.rank == expected_dim(m, n, l));
    RationalMatrix pbw_rows(static_cast<Eigen::Index>(pbw.vectors.size()), static_cast<Eigen::Index>(module.dim()));
    for (std::size_t k = 0; k < pbw.vectors.size(); ++k) pbw_rows.row(static_cast<Eigen::Index>(k)) = module.coordinates(pbw.vectors[k]).transpose();
    audit(pbw_rows, audited, audit_ok);

    const auto g_count = binomial(static_cast<std::uint64_t>(ctx.dim() + static_cast<std::size_t>(l)), ctx.dim());
    if (g_count <= caps.monomials) {
      const auto s = verma_split_check(m, n, d, l, caps);
      Json value;
      value["dim_Ul_g"] = s.dim_Ul_g;
      value["dim_Ul_n"] = s.dim_Ul_n;
      value["dim_ann"] = s.dim_ann;
      rec.check("verma_split", where, value, g_count, s.split_holds && s.dim_Ul_g == g_count);
      audit(RationalMatrix(evaluation_matrix(m, n, d, l, SubalgebraTag::all, caps).toDense()), audited, audit_ok);
      audit(RationalMatrix(evaluation_matrix(m, n, d, l, SubalgebraTag::n, caps).toDense()), audited, audit_ok);
    } else {
      rec.skip("verma_split", where, "PBW monomial count above cap");
    }

    const auto ci = char_ideal_generator_check(m, n, d, l, caps);
    rec.check("char_ideal", where, ci.generators_checked, nullptr, ci.holds);

    const auto du = duality_check(m, n, d, l, caps);
    Json value;
    value["filtration_dim"] = du.filtration_dim;
    value["taylor_rank"] = du.taylor_rank;
    rec.check("duality_dim", where, value, nullptr, du.dim_match);
    rec.check("duality_pairing", where, du.pairings_checked, nullptr, du.pairing_vanishes);
  }

  for (const auto& s : serre_power_check(m, n, d, caps)) {
    const int expected = s.root == m ? d + 1 : 1;
    rec.check("lowering_power", label(m, n, d) + " root=" + std::to_string(s.root), s.nilpotency, expected,
              s.ok && s.nilpotency == expected);
  }

  const auto weyl = weyl_dim_oracle(m, n, d);
  for (int l = 1; l <= d; ++l) {
    const auto where = label(m, n, d, l);
    const auto t = taylor_matrix(m, n, d, l, caps);
    rec.check("taylor_rank", where, t.rank, expected_dim(m, n, l), t.rank == expected_dim(m, n, l));
    audit(t.matrix, audited, audit_ok);
    const auto k = kernel_sections(m, n, d, l, caps);
    rec.check("section_count", where, k.h0, weyl, k.h0 == weyl);
    const auto kernel_expected = weyl - expected_dim(m, n, l);
    rec.check("kernel_dim", where, k.dim(), kernel_expected, k.dim() == kernel_expected);
    if (m == 1) rec.check("projective_rule", where, projective_rule_check(n, d, l, caps), true, projective_rule_check(n, d, l, caps));
  }

  std::mt19937_64 rng(config.seed);
  ChartPoint center(n, m);
  for (Eigen::Index i = 0; i < center.rows(); ++i) {
    for (Eigen::Index j = 0; j < center.cols(); ++j) center(i, j) = random_rational(rng);
  }
  rec.check("chart_homogeneity", label(m, n, d, 1), chart_homogeneity_check(m, n, d, 1, center, caps), true,
            chart_homogeneity_check(m, n, d, 1, center, caps));

  const std::size_t pairs = ctx.dim() <= 8 ? 0 : 20;
  const auto law = action_law_check(ctx, module, config.action_vectors, pairs, config.seed);
  rec.check("action_law", label(m, n, d), law.pairs_checked, nullptr, law.holds && law.vectors == config.action_vectors);

  rec.check("rank_nullity", label(m, n, d), audited, nullptr, audit_ok);
}

void run_disc(const SuiteConfig& config, const DiscCase& c, Recorder& rec) {
  const auto r = disc_report(c.d, c.l, config.seed, config.disc_cap);
  const auto where = disc_label(c.d, c.l);
  const auto& b = r.body;
  rec.info("disc_generators", where, b["generators"]);
  if (b.contains("oracle_match")) rec.check("disc_oracle", where, b["oracle_match"], true, b["oracle_match"].get<bool>());
  const auto expected = b["jacobian_expected"].get<int>();
  bool jac_ok = true;
  for (const auto& rk : b["jacobian_ranks"]) jac_ok = jac_ok && rk.get<int>() == expected;
  rec.check("disc_jacobian", where, b["jacobian_ranks"], expected, jac_ok);
  rec.check("disc_membership", where, b["samples_on_locus"], true, b["samples_on_locus"].get<bool>());
  rec.check("disc_distinct_roots", where, b["distinct_roots_nonzero"], true, b["distinct_roots_nonzero"].get<bool>());
  const auto verdict = b["irreducibility"].get<std::string>();
  if (c.l == 1 && c.d <= 4) {
    rec.check("disc_certified", where, verdict, "certified", verdict == "certified");
  } else {
    rec.info("disc_irreducibility", where, verdict);
  }

  std::size_t audited = 0;
  bool audit_ok = true;
  std::mt19937_64 rng(config.seed);
  for (int k = 0; k < 5; ++k) audit(parametrization_jacobian(c.d, c.l, random_sample(c.d, c.l, rng)), audited, audit_ok);
  rec.check("rank_nullity", where, audited, nullptr, audit_ok);
}

void run_multi(const SuiteConfig& config, const MultiCase& c, Recorder& rec) {
  std::ostringstream where;
  where << "m=" << c.m << " n=" << c.n << " degrees=";
  for (std::size_t k = 0; k < c.degrees.size(); ++k) where << (k ? "+" : "") << c.degrees[k];
  where << " l=" << c.l;
  const auto value = multi_filtration(c.m, c.n, c.degrees, c.l, config.caps);
  const int min_degree = *std::min_element(c.degrees.begin(), c.degrees.end());
  if (c.l < min_degree) {
    const std::uint64_t expected = expected_dim(c.m, c.n, c.l) * c.degrees.size();
    rec.check("multi_filtration", where.str(), value, expected, value == expected);
  } else {
    rec.info("multi_filtration", where.str(), value);
  }
}

void validate(const SuiteConfig& c) {
  if (c.caps.ambient == 0 || c.caps.monomials == 0 || c.disc_cap <= 0) throw std::invalid_argument("caps must be positive");
  for (const auto& k : c.cases) {
    require_case(k.m, k.n, k.d);
    if (k.l_min < 1) throw std::invalid_argument("case l_min must be >= 1");
    if (k.l_max != 0 && k.l_max < k.l_min) throw std::invalid_argument("case l_max must be >= l_min");
  }
  for (const auto& k : c.disc) {
    if (k.l < 1 || k.d <= k.l) throw std::invalid_argument("disc case needs 1 <= l < d");
  }
  for (const auto& k : c.multi) {
    require_case(k.m, k.n, 1);
    if (k.degrees.empty()) throw std::invalid_argument("multi case needs degrees");
  }
  for (const auto& k : c.jacobi) {
    if (k.size < 2) throw std::invalid_argument("jacobi size must be >= 2");
  }
}

template <typename T>
T field(const Json& j, const char* key, T fallback) {
  return j.contains(key) ? j.at(key).get<T>() : fallback;
}

void reject_unknown(const Json& j, std::initializer_list<const char*> keys, const std::string& where) {
  if (!j.is_object()) throw std::invalid_argument(where + " must be an object");
  for (const auto& [k, v] : j.items()) {
    if (std::none_of(keys.begin(), keys.end(), [&](const char* name) { return k == name; })) {
      throw std::invalid_argument("unknown key '" + k + "' in " + where);
    }
  }
}

}  // namespace

SuiteConfig default_desk_suite() {
  SuiteConfig c;
  c.cases = {{1, 1, 3}, {1, 1, 5}, {1, 2, 3}, {1, 3, 2}, {2, 2, 2}, {2, 2, 3}};
  c.disc = {{2, 1}, {3, 1}, {4, 1}, {3, 2}, {4, 2}};
  c.multi = {{1, 1, {2, 3}, 1}, {2, 2, {2, 2}, 1}};
  c.jacobi = {{2, 0}, {3, 0}, {4, 200}};
  return c;
}

SuiteConfig suite_config_from_json(const Json& j) {
  try {
    reject_unknown(j, {"cases", "disc", "multi", "jacobi", "caps", "action_vectors", "format", "seed", "timings"}, "config");
    SuiteConfig c;
    for (const auto& k : field(j, "cases", Json::array())) {
      reject_unknown(k, {"m", "n", "d", "l_min", "l_max"}, "case");
      c.cases.push_back({k.at("m").get<int>(), k.at("n").get<int>(), k.at("d").get<int>(), field(k, "l_min", 1), field(k, "l_max", 0)});
    }
    for (const auto& k : field(j, "disc", Json::array())) {
      reject_unknown(k, {"d", "l"}, "disc case");
      c.disc.push_back({k.at("d").get<int>(), k.at("l").get<int>()});
    }
    for (const auto& k : field(j, "multi", Json::array())) {
      reject_unknown(k, {"m", "n", "degrees", "l"}, "multi case");
      c.multi.push_back({k.at("m").get<int>(), k.at("n").get<int>(), k.at("degrees").get<std::vector<int>>(), k.at("l").get<int>()});
    }
    for (const auto& k : field(j, "jacobi", Json::array())) {
      reject_unknown(k, {"size", "samples"}, "jacobi case");
      c.jacobi.push_back({k.at("size").get<int>(), field<std::size_t>(k, "samples", 0)});
    }
    if (j.contains("caps")) {
      const auto& caps = j.at("caps");
      reject_unknown(caps, {"ambient", "monomials", "disc"}, "caps");
      if (field<long long>(caps, "ambient", 1) <= 0 || field<long long>(caps, "monomials", 1) <= 0) {
        throw std::invalid_argument("caps must be positive");
      }
      c.caps.ambient = field<std::size_t>(caps, "ambient", c.caps.ambient);
      c.caps.monomials = field<std::size_t>(caps, "monomials", c.caps.monomials);
      c.disc_cap = field(caps, "disc", c.disc_cap);
    }
    c.action_vectors = field<std::size_t>(j, "action_vectors", c.action_vectors);
    c.format = format_from_string(field<std::string>(j, "format", "json"));
    c.seed = field<std::uint64_t>(j, "seed", c.seed);
    c.timings = field(j, "timings", c.timings);
    validate(c);
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
}

Json to_json(const SuiteConfig& config) {
  Json j;
  j["cases"] = Json::array();
  for (const auto& c : config.cases) {
    j["cases"].push_back({{"m", c.m}, {"n", c.n}, {"d", c.d}, {"l_min", c.l_min}, {"l_max", c.l_max}});
  }
  j["disc"] = Json::array();
  for (const auto& c : config.disc) j["disc"].push_back({{"d", c.d}, {"l", c.l}});
  j["multi"] = Json::array();
  for (const auto& c : config.multi) j["multi"].push_back({{"m", c.m}, {"n", c.n}, {"degrees", c.degrees}, {"l", c.l}});
  j["jacobi"] = Json::array();
  for (const auto& c : config.jacobi) j["jacobi"].push_back({{"size", c.size}, {"samples", c.samples}});
  j["caps"] = {{"ambient", config.caps.ambient}, {"monomials", config.caps.monomials}, {"disc", config.disc_cap}};
  j["action_vectors"] = config.action_vectors;
  j["format"] = config.format == Format::json ? "json" : "csv";
  j["seed"] = config.seed;
  j["timings"] = config.timings;
  return j;
}

SuiteConfig load_suite_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("config " + path + ": " + e.what());
  }
  return suite_config_from_json(j);
}

Report suite_report(const SuiteConfig& config) {
  validate(config);
  Recorder rec;
  Json timings = Json::array();
  auto timed = [&](const std::string& where, auto&& body) {
    const auto start = std::chrono::steady_clock::now();
    body();
    if (config.timings) {
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
      timings.push_back({{"case", where}, {"seconds", elapsed.count()}});
    }
  };

  for (const auto& c : config.jacobi) {
    const auto where = "sl" + std::to_string(c.size);
    timed(where, [&] {
      const auto r = jacobi_check(build_context(1, c.size - 1), c.samples, config.seed);
      rec.check("jacobi", where, r.triples_checked, nullptr, r.holds);
    });
  }
  for (const auto& c : config.cases) timed(label(c.m, c.n, c.d), [&] { run_case(config, c, rec); });
  for (const auto& c : config.multi) timed("multi", [&] { run_multi(config, c, rec); });
  for (const auto& c : config.disc) timed(disc_label(c.d, c.l), [&] { run_disc(config, c, rec); });

  Report r;
  r.body = header("suite");
  r.body["config"] = to_json(config);
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t info = 0;
  std::size_t skipped = 0;
  for (const auto& x : rec.records()) {
    const auto status = x["status"].get<std::string>();
    if (status == "pass") ++passed;
    else if (status == "fail") ++failed;
    else if (status == "info") ++info;
    else ++skipped;
  }
  r.body["records"] = rec.records();
  r.body["summary"] = {{"checks", passed + failed}, {"passed", passed}, {"failed", failed}, {"info", info}, {"skipped", skipped}};
  if (config.timings) r.body["timings"] = timings;
  r.failures = rec.failures();
  finish(r);
  return r;
}

namespace {

std::string csv_field(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.is_null() ? std::string() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

void flatten(const Json& v, const std::string& prefix, std::ostream& out) {
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) flatten(x, prefix.empty() ? k : prefix + "." + k, out);
  } else if (v.is_array() && !v.empty()) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], prefix + "." + std::to_string(i), out);
  } else {
    out << csv_field(prefix) << ',' << csv_field(v) << '\n';
  }
}

}  // namespace

std::string render(const Report& report, Format format) {
  if (format == Format::json) return report.body.dump(2) + "\n";
  std::ostringstream out;
  if (report.body.contains("records")) {
    out << "check,case,value,expected,status\n";
    for (const auto& r : report.body["records"]) {
      out << csv_field(r["check"]) << ',' << csv_field(r["case"]) << ',' << csv_field(r["value"]) << ','
          << csv_field(r["expected"]) << ',' << csv_field(r["status"]) << '\n';
    }
    out << "verdict,," << csv_field(report.body["verdict"]) << ",,\n";
  } else {
    out << "key,value\n";
    flatten(report.body, "", out);
  }
  return out.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for filtrations, jets and discriminants on grassmannians"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string out_path;
  std::string format_name = "json";
  std::uint64_t seed = 1;
  bool timings = false;
  Caps caps;
  int disc_cap = kDefaultDiscriminantCap;
  app.add_option("--out", out_path, "Write the report to FILE instead of stdout");
  auto* format_opt = app.add_option("--format", format_name, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  auto* seed_opt = app.add_option("--seed", seed, "Seed for sampling checks");
  auto* timings_opt = app.add_flag("--timings", timings, "Add wall-clock timings to suite reports");
  app.add_option("--ambient-cap", caps.ambient, "Largest module dimension")->check(CLI::PositiveNumber);
  app.add_option("--monomial-cap", caps.monomials, "Largest PBW or jet monomial count")->check(CLI::PositiveNumber);
  app.add_option("--disc-cap", disc_cap, "Largest binary form degree")->check(CLI::PositiveNumber);

  int m = 0;
  int n = 0;
  int d = 0;
  int l = 0;
  int lmax = 0;
  std::string config_path;
  auto shape = [&](CLI::App* sub) {
    sub->add_option("--m", m, "Subspace dimension")->required();
    sub->add_option("--n", n, "Codimension")->required();
    sub->add_option("--d", d, "Degree")->required();
  };
  auto* filtration = app.add_subcommand("filtration", "Dimensions of U_l(g)v for l = 0..lmax");
  shape(filtration);
  filtration->add_option("--lmax", lmax, "Top level")->required();
  auto* taylor = app.add_subcommand("taylor", "Rank of the Taylor matrix at the origin");
  shape(taylor);
  taylor->add_option("--l", l, "Jet order")->required();
  auto* split = app.add_subcommand("split", "U_l(g) against U_l(n) plus the annihilator");
  shape(split);
  split->add_option("--l", l, "Filtration level")->required();
  auto* serre = app.add_subcommand("serre", "Nilpotency of the simple lowering operators on v");
  shape(serre);
  auto* duality = app.add_subcommand("duality", "U_l(g)v against the jet fiber");
  shape(duality);
  duality->add_option("--l", l, "Filtration level")->required();
  auto* disc = app.add_subcommand("disc", "Eliminants of multiple-root loci of binary forms");
  disc->add_option("--d", d, "Form degree")->required();
  disc->add_option("--l", l, "Root multiplicity minus one")->required();
  auto* suite = app.add_subcommand("suite", "Run a configured suite");
  suite->add_option("--config", config_path, "Suite config (JSON)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Format format = format_from_string(format_name);
  int code = 0;
  Report report;
  try {
    if (command == "filtration") {
      report = filtration_report(m, n, d, lmax, caps);
    } else if (command == "taylor") {
      report = taylor_report(m, n, d, l, caps);
    } else if (command == "split") {
      report = split_report(m, n, d, l, caps);
    } else if (command == "serre") {
      report = serre_report(m, n, d, caps);
    } else if (command == "duality") {
      report = duality_report(m, n, d, l, caps);
    } else if (command == "disc") {
      report = disc_report(d, l, seed, disc_cap);
    } else {
      SuiteConfig config = config_path.empty() ? default_desk_suite() : load_suite_config(config_path);
      if (format_opt->count() > 0) config.format = format;
      if (seed_opt->count() > 0) config.seed = seed;
      if (timings_opt->count() > 0) config.timings = timings;
      format = config.format;
      report = suite_report(config);
    }
    code = report.pass() ? 0 : 1;
  } catch (const SizeCapError& e) {
    err << "size cap: " << e.what() << '\n';
    report.body = header(command);
    report.body["error"] = {{"kind", "size_cap"}, {"message", e.what()}};
    report.body["verdict"] = "error";
    code = 3;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    report.body = header(command);
    report.body["error"] = {{"kind", "invalid_input"}, {"message", e.what()}};
    report.body["verdict"] = "error";
    code = 2;
  } catch (const std::out_of_range& e) {
    err << "invalid input: " << e.what() << '\n';
    report.body = header(command);
    report.body["error"] = {{"kind", "invalid_input"}, {"message", e.what()}};
    report.body["verdict"] = "error";
    code = 2;
  }

  const std::string text = render(report, format);
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      err << "cannot write " << out_path << '\n';
      return 2;
    }
    file << text;
  }
  if (code == 1) {
    for (const auto& f : report.failures) err << "FAILED " << f << '\n';
  }
  return code;
}

}  // namespace vermajet
