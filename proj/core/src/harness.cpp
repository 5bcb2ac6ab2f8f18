#include "hankelmu/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "hankelmu/errors.hpp"
#include "hankelmu/hankel.hpp"

namespace hankelmu {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string fmt(double v, const char* spec = "%.17g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

const char* kCorpusManifest =
    "corpus v1\n"
    "one_over_n: a_0=0, a_n=1/n\n"
    "omega_extremal: a_0=0, a_n=omega(1/n)/n^(1-1/p)\n"
    "inv_fourth_root: a_0=0, a_n=n^(-1/4)\n"
    "log_over_n: a_0=0, a_n=log(n+1)/n\n"
    "one_over_sqrt_n: a_0=0, a_n=n^(-1/2)\n"
    "block_indicator: a_n=1 for 32<=n<64, else 0\n";

std::vector<int> doubling_ladder(int lo_exp, int hi_exp) {
  std::vector<int> v;
  for (int e = lo_exp; e <= hi_exp; ++e) v.push_back(1 << e);
  return v;
}

ordered_json make_provenance(const ExperimentConfig& cfg) {
  ordered_json p;
  p["tool_version"] = kToolVersion;
  p["corpus_manifest_hash"] = corpus_manifest_hash();
  p["config"] = cfg.raw;
  return p;
}

std::string proxy_verdict(const std::vector<double>& trace) {
  if (is_flat(trace)) return "flat";
  if (trends_up(trace) ||
      (trace.size() >= 2 && trace.front() > 0.0 &&
       trace.back() >= 1.25 * trace.front()))
    return "rising";
  return "indeterminate";
}

std::string bounded_verdict(const std::vector<double>& trace) {
  return trends_up(trace) ? "diverging" : "bounded";
}

}  // namespace

const char* const kToolVersion = "hankelmu 0.1.0";

std::string corpus_manifest_hash() {
  // FNV-1a, 64 bit.
  std::uint64_t h = 1469598103934665603ull;
  for (const char* c = kCorpusManifest; *c; ++c) {
    h ^= static_cast<unsigned char>(*c);
    h *= 1099511628211ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<CorpusGenerator> corpus_generators(double p, const Weight& w) {
  const double q = 1.0 - 1.0 / p;
  std::vector<CorpusGenerator> out;
  out.push_back({"one_over_n",
                 [](std::size_t n) { return n == 0 ? 0.0 : 1.0 / double(n); }, true});
  out.push_back({"omega_extremal",
                 [q, w](std::size_t n) {
                   return n == 0 ? 0.0 : w(1.0 / double(n)) / std::pow(double(n), q);
                 },
                 true});
  out.push_back({"inv_fourth_root",
                 [](std::size_t n) {
                   return n == 0 ? 0.0 : std::pow(double(n), -0.25);
                 },
                 true});
  out.push_back({"log_over_n",
                 [](std::size_t n) {
                   return n == 0 ? 0.0 : std::log(double(n) + 1.0) / double(n);
                 },
                 true});
  out.push_back({"one_over_sqrt_n",
                 [](std::size_t n) {
                   return n == 0 ? 0.0 : std::pow(double(n), -0.5);
                 },
                 true});
  out.push_back({"block_indicator",
                 [](std::size_t n) { return (n >= 32 && n < 64) ? 1.0 : 0.0; },
                 false});
  return out;
}

// ---------------------------------------------------------------------------
// Config parsing

ExperimentConfig parse_config(const json& j) {
  static const std::vector<std::string> kExperiments = {
      "thdec", "lemmom", "thhlao", "logcond", "widom",
      "admissible", "moments", "carleson", "apply"};
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  if (!j.contains("experiment") || !j["experiment"].is_string())
    throw ConfigError("config needs an 'experiment' string");
  ExperimentConfig cfg;
  cfg.experiment = j["experiment"].get<std::string>();
  cfg.raw = j;
  if (std::find(kExperiments.begin(), kExperiments.end(), cfg.experiment) ==
      kExperiments.end())
    throw ConfigError("unknown experiment: " + cfg.experiment);

  if (j.contains("measure")) cfg.measure = j["measure"];
  if (j.contains("weight")) cfg.weight = j["weight"];
  if (j.contains("function")) cfg.function = j["function"];
  if (j.contains("p")) cfg.p = j["p"].get<double>();
  if (j.contains("tol")) cfg.tol = j["tol"].get<double>();
  if (j.contains("s")) cfg.s = j["s"].get<double>();
  if (j.contains("alpha")) cfg.alpha = j["alpha"].get<double>();
  if (j.contains("n_max")) cfg.n_max = j["n_max"].get<int>();
  if (j.contains("sizes")) {
    for (const auto& v : j["sizes"]) cfg.sizes.push_back(v.get<int>());
    if (cfg.sizes.empty() ||
        !std::is_sorted(cfg.sizes.begin(), cfg.sizes.end()) ||
        cfg.sizes.front() < 1)
      throw ConfigError("'sizes' must be a nonempty increasing list of positive ints");
  }

  const auto require = [&](const char* field) {
    if (!j.contains(field))
      throw ConfigError("experiment '" + cfg.experiment + "' requires field '" +
                        field + "'");
  };
  if (cfg.experiment == "thdec" || cfg.experiment == "admissible") {
    require("weight");
  } else if (cfg.experiment == "lemmom" || cfg.experiment == "thhlao") {
    require("measure");
    require("weight");
  } else if (cfg.experiment == "logcond" || cfg.experiment == "widom" ||
             cfg.experiment == "moments" || cfg.experiment == "carleson") {
    require("measure");
  } else if (cfg.experiment == "apply") {
    require("measure");
    require("function");
  }
  if (cfg.p <= 1.0 && cfg.experiment != "logcond" && cfg.experiment != "widom" &&
      cfg.experiment != "moments" && cfg.experiment != "carleson")
    throw ConfigError("p must lie in (1, infinity)");
  return cfg;
}

Weight weight_from_json(const json& j) {
  if (!j.is_object() || !j.contains("family"))
    throw ConfigError("weight spec needs a 'family'");
  const std::string family = j["family"].get<std::string>();
  if (family == "power") return Weight::power(j.value("alpha", 0.5));
  if (family == "power_log")
    return Weight::power_log(j.value("alpha", 0.5), j.value("beta", 1.0));
  if (family == "custom") {
    if (!j.contains("t") || !j.contains("values"))
      throw ConfigError("custom weight needs 't' and 'values' tables");
    return Weight::custom(j["t"].get<std::vector<double>>(),
                          j["values"].get<std::vector<double>>());
  }
  throw ConfigError("unknown weight family: " + family);
}

namespace {

Measure builtin_measure(const std::string& name, const json& j) {
  if (name == "lebesgue") return Measure::lebesgue();
  if (name == "power_sigma") return Measure::power_density(j.value("sigma", 0.5));
  if (name == "log_carleson_1_1") return Measure::log_carleson_canonical();
  if (name == "one_minus_t") return Measure::one_minus_t();
  if (name == "log_density") return Measure::log_density();
  if (name == "power_tail") return Measure::power_tail(j.value("q", 0.25));
  if (name == "power_log_tail")
    return Measure::power_log_tail(j.value("q", 1.0), j.value("s", 1.0));
  if (name == "atom_zero") return Measure::from_atoms({{0.0, 1.0}}).set_name("atom_zero");
  throw ConfigError("unknown builtin measure: " + name);
}

}  // namespace

Measure measure_from_json(const json& j) {
  if (j.is_string()) return builtin_measure(j.get<std::string>(), json::object());
  if (!j.is_object()) throw ConfigError("measure spec must be a string or object");
  if (j.contains("builtin"))
    return builtin_measure(j["builtin"].get<std::string>(), j);

  std::vector<Atom> atoms;
  if (j.contains("atoms") && !j["atoms"].is_null())
    for (const auto& a : j["atoms"])
      atoms.push_back({a.at(0).get<double>(), a.at(1).get<double>()});

  const bool has_density = j.contains("density") && !j["density"].is_null();
  const bool has_tail = j.contains("tail") && !j["tail"].is_null();
  if (has_tail && (has_density || !atoms.empty()))
    throw ConfigError("measure spec: tail excludes atoms/density");
  if (has_tail) {
    const auto& t = j["tail"];
    const std::string kind = t.value("kind", "");
    if (kind == "power") return Measure::power_tail(t.value("q", 0.25));
    if (kind == "power_log")
      return Measure::power_log_tail(t.value("q", 1.0), t.value("s", 1.0));
    if (kind == "log_carleson") return Measure::log_carleson_canonical();
    throw ConfigError("unknown tail kind: " + kind);
  }
  if (has_density) {
    const auto& d = j["density"];
    const std::string kind = d.value("kind", "");
    Measure m = [&]() -> Measure {
      if (kind == "constant") {
        const double c = d.value("value", 1.0);
        return Measure::from_density([c](double) { return c; }, 0.0, atoms);
      }
      if (kind == "power") {
        const double sigma = d.value("sigma", 0.5);
        if (sigma >= 1.0) throw ConfigError("density sigma must be < 1");
        return Measure::from_density_u(
            [sigma](double u) { return std::pow(u, -sigma); }, sigma, atoms);
      }
      if (kind == "one_minus_t")
        return Measure::from_density_u([](double u) { return u; }, 0.0, atoms);
      if (kind == "log")
        return Measure::from_density_u(
            [](double u) {
              return std::log(std::numbers::e * std::numbers::pi / u);
            },
            0.0, atoms);
      throw ConfigError("unknown density kind: " + kind);
    }();
    return m.set_name("density:" + kind);
  }
  if (atoms.empty()) throw ConfigError("measure spec is empty");
  return Measure::from_atoms(std::move(atoms));
}

TaylorFunction function_from_json(const json& j, double p, const Weight& w,
                                  std::size_t degree) {
  const json& f = j.contains("function") ? j["function"] : j;
  if (!f.is_object() || !f.contains("generator"))
    throw ConfigError("function spec needs a 'generator'");
  const std::string gen = f["generator"].get<std::string>();
  if (gen == "explicit") {
    if (!f.contains("coeffs")) throw ConfigError("explicit function needs 'coeffs'");
    return TaylorFunction(f["coeffs"].get<std::vector<double>>());
  }
  for (const auto& cg : corpus_generators(p, w))
    if (cg.name == gen) return TaylorFunction(cg.gen, degree);
  throw ConfigError("unknown generator: " + gen);
}

// ---------------------------------------------------------------------------
// Report serialization

std::string VerificationReport::to_csv() const {
  std::ostringstream os;
  os << "# experiment=" << experiment << "\n";
  os << "# tool_version=" << provenance.value("tool_version", "") << "\n";
  os << "# corpus_manifest_hash=" << provenance.value("corpus_manifest_hash", "")
     << "\n";
  for (const auto& [k, v] : verdicts) os << "# verdict." << k << "=" << v << "\n";
  for (std::size_t i = 0; i < columns.size(); ++i)
    os << (i ? "," : "") << columns[i];
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      os << (i ? "," : "") << fmt(row[i]);
    os << "\n";
  }
  return os.str();
}

ordered_json VerificationReport::to_json() const {
  ordered_json j;
  j["experiment"] = experiment;
  j["columns"] = columns;
  j["rows"] = rows;
  ordered_json v;
  for (const auto& [k, val] : verdicts) v[k] = val;
  j["verdicts"] = v;
  j["provenance"] = provenance;
  return j;
}

std::string VerificationReport::verdict(const std::string& key) const {
  for (const auto& [k, v] : verdicts)
    if (k == key) return v;
  return "";
}

// ---------------------------------------------------------------------------
// Experiments

VerificationReport run_thdec(const ExperimentConfig& cfg) {
  const Weight w = weight_from_json(cfg.weight);
  const auto adm = admissibility(w, cfg.p, default_delta_grid());
  if (!adm.admissible())
    throw RefusalError("thdec: weight " + w.describe() + " is not admissible");
  const int J = cfg.sizes.empty() ? 14 : cfg.sizes.back();
  VerificationReport rep;
  rep.experiment = "thdec";
  rep.provenance = make_provenance(cfg);
  rep.columns = {"j"};
  std::vector<DecreasingCoefResult> results;
  std::vector<std::string> names;
  for (const auto& cg : corpus_generators(cfg.p, w)) {
    if (!cg.nonincreasing) continue;
    results.push_back(decreasing_coef_test(cg.gen, cfg.p, w, J));
    names.push_back(cg.name);
    rep.columns.push_back("coef_ratio_" + cg.name);
    rep.columns.push_back("block_ratio_" + cg.name);
  }
  for (int j = 1; j <= J; ++j) {
    std::vector<double> row{double(j)};
    for (const auto& r : results) {
      row.push_back(r.coef_trace[j - 1]);
      row.push_back(r.block_trace[j - 1]);
    }
    rep.rows.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    std::string v;
    if (!r.agree)
      v = "disagree(coef=" + bounded_verdict(r.coef_trace) +
          ",block=" + bounded_verdict(r.block_trace) + ")";
    else
      v = r.coef_diverging ? "agree-diverging" : "agree-bounded";
    rep.verdicts.emplace_back(names[i], v);
  }
  return rep;
}

VerificationReport run_lemmom(const ExperimentConfig& cfg) {
  const Weight w = weight_from_json(cfg.weight);
  const Measure nu = measure_from_json(cfg.measure);
  const auto adm = admissibility(w, cfg.p, default_delta_grid());
  if (!adm.admissible())
    throw RefusalError("lemmom: weight " + w.describe() + " is not admissible");
  if (adm.growth_class != GrowthClass::blows_up)
    throw RefusalError("lemmom: delta^{-1/p} omega(delta) must blow up; got " +
                       std::string(to_string(adm.growth_class)));

  const int J = cfg.sizes.empty() ? 14 : cfg.sizes.back();
  const double q = 1.0 - 1.0 / cfg.p;
  const auto mv = moments_upto(nu, 1 << J);

  std::vector<double> moment_trace, tail_trace;
  for (int j = 1; j <= J; ++j) {
    const double n = std::ldexp(1.0, j);
    moment_trace.push_back(mv.values[std::size_t(n)] * std::pow(n, q) / w(1.0 / n));
  }
  const auto b_grid = default_b_grid(40);
  for (double b : b_grid) {
    const double u = 1.0 - b;
    tail_trace.push_back(tail(nu, b) / (std::pow(u, q) * w(u)));
  }
  const double sup_m = *std::max_element(moment_trace.begin(), moment_trace.end());
  const double sup_t = *std::max_element(tail_trace.begin(), tail_trace.end());

  VerificationReport rep;
  rep.experiment = "lemmom";
  rep.provenance = make_provenance(cfg);
  rep.columns = {"k", "moment_ratio", "tail_ratio"};
  for (std::size_t k = 0; k < b_grid.size(); ++k) {
    rep.rows.push_back({double(k + 1),
                        k < moment_trace.size() ? moment_trace[k] : kNaN,
                        tail_trace[k]});
  }
  rep.verdicts.emplace_back("moment_side", bounded_verdict(moment_trace));
  rep.verdicts.emplace_back("tail_side", bounded_verdict(tail_trace));
  rep.verdicts.emplace_back("agreement",
                            rep.verdicts[0].second == rep.verdicts[1].second
                                ? "agree-" + rep.verdicts[0].second
                                : "disagree");
  rep.verdicts.emplace_back("moment_sup", fmt(sup_m, "%.6g"));
  rep.verdicts.emplace_back("tail_sup", fmt(sup_t, "%.6g"));
  rep.verdicts.emplace_back(
      "sup_quotient",
      fmt(sup_t > 0.0 ? sup_m / sup_t : (sup_m > 0.0 ? kNaN : 1.0), "%.6g"));
  return rep;
}

namespace {

/// Block proxy |b_0| + max_j ||Delta_j g||_p / omega(2^-j) of an image vector.
double image_block_proxy(const std::vector<double>& b, double p, const Weight& w) {
  const std::size_t n = b.size();
  int J = -1;
  while ((std::size_t{2} << (J + 1)) <= n) ++J;  // largest J with 2^{J+1}-1 < n
  const TaylorFunction g{std::vector<double>(b)};
  double best = 0.0;
  if (J >= 0) {
    const auto bn = block_norms(g, p, J);
    for (int j = 0; j <= J; ++j)
      best = std::max(best, bn.norms[j] / w(std::ldexp(1.0, -j)));
  }
  return std::abs(b.empty() ? 0.0 : b[0]) + best;
}

}  // namespace

VerificationReport run_thhlao(const ExperimentConfig& cfg) {
  const Weight w = weight_from_json(cfg.weight);
  const Measure mu = measure_from_json(cfg.measure);
  if (!(cfg.p > 1.0) || std::isinf(cfg.p))
    throw RefusalError("thhlao: requires 1 < p < infinity");
  const auto adm = admissibility(w, cfg.p, default_delta_grid());
  if (!adm.admissible())
    throw RefusalError("thhlao: weight " + w.describe() + " is not admissible");
  if (adm.growth_class != GrowthClass::blows_up)
    throw RefusalError("thhlao: delta^{-1/p} omega(delta) must blow up; got " +
                       std::string(to_string(adm.growth_class)));

  const std::vector<int> sizes =
      cfg.sizes.empty() ? doubling_ladder(4, 14) : cfg.sizes;
  const int n_top = sizes.back();

  const auto carleson = carleson_ratio(mu, 1.0, 0.0, default_b_grid(40));

  // Tracked functions: the extremal plus corpus members judged in the space
  // at a small scale.
  std::vector<CorpusGenerator> tracked;
  for (const auto& cg : corpus_generators(cfg.p, w)) {
    if (!cg.nonincreasing) continue;
    if (cg.name == "omega_extremal") {
      tracked.push_back(cg);
      continue;
    }
    const auto probe = decreasing_coef_test(cg.gen, cfg.p, w, 10);
    if (probe.agree && !probe.coef_diverging) tracked.push_back(cg);
  }

  const auto mv = moments_upto(mu, 2 * n_top - 2);
  VerificationReport rep;
  rep.experiment = "thhlao";
  rep.provenance = make_provenance(cfg);
  rep.columns = {"N"};
  for (const auto& cg : tracked) rep.columns.push_back("proxy_" + cg.name);

  std::vector<std::vector<double>> traces(tracked.size());
  for (int N : sizes) {
    std::vector<double> row{double(N)};
    const HankelOp H(
        N, std::vector<double>(mv.values.begin(), mv.values.begin() + 2 * N - 1));
    for (std::size_t t = 0; t < tracked.size(); ++t) {
      std::vector<double> a(N);
      for (int n = 0; n < N; ++n) a[n] = tracked[t].gen(n);
      const auto b = H.apply_fast(a);
      const double proxy = image_block_proxy(b, cfg.p, w);
      traces[t].push_back(proxy);
      row.push_back(proxy);
    }
    rep.rows.push_back(std::move(row));
  }

  rep.verdicts.emplace_back("carleson", to_string(carleson.verdict));
  std::string extremal_verdict = "flat";
  for (std::size_t t = 0; t < tracked.size(); ++t) {
    const std::string v = proxy_verdict(traces[t]);
    rep.verdicts.emplace_back("proxy_" + tracked[t].name, v);
    if (tracked[t].name == "omega_extremal") extremal_verdict = v;
  }
  const bool bounded = carleson.verdict == CarlesonVerdict::bounded;
  const bool consistent =
      bounded ? extremal_verdict == "flat" : extremal_verdict == "rising";
  rep.verdicts.emplace_back("dichotomy", consistent ? "consistent" : "inconsistent");
  return rep;
}

VerificationReport run_logcond(const ExperimentConfig& cfg) {
  const Measure mu = measure_from_json(cfg.measure);
  const int J = cfg.sizes.empty() ? 14 : cfg.sizes.back();
  std::vector<double> lm_trace;
  for (int j = 0; j <= J; ++j) {
    const int n = 1 << j;
    lm_trace.push_back(n * log_moment(mu, n));
  }
  const auto carleson = carleson_ratio(mu, 1.0, 1.0, default_b_grid(40));

  VerificationReport rep;
  rep.experiment = "logcond";
  rep.provenance = make_provenance(cfg);
  rep.columns = {"k", "n_log_moment", "log_carleson_ratio"};
  const std::size_t rows = std::max(lm_trace.size(), carleson.ratios.size());
  for (std::size_t k = 0; k < rows; ++k) {
    rep.rows.push_back({double(k),
                        k < lm_trace.size() ? lm_trace[k] : kNaN,
                        k < carleson.ratios.size() ? carleson.ratios[k] : kNaN});
  }
  const std::string side_iv = bounded_verdict(lm_trace);
  const std::string side_iii(to_string(carleson.verdict));
  rep.verdicts.emplace_back("log_carleson_side", side_iii);
  rep.verdicts.emplace_back("log_moment_side", side_iv);
  rep.verdicts.emplace_back(
      "agreement", side_iii == side_iv ? "agree-" + side_iii : "disagree");
  return rep;
}

VerificationReport run_widom(const ExperimentConfig& cfg) {
  const Measure mu = measure_from_json(cfg.measure);
  const std::vector<int> sizes =
      cfg.sizes.empty() ? doubling_ladder(4, 12) : cfg.sizes;
  for (std::size_t i = 1; i < sizes.size(); ++i)
    if (sizes[i] != 2 * sizes[i - 1])
      throw RefusalError("widom: sizes must form a doubling ladder");

  const auto mv = moments_upto(mu, 2 * sizes.back() - 2);
  const auto carleson = carleson_ratio(mu, 1.0, 0.0, default_b_grid(40));

  VerificationReport rep;
  rep.experiment = "widom";
  rep.provenance = make_provenance(cfg);
  rep.columns = {"N", "sigma_max", "iterations", "converged"};
  std::vector<double> trace;
  bool all_converged = true;
  for (int N : sizes) {
    const HankelOp H(
        N, std::vector<double>(mv.values.begin(), mv.values.begin() + 2 * N - 1));
    const auto r = top_singular_value(H, cfg.tol);
    all_converged = all_converged && r.converged;
    trace.push_back(r.sigma);
    rep.rows.push_back({double(N), r.sigma, double(r.iterations),
                        r.converged ? 1.0 : 0.0});
  }
  const std::size_t m = trace.size() - 1;
  const double last_step =
      m >= 1 && trace[m - 1] > 0.0 ? trace[m] / trace[m - 1] - 1.0 : 0.0;
  const std::string sigma_verdict = last_step < 0.01 ? "plateauing" : "climbing";
  const bool bounded = carleson.verdict == CarlesonVerdict::bounded;
  rep.verdicts.emplace_back("carleson", to_string(carleson.verdict));
  rep.verdicts.emplace_back("sigma_trace", sigma_verdict);
  rep.verdicts.emplace_back("last_doubling_increment", fmt(last_step, "%.6g"));
  rep.verdicts.emplace_back("power_iteration",
                            all_converged ? "converged" : "non-converged");
  rep.verdicts.emplace_back("dichotomy",
                            (bounded == (sigma_verdict == "plateauing"))
                                ? "consistent"
                                : "inconsistent");
  return rep;
}

VerificationReport run_admissible(const ExperimentConfig& cfg) {
  const Weight w = weight_from_json(cfg.weight);
  const auto grid = default_delta_grid();
  const auto adm = admissibility(w, cfg.p, grid);
  VerificationReport rep;
  rep.experiment = "admissible";
  rep.provenance = make_provenance(cfg);
  rep.columns = {"delta", "omega", "dini_ratio", "b1_ratio", "growth"};
  for (double d : grid) {
    const auto dr = dini_ratio(w, d);
    const auto br = b1_ratio(w, d);
    rep.rows.push_back({d, w(d), dr.diverged ? kNaN : dr.value,
                        br.diverged ? kNaN : br.value,
                        w(d) / std::pow(d, 1.0 / cfg.p)});
  }
  rep.verdicts.emplace_back("admissible", adm.admissible() ? "yes" : "no");
  rep.verdicts.emplace_back("growth_class", to_string(adm.growth_class));
  rep.verdicts.emplace_back("dini_sup", fmt(adm.dini_sup, "%.6g"));
  rep.verdicts.emplace_back("b1_sup", fmt(adm.b1_sup, "%.6g"));
  return rep;
}

VerificationReport run_moments(const ExperimentConfig& cfg) {
  const Measure mu = measure_from_json(cfg.measure);
  const auto mv = moments_upto(mu, cfg.n_max);
  VerificationReport rep;
  rep.experiment = "moments";
  rep.provenance = make_provenance(cfg);
  rep.columns = {"n", "mu_n"};
  for (int n = 0; n <= mv.n_max; ++n)
    rep.rows.push_back({double(n), mv.values[n]});
  bool monotone = true, log_convex = true;
  for (int n = 0; n + 1 <= mv.n_max; ++n)
    if (mv.values[n + 1] > mv.values[n] * (1.0 + 1e-10)) monotone = false;
  for (int n = 0; n + 2 <= mv.n_max; ++n)
    if (mv.values[n + 1] * mv.values[n + 1] >
        mv.values[n] * mv.values[n + 2] * (1.0 + 1e-8))
      log_convex = false;
  rep.verdicts.emplace_back("monotone", monotone ? "yes" : "no");
  rep.verdicts.emplace_back("log_convex", log_convex ? "yes" : "no");
  return rep;
}

VerificationReport run_carleson(const ExperimentConfig& cfg) {
  const Measure mu = measure_from_json(cfg.measure);
  const auto rep_c = carleson_ratio(mu, cfg.s, cfg.alpha, default_b_grid(40));
  VerificationReport rep;
  rep.experiment = "carleson";
  rep.provenance = make_provenance(cfg);
  rep.columns = {"b", "ratio"};
  for (std::size_t i = 0; i < rep_c.grid.size(); ++i)
    rep.rows.push_back({rep_c.grid[i], rep_c.ratios[i]});
  rep.verdicts.emplace_back("verdict", to_string(rep_c.verdict));
  rep.verdicts.emplace_back("sup_ratio", fmt(rep_c.sup_ratio, "%.6g"));
  rep.verdicts.emplace_back("witness_b", fmt(rep_c.witness_b, "%.17g"));
  return rep;
}

VerificationReport run_apply(const ExperimentConfig& cfg) {
  const Measure mu = measure_from_json(cfg.measure);
  const Weight w = cfg.weight.is_null() ? Weight::power(0.5)
                                        : weight_from_json(cfg.weight);
  const int N = cfg.sizes.empty() ? 64 : cfg.sizes.back();
  const TaylorFunction f =
      function_from_json(cfg.function, cfg.p, w, std::size_t(N) - 1);
  std::vector<double> a = f.coeffs();
  a.resize(N, 0.0);
  const auto H = HankelOp::from_measure(mu, N);
  const auto naive = H.apply_naive(a);
  const auto fast = H.apply_fast(a);
  double max_rel = 0.0, scale = 0.0;
  for (int n = 0; n < N; ++n) scale = std::max(scale, std::abs(naive[n]));
  for (int n = 0; n < N; ++n)
    max_rel = std::max(max_rel, std::abs(naive[n] - fast[n]) /
                                    (scale > 0.0 ? scale : 1.0));
  VerificationReport rep;
  rep.experiment = "apply";
  rep.provenance = make_provenance(cfg);
  rep.columns = {"n", "a_n", "b_naive", "b_fast"};
  for (int n = 0; n < N; ++n)
    rep.rows.push_back({double(n), a[n], naive[n], fast[n]});
  rep.verdicts.emplace_back("fast_naive_rel_gap", fmt(max_rel, "%.6g"));
  if (!mu.has_tail_spec()) {
    const auto fub = hankel_coefficients_via_fubini(mu, f, std::size_t(N));
    rep.verdicts.emplace_back("fubini_gap", fmt(fub.gap, "%.6g"));
  }
  return rep;
}

VerificationReport run_experiment(const ExperimentConfig& cfg) {
  if (cfg.experiment == "thdec") return run_thdec(cfg);
  if (cfg.experiment == "lemmom") return run_lemmom(cfg);
  if (cfg.experiment == "thhlao") return run_thhlao(cfg);
  if (cfg.experiment == "logcond") return run_logcond(cfg);
  if (cfg.experiment == "widom") return run_widom(cfg);
  if (cfg.experiment == "admissible") return run_admissible(cfg);
  if (cfg.experiment == "moments") return run_moments(cfg);
  if (cfg.experiment == "carleson") return run_carleson(cfg);
  if (cfg.experiment == "apply") return run_apply(cfg);
  throw ConfigError("unknown experiment: " + cfg.experiment);
}

}  // namespace hankelmu
