#include "drsocle/verify.hpp"

#include "drsocle/drcycle.hpp"
#include "drsocle/elliptic.hpp"
#include "drsocle/json_io.hpp"
#include "drsocle/socle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

namespace drsocle {

namespace {

using nlohmann::json;

json sides(const Rational& lhs, const Rational& rhs) {
  return {{"lhs", rational_to_json(lhs)}, {"rhs", rational_to_json(rhs)}};
}

CheckResult make(std::string id, std::string check, json params) {
  CheckResult c;
  c.id = std::move(id);
  c.check = std::move(check);
  c.params = std::move(params);
  c.pass = true;
  return c;
}

void fail(CheckResult& c, json witness) {
  if (!c.pass) return;  // keep the first witness
  c.pass = false;
  c.witness = std::move(witness);
}

std::string tag(const std::string& prefix, int g) { return prefix + ".g" + std::to_string(g); }

std::vector<CheckResult> suite_dr(const VerifyConfig& cfg) {
  std::vector<CheckResult> out;
  for (int g = 0; g <= cfg.g_max; ++g) {
    auto c = make(tag("dr.oracle", g), "dr3_closed_vs_recursive", {{"g", g}, {"a_range", 5}});
    for (long a1 = -5; a1 <= 5; ++a1) {
      for (long a2 = -5; a2 <= 5; ++a2) {
        const Rational x = dr3_closed({g, a1, a2});
        const Rational y = dr3_recursive({g, a1, a2});
        if (x != y) fail(c, {{"a1", a1}, {"a2", a2}, {"closed", rational_to_json(x)}, {"recursive", rational_to_json(y)}});
      }
    }
    out.push_back(std::move(c));
  }
  for (int g = 1; g <= cfg.g_max; ++g) {
    auto c = make(tag("dr.bssz", g), "dr3_bssz_check", {{"g", g}, {"a_max", 4}});
    for (long a1 = 1; a1 <= 4; ++a1) {
      for (long a2 = 1; a2 <= 4; ++a2) {
        const auto r = dr3_bssz_check(g, a1, a2);
        if (!r.pass) {
          json w = sides(r.lhs, r.rhs);
          w["a1"] = a1;
          w["a2"] = a2;
          fail(c, w);
        }
      }
    }
    out.push_back(std::move(c));
  }
  auto c = make("dr.standard", "dr_standard_closed_value", {{"g_max", 12}});
  for (int g = 0; g <= 12; ++g) {
    const Rational v = dr_standard(g) * Rational(double_factorial_odd(2 * g + 1) * ipow(Integer(4), g));
    if (v != 1) fail(c, {{"g", g}, {"product", rational_to_json(v)}});
  }
  out.push_back(std::move(c));
  return out;
}

std::vector<CheckResult> suite_string(const VerifyConfig& cfg) {
  std::vector<CheckResult> out;
  const int n_max = std::min(cfg.n_max, 5);
  for (int g = 1; g <= cfg.g_max; ++g) {
    for (int n = 1; n <= n_max; ++n) {
      auto c = make("string.g" + std::to_string(g) + ".n" + std::to_string(n), "verify_string_consistency",
                    {{"g", g}, {"n", n}});
      auto run = [&](const std::vector<int>& d) {
        const auto r = verify_string_consistency(g, d);
        if (!r.pass) {
          json w = sides(r.lhs, r.rhs);
          w["d"] = d;
          fail(c, w);
        }
      };
      for (const auto& q : valid_queries(g, n)) run(q.d);
      // inputs whose zero-extension is the valid query
      for (const auto& q : valid_queries(g, n + 1)) {
        if (q.d.back() == 0) run(std::vector<int>(q.d.begin(), q.d.end() - 1));
      }
      out.push_back(std::move(c));
    }
  }
  return out;
}

// Every d with d_i >= 1, sum(d_i - 1) = g - 1, |d| = m.
std::vector<std::vector<int>> necklace_inputs(int g, int m) {
  std::vector<std::vector<int>> out;
  for (const auto& q : valid_queries(g, m + 1)) {
    if (q.d.back() != 0) continue;
    std::vector<int> d(q.d.begin(), q.d.end() - 1);
    if (std::all_of(d.begin(), d.end(), [](int x) { return x >= 1; })) out.push_back(d);
  }
  return out;
}

std::vector<CheckResult> suite_relation(const VerifyConfig& cfg) {
  std::vector<CheckResult> out;
  for (int g = 1; g <= std::min(cfg.g_max, 5); ++g) {
    for (int m = 1; m <= 4; ++m) {
      auto c = make("relation.g" + std::to_string(g) + ".m" + std::to_string(m), "relation_integral_check",
                    {{"g", g}, {"m", m}});
      for (const auto& d : necklace_inputs(g, m)) {
        const auto r = relation_integral_check(g, d);
        if (!r.pass) {
          json w = sides(r.lhs, r.rhs);
          w["d"] = d;
          fail(c, w);
        }
      }
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<CheckResult> suite_propagator(const VerifyConfig& cfg) {
  std::vector<CheckResult> out;
  const json params = {{"q_order", cfg.q_order}, {"w_window", {2, cfg.w_order}}};

  auto c = make("propagator.identity", "check_propagator_identity", params);
  if (auto mm = check_propagator_identity(cfg.q_order, cfg.w_order)) {
    fail(c, {{"q_power", mm->q_power}, {"w_power", mm->w_power}});
  }
  out.push_back(std::move(c));

  // The sigma_k reading of the Eisenstein display must not reproduce the propagator.
  auto wrong = make("propagator.sigma_k_rejected", "check_propagator_identity_sigma_k", params);
  if (auto mm = check_propagator_identity(cfg.q_order, cfg.w_order, DivisorExponent::k)) {
    wrong.witness = json{{"q_power", mm->q_power}, {"w_power", mm->w_power}};
  } else {
    fail(wrong, {{"reason", "sigma_k convention unexpectedly matched"}});
  }
  out.push_back(std::move(wrong));

  auto principal = make("propagator.principal_part", "principal_part_constant", params);
  const auto prop = propagator_expansion(cfg.q_order, 2, cfg.w_order).principal_part();
  for (int e = -2; e < 0; ++e) {
    const auto& s = prop.coeff(e);
    const Rational expected = e == -2 ? Rational(1) : Rational(0);
    for (int n = 0; n <= s.order(); ++n) {
      if (s.coeffs()[n] != (n == 0 ? expected : Rational(0))) fail(principal, {{"q_power", n}, {"w_power", e}});
    }
  }
  out.push_back(std::move(principal));
  return out;
}

std::vector<CheckResult> suite_topweight(const VerifyConfig& cfg) {
  std::vector<CheckResult> out;
  const int g_lo = cfg.g.value_or(1), g_hi = cfg.g.value_or(3);
  const int m_lo = cfg.m.value_or(2), m_hi = cfg.m.value_or(4);
  for (int g = g_lo; g <= g_hi; ++g) {
    for (int m = std::max(m_lo, 2); m <= m_hi; ++m) {
      const int order = std::max(cfg.q_order, top_weight_min_order(g, m));
      for (int jp = m; jp >= 1; --jp) {
        const int jm = m - jp;
        auto c = make("topweight.g" + std::to_string(g) + ".j" + std::to_string(jp) + "_" + std::to_string(jm),
                      "top_weight_check", {{"g", g}, {"j_plus", jp}, {"j_minus", jm}, {"q_order", order}});
        const auto r = top_weight_check(g, jp, jm, order);
        if (!r.pass) {
          fail(c, {{"message", r.message}});
        } else {
          c.witness = json{{"surplus", r.fit.surplus},
                           {"top_part", poly_to_json(r.top_part)},
                           {"lower_part", poly_to_json(r.lower_part)}};
        }
        out.push_back(std::move(c));
      }
    }
  }
  if (!cfg.m || *cfg.m == 1) {
    for (int g = g_lo; g <= (cfg.g ? g_hi : cfg.g_max); ++g) {
      auto c = make(tag("topweight.loop", g), "loop_coefficient", {{"g", g}, {"q_order", cfg.q_order}});
      const QSeries loop = loop_coefficient(g, cfg.q_order);
      const QSeries expected = eisenstein(2 * g, cfg.q_order) * Rational(2);
      if (loop[0] != 0) fail(c, {{"q_power", 0}, {"value", rational_to_json(loop[0])}});
      if (!agree_from(loop, expected, 1)) fail(c, {{"reason", "q^n, n >= 1 differ from 2 G_2g"}});
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<CheckResult> suite_socle(const VerifyConfig& cfg) {
  std::vector<CheckResult> out;
  for (int g = 1; g <= cfg.g_max; ++g) {
    for (int n = 1; n <= cfg.n_max; ++n) {
      auto c = make("socle.g" + std::to_string(g) + ".n" + std::to_string(n), "faber_vs_necklace",
                    {{"g", g}, {"n", n}});
      for (const auto& q : valid_queries(g, n)) {
        const auto r = socle_compute(q, Method::both);
        if (!r.agree) {
          json w = sides(*r.faber, *r.necklace);
          w["d"] = q.d;
          fail(c, w);
        }
      }
      out.push_back(std::move(c));
    }
  }
  // int_{Mbar_{1,n}} lambda_1 prod psi^{d_i} = (n-1)! / (24 prod d_i!) for every d
  auto c = make("socle.genus1_oracle", "necklace_vs_genus_one_closed_form", {{"n_max", cfg.n_max}});
  for (int n = 1; n <= cfg.n_max; ++n) {
    for (const auto& q : valid_queries(1, n)) {
      Integer den(24);
      for (int x : q.d) den *= factorial(x);
      const Rational expected = ratio(factorial(n - 1), den);
      const Rational got = socle_necklace(q);
      if (got != expected) {
        json w = sides(got, expected);
        w["d"] = q.d;
        fail(c, w);
      }
    }
  }
  out.push_back(std::move(c));
  return out;
}

std::vector<CheckResult> suite_wheels(const VerifyConfig& cfg) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(cfg.seed);
  std::vector<std::pair<int, std::vector<int>>> pool;
  for (int g = 1; g <= cfg.g_max; ++g) {
    for (int m = 1; m <= 5; ++m) {
      for (auto& d : necklace_inputs(g, m)) pool.emplace_back(g, std::move(d));
    }
  }
  std::vector<std::pair<int, std::vector<int>>> sample;
  std::sample(pool.begin(), pool.end(), std::back_inserter(sample), 20, rng);
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const auto& [g, d] = sample[i];
    auto c = make("wheels.sample" + std::to_string(i), "wheel_collapse", {{"g", g}, {"d", d}});
    const Rational full = necklace_lhs(g, d);
    const Rational collapsed = necklace_lhs_collapsed(d);
    if (full != collapsed) fail(c, sides(full, collapsed));
    out.push_back(std::move(c));
  }
  auto c = make("wheels.orientation", "j_plus_positive", {{"m_max", 6}});
  for (int m = 2; m <= 6; ++m) {
    for_each_wheel(m, 0, [&](const Wheel& w) {
      const auto o = orientation_counts(w);
      if (o.j_plus < 1 || o.j_plus + o.j_minus != m) fail(c, {{"m", m}, {"cycle", w.cycle}});
    });
  }
  out.push_back(std::move(c));
  return out;
}

using SuiteFn = std::function<std::vector<CheckResult>(const VerifyConfig&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"dr", suite_dr},
      {"string", suite_string},
      {"relation", suite_relation},
      {"propagator", suite_propagator},
      {"topweight", suite_topweight},
      {"socle", suite_socle},
      {"wheels", suite_wheels},
  };
  return suites;
}

}  // namespace

bool SuiteReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    n.push_back("all");
    return n;
  }();
  return names;
}

SuiteReport run_suite(const std::string& suite, const VerifyConfig& config) {
  SuiteReport report;
  report.suite = suite;
  report.config = to_json(config);
  bool found = false;
  for (const auto& [name, fn] : registry()) {
    if (suite != "all" && suite != name) continue;
    found = true;
    auto checks = fn(config);
    std::move(checks.begin(), checks.end(), std::back_inserter(report.checks));
  }
  if (!found) throw std::invalid_argument("unknown suite '" + suite + "'");
  return report;
}

json to_json(const CheckResult& c) {
  json j = {{"id", c.id}, {"check", c.check}, {"params", c.params}, {"status", c.pass ? "pass" : "fail"}};
  j["witness"] = c.witness ? *c.witness : json(nullptr);
  return j;
}

json to_json(const SuiteReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return {{"suite", r.suite}, {"checks", std::move(checks)}, {"config", r.config}};
}

json to_json(const VerifyConfig& c) {
  json j = {{"q_order", c.q_order}, {"w_order", c.w_order}, {"g_max", c.g_max}, {"n_max", c.n_max}, {"seed", c.seed}};
  if (c.g) j["g"] = *c.g;
  if (c.m) j["m"] = *c.m;
  return j;
}

}  // namespace drsocle
