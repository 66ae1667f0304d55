#include "cli.hpp"

#include "drsocle/drcycle.hpp"
#include "drsocle/json_io.hpp"
#include "drsocle/qseries.hpp"
#include "drsocle/socle.hpp"
#include "drsocle/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace drsocle::cli {

namespace {

using nlohmann::json;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void print_table(const Table& t, const std::string& format, std::ostream& out) {
  if (format == "json") {
    json rows = json::array();
    for (const auto& r : t.rows) {
      json o = json::object();
      for (std::size_t i = 0; i < t.header.size(); ++i) o[t.header[i]] = r[i];
      rows.push_back(std::move(o));
    }
    out << rows.dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    auto line = [&](const std::vector<std::string>& r) {
      for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << csv_field(r[i]);
      out << "\n";
    };
    line(t.header);
    for (const auto& r : t.rows) line(r);
    return;
  }
  std::vector<std::size_t> width(t.header.size());
  for (std::size_t i = 0; i < t.header.size(); ++i) width[i] = std::max<std::size_t>(3, t.header[i].size());
  for (const auto& r : t.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  auto line = [&](const std::vector<std::string>& r) {
    out << "|";
    for (std::size_t i = 0; i < r.size(); ++i) out << " " << r[i] << std::string(width[i] - r[i].size(), ' ') << " |";
    out << "\n";
  };
  line(t.header);
  out << "|";
  for (auto w : width) out << std::string(w + 2, '-') << "|";
  out << "\n";
  for (const auto& r : t.rows) line(r);
}

std::string list_string(const std::vector<int>& d) {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s;
}

Method parse_method(const std::string& m) {
  if (m == "faber") return Method::faber;
  if (m == "necklace") return Method::necklace;
  return Method::both;
}

std::vector<std::string> socle_row(const SocleQuery& q, const SocleResult& r) {
  return {std::to_string(q.g), list_string(q.d), r.faber ? to_string(*r.faber) : "",
          r.necklace ? to_string(*r.necklace) : "", (r.faber && r.necklace) ? (r.agree ? "true" : "false") : ""};
}

const std::vector<std::string> kSocleHeader = {"g", "d", "faber", "necklace", "equal"};

struct Options {
  std::string format = "markdown";
  int q_order = 20;
  int w_order = 8;
  int g_max = 6;
  int n_max = 6;
  std::uint64_t seed = 20240601;

  // socle
  int g = 0;
  std::string d;
  std::string method = "both";

  // verify
  std::string suite;
  int only_g = 0;
  int only_m = 0;

  // table
  std::string table_kind;
  int a_max = 3;
  std::string k_list = "2,4,6";
  int order = 10;
};

int cmd_socle(const Options& o, std::ostream& out) {
  const SocleQuery q{o.g, parse_int_list(o.d)};
  const auto r = socle_compute(q, parse_method(o.method));
  if (o.format == "json") {
    json j = {{"g", q.g}, {"d", q.d}, {"method", o.method}, {"value", to_string(r.value)}};
    if (r.faber) j["faber"] = to_string(*r.faber);
    if (r.necklace) j["necklace"] = to_string(*r.necklace);
    if (r.faber && r.necklace) j["equal"] = r.agree;
    out << j.dump(2) << "\n";
  } else {
    print_table({kSocleHeader, {socle_row(q, r)}}, o.format, out);
  }
  return r.agree ? kOk : kDisagreement;
}

int cmd_verify(const Options& o, std::ostream& out) {
  VerifyConfig cfg;
  cfg.q_order = o.q_order;
  cfg.w_order = o.w_order;
  cfg.g_max = o.g_max;
  cfg.n_max = o.n_max;
  cfg.seed = o.seed;
  if (o.only_g > 0) cfg.g = o.only_g;
  if (o.only_m > 0) cfg.m = o.only_m;
  const auto report = run_suite(o.suite, cfg);
  if (o.format == "json") {
    out << to_json(report).dump(2) << "\n";
  } else {
    Table t{{"id", "status", "witness"}, {}};
    for (const auto& c : report.checks) {
      t.rows.push_back({c.id, c.pass ? "pass" : "fail", c.witness ? c.witness->dump() : ""});
    }
    print_table(t, o.format, out);
  }
  return report.all_pass() ? kOk : kDisagreement;
}

int cmd_table(const Options& o, std::ostream& out) {
  Table t;
  if (o.table_kind == "socle") {
    t.header = kSocleHeader;
    for (int g = 1; g <= o.g_max; ++g) {
      for (int n = 1; n <= o.n_max; ++n) {
        for (const auto& q : valid_queries(g, n)) {
          t.rows.push_back(socle_row(q, socle_compute(q, Method::both)));
        }
      }
    }
  } else if (o.table_kind == "dr") {
    t.header = {"g", "a1", "a2", "value"};
    for (int g = 0; g <= o.g_max; ++g) {
      for (long a1 = -o.a_max; a1 <= o.a_max; ++a1) {
        for (long a2 = -o.a_max; a2 <= o.a_max; ++a2) {
          t.rows.push_back({std::to_string(g), std::to_string(a1), std::to_string(a2), to_string(dr3_closed({g, a1, a2}))});
        }
      }
    }
  } else {
    t.header = {"k", "n", "coeff"};
    for (int k : parse_int_list(o.k_list)) {
      const QSeries s = eisenstein(k, o.order);
      for (int n = 0; n <= o.order; ++n) t.rows.push_back({std::to_string(k), std::to_string(n), to_string(s[n])});
    }
  }
  print_table(t, o.format, out);
  return kOk;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "markdown"}))
      ->envname("DRSOCLE_FORMAT")
      ->capture_default_str();
}

}  // namespace

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  if (text.empty()) throw std::invalid_argument("empty integer list");
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size() || v < 0) {
      throw std::invalid_argument("malformed integer list '" + std::string(text) +
                                  "': expected comma-separated non-negative integers");
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact lambda_g lambda_{g-1} psi integrals on M_g,n and their cross-checks"};
  app.require_subcommand(1);
  Options o;

  auto* socle = app.add_subcommand("socle", "Compute int lambda_g lambda_{g-1} prod psi_i^{d_i}");
  socle->add_option("--g", o.g, "Genus (>= 1)")->required();
  socle->add_option("--d", o.d, "Comma-separated psi exponents d_1,...,d_n")->required();
  socle->add_option("--method", o.method, "Evaluation route")
      ->check(CLI::IsMember({"faber", "necklace", "both"}))
      ->capture_default_str();
  add_common(socle, o);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", o.suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--q-order", o.q_order, "q-series truncation order")
      ->envname("DRSOCLE_Q_ORDER")->check(CLI::PositiveNumber)->capture_default_str();
  verify->add_option("--w-order", o.w_order, "w truncation order")
      ->envname("DRSOCLE_W_ORDER")->check(CLI::PositiveNumber)->capture_default_str();
  verify->add_option("--g-max", o.g_max, "Largest genus")
      ->envname("DRSOCLE_G_MAX")->check(CLI::PositiveNumber)->capture_default_str();
  verify->add_option("--n-max", o.n_max, "Largest number of marked points")->check(CLI::PositiveNumber)->capture_default_str();
  verify->add_option("--seed", o.seed, "Seed for sampled checks")->envname("DRSOCLE_SEED")->capture_default_str();
  verify->add_option("--g", o.only_g, "Restrict topweight to this genus")->check(CLI::PositiveNumber);
  verify->add_option("--m", o.only_m, "Restrict topweight to this vertex count")->check(CLI::PositiveNumber);
  add_common(verify, o);

  auto* table = app.add_subcommand("table", "Emit a table of exact values");
  table->add_option("kind", o.table_kind, "socle | dr | eisenstein")
      ->required()->check(CLI::IsMember({"socle", "dr", "eisenstein"}));
  table->add_option("--g-max", o.g_max, "Largest genus")->envname("DRSOCLE_G_MAX")->capture_default_str();
  table->add_option("--n-max", o.n_max, "Largest number of marked points")->capture_default_str();
  table->add_option("--a-max", o.a_max, "Multiplicity range -a..a")->check(CLI::NonNegativeNumber)->capture_default_str();
  table->add_option("--k", o.k_list, "Comma-separated Eisenstein weights")->capture_default_str();
  table->add_option("--order", o.order, "q-series truncation order")->check(CLI::NonNegativeNumber)->capture_default_str();
  add_common(table, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (socle->parsed()) return cmd_socle(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    return cmd_table(o, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace drsocle::cli
