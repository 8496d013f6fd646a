#include <CLI11.hpp>
#include <json.hpp>

#include <future>
#include <iostream>

#include "taftknot/suites.hpp"

using namespace taftknot;

namespace {

struct RunConfig {
  int rank = 2;
  std::vector<int> ells;
  std::string module;  // "" = self-dual with r = (1..1); "r:1,2" or "a:0,4/b:3,3"
  std::string knot, braid, morse_file;
  std::string normalize = "unknot-one";
  std::string lift_window;  // lo:hi in exponents of q^1/4
  std::vector<std::string> suites;
  std::string format = "text";
  int budget_crossings = 12;
  long long budget_dim = 1LL << 24;
  int budget_r = 3;
};

// key=value lines, or one json object
class Output {
 public:
  explicit Output(std::string format) : format_(std::move(format)) {}
  void put(const std::string& key, const std::string& value) {
    if (format_ == "json") json_[key] = value;
    else if (format_ == "structured") std::cout << key << "=" << value << "\n";
  }
  void text(const std::string& line) {
    if (format_ == "text") std::cout << line << "\n";
  }
  void finish() {
    if (format_ == "json") std::cout << json_.dump(2) << "\n";
  }

 private:
  std::string format_;
  nlohmann::ordered_json json_ = nlohmann::ordered_json::object();
};

Exponent parse_tuple(const std::string& s) {
  Exponent e;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      e.push_back(std::stoi(part));
    } catch (const std::exception&) {
      throw Error("bad integer in tuple: " + s);
    }
  }
  return e;
}

std::shared_ptr<const SimpleModule> make_module(const RunConfig& cfg, int ell) {
  auto A = build_taft(cfg.rank, ell, cfg.budget_dim);
  if (cfg.module.empty()) return self_dual_module(A, ones_exp(cfg.rank));
  if (cfg.module.rfind("r:", 0) == 0) return self_dual_module(A, parse_tuple(cfg.module.substr(2)));
  auto slash = cfg.module.find('/');
  if (cfg.module.rfind("a:", 0) == 0 && slash != std::string::npos && cfg.module.compare(slash + 1, 2, "b:") == 0) {
    Exponent alpha = parse_tuple(cfg.module.substr(2, slash - 2)), beta = parse_tuple(cfg.module.substr(slash + 3));
    if (static_cast<int>(alpha.size()) != cfg.rank || static_cast<int>(beta.size()) != cfg.rank)
      throw Error("module tuples must have " + std::to_string(cfg.rank) + " entries");
    return build_module(A, alpha, beta);
  }
  throw Error("module must be r:r1,..,rn or a:a1,..,an/b:b1,..,bn, got " + cfg.module);
}

void check_ells(const RunConfig& cfg) {
  if (cfg.ells.empty()) throw Error("--ell is required");
  for (int ell : cfg.ells)
    if (ell < 3 || ell % 2 == 0) throw Error("ell must be odd (and at least 3), got " + std::to_string(ell));
}

LinkDiagram read_knot(const RunConfig& cfg, std::string& label) {
  int given = !cfg.knot.empty() + !cfg.braid.empty() + !cfg.morse_file.empty();
  if (given != 1) throw Error("give exactly one of --knot, --braid, --morse-file");
  if (!cfg.knot.empty()) {
    label = cfg.knot;
    return builtin_knot(cfg.knot);
  }
  if (!cfg.braid.empty()) {
    label = "braid " + cfg.braid;
    return analyze(braid_closure(parse_braid(cfg.braid)));
  }
  label = cfg.morse_file;
  return analyze(read_morse_file(cfg.morse_file));
}

LiftWindow parse_window(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw Error("lift window must be lo:hi");
  long long lo, hi;
  try {
    lo = std::stoll(s.substr(0, colon));
    hi = std::stoll(s.substr(colon + 1));
  } catch (const std::exception&) {
    throw Error("lift window must be lo:hi, got " + s);
  }
  if (mod(hi - lo, 4) != 0 || hi < lo) throw Error("lift window bounds must satisfy lo <= hi and hi = lo mod 4");
  int off = static_cast<int>(mod(lo, 4));
  return {(lo - off) / 4, (hi - off) / 4, off};
}

std::string window_str(const LiftWindow& w) { return std::to_string(4 * w.lo + w.offset) + ":" + std::to_string(4 * w.hi + w.offset); }

int cmd_invariant(const RunConfig& cfg) {
  check_ells(cfg);
  if (cfg.rank < 1) throw Error("rank must be positive");
  Normalization norm = parse_normalization(cfg.normalize);
  std::string label;
  LinkDiagram d = read_knot(cfg, label);
  check_crossings(d, cfg.budget_crossings);
  std::vector<std::pair<int, Cyc>> values;
  for (int ell : cfg.ells) values.emplace_back(ell, evaluate(d, toqa_matrices(make_module(cfg, ell)), cfg.budget_crossings).get(norm));
  Output out(cfg.format);
  out.put("knot", label);
  out.put("rank", std::to_string(cfg.rank));
  out.put("normalization", normalization_name(norm));
  for (const auto& [ell, v] : values) {
    out.put("value.ell" + std::to_string(ell), v.str());
    out.text("ell=" + std::to_string(ell) + ": " + v.str());
  }
  std::optional<LiftWindow> w;
  if (!cfg.lift_window.empty()) w = parse_window(cfg.lift_window);
  else if (norm != Normalization::Regular && cfg.module.empty()) w = lift_window(d, cfg.rank, norm);
  if (w) {
    bool fits = false;
    for (int ell : cfg.ells) fits = fits || w->hi - w->lo + 1 <= cyc_field(ell)->phi;
    out.put("lift.window", window_str(*w));
    if (fits) {
      Laurent p = lift_invariant(values, *w);
      out.put("lift", p.str_q());
      out.put("lift.s", p.str_s());
      out.text(p.str_q());
    } else {
      out.put("lift", "none");
      out.text("no lift: window " + window_str(*w) + " is longer than phi(ell) for every ell given");
    }
  }
  out.finish();
  return 0;
}

int cmd_table(const RunConfig& cfg) {
  std::vector<int> ells = cfg.ells.empty() ? std::vector<int>{11, 13} : cfg.ells;
  RunConfig c = cfg;
  c.ells = ells;
  check_ells(c);
  std::vector<ToqaMatrices> toqa;
  for (int ell : ells) toqa.push_back(toqa_matrices(standard_module(2, ell)));
  const auto& rows = golden::table_rows();
  std::vector<std::future<std::string>> jobs;
  for (const auto& row : rows) {
    std::string name = row.first;
    jobs.push_back(std::async(std::launch::async, [&, name] {
      auto d = builtin_knot(name);
      std::vector<std::pair<int, Cyc>> values;
      for (size_t i = 0; i < ells.size(); ++i) values.emplace_back(ells[i], evaluate(d, toqa[i], cfg.budget_crossings).unknot_one);
      return lift_invariant(values, lift_window(d, 2, Normalization::UnknotOne)).str_q();
    }));
  }
  Output out(cfg.format);
  for (size_t i = 0; i < rows.size(); ++i) {
    std::string p = jobs[i].get();
    out.put(rows[i].first, p);
    out.text(rows[i].first + ": " + p);
  }
  out.finish();
  return 0;
}

Report run_suite(const std::string& suite, const RunConfig& cfg, bool ell_given) {
  int n = cfg.rank;
  std::vector<int> ells = cfg.ells;
  auto each_ell = [&](std::vector<int> defaults, auto&& body) {
    Report rep;
    for (int ell : ell_given ? ells : defaults) rep.merge(body(ell));
    return rep;
  };
  if (suite == "hopf") return each_ell({3}, [&](int ell) { return hopf_suite(n, ell); });
  if (suite == "quasitriangular") return each_ell({3}, [&](int ell) { return quasitriangular_suite(n, ell); });
  if (suite == "ribbon") return each_ell({3, 5}, [&](int ell) { return ribbon_suite(n, ell); });
  if (suite == "golden-matrices") return each_ell({5, 7}, [&](int ell) { return golden_suite(ell); });
  if (suite == "table") return table_suite(ell_given ? ells : std::vector<int>{11, 13});
  if (suite == "power") return each_ell({7}, [&](int ell) { return power_suite(ell, cfg.budget_r >= 3); });
  if (suite == "curl") return each_ell({5}, [&](int ell) { return curl_suite(ell); });
  if (suite == "isotopy") return each_ell({5}, [&](int ell) { return isotopy_suite(ell); });
  if (suite == "bmw") return each_ell({5, 7}, [&](int ell) { return bmw_suite(ell, cfg.budget_r); });
  if (suite == "twist") {
    Report rep;
    for (int ell : ell_given ? ells : std::vector<int>{3, 5}) rep.merge(twist_check(n, ell));
    return rep;
  }
  if (suite == "cross-engine") return each_ell({3}, [&](int ell) { return cross_engine_suite(n, ell); });
  throw Error("unknown suite " + suite);
}

int cmd_verify(const RunConfig& cfg, bool rank_given, bool ell_given) {
  RunConfig c = cfg;
  if (!rank_given) c.rank = 1;
  std::vector<std::string> suites = cfg.suites;
  if (suites.empty() || (suites.size() == 1 && suites[0] == "all")) suites = suite_names();
  Output out(cfg.format);
  bool all_ok = true;
  for (const auto& s : suites) {
    // the twist compares against a rank-2 tensor power; other rank-independent suites ignore --rank
    if (s == "twist" && !rank_given) c.rank = 2;
    Report rep = run_suite(s, c, ell_given);
    if (s == "twist" && !rank_given) c.rank = 1;
    for (const auto& e : rep.entries) {
      out.put(s + ": " + e.name, e.ok ? "PASS" : "FAIL" + (e.witness.empty() ? std::string() : " " + e.witness));
      out.text((e.ok ? "PASS " : "FAIL ") + s + ": " + e.name + (e.witness.empty() ? "" : "  [" + e.witness + "]"));
    }
    all_ok = all_ok && rep.ok();
  }
  out.put("result", all_ok ? "PASS" : "FAIL");
  out.text(all_ok ? "all checks passed" : "some checks FAILED");
  out.finish();
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knot invariants from Taft algebra doubles"};
  app.require_subcommand(1);
  RunConfig cfg;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--rank", cfg.rank, "rank n of the Taft algebra")->check(CLI::PositiveNumber);
    sub->add_option("--ell", cfg.ells, "order of q, or a comma separated list")->delimiter(',');
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "structured", "json"}));
    sub->add_option("--budget-crossings", cfg.budget_crossings, "maximum number of crossings")->check(CLI::PositiveNumber);
    sub->add_option("--budget-dim", cfg.budget_dim, "maximum dimension of the Taft algebra")->check(CLI::PositiveNumber);
    sub->add_option("--budget-r", cfg.budget_r, "maximum tensor power for the BMW checks")->check(CLI::PositiveNumber);
  };
  auto* inv = app.add_subcommand("invariant", "evaluate the invariant of a knot or link");
  common(inv);
  inv->add_option("--module", cfg.module, "r:r1,..,rn (self-dual) or a:a1,..,an/b:b1,..,bn");
  inv->add_option("--knot", cfg.knot, "built-in name")->check(CLI::IsMember(builtin_names()));
  inv->add_option("--braid", cfg.braid, "braid word such as \"s1 s2^-1 s1\"");
  inv->add_option("--morse-file", cfg.morse_file, "Morse diagram file")->check(CLI::ExistingFile);
  inv->add_option("--normalize", cfg.normalize, "normalization")->check(CLI::IsMember({"regular", "ambient", "unknot-one"}));
  inv->add_option("--lift-window", cfg.lift_window, "lo:hi, exponents of q^1/4");
  auto* table = app.add_subcommand("table", "rank-2 table of the built-in knots");
  common(table);
  auto* verify = app.add_subcommand("verify", "run verification suites");
  common(verify);
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.push_back("all");
  verify->add_option("--suite", cfg.suites, "suite name")->check(CLI::IsMember(suite_choices))->delimiter(',');

  CLI11_PARSE(app, argc, argv);
  try {
    if (*inv) return cmd_invariant(cfg);
    if (*table) return cmd_table(cfg);
    return cmd_verify(cfg, verify->count("--rank") > 0, verify->count("--ell") > 0);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
