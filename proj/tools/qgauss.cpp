// qgauss command-line interface: relations | decompose | verify | rmatrix.
#include "qgauss/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace qgauss;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFail = 1, kUsage = 2 };

struct Config {
  std::string command;
  std::string group;
  std::string suite = "all";
  std::string format = "text";
  bool long_run = false;
  std::uint64_t budget = kDefaultStepBudget;
  std::string output;
};

json check_json(const CheckResult& c, const std::string& suite = {}) {
  json j{{"relation_id", c.id}, {"ref", c.ref}, {"status", c.pass ? "pass" : "fail"}};
  if (!suite.empty()) j["suite"] = suite;
  if (!c.pass && !c.residual.empty()) j["residual"] = c.residual;
  return j;
}

std::string check_line(const CheckResult& c, const std::string& suite = {}) {
  std::string s = (c.pass ? "PASS " : "FAIL ") + (suite.empty() ? "" : "[" + suite + "] ") + c.id + "  (" + c.ref + ")";
  if (!c.pass && !c.residual.empty()) s += "\n     residual: " + c.residual;
  return s;
}

int cmd_relations(const Config& cfg, std::ostream& out) {
  const auto g = preset(canonical_group_name(cfg.group), cfg.budget);
  std::vector<Relation> rels = g->relations();
  std::sort(rels.begin(), rels.end(),
            [](const Relation& a, const Relation& b) { return GradedLess{}(a.lhs.leading_word(), b.lhs.leading_word()); });
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& r : rels) arr.push_back(r.str(g->alphabet()));
    out << arr.dump(2) << '\n';
  } else {
    for (const auto& r : rels) out << r.str(g->alphabet()) << '\n';
  }
  return kOk;
}

int cmd_decompose(const Config& cfg, std::ostream& out) {
  GaussDecomposition gd(preset(canonical_group_name(cfg.group), cfg.budget));
  const auto checks = gd.roundtrip_checks();
  const bool ok = std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
  const std::size_t n = static_cast<std::size_t>(gd.group().n());
  const GaussFactors& f = gd.factors();
  auto idx = [](std::size_t i, std::size_t j) { return std::to_string(i + 1) + std::to_string(j + 1); };

  json j;
  j["group"] = gd.group().name();
  for (std::size_t i = 0; i < n; ++i) {
    j["T_D"]["A" + idx(i, i)] = gd.str(f.TD(i, i));
    for (std::size_t k = 0; k < i; ++k) {
      j["T_L"]["l" + idx(i, k)] = gd.str(f.TL(i, k));
      j["T_U"]["u" + idx(k, i)] = gd.str(f.TU(k, i));
    }
  }
  for (const auto& [name, v] : gd.symbols()) {
    const char c = name.front();
    const bool indexed = name.size() == 3 && (c == 'A' || c == 'l' || c == 'u' || c == 'w');
    if (!indexed) j["aliases"][name] = gd.str(v);
  }
  std::vector<std::pair<std::string, std::string>> denominators;
  for (std::size_t id = 0; id < gd.localizer().minor_count(); ++id) {
    const MinorInfo& m = gd.localizer().minor(static_cast<int>(id));
    j["denominators"][m.name] = m.poly.str(gd.group().alphabet());
  }
  j["roundtrip"] = json::array();
  for (const auto& c : checks) j["roundtrip"].push_back(check_json(c));
  j["status"] = ok ? "pass" : "fail";

  if (cfg.format == "json") {
    out << j.dump(2) << '\n';
  } else {
    out << "group " << gd.group().name() << '\n';
    if (j.contains("denominators"))
      for (const auto& [k, v] : j["denominators"].items()) out << "  [" << k << "] = " << v.get<std::string>() << '\n';
    for (const char* part : {"T_L", "T_D", "T_U", "aliases"}) {
      if (!j.contains(part)) continue;
      out << part << '\n';
      for (const auto& [k, v] : j[part].items()) out << "  " << k << " = " << v.get<std::string>() << '\n';
    }
    for (const auto& c : checks)
      if (!c.pass) out << check_line(c) << '\n';
    out << "roundtrip: " << (ok ? "pass" : "FAIL") << " (" << checks.size() << " checks)\n";
  }
  return ok ? kOk : kFail;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  SuiteOptions opt;
  opt.long_run = cfg.long_run;
  opt.budget = cfg.budget;
  const auto checks = run_suite(cfg.group, cfg.suite, opt);
  std::size_t failed = 0;
  for (const auto& c : checks) failed += !c.result.pass;
  if (cfg.format == "json") {
    for (const auto& c : checks) out << check_json(c.result, c.suite).dump() << '\n';
  } else {
    for (const auto& c : checks) out << check_line(c.result, c.suite) << '\n';
    out << checks.size() - failed << '/' << checks.size() << " passed\n";
    if (failed) {
      out << "failing:";
      for (const auto& c : checks)
        if (!c.result.pass) out << "\n  " << c.result.id;
      out << '\n';
    }
  }
  return failed ? kFail : kOk;
}

int cmd_rmatrix(const Config& cfg, std::ostream& out) {
  const auto g = preset(canonical_group_name(cfg.group), cfg.budget);
  const RMatrixSpec& r = g->rmatrix();
  if (cfg.format != "json") {
    out << dump_triplets(r);
    return kOk;
  }
  const int n = r.dimension;
  json arr = json::array();
  for (std::size_t row = 0; row < r.entries.rows(); ++row)
    for (const auto& [col, v] : r.entries.row(row))
      arr.push_back({{"row", {row / n + 1, row % n + 1}}, {"col", {col / n + 1, col % n + 1}}, {"value", v.str()}});
  out << json{{"group", g->name()}, {"dimension", n}, {"grading", r.grading}, {"entries", arr}}.dump(2) << '\n';
  return kOk;
}

} // namespace

int main(int argc, char** argv) {
  Config cfg;
  if (const char* env = std::getenv("QGAUSS_BUDGET")) {
    try {
      cfg.budget = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "qgauss: QGAUSS_BUDGET is not a number: " << env << '\n';
      return kUsage;
    }
  }

  CLI::App app{"Quantum group FRT relations, Gauss decomposition and identity checks"};
  app.require_subcommand(1);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--long", cfg.long_run, "Enable the slower checks");
  app.add_option("--budget", cfg.budget, "Rewrite step budget (overrides QGAUSS_BUDGET)");
  app.add_option("-o,--output", cfg.output, "Write the report to a file");
  app.fallthrough();

  const std::string groups = "Group: gl1..gl4, so3, sp2, gl1|1, gl2|1";
  for (const char* name : {"relations", "decompose", "verify", "rmatrix"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("group", cfg.group, groups)->required();
    if (std::string(name) == "verify")
      sub->add_option("--suite", cfg.suite, "all, frt, gauss, central, ybe or bcd")->check(CLI::IsMember(suite_names()));
    sub->callback([&cfg, name] { cfg.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  const std::string canon = canonical_group_name(cfg.group);
  const auto names = preset_names();
  if (std::find(names.begin(), names.end(), canon) == names.end()) {
    std::cerr << "qgauss: unknown group '" << cfg.group << "'\n";
    return kUsage;
  }

  std::ostringstream out;
  int rc = kOk;
  try {
    if (cfg.command == "relations") rc = cmd_relations(cfg, out);
    else if (cfg.command == "decompose") rc = cmd_decompose(cfg, out);
    else if (cfg.command == "verify") rc = cmd_verify(cfg, out);
    else rc = cmd_rmatrix(cfg, out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "qgauss: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "qgauss: step budget exhausted (" << e.what() << "); raise --budget\n";
    return kFail;
  } catch (const std::exception& e) {
    std::cerr << "qgauss: " << e.what() << '\n';
    return kFail;
  }

  if (cfg.output.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream file(cfg.output);
    if (!file) {
      std::cerr << "qgauss: cannot write " << cfg.output << '\n';
      return kUsage;
    }
    file << out.str();
  }
  return rc;
}
