// pcarz: batch front-end for scenarios, suites and the realizer library.
//
//   pcarz run <file>       run a scenario file
//   pcarz suite <id>       run a built-in suite
//   pcarz print <id>       print a library realizer
//
// Exit codes: 0 ok, 1 expectation mismatch or suite failure, 2 usage or
// parse error.

#include "pca/scenario.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>

using json = nlohmann::json;
using namespace pca;

namespace {

json trace_json(const Trace& t, int depth, int max_depth) {
  json j = {{"clause", t.clause}, {"status", to_string(t.status)}, {"mode", to_string(t.mode)}};
  if (t.formula) j["formula"] = to_string(*t.formula);
  if (!t.note.empty()) j["note"] = t.note;
  if (depth < max_depth && !t.children.empty()) {
    j["children"] = json::array();
    for (const auto& c : t.children) j["children"].push_back(trace_json(c, depth + 1, max_depth));
  } else if (!t.children.empty()) {
    j["omitted_children"] = t.children.size();
  }
  return j;
}

json suite_json(const SuiteReport& r) {
  json j = {{"suite", r.id},
            {"seed", r.seed},
            {"cases", r.cases.size()},
            {"failed", r.failures()},
            {"inconclusive", r.count(Outcome::Inconclusive)},
            {"seconds", r.seconds}};
  j["failures"] = json::array();
  for (const auto& c : r.cases)
    if (c.outcome == Outcome::Fail) j["failures"].push_back({{"label", c.label}, {"detail", c.detail}, {"snippet", c.snippet}});
  return j;
}

void print_suite(std::ostream& os, const SuiteReport& r) {
  os << "suite " << r.id << " (seed " << r.seed << "): " << r.cases.size() << " cases, " << r.failures() << " failed, "
     << r.count(Outcome::Inconclusive) << " inconclusive, " << r.seconds << " s\n";
  for (const auto& c : r.cases) {
    if (c.outcome != Outcome::Fail) continue;
    os << "FAIL " << c.label << ": " << c.detail << "\n";
    os << "  re-run with:\n";
    std::istringstream in(c.snippet);
    for (std::string line; std::getline(in, line);) os << "    " << line << "\n";
  }
}

std::uint64_t env_or(const char* name, std::uint64_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  try {
    return std::stoull(v);
  } catch (const std::exception&) {
    throw CLI::ValidationError(std::string(name), std::string("not a number: ") + v);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial combinatory algebra machine and realizability checker"};
  app.require_subcommand(1);

  bool as_json = false;
  int trace_depth = 1;
  std::optional<std::uint64_t> fuel, budget, seed;
  app.add_flag("--json", as_json, "JSON report");
  app.add_option("--trace-depth", trace_depth, "Depth of printed verdict traces")->capture_default_str();
  app.add_option("--fuel", fuel, "Evaluation step limit (env PCA_FUEL)");
  app.add_option("--budget", budget, "Enumeration budget for infinite names (env PCA_BUDGET)");
  app.add_option("--seed", seed, "Seed for suites (env PCA_SEED)");

  std::string file;
  auto* run = app.add_subcommand("run", "Run a scenario file");
  run->add_option("file", file, "Scenario file")->required();
  run->fallthrough();

  std::string suite_id;
  auto* suite = app.add_subcommand("suite", "Run a built-in suite");
  suite->add_option("id", suite_id, "Suite id")->required();
  suite->fallthrough();

  std::string realizer_id;
  auto* print = app.add_subcommand("print", "Print a library realizer");
  print->add_option("id", realizer_id, "Realizer id (omit to list all)");
  print->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  RunConfig cfg;
  try {
    cfg.fuel.max_steps = fuel ? *fuel : env_or("PCA_FUEL", cfg.fuel.max_steps);
    cfg.budget.max_index = budget ? *budget : env_or("PCA_BUDGET", cfg.budget.max_index);
    cfg.seed = seed ? *seed : env_or("PCA_SEED", cfg.seed);
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  if (*print) {
    if (realizer_id.empty()) {
      json j = json::array();
      for (const auto& r : realizer_catalog()) {
        if (as_json) j.push_back({{"id", r.id}, {"group", r.group}, {"summary", r.summary}});
        else std::cout << r.id << "  " << r.summary << "\n";
      }
      if (as_json) std::cout << j.dump(2) << "\n";
      return 0;
    }
    try {
      const Term& t = realizer_term(realizer_id);
      const std::string& src = realizer_source(realizer_id);
      std::string summary;
      for (const auto& r : realizer_catalog())
        if (r.id == realizer_id) summary = r.summary;
      if (as_json) {
        std::cout << json{{"id", realizer_id}, {"summary", summary}, {"source", src}, {"term", to_string(t)}}.dump(2) << "\n";
      } else {
        std::cout << realizer_id << ": " << summary << "\n";
        if (!src.empty()) std::cout << "source: " << src << "\n";
        std::cout << "term:   " << to_string(t) << "\n";
      }
      return 0;
    } catch (const std::out_of_range& e) {
      std::cerr << e.what() << "\n";
      return 2;
    }
  }

  if (*suite) {
    SuiteReport r;
    try {
      r = run_suite(suite_id, cfg);
    } catch (const std::invalid_argument& e) {
      std::cerr << e.what() << "; known suites:";
      for (const auto& id : suite_ids()) std::cerr << " " << id;
      std::cerr << "\n";
      return 2;
    }
    if (as_json) std::cout << suite_json(r).dump(2) << "\n";
    else print_suite(std::cout, r);
    return r.failures() == 0 ? 0 : 1;
  }

  Scenario sc;
  try {
    sc = load_scenario(file);
  } catch (const ParseError& e) {
    std::cerr << file << ":" << e.line() << ":" << e.column() << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << file << ": " << e.what() << "\n";
    return 2;
  }

  ScenarioReport rep = run_scenario(sc, cfg);
  std::size_t failed = 0;
  json out = json::array();
  for (const auto& d : rep.directives) {
    failed += !d.passed;
    if (as_json) {
      json j = {{"line", d.line}, {"kind", d.kind}, {"directive", d.text}, {"passed", d.passed}, {"result", d.summary}};
      if (d.trace && trace_depth > 0) j["trace"] = trace_json(*d.trace, 0, trace_depth);
      if (d.suite) j["suite"] = suite_json(*d.suite);
      out.push_back(std::move(j));
      continue;
    }
    if (d.kind == "config") continue;
    std::cout << file << ":" << d.line << ": " << (d.passed ? "ok   " : "FAIL ") << d.kind << ": " << d.summary << "\n";
    if (d.trace && trace_depth > 0) {
      std::istringstream in(render_trace(*d.trace, trace_depth - 1));
      for (std::string line; std::getline(in, line);) std::cout << "    " << line << "\n";
    }
    if (d.suite && d.suite->failures()) print_suite(std::cout, *d.suite);
  }
  if (as_json) std::cout << json{{"file", file}, {"directives", out}, {"failed", failed}}.dump(2) << "\n";
  else std::cout << rep.directives.size() << " directives, " << failed << " failed\n";
  return failed == 0 ? 0 : 1;
}
