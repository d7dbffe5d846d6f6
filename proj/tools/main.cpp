// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "matroidh/enumerate.hpp"
#include "matroidh/errors.hpp"
#include "matroidh/json_io.hpp"
#include "matroidh/oseq.hpp"

namespace {

// Exit codes: 0 success/clean, 1 negative verdict, 2 usage/bound error,
// 3 budget exhausted.
constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  return out;
}

std::vector<std::int64_t> parse_int64_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoll(item));
  }
  return out;
}

struct Settings {
  int max_p = 5;
  int max_a = 3;
  std::int64_t node_budget = 50'000'000;
  double time_budget_secs = 300.0;
  int threads = 1;
  std::string config_path;

  // Key=value lines, '#' comments; values here override flags.
  void apply_config() {
    if (config_path.empty()) return;
    std::ifstream in(config_path);
    if (!in) throw matroidh::InvalidSpec("cannot read config file " + config_path);
    std::string line;
    while (std::getline(in, line)) {
      const std::size_t hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      const std::size_t eq = line.find('=');
      if (eq == std::string::npos) continue;
      auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r\"");
        const auto e = s.find_last_not_of(" \t\r\"");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
      };
      const std::string key = trim(line.substr(0, eq));
      const std::string value = trim(line.substr(eq + 1));
      if (key == "max_p") max_p = std::stoi(value);
      else if (key == "max_a") max_a = std::stoi(value);
      else if (key == "node_budget") node_budget = std::stoll(value);
      else if (key == "time_budget_secs") time_budget_secs = std::stod(value);
      else if (key == "threads") threads = std::stoi(value);
      else throw matroidh::InvalidSpec("unknown config key: " + key);
    }
  }

  matroidh::SearchBudget budget() const {
    return matroidh::SearchBudget{node_budget, time_budget_secs, threads};
  }
};

void add_budget_flags(CLI::App* cmd, Settings* s) {
  cmd->add_option("--node-budget", s->node_budget, "Search node budget");
  cmd->add_option("--time-budget", s->time_budget_secs, "Search wall-clock budget (seconds)");
  cmd->add_option("--threads", s->threads, "Worker thread count");
  cmd->add_option("--config", s->config_path,
                  "key=value config file; overrides flags (max_p, max_a, "
                  "node_budget, time_budget_secs, threads)");
}

int run_construct(const std::string& family, int d, int p, std::vector<int> a, int t) {
  using namespace matroidh;
  if (p == 0) p = static_cast<int>(a.size());
  Matroid m = [&] {
    if (family == "delta_t") return build_delta_t(ClassSpec{d, p, a, t});
    if (family == "complete") return build_complete(d, a);
    if (family == "uniform") return build_uniform(d, p);
    if (family == "min") return build_delta_min(d, p, a);
    if (family == "max") return build_delta_max(d, p, a);
    throw InvalidSpec("unknown family: " + family);
  }();
  std::cout << matroid_to_json(m).dump() << "\n";
  return kOk;
}

int run_analyze(const std::string& path) {
  using namespace matroidh;
  nlohmann::json j;
  if (path == "-") {
    std::cin >> j;
  } else {
    std::ifstream in(path);
    if (!in) throw InvalidSpec("cannot read " + path);
    in >> j;
  }
  const SimplicialComplex c = complex_from_json(j);
  nlohmann::json out = {{"schema_version", kSchemaVersion},
                        {"n", c.ambient()},
                        {"dimension", dimension(c)},
                        {"pure", is_pure(c)}};
  try {
    out["h_stanley_reisner"] = h_stanley_reisner(c).entries;
  } catch (const NegativeHEntry&) {
    out["h_stanley_reisner"] = nullptr;  // not Cohen-Macaulay
  }
  try {
    const Matroid m = Matroid::from_complex(c);
    const HVector h = h_cover(m);
    const HVector hr = h_cover_recursive(m);
    out["matroid"] = true;
    out["classes"] = matroid_to_json(m)["classes"];
    out["sizes"] = m.sizes();
    out["h_cover"] = h.entries;
    out["type"] = type_of(m);
    bool agree = h == hr;
    if (m.rank() == 2) agree = agree && h == h_onedim_formula(m.sizes());
    out["engines_agree"] = agree;
    std::cerr << "matroid with " << m.class_count() << " classes, h^ = "
              << h.to_string() << ", type " << type_of(m) << "\n";
  } catch (const NotAMatroid& e) {
    out["matroid"] = false;
    std::cerr << "warning: not a matroid (" << e.what()
              << "); reporting h of the Stanley-Reisner ring only\n";
  }
  std::cout << out.dump() << "\n";
  return kOk;
}

int run_oseq(const std::string& text, const Settings& settings) {
  using namespace matroidh;
  const HVector h{parse_int64_list(text)};
  const OSeqDecision d = is_pure_o_sequence(h, settings.budget());
  nlohmann::json out = {{"schema_version", kSchemaVersion},
                        {"h", h.entries},
                        {"verdict", verdict_name(d.verdict)},
                        {"nodes", d.stats.nodes}};
  if (d.witness) {
    nlohmann::json w = nlohmann::json::array();
    for (const Monomial& m : *d.witness) w.push_back(m.to_string());
    out["witness"] = std::move(w);
  }
  std::cout << out.dump() << "\n";
  std::cerr << h.to_string() << " -> " << verdict_name(d.verdict) << "\n";
  switch (d.verdict) {
    case Verdict::pure: return kOk;
    case Verdict::not_pure: return kNegative;
    case Verdict::budget_exhausted: return kBudget;
  }
  return kUsage;
}

int run_enumerate(int d, int p, const std::vector<int>& a, bool labeled) {
  using namespace matroidh;
  std::int64_t labeled_count = 0;
  const ClassSpec spec{d, p, a, 0};
  const std::vector<ClassForm> forms = enumerate_class_forms(spec, &labeled_count);
  for (const ClassForm& form : forms)
    std::cout << matroid_to_json(Matroid::lift(form)).dump() << "\n";
  std::cerr << forms.size() << " matroids up to isomorphism";
  if (labeled) std::cerr << ", " << labeled_count << " labeled basis families";
  std::cerr << "\n";
  return kOk;
}

int run_verify(const std::string& suite, const Settings& settings, int d, int p,
               const std::vector<int>& a, const std::string& csv_path) {
  using namespace matroidh;
  std::vector<ClassReport> reports;
  if (!a.empty()) {
    const ClassSpec spec{d, p ? p : static_cast<int>(a.size()), a, 0};
    if (suite == "all" || suite == "minmax") reports.push_back(verify_minmax(spec));
    if (suite == "all" || suite == "recursion") reports.push_back(verify_recursion(spec));
    if (suite == "all" || suite == "switch") reports.push_back(verify_switch(spec));
    if (suite == "all" || suite == "stanley")
      reports.push_back(verify_stanley(spec, settings.budget()));
    if (suite == "all" || suite == "typebounds")
      reports.push_back(verify_type_bounds(spec));
    if (reports.empty()) throw InvalidSpec("unknown suite: " + suite);
  } else {
    GridOptions options;
    options.max_p = settings.max_p;
    options.max_a = settings.max_a;
    options.budget = settings.budget();
    options.threads = settings.threads;
    reports = run_suite(suite, options);
  }
  const nlohmann::json out = reports_to_json(suite, reports);
  std::cout << out.dump() << "\n";
  if (!csv_path.empty()) {
    std::ofstream csv(csv_path);
    csv << reports_to_csv(reports);
  }
  std::int64_t violations = 0, exhaustions = 0, rows = 0;
  for (const ClassReport& r : reports) {
    violations += static_cast<std::int64_t>(r.violations.size());
    exhaustions += r.budget_exhaustions;
    rows += static_cast<std::int64_t>(r.rows.size());
    for (const std::string& v : r.violations) std::cerr << "violation: " << v << "\n";
  }
  std::cerr << "suite " << suite << ": " << reports.size() << " reports, "
            << rows << " matroids, " << violations << " violations, "
            << exhaustions << " budget exhaustions\n";
  if (violations > 0) return kNegative;
  if (exhaustions > 0) return kBudget;
  return kOk;
}

int run_icp(bool emit_all, const Settings& settings) {
  using namespace matroidh;
  std::vector<std::vector<std::int64_t>> all;
  try {
    all = enumerate_pure_oseq(4, 6, 3, settings.budget());
  } catch (const BudgetExceeded& e) {
    std::cerr << e.what() << "\n";
    std::cout << nlohmann::json{{"schema_version", kSchemaVersion},
                                {"verdict", "budget_exhausted"}}
                     .dump()
              << "\n";
    return kBudget;
  }
  auto contains = [&](const std::vector<std::int64_t>& x) {
    for (const auto& f : all)
      if (f == x) return true;
    return false;
  };
  const std::vector<std::int64_t> lo{1, 4, 10, 13, 12, 9, 3};
  const std::vector<std::int64_t> mid{1, 4, 10, 13, 13, 9, 3};
  const std::vector<std::int64_t> hi{1, 4, 10, 13, 14, 9, 3};
  const bool confirmed = contains(lo) && contains(hi) && !contains(mid);
  nlohmann::json out = {{"schema_version", kSchemaVersion},
                        {"low", lo},
                        {"gap", mid},
                        {"high", hi},
                        {"low_pure", contains(lo)},
                        {"gap_pure", contains(mid)},
                        {"high_pure", contains(hi)},
                        {"verdict", confirmed ? "counterexample confirmed"
                                              : "counterexample NOT confirmed"}};
  if (emit_all) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& f : all)
      if (f.size() == 7 && f[1] == 4 && f[6] == 3) list.push_back(f);
    out["all"] = std::move(list);
  }
  std::cout << out.dump() << "\n";
  std::cerr << (confirmed ? "counterexample confirmed" : "NOT confirmed") << "\n";
  return confirmed ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matroid complexes, cover-ideal h-vectors, and pure O-sequences"};
  app.require_subcommand(1);
  Settings settings;

  std::string family = "delta_t", path, hvec_text, suite = "all", csv_path;
  int d = 0, p = 0, t = 0;
  std::string a_text;
  bool labeled = false, emit_all = false;

  CLI::App* construct = app.add_subcommand("construct", "Build a family member");
  construct->add_option("--family", family,
                        "delta_t | complete | uniform | min | max");
  construct->add_option("-d", d, "rank")->required();
  construct->add_option("-p", p, "class count");
  construct->add_option("-a", a_text, "class sizes, comma separated");
  construct->add_option("-t", t, "family index");

  CLI::App* analyze = app.add_subcommand("analyze", "Analyze a JSON complex");
  analyze->add_option("path", path, "complex JSON file, or - for stdin")->required();

  CLI::App* oseq = app.add_subcommand("oseq", "Decide pure O-sequence");
  oseq->add_option("hvector", hvec_text, "comma-separated h-vector")->required();
  add_budget_flags(oseq, &settings);

  CLI::App* enumerate = app.add_subcommand("enumerate", "Enumerate M(d,p,a)");
  enumerate->add_option("-d", d, "rank")->required();
  enumerate->add_option("-p", p, "class count");
  enumerate->add_option("-a", a_text, "class sizes")->required();
  enumerate->add_flag("--labeled", labeled, "also report the labeled count");

  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite,
                     "minmax | recursion | switch | stanley | typebounds | all");
  verify->add_option("--max-p", settings.max_p, "grid bound on p");
  verify->add_option("--max-a", settings.max_a, "grid bound on class sizes");
  verify->add_option("-d", d, "single-spec rank");
  verify->add_option("-p", p, "single-spec class count");
  verify->add_option("-a", a_text, "single-spec class sizes");
  verify->add_option("--csv", csv_path, "also write a CSV report here");
  add_budget_flags(verify, &settings);

  CLI::App* icp = app.add_subcommand("icp", "Interval-conjecture counterexample");
  icp->add_flag("--emit-all", emit_all, "list every (1,4,*,*,*,*,3) f-vector");
  add_budget_flags(icp, &settings);

  try {
    app.parse(argc, argv);
    settings.apply_config();
    std::vector<int> a = parse_int_list(a_text);
    if (construct->parsed())
      return run_construct(family, d, p ? p : static_cast<int>(a.size()), a, t);
    if (analyze->parsed()) return run_analyze(path);
    if (oseq->parsed()) return run_oseq(hvec_text, settings);
    if (enumerate->parsed())
      return run_enumerate(d, p ? p : static_cast<int>(a.size()), a, labeled);
    if (verify->parsed()) return run_verify(suite, settings, d, p, a, csv_path);
    if (icp->parsed()) return run_icp(emit_all, settings);
    return kUsage;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return kUsage;
  } catch (const matroidh::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const matroidh::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
