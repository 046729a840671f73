// grouplab: structural analysis, M(p^k) membership and corpus verification
// for small permutation groups.
//
//   grouplab analyze FILE
//   grouplab mclass FILE --prime P --exp K [--witnesses]
//   grouplab verify [--builtin | --corpus DIR] [--max-order N] [--report FILE] [--jobs J]
//   grouplab export-corpus DIR [--max-order N]
//
// Exit codes: 0 pass, 1 predicate false, 2 usage or hypothesis error, 3 build error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "grouplab/grouplab.hpp"

namespace fs = std::filesystem;
using namespace grouplab;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBuild = 3;

std::size_t order_cap_from_env() {
  if (const char* v = std::getenv("GROUPLAB_ORDER_CAP")) {
    try {
      const auto cap = std::stoull(v);
      if (cap > 0) return cap;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid GROUPLAB_ORDER_CAP='" << v << "'\n";
  }
  return kDefaultOrderCap;
}

std::string subgroup_text(const FiniteGroup& g, const SubgroupRef& h) {
  const auto& lat = all_subgroups(g);
  std::string s = "<";
  bool first = true;
  for (Element e : lat.generators_of(lat.index_of(h))) {
    if (!first) s += ", ";
    s += format_cycles(g.element(e));
    first = false;
  }
  return s + "> (order " + std::to_string(h.order()) + ")";
}

int cmd_analyze(const std::string& path, std::size_t cap) {
  NamedGroup ng;
  try {
    ng = read_group_file(path, cap);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const FiniteGroup& g = ng.group;
  std::cout << "name: " << ng.name << "\n"
            << "degree: " << g.degree() << "\n"
            << "order: " << g.order() << "\n"
            << "subgroups: " << all_subgroups(g).size() << "\n"
            << "center: " << center(g).order() << "\n"
            << "derived: " << derived_subgroup(g).order() << "\n"
            << "frattini: " << frattini(g).order() << "\n"
            << "structure: " << classify_small(g).to_string() << "\n"
            << "supersolvable: " << (is_supersolvable(g) ? "true" : "false") << "\n";
  for (auto p : prime_divisors(g.order())) {
    const SubgroupRef s = sylow(g, p);
    std::cout << "prime " << p << ": p-part " << p_part(g.order(), p) << ", O_p' order "
              << o_p_prime(g, p).order() << ", sylow normal " << (is_normal(g, s) ? "true" : "false")
              << "\n";
  }
  return kExitPass;
}

int cmd_mclass(const std::string& path, std::uint64_t p, unsigned k, bool witnesses,
               std::size_t cap) {
  NamedGroup ng;
  try {
    ng = read_group_file(path, cap);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const FiniteGroup& g = ng.group;
  MClassReport report;
  try {
    report = in_m_class(g, MClassQuery{p, k});
  } catch (const HypothesisError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::cout << ng.name << " in M(" << p << "^" << k << "): " << (report.holds ? "holds" : "fails")
            << "\n";
  std::cout << "subgroups of order " << report.query.prime_power() << ": " << report.witnesses.size()
            << "\n";
  if (report.first_violation) {
    std::cout << "first violation: " << subgroup_text(g, *report.first_violation) << "\n";
  }
  if (witnesses) {
    for (const auto& w : report.witnesses) {
      std::cout << "  H = " << subgroup_text(g, w.subgroup) << "  K = "
                << (w.supplement ? subgroup_text(g, *w.supplement) : std::string("none")) << "\n";
    }
  }
  return report.holds ? kExitPass : kExitFalse;
}

std::vector<SuiteInput> load_corpus_dir(const std::string& dir, std::size_t cap) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".grp") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<SuiteInput> out;
  for (const auto& f : files) {
    SuiteInput in;
    in.name = f.stem().string();
    try {
      auto ng = read_group_file(f.string(), cap);
      in.name = ng.name;
      in.group = ng.group;
    } catch (const Error& e) {
      in.error = e.what();
    }
    out.push_back(std::move(in));
  }
  return out;
}

void write_json(const std::string& path, const SuiteReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"group", r.group}, {"theorem", to_string(r.check)}, {"p", r.p}, {"k", r.k},
                    {"passed", r.passed}, {"detail", r.detail}, {"millis", r.millis}});
  }
  std::ofstream(path) << nlohmann::json{{"groups", report.groups}, {"failed", report.failed},
                                        {"build_errors", report.build_errors}, {"rows", rows}}
                             .dump(2)
                      << "\n";
}

int cmd_verify(bool builtin, const std::string& corpus_dir, std::size_t max_order,
               const std::string& report_path, const std::string& json_path, unsigned jobs,
               std::size_t cap) {
  std::vector<SuiteInput> inputs;
  if (!corpus_dir.empty()) {
    try {
      inputs = load_corpus_dir(corpus_dir, cap);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitUsage;
    }
  } else {
    (void)builtin;
    inputs = suite_inputs(builtin_corpus(max_order));
  }
  SuiteOptions opt;
  opt.max_order = max_order;
  opt.jobs = jobs;
  const SuiteReport report = run_suite(inputs, opt);
  if (report_path.empty()) {
    write_csv(std::cout, report);
  } else {
    std::ofstream out(report_path);
    if (!out) {
      std::cerr << "error: cannot write " << report_path << "\n";
      return kExitUsage;
    }
    write_csv(out, report);
  }
  if (!json_path.empty()) write_json(json_path, report);
  std::cerr << "groups: " << report.groups << ", rows: " << report.rows.size()
            << ", failed: " << report.failed << ", build errors: " << report.build_errors << "\n";
  if (report.build_errors > 0) return kExitBuild;
  return report.failed == 0 ? kExitPass : kExitFalse;
}

int cmd_export(const std::string& dir, std::size_t max_order) {
  fs::create_directories(dir);
  for (const auto& e : builtin_corpus(max_order)) {
    std::string file = e.name;
    for (char& c : file) {
      if (c == '(' || c == ')' || c == ',' || c == '+' || c == '^') c = '_';
    }
    std::ofstream(fs::path(dir) / (file + ".grp")) << write_group_file(e.group, e.name, e.family, e.params);
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"grouplab: M-supplemented subgroups in small permutation groups"};
  app.require_subcommand(1);

  std::string file;
  auto* analyze = app.add_subcommand("analyze", "print structural invariants of a group file");
  analyze->add_option("FILE", file, "group file")->required();

  std::uint64_t prime = 0;
  unsigned exp = 0;
  bool witnesses = false;
  auto* mclass = app.add_subcommand("mclass", "decide whether every subgroup of order p^k is M-supplemented");
  mclass->add_option("FILE", file, "group file")->required();
  mclass->add_option("--prime", prime, "prime p")->required();
  mclass->add_option("--exp", exp, "exponent k")->required();
  mclass->add_flag("--witnesses", witnesses, "list a supplement for every subgroup of order p^k");

  bool builtin = false;
  std::string corpus_dir;
  std::size_t max_order = 100;
  std::string report_path;
  std::string json_path;
  unsigned jobs = 1;
  auto* verify = app.add_subcommand("verify", "run the property suite over a corpus");
  auto* builtin_opt = verify->add_flag("--builtin", builtin, "use the built-in corpus (default)");
  verify->add_option("--corpus", corpus_dir, "directory of .grp files")->excludes(builtin_opt);
  verify->add_option("--max-order", max_order, "largest group order to examine");
  verify->add_option("--report", report_path, "CSV output path (default stdout)");
  verify->add_option("--json", json_path, "also write the report as JSON");
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  std::string out_dir;
  auto* exp_cmd = app.add_subcommand("export-corpus", "write the built-in corpus as .grp files");
  exp_cmd->add_option("DIR", out_dir, "output directory")->required();
  exp_cmd->add_option("--max-order", max_order, "largest group order to export");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  const std::size_t cap = order_cap_from_env();
  try {
    if (*analyze) return cmd_analyze(file, cap);
    if (*mclass) return cmd_mclass(file, prime, exp, witnesses, cap);
    if (*verify) return cmd_verify(builtin, corpus_dir, max_order, report_path, json_path, jobs, cap);
    if (*exp_cmd) return cmd_export(out_dir, max_order);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBuild;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
