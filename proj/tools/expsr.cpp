#include <CLI11.hpp>

#include <filesystem>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "expsr/catalog.hpp"
#include "expsr/classify.hpp"
#include "expsr/expectation.hpp"
#include "expsr/ideals.hpp"
#include "expsr/json_io.hpp"
#include "expsr/numeric.hpp"
#include "expsr/verify.hpp"

namespace fs = std::filesystem;
using expsr::io::json;

namespace {

constexpr const char* kSchema = "expsr-report/1";

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct Globals {
  bool json_output = false;
};

json envelope(const std::string& command) { return {{"schema", kSchema}, {"command", command}}; }

void emit(const Globals& g, const json& doc, const std::string& human) {
  if (g.json_output) std::cout << doc.dump(2) << '\n';
  else std::cout << human;
}

std::string set_string(const expsr::Subset& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto x : s.members()) {
    os << (first ? "" : ",") << x;
    first = false;
  }
  os << '}';
  return os.str();
}

// A product element as (s,m) when a pairing is known, else its flat index.
struct Labeler {
  std::vector<std::pair<expsr::Index, expsr::Index>> pairs;

  std::string operator()(expsr::Index x) const {
    if (pairs.empty()) return std::to_string(x);
    return "(" + std::to_string(pairs[x].first) + "," + std::to_string(pairs[x].second) + ")";
  }
  std::string operator()(const expsr::Subset& s) const {
    std::string out = "{";
    bool first = true;
    for (auto x : s.members()) {
      out += (first ? "" : ",") + (*this)(x);
      first = false;
    }
    return out + "}";
  }
};

Labeler labeler_from(const json& doc) {
  Labeler l;
  if (doc.contains("pairing"))
    for (const auto& p : doc.at("pairing").at("pairs"))
      l.pairs.emplace_back(p.at(0).get<expsr::Index>(), p.at(1).get<expsr::Index>());
  return l;
}

// A path to a JSON document, or the name of a builtin.
expsr::SemiringPtr load_semiring(const std::string& ref) {
  if (!fs::exists(ref)) return expsr::builtin_semiring(ref);
  return std::make_shared<const expsr::FiniteSemiring>(
      expsr::validate_semiring(expsr::io::raw_semiring_from_json(expsr::io::read_file(ref))));
}

expsr::ModulePtr load_module(const std::string& ref, const expsr::SemiringPtr& over) {
  if (!fs::exists(ref)) return expsr::builtin_module(ref);
  const json doc = expsr::io::read_file(ref);
  expsr::SemiringPtr base = doc.contains("base") ? expsr::io::base_from_json(doc) : over;
  if (!base) throw expsr::io::FormatError("semimodule document has no 'base'");
  if (over && base->same_tables(*over)) base = over;
  return std::make_shared<const expsr::FiniteSemimodule>(
      expsr::validate_semimodule(base, expsr::io::raw_semimodule_from_json(doc)));
}

// ---------------------------------------------------------------------------

int cmd_validate(const Globals& g, const std::string& path) {
  const json doc = expsr::io::read_file(path);
  json out = envelope("validate");
  out["file"] = path;
  std::vector<expsr::Violation> violations;
  if (expsr::io::is_semimodule_document(doc)) {
    out["kind"] = "semimodule";
    const auto base = expsr::io::base_from_json(doc);
    violations = expsr::check_semimodule(*base, expsr::io::raw_semimodule_from_json(doc));
  } else {
    out["kind"] = "semiring";
    violations = expsr::check_semiring(expsr::io::raw_semiring_from_json(doc));
  }
  out["valid"] = violations.empty();
  out["violations"] = json::array();
  for (const auto& v : violations) out["violations"].push_back(expsr::io::to_json(v));

  std::ostringstream human;
  human << path << ": " << out["kind"].get<std::string>() << ' '
        << (violations.empty() ? "valid" : "INVALID") << '\n';
  for (const auto& v : violations) human << "  violation: " << expsr::to_string(v) << '\n';
  emit(g, out, human.str());
  return violations.empty() ? kOk : kFailure;
}

int cmd_expectation_build(const Globals& g, const std::string& s_ref, const std::string& m_ref,
                          const std::string& out_path) {
  const auto s = load_semiring(s_ref);
  const auto m = load_module(m_ref, s);
  const auto e = expsr::build_expectation(s, m);
  const json doc = expsr::io::to_json(e);
  if (!out_path.empty()) expsr::io::write_file(out_path, doc);

  json out = envelope("expectation-build");
  out["instance"] = doc;
  std::ostringstream human;
  human << "built " << e.product().name() << " with " << e.product().size() << " elements ("
        << e.factor_s().size() << " x " << e.factor_m().size() << ")";
  if (!out_path.empty()) human << " -> " << out_path;
  human << '\n';
  emit(g, out, human.str());
  return kOk;
}

int cmd_ideals(const Globals& g, const std::string& instance, const std::string& report_path) {
  const json doc = expsr::io::read_file(instance);
  const auto s = expsr::validate_semiring(expsr::io::raw_semiring_from_json(doc));
  const Labeler label = labeler_from(doc);

  json list = json::array();
  std::ostringstream human;
  human << "ideals of " << s.name() << " (" << s.size() << " elements)\n";
  for (const auto& ideal : expsr::enumerate_ideals(s)) {
    const auto p = expsr::profile_ideal(s, ideal);
    json entry = expsr::io::to_json(p);
    if (!label.pairs.empty()) {
      entry["pairs"] = json::array();
      for (auto x : ideal.members()) entry["pairs"].push_back(label(x));
    }
    list.push_back(std::move(entry));

    auto flag = [](const std::optional<bool>& b) { return !b ? "-" : (*b ? "y" : "n"); };
    human << "  " << label(ideal) << "  subtractive=" << (p.subtractive ? "y" : "n")
          << " prime=" << flag(p.prime) << " maximal=" << flag(p.maximal)
          << " primary=" << flag(p.primary) << " weakly_prime=" << flag(p.weakly_prime)
          << " radical=" << label(p.radical) << '\n';
  }
  json out = envelope("ideals");
  out["instance"] = s.name();
  out["ideals"] = std::move(list);
  if (!report_path.empty()) expsr::io::write_file(report_path, out);
  emit(g, out, human.str());
  return kOk;
}

std::string flags_line(const expsr::ClassFlags& f) {
  std::ostringstream os;
  auto b = [](bool x) { return x ? "y" : "n"; };
  os << "local=" << b(f.local) << " semifield=" << b(f.semifield)
     << " presimplifiable=" << b(f.presimplifiable)
     << " strongly_associate=" << b(f.strongly_associate) << " domainlike=" << b(f.domainlike)
     << " clean=" << b(f.clean) << " almost_clean=" << b(f.almost_clean)
     << " weakly_clean=" << b(f.weakly_clean)
     << " weakly_clean_literal=" << b(f.weakly_clean_literal)
     << " additively_regular=" << b(f.additively_regular);
  return os.str();
}

int cmd_classify(const Globals& g, const std::string& instance, const std::string& module_ref) {
  json out = envelope("classify");
  std::ostringstream human;
  expsr::ClassReport report;
  Labeler label;
  if (module_ref.empty()) {
    const json doc = expsr::io::read_file(instance);
    const auto s = expsr::validate_semiring(expsr::io::raw_semiring_from_json(doc));
    label = labeler_from(doc);
    report = expsr::classify(s);
    out["instance"] = s.name();
  } else {
    const auto s = load_semiring(instance);
    const auto m = load_module(module_ref, s);
    const auto e = expsr::build_expectation(s, m);
    for (expsr::Index x = 0; x < e.product().size(); ++x)
      label.pairs.emplace_back(e.pair(x).s, e.pair(x).m);
    report = expsr::classify(e);
    out["instance"] = e.product().name();
    out["module"] = expsr::io::to_json(expsr::classify_module(*m));
  }
  out["report"] = expsr::io::to_json(report);
  human << "classification of " << out["instance"].get<std::string>() << '\n'
        << "  units         " << label(report.units) << '\n'
        << "  V             " << label(report.v_set) << '\n'
        << "  idempotents   " << label(report.idempotents) << '\n'
        << "  nilpotents    " << label(report.nilpotents) << '\n'
        << "  zero divisors " << label(report.zero_divisors) << '\n'
        << "  " << flags_line(report.flags) << '\n';
  emit(g, out, human.str());
  return kOk;
}

std::string file_stem(std::string name) {
  for (char& c : name)
    if (c == '/' || c == '@' || c == ' ') c = '_';
  return name;
}

int cmd_enumerate(const Globals& g, std::size_t order, const std::string& over,
                  const std::string& dir, unsigned jobs) {
  std::vector<expsr::CatalogEntry> entries;
  if (over.empty()) {
    expsr::EnumerationOptions opts;
    opts.jobs = jobs;
    entries = expsr::enumerate_semirings(order, opts);
  } else {
    entries = expsr::enumerate_semimodules(load_semiring(over), order);
  }
  json names = json::array();
  for (const auto& e : entries) {
    names.push_back(e.name);
    if (dir.empty()) continue;
    const json doc = e.semiring() ? expsr::io::to_json(**e.semiring())
                                  : expsr::io::to_json(**e.module());
    expsr::io::write_file(fs::path(dir) / (file_stem(e.name) + ".json"), doc);
  }
  json out = envelope("enumerate");
  out["kind"] = over.empty() ? "semiring" : "semimodule";
  out["order"] = order;
  out["count"] = entries.size();
  out["structures"] = std::move(names);
  std::ostringstream human;
  human << entries.size() << ' ' << out["kind"].get<std::string>() << "s of order " << order;
  if (!dir.empty()) human << " written to " << dir;
  human << '\n';
  emit(g, out, human.str());
  return kOk;
}

int cmd_verify(const Globals& g, const expsr::SuiteOptions& opts, const std::string& out_path) {
  const auto report = expsr::run_verification(opts);

  json records = json::array();
  for (const auto& r : report.records)
    records.push_back({{"theorem", r.theorem},
                       {"anchor", r.anchor},
                       {"instance", r.instance},
                       {"status", expsr::to_string(r.status)},
                       {"witness", r.witness},
                       {"runtime_ms", r.runtime_ms}});
  json out = envelope("verify-theorems");
  out["max_order"] = opts.grid.max_order;
  out["seed"] = opts.numeric.seed;
  out["cases"] = report.cases;
  out["summary"] = {{"pass", report.count(expsr::Status::pass)},
                    {"fail", report.count(expsr::Status::fail)},
                    {"not_applicable", report.count(expsr::Status::not_applicable)},
                    {"informational", report.count(expsr::Status::informational)}};
  out["records"] = std::move(records);
  if (!out_path.empty()) expsr::io::write_file(out_path, out);

  // Per-theorem matrix summary, then every failure and informational finding.
  struct Row {
    std::size_t pass = 0, fail = 0, na = 0, info = 0;
  };
  std::vector<std::string> order;
  std::map<std::string, Row> rows;
  for (const auto& r : report.records) {
    if (!rows.count(r.theorem)) order.push_back(r.theorem);
    Row& row = rows[r.theorem];
    switch (r.status) {
      case expsr::Status::pass: ++row.pass; break;
      case expsr::Status::fail: ++row.fail; break;
      case expsr::Status::not_applicable: ++row.na; break;
      case expsr::Status::informational: ++row.info; break;
    }
  }
  std::ostringstream human;
  human << "verified " << report.cases << " instances, " << report.records.size() << " records\n";
  human << std::left << std::setw(30) << "theorem" << std::right << std::setw(8) << "pass"
        << std::setw(8) << "fail" << std::setw(8) << "n/a" << std::setw(8) << "info" << '\n';
  for (const auto& t : order) {
    const Row& row = rows[t];
    human << std::left << std::setw(30) << t << std::right << std::setw(8) << row.pass
          << std::setw(8) << row.fail << std::setw(8) << row.na << std::setw(8) << row.info
          << '\n';
  }
  std::size_t shown_info = 0;
  for (const auto& r : report.records) {
    if (r.status == expsr::Status::fail)
      human << "FAIL " << r.theorem << " on " << r.instance << ": " << r.witness << '\n';
    if (r.status == expsr::Status::informational && r.theorem == "Prop-2.11-forward-probe" &&
        r.witness.rfind("no counterexample", 0) != 0 && shown_info++ < 5)
      human << "INFO " << r.theorem << " on " << r.instance << ": " << r.witness << '\n';
  }
  human << (report.all_passed() ? "all checks passed" : "FAILURES present")
        << " (pass " << report.count(expsr::Status::pass) << ", fail "
        << report.count(expsr::Status::fail) << ", n/a "
        << report.count(expsr::Status::not_applicable) << ", informational "
        << report.count(expsr::Status::informational) << ")\n";
  emit(g, out, human.str());
  return report.all_passed() ? kOk : kFailure;
}

json vector_json(const std::vector<double>& v) { return v; }

std::string vector_string(const std::vector<double>& v) {
  std::ostringstream os;
  os << std::setprecision(12) << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ']';
  return os.str();
}

int cmd_expect(const Globals& g, const std::string& graph_path, bool oracle) {
  const auto graph = expsr::io::graph_from_json(expsr::io::read_file(graph_path));
  const auto total = expsr::forward_total(graph);
  json out = envelope("expect");
  out["graph"] = graph_path;
  out["total"] = expsr::io::to_json(total);
  std::ostringstream human;
  human << std::setprecision(12) << "Z = " << total.p << "\nr = " << vector_string(total.r) << '\n';
  if (total.p > expsr::kAbsoluteTolerance) {
    const auto mean = expsr::expectation(graph);
    out["expectation"] = vector_json(mean);
    human << "expectation = " << vector_string(mean) << '\n';
  } else {
    out["expectation"] = nullptr;
    human << "expectation undefined (zero mass)\n";
  }
  int code = kOk;
  if (oracle) {
    const auto brute = expsr::brute_force_total(graph);
    const bool agree = expsr::approx_equal(total, brute);
    out["oracle"] = {{"paths", expsr::count_paths(graph)},
                     {"total", expsr::io::to_json(brute)},
                     {"agree", agree}};
    human << "oracle over " << expsr::count_paths(graph) << " paths: Z = " << brute.p
          << ", r = " << vector_string(brute.r) << " -> " << (agree ? "agree" : "DISAGREE") << '\n';
    if (!agree) code = kFailure;
  }
  emit(g, out, human.str());
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Expectation-semiring workbench for finite semirings and semimodules"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json_output, "Print the JSON report on standard output");

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "Check a semiring or semimodule document");
  validate->add_option("file", validate_path, "JSON document")->required();

  std::string s_ref, m_ref, build_out;
  auto* build = app.add_subcommand("expectation-build", "Build S (+)~ M");
  build->add_option("--semiring", s_ref, "Semiring document or builtin name")->required();
  build->add_option("--module", m_ref, "Semimodule document or builtin name")->required();
  build->add_option("--out", build_out, "Write the product document here");

  std::string ideals_instance, ideals_report;
  auto* ideals = app.add_subcommand("ideals", "List every ideal with its predicates");
  ideals->add_option("--instance", ideals_instance, "Semiring document")->required();
  ideals->add_option("--report", ideals_report, "Write the JSON report here");

  std::string classify_instance, classify_module;
  auto* classify = app.add_subcommand("classify", "Element sets and class flags");
  classify->add_option("--instance", classify_instance,
                       "Semiring document (or S when --module is given; builtin names accepted)")
      ->required();
  classify->add_option("--module", classify_module, "Classify S (+)~ M for this semimodule");

  std::size_t enum_order = 0;
  std::string enum_over, enum_out;
  unsigned enum_jobs = 1;
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate semirings or semimodules");
  enumerate->add_option("--order", enum_order, "Carrier size (module size with --modules-over)")
      ->required();
  enumerate->add_option("--modules-over", enum_over, "Enumerate semimodules over this semiring");
  enumerate->add_option("--out", enum_out, "Directory for one JSON per structure");
  enumerate->add_option("--jobs", enum_jobs, "Worker threads")->check(CLI::PositiveNumber);

  expsr::SuiteOptions suite;
  std::string verify_out;
  bool catalog = false;
  auto* verify = app.add_subcommand("verify-theorems", "Run the theorem suite over the grid");
  verify->add_flag("--catalog", catalog, "Include the builtin catalog pairs");
  verify->add_option("--max-order", suite.grid.max_order, "Largest enumerated |S| and |M|")
      ->check(CLI::Range(2, 3));
  verify->add_option("--out", verify_out, "Write the JSON report here");
  verify->add_option("--seed", suite.numeric.seed, "Seed for the randomized numeric checks");
  verify->add_option("--jobs", suite.jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::string graph_path;
  bool oracle = false;
  auto* expect = app.add_subcommand("expect", "Total and expectation over a weighted DAG");
  expect->add_option("--graph", graph_path, "Graph document")->required();
  expect->add_flag("--oracle", oracle, "Compare against explicit path enumeration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kUsage;
  }

  try {
    if (*validate) return cmd_validate(g, validate_path);
    if (*build) return cmd_expectation_build(g, s_ref, m_ref, build_out);
    if (*ideals) return cmd_ideals(g, ideals_instance, ideals_report);
    if (*classify) return cmd_classify(g, classify_instance, classify_module);
    if (*enumerate) return cmd_enumerate(g, enum_order, enum_over, enum_out, enum_jobs);
    if (*verify) {
      suite.grid.include_builtins = catalog;
      return cmd_verify(g, suite, verify_out);
    }
    if (*expect) return cmd_expect(g, graph_path, oracle);
  } catch (const expsr::AxiomViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    for (const auto& v : e.violations()) std::cerr << "  violation: " << expsr::to_string(v) << '\n';
    return kFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}
