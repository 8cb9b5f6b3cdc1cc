// msv: Bott-Samelson combinatorics of minuscule Schubert varieties.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "msv/audit.hpp"
#include "msv/bott_samelson.hpp"
#include "msv/components.hpp"
#include "msv/error.hpp"
#include "msv/serialize.hpp"

namespace {

enum Exit { kOk = 0, kUsage = 1, kAuditFailed = 2, kInvariant = 3 };

struct Output {
  std::string format = "text";
  std::string out;
  int verbose = 0;

  // Text goes to stdout; JSON goes to --out when given, otherwise stdout.
  void emit(const msv::Json& json, const std::string& text) const {
    if (!out.empty()) {
      std::ofstream f(out);
      if (!f) throw msv::InputError("cannot open output file '" + out + "'");
      f << json.dump(2) << "\n";
    }
    if (format == "json") {
      if (out.empty()) std::cout << json.dump(2) << "\n";
    } else {
      std::cout << text;
    }
  }

  void log(const std::string& msg) const {
    if (verbose > 0) std::cerr << msg << "\n";
  }
};

struct VarietyArgs {
  std::string family;
  int rank = 0;
  int weight = 0;
  std::string word;
  std::string partition;
  std::string box;
};

std::vector<int> parse_ints(const std::string& s, const char* what) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw msv::InputError(std::string("bad integer '") + tok + "' in " + what);
    }
  }
  return out;
}

void add_variety_flags(CLI::App* app, VarietyArgs& v) {
  app->add_option("-t,--type", v.family, "Cartan type A-G (Bourbaki numbering)");
  app->add_option("-r,--rank", v.rank, "rank");
  app->add_option("-w,--weight", v.weight, "index k of the minuscule fundamental weight");
  auto* word = app->add_option("--word", v.word, "reduced minimal coset word, e.g. 1,3,2");
  auto* part = app->add_option("--partition", v.partition,
                               "codimension partition, e.g. 2,1 (use \"\" for the empty one)");
  app->add_option("--box", v.box, "partition box rows,cols")->needs(part);
  word->excludes(part);
}

msv::BottSamelsonData build_variety(const VarietyArgs& v, const Output& out) {
  if (v.box.empty() && !v.partition.empty())
    throw msv::InputError("--partition requires --box rows,cols");
  if (!v.box.empty()) {
    const std::vector<int> box = parse_ints(v.box, "--box");
    if (box.size() != 2) throw msv::InputError("--box expects rows,cols");
    const msv::Partition p = msv::Partition::make(parse_ints(v.partition, "--partition"), box[0], box[1]);
    const msv::GrassmannianWord g = msv::partition_to_word(p);
    if (!v.family.empty() && (msv::parse_family(v.family) != msv::Family::A || v.rank != g.rank ||
                              v.weight != g.weight_index))
      throw msv::InputError("a " + std::to_string(box[0]) + "x" + std::to_string(box[1]) +
                            " box lives in A" + std::to_string(g.rank) + " with weight " +
                            std::to_string(g.weight_index));
    std::string w;
    for (int l : g.word) w += (w.empty() ? "" : ",") + std::to_string(l);
    out.log("partition word (" + w + ")");
    auto rs = std::make_shared<const msv::RootSystem>(msv::RootSystem::build(msv::Family::A, g.rank));
    return msv::BottSamelsonData::build(rs, g.weight_index, g.word);
  }
  if (v.family.empty() || v.rank == 0 || v.weight == 0)
    throw msv::InputError("-t, -r and -w are required with --word");
  auto rs = std::make_shared<const msv::RootSystem>(
      msv::RootSystem::build(msv::parse_family(v.family), v.rank));
  return msv::BottSamelsonData::build(rs, v.weight, parse_ints(v.word, "--word"));
}

void add_scope_entry(msv::AuditScope& scope, const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string type = spec.substr(0, colon);
  if (type.size() < 2) throw msv::InputError("bad scope '" + spec + "', expected e.g. A4 or D5:1");
  const msv::Family f = msv::parse_family(type.substr(0, 1));
  int rank = 0;
  try {
    rank = std::stoi(type.substr(1));
  } catch (const std::exception&) {
    throw msv::InputError("bad rank in scope '" + spec + "'");
  }
  if (colon == std::string::npos) {
    scope.add_type(f, rank);
    return;
  }
  const std::vector<int> weights = parse_ints(spec.substr(colon + 1), "--scope");
  const msv::RootSystem rs = msv::RootSystem::build(f, rank);
  for (int k : weights) {
    if (k < 1 || k > rank || !msv::is_minuscule(rs, k))
      throw msv::InputError("scope " + spec + ": weight " + std::to_string(k) + " of " + rs.name() +
                            " is not minuscule");
    scope.entries.push_back({f, rank, k});
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bott-Samelson intersection combinatorics of minuscule Schubert varieties"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_option("--format", out.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--out", out.out, "also write the JSON document to FILE");
  app.add_flag("-v,--verbose", out.verbose, "progress on stderr");

  auto* table = app.add_subcommand("table", "minuscule / cominuscule fundamental weights");
  std::string t_family;
  int t_rank = 0;
  table->add_option("-t,--type", t_family, "Cartan type")->required();
  table->add_option("-r,--rank", t_rank, "rank")->required();

  VarietyArgs bs_args;
  auto* bs_cmd = app.add_subcommand("bs", "Bott-Samelson data of a Schubert variety");
  add_variety_flags(bs_cmd, bs_args);

  VarietyArgs comp_args;
  std::int64_t degree = 0;
  bool count_only = false, dimension = false;
  auto* comp = app.add_subcommand("components", "effective classes indexing components of degree d");
  add_variety_flags(comp, comp_args);
  comp->add_option("-d,--degree", degree, "curve degree")->required();
  comp->add_flag("--count-only", count_only, "print the count only");
  comp->add_flag("--dimension", dimension, "annotate each class with its expected dimension");

  auto* audit = app.add_subcommand("audit", "brute-force verification of the identities");
  bool all = false, exceptional = false;
  std::vector<std::string> suites, scopes;
  msv::AuditScope scope = msv::AuditScope::default_scope();
  int jobs = 0;
  audit->add_flag("--all", all, "every suite over the default scope");
  audit->add_option("--suite", suites, "suite name (repeatable)");
  audit->add_option("--scope", scopes, "type such as A4, or type:weights such as D5:1,4");
  audit->add_option("--max-length", scope.max_length, "maximal coset length");
  audit->add_option("--max-degree", scope.max_degree, "maximal degree for component checks")
      ->capture_default_str();
  audit->add_option("--window", scope.chain_window, "chain window for the Chow oracle")
      ->capture_default_str();
  audit->add_option("--word-cap", scope.word_cap, "reduced words per coset")->capture_default_str();
  audit->add_option("--budget", scope.budget, "maximal number of elementary checks")
      ->capture_default_str();
  audit->add_option("--jobs", jobs, "worker threads (0: runtime default)");
  audit->add_flag("--with-exceptional", exceptional, "add E6 and E7");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (table->parsed()) {
      const msv::RootSystem rs = msv::RootSystem::build(msv::parse_family(t_family), t_rank);
      const auto cls = msv::classify_minuscule(rs);
      out.emit(msv::to_json(rs, cls), msv::render_table(rs, cls));
    } else if (bs_cmd->parsed()) {
      const msv::BottSamelsonData bs = build_variety(bs_args, out);
      out.emit(msv::to_json(bs), msv::render_bs(bs));
    } else if (comp->parsed()) {
      const msv::BottSamelsonData bs = build_variety(comp_args, out);
      const msv::ComponentSet set = msv::ne_set(bs, degree);
      msv::Json json = msv::to_json(bs, set, dimension);
      if (count_only) json.erase("classes");
      out.emit(json, msv::render_components(bs, set, dimension, count_only));
    } else if (audit->parsed()) {
      if (!scopes.empty()) {
        scope.entries.clear();
        for (const std::string& s : scopes) add_scope_entry(scope, s);
      }
      if (exceptional) scope.add_exceptional();
      std::vector<msv::Suite> selected;
      if (all || suites.empty()) {
        selected = msv::all_suites();
      } else {
        for (const std::string& s : suites) selected.push_back(msv::parse_suite(s));
      }
      for (msv::Suite s : selected)
        out.log(msv::suite_name(s) + ": " + std::to_string(msv::predicted_checks(scope, s)) +
                " checks predicted");
      const msv::AuditReport report = msv::run_audit(scope, selected, jobs);
      out.emit(msv::to_json(report), msv::render_audit(report));
      return report.passed() ? kOk : kAuditFailed;
    }
  } catch (const msv::InvariantViolation& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return kInvariant;
  } catch (const msv::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}
