#include "msv/serialize.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace msv {

namespace {

template <class T>
std::string join(const std::vector<T>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

std::string paren(const std::vector<int>& v) { return "(" + join(v) + ")"; }

std::string root_string(const Root& r) {
  std::string s;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
    const int c = r.coeffs[i];
    if (c == 0) continue;
    if (!s.empty()) s += c > 0 ? "+" : "-";
    else if (c < 0) s += "-";
    if (std::abs(c) != 1) s += std::to_string(std::abs(c));
    s += "a" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

Json table_rows(const BottSamelsonData& bs, bool alpha) {
  Json rows = Json::array();
  for (int i = 1; i <= bs.n(); ++i) {
    std::vector<int> row;
    for (int j = 1; j <= bs.n(); ++j) row.push_back(alpha ? bs.pair_alpha(i, j) : bs.pair_beta(i, j));
    rows.push_back(row);
  }
  return rows;
}

void print_matrix(std::ostringstream& os, const BottSamelsonData& bs, const char* title,
                  auto entry) {
  os << title << ":\n";
  for (int i = 1; i <= bs.n(); ++i) {
    os << " ";
    for (int j = 1; j <= bs.n(); ++j) {
      char buf[24];
      std::snprintf(buf, sizeof buf, "%3lld", static_cast<long long>(entry(i, j)));
      os << buf;
    }
    os << "\n";
  }
}

}  // namespace

Json to_json(const RootSystem& rs, const std::vector<WeightClassification>& table) {
  Json weights = Json::array();
  for (const WeightClassification& w : table)
    weights.push_back({{"index", w.index}, {"minuscule", w.minuscule}, {"cominuscule", w.cominuscule}});
  return Json{{"family", std::string(1, family_letter(rs.family()))},
              {"rank", rs.rank()},
              {"weights", weights}};
}

Json to_json(const BottSamelsonData& bs) {
  const RootSystem& rs = bs.root_system();
  Json alpha = Json::array();
  for (const Root& r : bs.alpha()) alpha.push_back(r.coeffs);
  Json tangent = Json::array();
  Json hat = Json::array();
  for (int j = 1; j <= bs.n(); ++j) {
    tangent.push_back(bs.tangent_class(j).b);
    hat.push_back(bs.hat_curve(j).a);
  }
  return Json{{"family", std::string(1, family_letter(rs.family()))},
              {"rank", rs.rank()},
              {"weight", bs.weight_index()},
              {"n", bs.n()},
              {"gamma", bs.gamma()},
              {"beta", bs.beta()},
              {"alpha", alpha},
              {"special_root", bs.special_root()},
              {"pair_alpha", table_rows(bs, true)},
              {"pair_beta", table_rows(bs, false)},
              {"contracted", bs.contracted_divisors()},
              {"tangent", tangent},
              {"hat_basis", hat}};
}

Json to_json(const BottSamelsonData& bs, const ComponentSet& set, bool with_dimension) {
  Json classes = Json::array();
  for (const EffectiveClass& e : set.classes) {
    Json c{{"b", e.b.b}, {"a", e.a.a}};
    if (with_dimension) c["dimension"] = component_dimension(bs, e.a);
    classes.push_back(c);
  }
  return Json{{"degree", set.degree}, {"count", set.count()}, {"classes", classes}};
}

Json to_json(const AuditReport& report, bool with_timing) {
  Json suites = Json::array();
  for (const SuiteResult& s : report.suites) {
    Json ces = Json::array();
    for (const Counterexample& c : s.counterexamples)
      ces.push_back({{"label", c.label},
                     {"word", c.word},
                     {"indices", c.indices},
                     {"observed", c.observed},
                     {"expected", c.expected},
                     {"what", c.what}});
    Json j{{"suite", suite_name(s.suite)},
           {"passed", s.passed()},
           {"checks", s.checks},
           {"failures", s.failures},
           {"counterexamples", ces}};
    if (with_timing) j["wall_ms"] = s.wall_ms;
    suites.push_back(j);
  }
  const DegreeConventionTally& t = report.degree_convention;
  return Json{{"passed", report.passed()},
              {"total_checks", report.total_checks()},
              {"suites", suites},
              {"degree_convention",
               {{"cases", t.cases},
                {"agrees_with_weight", t.agrees_with_weight},
                {"agrees_with_involuted_weight", t.agrees_with_involuted_weight}}}};
}

std::string render_table(const RootSystem& rs, const std::vector<WeightClassification>& table) {
  std::ostringstream os;
  os << rs.name() << "\n";
  os << "weight  minuscule  cominuscule\n";
  for (const WeightClassification& w : table) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "w%-6d %-10s %s\n", w.index, w.minuscule ? "yes" : "no",
                  w.cominuscule ? "yes" : "no");
    os << buf;
  }
  return os.str();
}

std::string render_bs(const BottSamelsonData& bs) {
  std::ostringstream os;
  os << bs.root_system().name() << " w" << bs.weight_index() << "  n=" << bs.n() << "\n";
  os << "gamma      " << paren(bs.gamma()) << "\n";
  os << "beta       " << paren(bs.beta()) << "\n";
  os << "alpha      ";
  for (int i = 1; i <= bs.n(); ++i) os << (i > 1 ? ", " : "") << root_string(bs.alpha(i));
  os << "\n";
  os << "special    " << bs.special_root() << "\n";
  os << "contracted {" << join(bs.contracted_divisors()) << "}\n";
  print_matrix(os, bs, "pair_alpha", [&](int i, int j) { return bs.pair_alpha(i, j); });
  print_matrix(os, bs, "pair_beta", [&](int i, int j) { return bs.pair_beta(i, j); });
  print_matrix(os, bs, "tangent rows", [&](int j, int k) { return bs.tangent_class(j).b[k - 1]; });
  print_matrix(os, bs, "hat basis", [&](int i, int k) { return bs.hat_curve(i).a[k - 1]; });
  return os.str();
}

std::string render_components(const BottSamelsonData& bs, const ComponentSet& set,
                              bool with_dimension, bool count_only) {
  std::ostringstream os;
  os << "degree " << set.degree << "  count " << set.count() << "\n";
  if (count_only) return os.str();
  for (const EffectiveClass& e : set.classes) {
    os << "  b=(" << join(e.b.b) << ")  a=(" << join(e.a.a) << ")";
    if (with_dimension) os << "  dim=" << component_dimension(bs, e.a);
    os << "\n";
  }
  return os.str();
}

std::string render_audit(const AuditReport& report) {
  std::ostringstream os;
  os << "suite                  result      checks  failures      ms\n";
  for (const SuiteResult& s : report.suites) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%-22s %-6s %11llu %9llu %7.0f\n", suite_name(s.suite).c_str(),
                  s.passed() ? "pass" : "FAIL", static_cast<unsigned long long>(s.checks),
                  static_cast<unsigned long long>(s.failures), s.wall_ms);
    os << buf;
    for (std::size_t i = 0; i < s.counterexamples.size() && i < 10; ++i) {
      const Counterexample& c = s.counterexamples[i];
      os << "    " << c.label << " word " << paren(c.word) << " at " << paren(c.indices)
         << ": observed " << c.observed << ", expected " << c.expected << " (" << c.what << ")\n";
    }
  }
  const DegreeConventionTally& t = report.degree_convention;
  os << "total checks " << report.total_checks() << "\n";
  os << "degree convention: " << t.agrees_with_weight << "/" << t.cases
     << " cases agree with L(w), " << t.agrees_with_involuted_weight << "/" << t.cases
     << " with L(i(w))\n";
  os << (report.passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace msv
