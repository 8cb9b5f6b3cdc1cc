#include "msv/audit.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <map>
#include <memory>
#include <string>

#include "msv/components.hpp"
#include "msv/error.hpp"
#include "msv/weyl.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace msv {

namespace {

constexpr std::size_t kMaxCounterexamples = 1000;

struct SuiteInfo {
  Suite suite;
  const char* name;
  bool variety_level;
};

constexpr SuiteInfo kSuites[] = {
    {Suite::Positivity, "positivity", true},
    {Suite::Bounds, "bounds", true},
    {Suite::ChowOracle, "chow-oracle", true},
    {Suite::Reversal, "reversal", true},
    {Suite::Pgqb, "pgqb", true},
    {Suite::Fin, "fin", true},
    {Suite::Rectif, "rectif", true},
    {Suite::Pgqmoins1, "pgqmoins1", true},
    {Suite::Contracted, "contracted", true},
    {Suite::HatDuality, "hat-duality", true},
    {Suite::TangentNonneg, "tangent-nonneg", true},
    {Suite::Swap, "swap", true},
    {Suite::LastLetter, "last-letter", true},
    {Suite::GrassmannianCount, "grassmannian-count", false},
    {Suite::HolePic, "hole-pic", false},
};

const SuiteInfo& info(Suite s) {
  for (const SuiteInfo& i : kSuites)
    if (i.suite == s) return i;
  throw InputError("unknown suite");
}

std::string entry_label(const ScopeEntry& e) {
  return std::string(1, family_letter(e.family)) + std::to_string(e.rank) + " w" +
         std::to_string(e.weight);
}

// Collects the outcome of the checks for one work item.
class Sink {
 public:
  Sink(std::string label, Word word) : label_(std::move(label)), word_(std::move(word)) {}

  void check(bool ok, std::vector<int> indices, std::int64_t observed, std::int64_t expected,
             const char* what) {
    ++checks;
    if (ok) return;
    ++failures;
    if (records.size() < kMaxCounterexamples)
      records.push_back({label_, word_, std::move(indices), observed, expected, what});
  }

  void exception(const std::exception& e) {
    ++checks;
    ++failures;
    if (records.size() < kMaxCounterexamples)
      records.push_back({label_, word_, {}, 0, 0, e.what()});
  }

  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::vector<Counterexample> records;

 private:
  std::string label_;
  Word word_;
};

std::vector<Root> reversed_alphas(const BottSamelsonData& bs) {
  const RootSystem& rs = bs.root_system();
  std::vector<Root> out;
  WeylElement prefix(rs);
  for (int i = bs.n(); i >= 1; --i) {
    out.push_back(prefix.image_of_simple(bs.beta(i)));
    prefix = prefix.times_simple(bs.beta(i));
  }
  return out;
}

Root reflect_in(const RootSystem& rs, const Root& a, const Root& y) {
  const int p = rs.pairing(a, y);
  Root r = y;
  for (std::size_t c = 0; c < r.coeffs.size(); ++c) r.coeffs[c] -= p * a.coeffs[c];
  return r;
}

// ---- variety-level suites -------------------------------------------------

void positivity(const AuditScope&, const AuditCase&, const BottSamelsonData& bs, Sink& sink) {
  for (int i = 1; i <= bs.n(); ++i)
    for (int j = 1; j <= bs.n(); ++j)
      sink.check(bs.pair_alpha(i, j) >= 0, {i, j}, bs.pair_alpha(i, j), 0,
                 "<alpha_i^vee, alpha_j> >= 0");
}

void bounds(const AuditScope&, const AuditCase&, const BottSamelsonData& bs, Sink& sink) {
  for (int i = 1; i <= bs.n(); ++i)
    for (int j = 1; j <= bs.n(); ++j) {
      const int p = bs.pair_alpha(i, j);
      const bool equal = bs.alpha(i) == bs.alpha(j);
      sink.check(p <= 2 && (p == 2) == equal, {i, j}, p, equal ? 2 : 1,
                 "<alpha_i^vee, alpha_j> <= 2 with equality iff alpha_i = alpha_j");
    }
}

void chow_oracle(const AuditScope& scope, const AuditCase&, const BottSamelsonData& bs,
                 Sink& sink) {
  const RootSystem& rs = bs.root_system();
  for (int i = 1; i <= bs.n(); ++i)
    for (int j = i + 1; j <= bs.n() && j - i <= scope.chain_window; ++j) {
      const std::int64_t chain = bs.chow_pairing_oracle(i, j, scope.chain_window);
      const int direct = rs.pairing(rs.simple_root(bs.beta(i)), rs.simple_root(bs.beta(j)));
      sink.check(chain == direct && bs.c_dot_xi(i, j) == direct, {i, j}, chain, direct,
                 "chain sum = <beta_i^vee, beta_j> = C_i . xi_j");
    }
}

void reversal(const AuditScope&, const AuditCase&, const BottSamelsonData& bs, Sink& sink) {
  const RootSystem& rs = bs.root_system();
  const std::vector<Root> rev = reversed_alphas(bs);
  const int n = bs.n();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const int mirrored = rs.pairing(rev[n - i], rev[n - j]);
      sink.check(bs.pair_alpha(i, j) == mirrored, {i, j}, bs.pair_alpha(i, j), mirrored,
                 "pairing invariant under sequence reversal");
    }
}

void pgqb(const AuditScope&, const AuditCase&, const BottSamelsonData& bs, Sink& sink) {
  const std::vector<Root> rev = reversed_alphas(bs);
  const int special = bs.special_root();
  for (int i = 1; i <= bs.n(); ++i) {
    const Root& r = rev[i - 1];
    const bool dominates = r.is_positive() && r.coeffs[special - 1] >= 1;
    sink.check(dominates && r.coeffs[special - 1] == 1, {i}, r.coeffs[special - 1], 1,
               "reversed alpha_i >= beta with beta-coefficient 1");
  }
}

void fin(const AuditScope&, const AuditCase&, const BottSamelsonData& bs, Sink& sink) {
  for (int j = 1; j <= bs.n(); ++j) {
    if (bs.beta(j) != bs.special_root()) continue;
    for (int i = 1; i < j; ++i) {
      const int predicted = fin_prediction(bs.root_system(), bs.beta(), i, j);
      sink.check(bs.pair_alpha(i, j) == predicted, {i, j}, bs.pair_alpha(i, j), predicted,
                 "case analysis for beta_j = beta");
    }
  }
}

void rectif(const AuditScope&, const AuditCase&, const BottSamelsonData& bs, Sink& sink) {
  for (int i = 1; i <= bs.n(); ++i) {
    std::int64_t sum = 0;
    for (int k = i + 1; k <= bs.n(); ++k)
      if (bs.beta(k) == bs.special_root()) sum += bs.pair_alpha(i, k);
    const int expected = bs.beta(i) != bs.special_root() ? 1 : 0;
    sink.check(sum == expected, {i}, sum, expected, "sum over later beta positions");
  }
}

void pgqmoins1(const AuditScope&, const AuditCase&, const BottSamelsonData& bs, Sink& sink) {
  const RootSystem& rs = bs.root_system();
  for (int i = 1; i <= bs.n(); ++i)
    for (int x = 1; x <= bs.n(); ++x) {
      if (bs.pair_alpha(i, x) != 1) continue;
      for (int j = 1; j <= bs.n(); ++j) {
        const int v = rs.pairing(bs.alpha(i), reflect_in(rs, bs.alpha(x), bs.alpha(j)));
        sink.check(v >= -1, {i, x, j}, v, -1, "<alpha_i^vee, s_{alpha_x}(alpha_j)> >= -1");
      }
    }
}

void contracted(const AuditScope&, const AuditCase&, const BottSamelsonData& bs, Sink& sink) {
  const int n = bs.n();
  for (int x : bs.contracted_divisors()) {
    bool minus_one = false;
    for (int i = 1; i < x; ++i) minus_one = minus_one || bs.c_dot_xi(i, x) == -1;
    sink.check(minus_one, {x}, minus_one, 1, "contracted x has i < x with C_i . xi_x = -1");

    bool unit = false;
    for (int i = 1; i <= n; ++i) unit = unit || bs.pair_alpha(i, x) == 1;
    sink.check(unit, {x}, unit, 1, "contracted x has i with <alpha_i^vee, alpha_x> = 1");

    for (int i = 1; i <= n; ++i) {
      if (bs.pair_alpha(i, x) != 1) continue;
      try {
        const CurveClass g = bs.gamma_curve(x, i);
        const std::int64_t dot = bs.intersect_xi(g).b[x - 1];
        const std::int64_t deg = bs.curve_degree(g);
        sink.check(dot == -1 && deg == 0, {x, i}, dot == -1 ? deg : dot, dot == -1 ? 0 : -1,
                   "Gamma_{x,i} . xi_x = -1 and Gamma_{x,i} has degree 0");
      } catch (const InvariantViolation& e) {
        sink.exception(e);
      }
    }
  }
  for (int x = 1; x < n; ++x) {
    bool found = false;
    for (int j = x + 1; j <= n; ++j) found = found || bs.pair_alpha(x, j) == 1;
    sink.check(found, {x}, found, 1, "x < n has j > x with <alpha_x^vee, alpha_j> = 1");
  }
}

void hat_duality(const AuditScope&, const AuditCase&, const BottSamelsonData& bs, Sink& sink) {
  const int n = bs.n();
  for (int i = 1; i <= n; ++i) {
    // Built by hand so a duality failure is reported rather than thrown.
    CurveClass hat = bs.unit_curve(i);
    for (int k = i + 1; k <= n; ++k) hat.a[k - 1] = bs.pair_alpha(i, k);
    const DivisorVector b = bs.intersect_xi(hat);
    for (int j = 1; j <= n; ++j) {
      const int expected = i == j ? 1 : 0;
      sink.check(b.b[j - 1] == expected, {i, j}, b.b[j - 1], expected, "hat C_i . xi_j = delta_ij");
    }
    for (int j = 1; j <= n; ++j) {
      const std::int64_t t = bs.dot_tangent(hat, j);
      const std::int64_t expected = i <= j ? bs.pair_alpha(i, j) : 0;
      sink.check(t == expected, {i, j}, t, expected, "hat C_i . T_j");
    }
  }
  for (int j = 1; j <= n; ++j) {
    const std::int64_t deg = bs.curve_degree(bs.tilde_curve(j));
    const int expected = j == n ? 1 : 0;
    sink.check(deg == expected, {j}, deg, expected, "degree of tilde C_j");
  }
}

void tangent_nonneg(const AuditScope&, const AuditCase&, const BottSamelsonData& bs, Sink& sink) {
  // The classes with nonnegative xi-intersections form the cone spanned by
  // the dual classes of the xi_i, so the rays suffice.
  const int n = bs.n();
  for (int i = 1; i <= n; ++i) {
    DivisorVector ray{std::vector<std::int64_t>(n, 0)};
    ray.b[i - 1] = 1;
    const CurveClass c = bs.from_xi(ray);
    for (int k = 1; k <= n; ++k) {
      const std::int64_t v = bs.dot_tangent(c, k) - bs.intersect_xi(c).b[k - 1];
      sink.check(v >= 0, {i, k}, v, 0, "C . (T_k - xi_k) >= 0 for C . xi >= 0");
    }
  }
}

std::vector<std::uint64_t> counts_up_to(const BottSamelsonData& bs, int max_degree) {
  std::vector<std::uint64_t> out;
  for (int d = 0; d <= max_degree; ++d) out.push_back(component_count(bs, d));
  return out;
}

void swap_suite(const AuditScope& scope, const AuditCase& c, const BottSamelsonData& bs,
                Sink& sink) {
  const int n = bs.n();
  for (int i = 1; i < n; ++i) {
    if (bs.pair_beta(i, i + 1) != 0) continue;
    const BottSamelsonData t = swapped(bs, i, Verify::Skip);
    auto p = [&](int k) { return k == i ? i + 1 : k == i + 1 ? i : k; };
    bool same = true;
    for (int k = 1; k <= n && same; ++k) {
      same = t.gamma()[k - 1] == bs.gamma()[p(k) - 1] && t.beta(k) == bs.beta(p(k)) &&
             t.alpha(k) == bs.alpha(p(k)) && t.is_contracted(k) == bs.is_contracted(p(k));
      for (int l = 1; l <= n && same; ++l)
        same = t.pair_alpha(k, l) == bs.pair_alpha(p(k), p(l)) &&
               t.pair_beta(k, l) == bs.pair_beta(p(k), p(l));
    }
    sink.check(same, {i, i + 1}, same, 1, "swapped word gives index-transposed data");
  }
  const BottSamelsonData canonical =
      BottSamelsonData::build(bs.root_system_ptr(), bs.weight_index(), c.coset_word, Verify::Skip);
  const std::vector<std::uint64_t> mine = counts_up_to(bs, scope.max_degree);
  const std::vector<std::uint64_t> ref = counts_up_to(canonical, scope.max_degree);
  for (int d = 0; d <= scope.max_degree; ++d)
    sink.check(mine[d] == ref[d], {d}, static_cast<std::int64_t>(mine[d]),
               static_cast<std::int64_t>(ref[d]), "component count independent of reduced word");
}

void last_letter(const AuditScope&, const AuditCase&, const BottSamelsonData& bs, Sink& sink) {
  if (bs.n() == 0) return;
  const RootSystem& rs = bs.root_system();
  const Weight twisted = rs.fundamental_weight(weyl_involution(rs, bs.weight_index()));
  int unique = 0;
  for (int b = 1; b <= rs.rank(); ++b)
    if (rs.pairing(rs.simple_root(b), twisted) == 1) unique = unique == 0 ? b : -1;
  sink.check(unique > 0 && bs.beta(bs.n()) == unique, {bs.n()}, bs.beta(bs.n()), unique,
             "last beta letter is the unique simple root pairing to 1 with i(weight)");
}

using VarietyCheck = void (*)(const AuditScope&, const AuditCase&, const BottSamelsonData&, Sink&);

VarietyCheck variety_check(Suite s) {
  switch (s) {
    case Suite::Positivity: return positivity;
    case Suite::Bounds: return bounds;
    case Suite::ChowOracle: return chow_oracle;
    case Suite::Reversal: return reversal;
    case Suite::Pgqb: return pgqb;
    case Suite::Fin: return fin;
    case Suite::Rectif: return rectif;
    case Suite::Pgqmoins1: return pgqmoins1;
    case Suite::Contracted: return contracted;
    case Suite::HatDuality: return hat_duality;
    case Suite::TangentNonneg: return tangent_nonneg;
    case Suite::Swap: return swap_suite;
    case Suite::LastLetter: return last_letter;
    default: throw InputError("not a variety-level suite");
  }
}

std::uint64_t predicted_for(const AuditScope& scope, Suite s, const BottSamelsonData& bs) {
  const std::uint64_t n = bs.n();
  auto count_pairs = [&](auto pred) {
    std::uint64_t c = 0;
    for (int i = 1; i <= bs.n(); ++i)
      for (int j = 1; j <= bs.n(); ++j)
        if (pred(i, j)) ++c;
    return c;
  };
  switch (s) {
    case Suite::Positivity:
    case Suite::Bounds:
    case Suite::Reversal:
    case Suite::TangentNonneg:
      return n * n;
    case Suite::ChowOracle: {
      std::uint64_t c = 0;
      for (std::uint64_t d = 1; d < n && d <= static_cast<std::uint64_t>(scope.chain_window); ++d)
        c += n - d;
      return c;
    }
    case Suite::Pgqb:
    case Suite::Rectif:
      return n;
    case Suite::Fin:
      return count_pairs([&](int i, int j) { return i < j && bs.beta(j) == bs.special_root(); });
    case Suite::Pgqmoins1:
      return n * count_pairs([&](int i, int x) { return bs.pair_alpha(i, x) == 1; });
    case Suite::Contracted: {
      const std::uint64_t x = bs.contracted_divisors().size();
      const std::uint64_t gammas = count_pairs(
          [&](int i, int xx) { return bs.is_contracted(xx) && bs.pair_alpha(i, xx) == 1; });
      return 2 * x + gammas + (n > 0 ? n - 1 : 0);
    }
    case Suite::HatDuality:
      return 2 * n * n + n;
    case Suite::Swap: {
      std::uint64_t c = 0;
      for (int i = 1; i < bs.n(); ++i)
        if (bs.pair_beta(i, i + 1) == 0) ++c;
      return c + static_cast<std::uint64_t>(scope.max_degree + 1);
    }
    case Suite::LastLetter:
      return n > 0 ? 1 : 0;
    default:
      return 0;
  }
}

// ---- Grassmannian suites ----------------------------------------------------

struct BoxItem {
  Partition partition;
};

std::vector<BoxItem> box_items(int max_rows, int max_cols) {
  std::vector<BoxItem> out;
  for (int r = 1; r <= max_rows; ++r)
    for (int c = 1; c <= max_cols; ++c)
      for (Partition& p : partitions_in_box(r, c))
        if (p.dimension() > 0) out.push_back({std::move(p)});
  return out;
}

std::string box_label(const Partition& p) {
  return "box " + std::to_string(p.rows) + "x" + std::to_string(p.cols);
}

BottSamelsonData partition_data(const Partition& p) {
  const GrassmannianWord g = partition_to_word(p);
  return BottSamelsonData::build(std::make_shared<const RootSystem>(RootSystem::build(Family::A, g.rank)),
                                 g.weight_index, g.word, Verify::Skip);
}

void grassmannian_count(const AuditScope& scope, const BoxItem& item, Sink& sink) {
  const BottSamelsonData bs = partition_data(item.partition);
  const int r = partition_hole_count(item.partition);
  for (int d = 0; d <= scope.max_degree; ++d) {
    const std::uint64_t count = component_count(bs, d);
    const std::uint64_t expected = binomial(d + r - 1, d);
    std::vector<int> idx = item.partition.parts;
    idx.push_back(d);
    sink.check(count == expected, idx, static_cast<std::int64_t>(count),
               static_cast<std::int64_t>(expected), "component count = binom(d + r - 1, d)");
  }
}

void hole_pic(const AuditScope&, const BoxItem& item, Sink& sink) {
  const BottSamelsonData bs = partition_data(item.partition);
  const int holes = partition_hole_count(item.partition);
  const int pic = picard_rank_open_orbit(bs);
  sink.check(holes == pic, item.partition.parts, holes, pic, "holes = Picard rank of the open orbit");
}

// ---- sweeping -----------------------------------------------------------------

struct Prepared {
  std::vector<AuditCase> cases;
  std::vector<BoxItem> boxes;
  std::map<std::pair<int, int>, std::shared_ptr<const RootSystem>> systems;

  std::shared_ptr<const RootSystem> system(const ScopeEntry& e) {
    auto key = std::make_pair(static_cast<int>(e.family), e.rank);
    auto it = systems.find(key);
    if (it == systems.end())
      it = systems.emplace(key, std::make_shared<const RootSystem>(RootSystem::build(e.family, e.rank)))
               .first;
    return it->second;
  }
};

Prepared prepare(const AuditScope& scope, Suite suite) {
  Prepared p;
  if (info(suite).variety_level) {
    p.cases = enumerate_cases(scope);
    for (const AuditCase& c : p.cases) p.system(c.entry);
  } else if (suite == Suite::GrassmannianCount) {
    p.boxes = box_items(scope.count_box_rows, scope.count_box_cols);
  } else {
    p.boxes = box_items(scope.hole_box_rows, scope.hole_box_cols);
  }
  return p;
}

Sink run_case(const AuditScope& scope, Suite suite, Prepared& prep, std::size_t idx) {
  if (info(suite).variety_level) {
    const AuditCase& c = prep.cases[idx];
    Sink sink(entry_label(c.entry), c.word);
    try {
      const auto rs = prep.systems.at({static_cast<int>(c.entry.family), c.entry.rank});
      const BottSamelsonData bs = BottSamelsonData::build(rs, c.entry.weight, c.word, Verify::Skip);
      variety_check(suite)(scope, c, bs, sink);
    } catch (const InvariantViolation& e) {
      sink.exception(e);
    }
    return sink;
  }
  const BoxItem& item = prep.boxes[idx];
  Sink sink(box_label(item.partition), {});
  try {
    if (suite == Suite::GrassmannianCount)
      grassmannian_count(scope, item, sink);
    else
      hole_pic(scope, item, sink);
  } catch (const InvariantViolation& e) {
    sink.exception(e);
  }
  return sink;
}

void enforce_budget(const AuditScope& scope, Suite suite) {
  const std::uint64_t predicted = predicted_checks(scope, suite);
  if (predicted > scope.budget)
    throw BudgetExceeded("suite " + suite_name(suite) + " would run an estimated " +
                         std::to_string(predicted) + " checks, above the budget of " +
                         std::to_string(scope.budget));
}

SuiteResult merge(Suite suite, std::vector<Sink>& sinks, double ms) {
  SuiteResult r;
  r.suite = suite;
  for (Sink& s : sinks) {
    r.checks += s.checks;
    r.failures += s.failures;
    for (Counterexample& c : s.records)
      if (r.counterexamples.size() < kMaxCounterexamples) r.counterexamples.push_back(std::move(c));
  }
  r.wall_ms = ms;
  return r;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> suites = [] {
    std::vector<Suite> v;
    for (const SuiteInfo& i : kSuites) v.push_back(i.suite);
    return v;
  }();
  return suites;
}

std::string suite_name(Suite s) { return info(s).name; }

Suite parse_suite(const std::string& name) {
  for (const SuiteInfo& i : kSuites)
    if (name == i.name) return i.suite;
  throw InputError("unknown audit suite '" + name + "'");
}

AuditScope AuditScope::default_scope() {
  AuditScope s;
  for (int r = 2; r <= 4; ++r) s.add_type(Family::A, r);
  s.add_type(Family::D, 4);
  s.add_type(Family::D, 5);
  s.max_degree = 4;
  s.count_box_rows = s.count_box_cols = 3;
  s.hole_box_rows = 3;
  s.hole_box_cols = 4;
  return s;
}

void AuditScope::add_type(Family family, int rank) {
  const RootSystem rs = RootSystem::build(family, rank);
  for (const WeightClassification& w : classify_minuscule(rs))
    if (w.minuscule) entries.push_back({family, rank, w.index});
}

void AuditScope::add_exceptional() {
  add_type(Family::E, 6);
  add_type(Family::E, 7);
}

bool AuditReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed(); });
}

std::uint64_t AuditReport::total_checks() const {
  std::uint64_t t = 0;
  for (const SuiteResult& s : suites) t += s.checks;
  return t;
}

std::vector<AuditCase> enumerate_cases(const AuditScope& scope) {
  std::vector<AuditCase> out;
  for (const ScopeEntry& e : scope.entries) {
    const RootSystem rs = RootSystem::build(e.family, e.rank);
    if (!is_minuscule(rs, e.weight))
      throw InputError("audit scope entry " + entry_label(e) + " is not a minuscule weight");
    for (const Word& coset : enumerate_minuscule_cosets(rs, e.weight, scope.max_length)) {
      ReducedWords words(rs, coset);
      for (Word& w : words.sample(scope.word_cap)) out.push_back({e, coset, std::move(w)});
    }
  }
  return out;
}

std::uint64_t predicted_checks(const AuditScope& scope, Suite suite) {
  if (suite == Suite::GrassmannianCount)
    return box_items(scope.count_box_rows, scope.count_box_cols).size() *
           static_cast<std::uint64_t>(scope.max_degree + 1);
  if (suite == Suite::HolePic) return box_items(scope.hole_box_rows, scope.hole_box_cols).size();
  Prepared prep = prepare(scope, suite);
  std::uint64_t total = 0;
  for (const AuditCase& c : prep.cases) {
    const BottSamelsonData bs =
        BottSamelsonData::build(prep.system(c.entry), c.entry.weight, c.word, Verify::Skip);
    total += predicted_for(scope, suite, bs);
  }
  return total;
}

namespace {

SuiteResult parallel_sweep(const AuditScope& scope, Suite suite, int jobs) {
  const auto start = std::chrono::steady_clock::now();
  Prepared prep = prepare(scope, suite);
  const std::size_t items = info(suite).variety_level ? prep.cases.size() : prep.boxes.size();
  std::vector<Sink> sinks(items, Sink("", {}));
  std::exception_ptr error;
#ifdef _OPENMP
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#else
  (void)jobs;
#endif
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::size_t i = 0; i < items; ++i) {
    try {
      sinks[i] = run_case(scope, suite, prep, i);
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return merge(suite, sinks, elapsed_ms(start));
}

}  // namespace

SuiteResult run_suite(const AuditScope& scope, Suite suite, int jobs) {
  enforce_budget(scope, suite);
  return parallel_sweep(scope, suite, jobs);
}

SuiteResult run_suite_serial(const AuditScope& scope, Suite suite) {
  enforce_budget(scope, suite);
  const auto start = std::chrono::steady_clock::now();
  Prepared prep = prepare(scope, suite);
  const std::size_t items = info(suite).variety_level ? prep.cases.size() : prep.boxes.size();
  std::vector<Sink> sinks;
  sinks.reserve(items);
  for (std::size_t i = 0; i < items; ++i) sinks.push_back(run_case(scope, suite, prep, i));
  return merge(suite, sinks, elapsed_ms(start));
}

AuditReport run_audit(const AuditScope& scope, const std::vector<Suite>& suites, int jobs) {
  for (Suite s : suites) enforce_budget(scope, s);
  AuditReport report;
  for (Suite s : suites) report.suites.push_back(parallel_sweep(scope, s, jobs));
  report.degree_convention = degree_convention_tally(scope);
  return report;
}

DegreeConventionTally degree_convention_tally(const AuditScope& scope) {
  DegreeConventionTally t;
  Prepared prep = prepare(scope, Suite::LastLetter);
  for (const AuditCase& c : prep.cases) {
    const auto rs = prep.system(c.entry);
    const BottSamelsonData bs = BottSamelsonData::build(rs, c.entry.weight, c.word, Verify::Skip);
    const DivisorVector own = bs.line_bundle_class(rs->fundamental_weight(c.entry.weight));
    const DivisorVector twisted =
        bs.line_bundle_class(rs->fundamental_weight(weyl_involution(*rs, c.entry.weight)));
    bool a = true, b = true;
    for (int j = 1; j <= bs.n(); ++j) {
      const CurveClass u = bs.unit_curve(j);
      a = a && bs.intersect(u, own) == bs.curve_degree(u);
      b = b && bs.intersect(u, twisted) == bs.curve_degree(u);
    }
    ++t.cases;
    t.agrees_with_weight += a;
    t.agrees_with_involuted_weight += b;
  }
  return t;
}

namespace {

int previous_same(const std::vector<int>& beta, int j) {
  for (int k = j - 1; k >= 1; --k)
    if (beta[k - 1] == beta[j - 1]) return k;
  return 0;
}

}  // namespace

int fin_prediction(const RootSystem& rs, const std::vector<int>& beta, int i, int j) {
  // a precedes b in the heap of the word when a chain a = k_0 < ... < k_m = b
  // of pairwise non-commuting neighbours links them.
  auto precedes = [&](int a, int b) {
    std::vector<char> reach(b - a + 1, 0);
    reach[0] = 1;
    for (int k = a + 1; k <= b; ++k)
      for (int l = a; l < k && !reach[k - a]; ++l)
        reach[k - a] = reach[l - a] && rs.cartan(beta[l - 1], beta[k - 1]) != 0;
    return reach[b - a] != 0;
  };
  if (!precedes(i, j)) return 0;
  const int p = previous_same(beta, j);
  if (p != 0 && i <= p && precedes(i, p)) return 0;
  return 1;
}

int fin_prediction_literal(const RootSystem& rs, const std::vector<int>& beta, int i, int j) {
  auto commutes_through = [&](int last) {
    for (int k = i + 1; k <= last; ++k)
      if (rs.cartan(beta[i - 1], beta[k - 1]) != 0) return false;
    return true;
  };
  if (commutes_through(j)) return 0;
  const int p = previous_same(beta, j);
  if (p == 0 || i > p) return 1;
  if (i < p && commutes_through(p)) return 1;
  return 0;
}

}  // namespace msv
