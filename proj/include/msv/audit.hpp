#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "msv/bott_samelson.hpp"
#include "msv/root_system.hpp"

namespace msv {

enum class Suite {
  Positivity,
  Bounds,
  ChowOracle,
  Reversal,
  Pgqb,
  Fin,
  Rectif,
  Pgqmoins1,
  Contracted,
  HatDuality,
  TangentNonneg,
  Swap,
  LastLetter,
  GrassmannianCount,
  HolePic,
};

const std::vector<Suite>& all_suites();
std::string suite_name(Suite s);
Suite parse_suite(const std::string& name);

struct ScopeEntry {
  Family family;
  int rank;
  int weight;
};

struct AuditScope {
  std::vector<ScopeEntry> entries;
  int max_length = 1 << 20;
  int max_degree = 0;
  int chain_window = 12;
  // Reduced words per coset; above this count a deterministic sample is used.
  std::uint64_t word_cap = 100;
  // Grassmannian suites sweep every box rows x cols with 1 <= rows <= *_rows
  // and 1 <= cols <= *_cols.
  int count_box_rows = 0, count_box_cols = 0;
  int hole_box_rows = 0, hole_box_cols = 0;
  std::uint64_t budget = 10'000'000;

  // A2-A4, D4 and D5 with every minuscule weight, degrees up to 4, count
  // boxes up to 3x3 and hole boxes up to 3x4.
  static AuditScope default_scope();
  // Appends every minuscule weight of the given type.
  void add_type(Family family, int rank);
  void add_exceptional();  // E6 and E7
};

struct Counterexample {
  std::string label;         // e.g. "A3 w2" or "box 2x2"
  Word word;
  std::vector<int> indices;  // positions (or partition parts, degree)
  std::int64_t observed = 0;
  std::int64_t expected = 0;
  std::string what;
};

struct SuiteResult {
  Suite suite;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::vector<Counterexample> counterexamples;
  double wall_ms = 0;

  bool passed() const { return failures == 0; }
};

struct DegreeConventionTally {
  std::uint64_t cases = 0;
  std::uint64_t agrees_with_weight = 0;            // line bundle of the weight itself
  std::uint64_t agrees_with_involuted_weight = 0;  // of its Weyl-involution image
};

struct AuditReport {
  std::vector<SuiteResult> suites;
  DegreeConventionTally degree_convention;

  bool passed() const;
  std::uint64_t total_checks() const;
};

// One variety-level case: a reduced word of a minimal coset representative.
struct AuditCase {
  ScopeEntry entry;
  Word coset_word;  // canonical (lexicographically smallest) word
  Word word;
};

std::vector<AuditCase> enumerate_cases(const AuditScope& scope);

// Number of elementary checks a suite performs on the scope, computed from
// index-tuple counts without running the checks.
std::uint64_t predicted_checks(const AuditScope& scope, Suite suite);

// Every (word, index-tuple) of the scope is checked. Cases run across OpenMP
// threads; `jobs` <= 0 keeps the runtime default. Throws BudgetExceeded
// before starting when the predicted check count exceeds scope.budget.
SuiteResult run_suite(const AuditScope& scope, Suite suite, int jobs = 0);
// Single-threaded reference producing the identical result.
SuiteResult run_suite_serial(const AuditScope& scope, Suite suite);

AuditReport run_audit(const AuditScope& scope, const std::vector<Suite>& suites, int jobs = 0);

DegreeConventionTally degree_convention_tally(const AuditScope& scope);

// Value of <alpha_i^vee, alpha_j> for beta_j = special root, read off the
// beta sequence alone (i < j): 0 when s_{beta_i} and s_{beta_j} can be
// exchanged modulo commutations, else 0 when i < p(j) and s_{beta_i} cannot
// be moved past s_{beta_{p(j)}}, else 1.
int fin_prediction(const RootSystem& rs, const std::vector<int>& beta, int i, int j);
// The same case analysis with "beta_i commutes with every beta_k, i < k <= j"
// in place of the commutation-class conditions. Strictly stronger, and wrong
// on some D5 spinor words; kept so tests can pin the difference.
int fin_prediction_literal(const RootSystem& rs, const std::vector<int>& beta, int i, int j);

}  // namespace msv
