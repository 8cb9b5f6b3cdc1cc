#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "msv/root_system.hpp"

namespace msv {

// Letters are 1-based simple indices; the element is s_{w[0]} s_{w[1]} ...
using Word = std::vector<int>;

struct ParabolicSpec {
  std::vector<int> generators;

  static ParabolicSpec full(const RootSystem& rs);
  // All simple indices except k: the parabolic of a fundamental weight.
  static ParabolicSpec for_weight(const RootSystem& rs, int k);
  bool contains(int i) const;
};

// A Weyl group element as its integer matrix on the root lattice, kept
// together with the inverse matrix. Column j holds the image of alpha_j.
// Holds a non-owning pointer to the root system.
class WeylElement {
 public:
  explicit WeylElement(const RootSystem& rs);
  static WeylElement from_word(const RootSystem& rs, const Word& w);

  WeylElement times_simple(int i) const;  // w * s_i
  WeylElement simple_times(int i) const;  // s_i * w

  Root apply(const Root& r) const;
  Root apply_inverse(const Root& r) const;
  // w(alpha_j), w^{-1}(alpha_i) without building the simple root.
  Root image_of_simple(int j) const;
  Root preimage_of_simple(int i) const;

  int length() const;
  bool has_left_descent(int i) const { return preimage_of_simple(i).is_negative(); }
  bool has_right_descent(int i) const { return image_of_simple(i).is_negative(); }

  // Lexicographically smallest reduced word.
  Word reduced_word() const;

  const std::vector<int>& matrix() const { return m_; }
  const RootSystem& root_system() const { return *rs_; }
  bool operator==(const WeylElement& o) const { return m_ == o.m_; }

 private:
  const RootSystem* rs_;
  int n_;
  std::vector<int> m_;    // row-major n x n
  std::vector<int> inv_;
};

Root act_on(const RootSystem& rs, const Word& w, const Root& y);
Weight act_on(const RootSystem& rs, const Word& w, const Weight& y);

int length(const RootSystem& rs, const Word& w);
bool is_reduced(const RootSystem& rs, const Word& w);
// Length of the shortest prefix that is not reduced, if any.
std::optional<std::size_t> first_non_reduced_prefix(const RootSystem& rs, const Word& w);

Word longest_element(const RootSystem& rs);
Word longest_element(const RootSystem& rs, const ParabolicSpec& p);

int weyl_involution(const RootSystem& rs, int i);
std::vector<int> weyl_involution_table(const RootSystem& rs);

Word minimal_coset_rep(const RootSystem& rs, const Word& w, const ParabolicSpec& p);
bool is_minimal_rep(const RootSystem& rs, const Word& w, const ParabolicSpec& p);
// First generator j of p with w(alpha_j) < 0, if any.
std::optional<int> first_parabolic_descent(const RootSystem& rs, const Word& w,
                                           const ParabolicSpec& p);
int coset_length(const RootSystem& rs, const Word& w, const ParabolicSpec& p);

// Minimal coset representatives of W/W_P for a minuscule weight, ordered by
// length then lexicographically, each as its lexicographically smallest
// reduced word.
std::vector<Word> enumerate_minuscule_cosets(const RootSystem& rs, int k, int max_length);

/// Counts and unranks the reduced words of one Weyl group element, in
/// lexicographic order, memoizing counts per element. Not thread-safe.
class ReducedWords {
 public:
  ReducedWords(const RootSystem& rs, const Word& w);

  std::uint64_t count();
  Word unrank(std::uint64_t index);
  std::vector<Word> all();
  // Every word when count() <= cap, otherwise cap words at evenly spaced ranks.
  std::vector<Word> sample(std::uint64_t cap);

 private:
  std::uint64_t count_of(const WeylElement& e);

  const RootSystem* rs_;
  WeylElement top_;
  std::map<std::vector<int>, std::uint64_t> memo_;
};

}  // namespace msv
