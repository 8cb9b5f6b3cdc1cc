#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "msv/error.hpp"
#include "msv/weyl.hpp"

using namespace msv;

namespace {

Root R(std::vector<int> c) { return Root{std::move(c)}; }

// Coefficient list of the Gaussian binomial [n choose k]_q.
std::vector<std::uint64_t> gaussian_binomial(int n, int k) {
  // [n,k] = [n-1,k-1] + q^k [n-1,k]
  std::map<std::pair<int, int>, std::vector<std::uint64_t>> memo;
  auto rec = [&](auto&& self, int a, int b) -> std::vector<std::uint64_t> {
    if (b < 0 || b > a) return {};
    if (b == 0 || b == a) return {1};
    auto key = std::make_pair(a, b);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<std::uint64_t> x = self(self, a - 1, b - 1);
    std::vector<std::uint64_t> y = self(self, a - 1, b);
    std::vector<std::uint64_t> out(std::max(x.size(), y.size() + b), 0);
    for (std::size_t i = 0; i < x.size(); ++i) out[i] += x[i];
    for (std::size_t i = 0; i < y.size(); ++i) out[i + b] += y[i];
    return memo[key] = out;
  };
  return rec(rec, n, k);
}

// Every element of W as a matrix, by breadth-first closure.
std::vector<Word> all_elements(const RootSystem& rs) {
  std::map<std::vector<int>, Word> seen;
  std::vector<WeylElement> frontier{WeylElement(rs)};
  seen[WeylElement(rs).matrix()] = {};
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const WeylElement& e : frontier)
      for (int i = 1; i <= rs.rank(); ++i) {
        WeylElement f = e.times_simple(i);
        if (seen.count(f.matrix())) continue;
        Word w = seen[e.matrix()];
        w.push_back(i);
        seen[f.matrix()] = w;
        next.push_back(f);
      }
    frontier = std::move(next);
  }
  std::vector<Word> out;
  for (auto& [m, w] : seen) out.push_back(w);
  return out;
}

}  // namespace

TEST_CASE("act_on") {
  const RootSystem a2 = RootSystem::build(Family::A, 2);
  CHECK(act_on(a2, {1, 2}, R({1, 0})) == R({0, 1}));
  CHECK(act_on(a2, {}, R({1, 0})) == R({1, 0}));
  CHECK(act_on(a2, {1, 2, 1}, R({1, 0})) == R({0, -1}));
}

TEST_CASE("length and reducedness") {
  const RootSystem a2 = RootSystem::build(Family::A, 2);
  CHECK(length(a2, {1, 2, 1}) == 3);
  CHECK(is_reduced(a2, {1, 2, 1}));
  CHECK(length(a2, {1, 1}) == 0);
  CHECK_FALSE(is_reduced(a2, {1, 1}));
  CHECK(first_non_reduced_prefix(a2, {2, 1, 2, 1}) == 4u);
  CHECK_FALSE(first_non_reduced_prefix(a2, {2, 1, 2}).has_value());
  const RootSystem a3 = RootSystem::build(Family::A, 3);
  CHECK(length(a3, {1, 3, 2}) == 3);
  CHECK(is_reduced(a3, {1, 3, 2}));
}

TEST_CASE("longest element and Weyl involution") {
  const RootSystem a1 = RootSystem::build(Family::A, 1);
  CHECK(longest_element(a1) == Word{1});
  const RootSystem a2 = RootSystem::build(Family::A, 2);
  CHECK(longest_element(a2).size() == 3);
  CHECK(weyl_involution(a2, 1) == 2);
  CHECK(weyl_involution(a2, 2) == 1);
  const RootSystem a3 = RootSystem::build(Family::A, 3);
  CHECK(longest_element(a3).size() == 6);
  CHECK(weyl_involution(a3, 2) == 2);
  CHECK(weyl_involution(a3, 1) == 3);
  const RootSystem d4 = RootSystem::build(Family::D, 4);
  CHECK(weyl_involution(d4, 1) == 1);
  const RootSystem d5 = RootSystem::build(Family::D, 5);
  CHECK(weyl_involution(d5, 4) == 5);
  const RootSystem e6 = RootSystem::build(Family::E, 6);
  CHECK(weyl_involution_table(e6) == std::vector<int>{0, 6, 2, 5, 4, 3, 1});
}

TEST_CASE("minimal coset representatives") {
  const RootSystem a3 = RootSystem::build(Family::A, 3);
  const ParabolicSpec p{{1, 3}};
  CHECK(is_minimal_rep(a3, {1, 3, 2}, p));
  CHECK_FALSE(is_minimal_rep(a3, {2, 1, 3}, p));
  CHECK(first_parabolic_descent(a3, {2, 1, 3}, p) == 1);
  CHECK(minimal_coset_rep(a3, {1, 3}, p).empty());
  CHECK(minimal_coset_rep(a3, {1, 3, 2, 1, 3}, p) == Word{1, 3, 2});
  CHECK(coset_length(a3, {2, 1, 3}, p) == 1);
}

TEST_CASE("enumerate_minuscule_cosets") {
  const RootSystem a2 = RootSystem::build(Family::A, 2);
  CHECK(enumerate_minuscule_cosets(a2, 1, 2) == std::vector<Word>{{}, {1}, {2, 1}});
  const RootSystem a3 = RootSystem::build(Family::A, 3);
  CHECK(enumerate_minuscule_cosets(a3, 2, 4).size() == 6);
  CHECK(enumerate_minuscule_cosets(a3, 2, 0) == std::vector<Word>{{}});
  const RootSystem d4 = RootSystem::build(Family::D, 4);
  CHECK_THROWS_AS(enumerate_minuscule_cosets(d4, 2, 4), InputError);
  CHECK(enumerate_minuscule_cosets(RootSystem::build(Family::E, 6), 1, 100).size() == 27);
  CHECK(enumerate_minuscule_cosets(RootSystem::build(Family::E, 7), 7, 100).size() == 56);
}

TEST_CASE("reduced words") {
  const RootSystem a3 = RootSystem::build(Family::A, 3);
  ReducedWords rw(a3, longest_element(a3));
  CHECK(rw.count() == 16);
  const std::vector<Word> all = rw.all();
  CHECK(all.size() == 16);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(all.front() == WeylElement::from_word(a3, longest_element(a3)).reduced_word());
  for (const Word& w : all) CHECK(is_reduced(a3, w));
  CHECK(std::set<Word>(all.begin(), all.end()).size() == 16);
  CHECK(rw.sample(4).size() == 4);
  CHECK(rw.sample(100) == all);
}

TEST_CASE("property: coset length profile is a Gaussian binomial") {
  for (int n = 2; n <= 7; ++n) {
    const RootSystem rs = RootSystem::build(Family::A, n);
    for (int k = 1; k <= n; ++k) {
      std::vector<std::uint64_t> profile;
      for (const Word& w : enumerate_minuscule_cosets(rs, k, 1 << 20)) {
        if (profile.size() <= w.size()) profile.resize(w.size() + 1, 0);
        ++profile[w.size()];
      }
      INFO(rs.name(), " w", k);
      CHECK(profile == gaussian_binomial(n + 1, k));
    }
  }
}

TEST_CASE("property: cosets agree with brute force over the whole group") {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{
           {Family::A, 2}, {Family::A, 3}, {Family::A, 4}, {Family::D, 4}}) {
    const RootSystem rs = RootSystem::build(f, n);
    const std::vector<Word> elements = all_elements(rs);
    CHECK(length(rs, longest_element(rs)) == static_cast<int>(rs.positive_roots().size()));
    for (int i = 1; i <= n; ++i) CHECK(weyl_involution(rs, weyl_involution(rs, i)) == i);
    for (const WeightClassification& c : classify_minuscule(rs)) {
      if (!c.minuscule) continue;
      const ParabolicSpec p = ParabolicSpec::for_weight(rs, c.index);
      std::set<Word> reps;
      for (const Word& w : elements) {
        const Word m = minimal_coset_rep(rs, w, p);
        CHECK(length(rs, m) <= length(rs, w));
        CHECK(minimal_coset_rep(rs, m, p) == m);
        reps.insert(WeylElement::from_word(rs, m).reduced_word());
      }
      const std::vector<Word> listed = enumerate_minuscule_cosets(rs, c.index, 1 << 20);
      CHECK(std::set<Word>(listed.begin(), listed.end()) == reps);
    }
  }
}

TEST_CASE("property: -1 in W fixes the involution") {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::B, 4},
                                                         {Family::C, 4},
                                                         {Family::D, 6},
                                                         {Family::E, 7},
                                                         {Family::E, 8},
                                                         {Family::F, 4},
                                                         {Family::G, 2}}) {
    const RootSystem rs = RootSystem::build(f, n);
    for (int i = 1; i <= n; ++i) CHECK(weyl_involution(rs, i) == i);
  }
}
