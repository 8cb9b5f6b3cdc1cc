#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "msv/root_system.hpp"
#include "msv/weyl.hpp"

namespace msv {

// Coefficients in the basis [C_1], ..., [C_n] of curve classes.
struct CurveClass {
  std::vector<std::int64_t> a;
  auto operator<=>(const CurveClass&) const = default;
};

// Intersection numbers against xi_1, ..., xi_n (or a divisor written in the
// xi basis, depending on context).
struct DivisorVector {
  std::vector<std::int64_t> b;
  auto operator<=>(const DivisorVector&) const = default;
};

CurveClass operator-(const CurveClass& x, const CurveClass& y);

// Eager runs the structural identity checks at build time; Skip leaves them
// to the audit suites so that violations become counterexamples.
enum class Verify { Eager, Skip };

/// Combinatorial data of the Bott-Samelson resolution of a minuscule Schubert
/// variety, built from a reduced, coset-minimal word gamma.
///
/// Positions are 1-based: i, j, x range over [1, n]. beta[i] is the Weyl
/// involution of gamma[i] and alpha_i = s_{beta_1} ... s_{beta_{i-1}}(beta_i).
/// Every structural identity (positivity and boundedness of the alpha
/// pairings, distinctness, the last letter, the symmetric reconstruction of
/// the betas) is checked by build with Verify::Eager and raises
/// InvariantViolation.
class BottSamelsonData {
 public:
  static BottSamelsonData build(std::shared_ptr<const RootSystem> rs, int weight_index,
                                Word gamma, Verify verify = Verify::Eager);
  static BottSamelsonData build(const RootSystem& rs, int weight_index, Word gamma);

  const RootSystem& root_system() const { return *rs_; }
  std::shared_ptr<const RootSystem> root_system_ptr() const { return rs_; }
  int weight_index() const { return k_; }
  int n() const { return static_cast<int>(gamma_.size()); }
  const Word& gamma() const { return gamma_; }
  const std::vector<int>& beta() const { return beta_; }
  int beta(int i) const { return beta_[i - 1]; }
  const std::vector<Root>& alpha() const { return alpha_; }
  const Root& alpha(int i) const { return alpha_[i - 1]; }
  // <alpha_i^vee, alpha_j> and <beta_i^vee, beta_j>.
  int pair_alpha(int i, int j) const { return pair_alpha_[(i - 1) * n() + (j - 1)]; }
  int pair_beta(int i, int j) const { return pair_beta_[(i - 1) * n() + (j - 1)]; }
  int special_root() const { return special_; }

  // [C_i] . xi_j
  int c_dot_xi(int i, int j) const;
  // The same number through the alternating chain sum over the alpha pairings.
  std::int64_t chow_pairing_oracle(int i, int j, int window_bound = 20) const;
  // [C_i] . T_j
  int c_dot_tangent(int i, int j) const;

  DivisorVector tangent_class(int j) const;
  DivisorVector line_bundle_class(const Weight& lambda) const;

  // Positions x whose divisor D_x is contracted by the resolution map.
  const std::vector<int>& contracted_divisors() const { return contracted_; }
  bool is_contracted(int x) const;

  std::optional<int> next_same_beta(int j) const;
  std::optional<int> prev_same_beta(int j) const;

  CurveClass unit_curve(int i) const;
  CurveClass tilde_curve(int j) const;
  CurveClass hat_curve(int i) const;
  CurveClass gamma_curve(int x, int i) const;

  // Image degree in A_1 of the Schubert variety.
  std::int64_t curve_degree(const CurveClass& c) const;

  // b_k = c . xi_k, and its inverse through the unitriangular matrix.
  DivisorVector intersect_xi(const CurveClass& c) const;
  CurveClass from_xi(const DivisorVector& b) const;
  // c . D for D written in the xi basis.
  std::int64_t intersect(const CurveClass& c, const DivisorVector& d) const;
  std::int64_t dot_tangent(const CurveClass& c, int k) const;

 private:
  BottSamelsonData() = default;
  void check_position(int i, const char* what) const;
  void verify() const;

  std::shared_ptr<const RootSystem> rs_;
  int k_ = 0;
  Word gamma_;
  std::vector<int> beta_;
  std::vector<Root> alpha_;
  std::vector<int> pair_alpha_;
  std::vector<int> pair_beta_;
  int special_ = 0;
  std::vector<int> contracted_;
};

// Data of the same word with letters at positions i, i+1 exchanged.
BottSamelsonData swapped(const BottSamelsonData& bs, int i, Verify verify = Verify::Eager);

}  // namespace msv
