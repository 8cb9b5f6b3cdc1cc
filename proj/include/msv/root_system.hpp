#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace msv {

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);
Family parse_family(const std::string& s);

// Coordinates in the simple-root basis.
struct Root {
  std::vector<int> coeffs;

  bool is_zero() const;
  bool is_positive() const;  // nonzero and all coefficients >= 0
  bool is_negative() const;
  int height() const;
  Root operator-() const;
  auto operator<=>(const Root&) const = default;
};

// Coordinates in the fundamental-weight basis.
struct Weight {
  std::vector<int> coeffs;

  auto operator<=>(const Weight&) const = default;
};

using IntMatrix = std::vector<std::vector<int>>;

/// A finite root system in Bourbaki numbering. Simple indices are 1-based
/// everywhere in the public interface; coefficient vectors are 0-based.
///
/// Cartan entry (i, j) is the pairing of the i-th simple coroot with the
/// j-th simple root. The invariant form is normalized so that short roots
/// have squared length 2.
class RootSystem {
 public:
  static RootSystem build(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string name() const;
  bool simply_laced() const;

  const IntMatrix& cartan() const { return cartan_; }
  int cartan(int i, int j) const { return cartan_[i - 1][j - 1]; }

  const std::vector<Root>& positive_roots() const { return positive_; }
  const Root& highest_root() const { return highest_; }

  Root simple_root(int i) const;
  Weight fundamental_weight(int k) const;
  Weight zero_weight() const;
  // Expresses a root in the fundamental-weight basis.
  Weight to_weight(const Root& r) const;

  // (x, y) under the normalized invariant form.
  int inner(const Root& x, const Root& y) const;
  int pairing(const Root& x, const Root& y) const;
  int pairing(const Root& x, const Weight& y) const;

  Root reflect(int i, const Root& y) const;
  Weight reflect(int i, const Weight& y) const;

  // Index into positive_roots() of +r or -r, if r is a root.
  std::optional<int> root_index(const Root& r) const;
  bool is_root(const Root& r) const { return root_index(r).has_value(); }

 private:
  RootSystem() = default;

  void check_index(int i) const;
  void check_rank(const std::vector<int>& v) const;

  Family family_ = Family::A;
  int rank_ = 0;
  IntMatrix cartan_;
  std::vector<int> symmetrizer_;  // (alpha_i, alpha_i) / 2
  std::vector<Root> positive_;
  Root highest_;
  std::map<std::vector<int>, int> index_;
};

struct WeightClassification {
  int index;
  bool minuscule;
  bool cominuscule;
};

std::vector<WeightClassification> classify_minuscule(const RootSystem& rs);
bool is_minuscule(const RootSystem& rs, int k);

}  // namespace msv
