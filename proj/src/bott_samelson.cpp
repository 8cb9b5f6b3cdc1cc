#include "msv/bott_samelson.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <string>

#include "msv/error.hpp"

namespace msv {

namespace {

Root reflect_in(const RootSystem& rs, const Root& a, const Root& y) {
  const int p = rs.pairing(a, y);
  Root r = y;
  for (std::size_t c = 0; c < r.coeffs.size(); ++c) r.coeffs[c] -= p * a.coeffs[c];
  return r;
}

std::string word_string(const Word& w) {
  std::ostringstream s;
  s << '(';
  for (std::size_t i = 0; i < w.size(); ++i) s << (i ? "," : "") << w[i];
  s << ')';
  return s.str();
}

}  // namespace

CurveClass operator-(const CurveClass& x, const CurveClass& y) {
  CurveClass r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
  return r;
}

BottSamelsonData BottSamelsonData::build(const RootSystem& rs, int weight_index, Word gamma) {
  return build(std::make_shared<const RootSystem>(rs), weight_index, std::move(gamma));
}

BottSamelsonData BottSamelsonData::build(std::shared_ptr<const RootSystem> rs_ptr,
                                         int weight_index, Word gamma, Verify verify) {
  const RootSystem& rs = *rs_ptr;
  if (!is_minuscule(rs, weight_index))
    throw InputError("fundamental weight " + std::to_string(weight_index) + " of " + rs.name() +
                     " is not minuscule");
  for (int letter : gamma)
    if (letter < 1 || letter > rs.rank())
      throw InputError("letter " + std::to_string(letter) + " out of range [1, " +
                       std::to_string(rs.rank()) + "]");
  if (auto bad = first_non_reduced_prefix(rs, gamma))
    throw InputError("word " + word_string(gamma) + " is not reduced: its prefix of length " +
                     std::to_string(*bad) + " is not reduced");
  const ParabolicSpec parabolic = ParabolicSpec::for_weight(rs, weight_index);
  if (auto j = first_parabolic_descent(rs, gamma, parabolic))
    throw InputError("word " + word_string(gamma) +
                     " is not the minimal representative of its coset: right multiplication by "
                     "parabolic letter " +
                     std::to_string(*j) + " shortens it");

  BottSamelsonData bs;
  bs.rs_ = std::move(rs_ptr);
  bs.k_ = weight_index;
  bs.gamma_ = std::move(gamma);
  const int n = bs.n();
  const std::vector<int> inv = weyl_involution_table(rs);
  for (int g : bs.gamma_) bs.beta_.push_back(inv[g]);
  bs.special_ = inv[weight_index];

  WeylElement prefix(rs);
  for (int b : bs.beta_) {
    bs.alpha_.push_back(prefix.image_of_simple(b));
    prefix = prefix.times_simple(b);
  }

  bs.pair_alpha_.resize(static_cast<std::size_t>(n) * n);
  bs.pair_beta_.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bs.pair_alpha_[i * n + j] = rs.pairing(bs.alpha_[i], bs.alpha_[j]);
      bs.pair_beta_[i * n + j] = rs.cartan(bs.beta_[i], bs.beta_[j]);
    }

  // D_x is contracted iff deleting letter x drops the coset length by more than one.
  for (int x = 1; x <= n; ++x) {
    Word omitted = bs.gamma_;
    omitted.erase(omitted.begin() + (x - 1));
    if (coset_length(rs, omitted, parabolic) < n - 1) bs.contracted_.push_back(x);
  }

  if (verify == Verify::Eager) bs.verify();
  return bs;
}

void BottSamelsonData::verify() const {
  const RootSystem& rs = *rs_;
  const int n = this->n();
  auto fail = [&](const std::string& what) {
    throw InvariantViolation(what + " for word " + word_string(gamma_) + " in " + rs.name() +
                             " weight " + std::to_string(k_));
  };
  for (int i = 1; i <= n; ++i) {
    if (!alpha(i).is_positive() || !rs.is_root(alpha(i)))
      fail("alpha_" + std::to_string(i) + " is not a positive root");
    for (int j = 1; j <= n; ++j) {
      const int p = pair_alpha(i, j);
      if (p < 0) fail("negative alpha pairing at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (p > 2) fail("alpha pairing above 2 at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if ((p == 2) != (alpha(i) == alpha(j)))
        fail("alpha pairing equals 2 on distinct roots at (" + std::to_string(i) + "," +
             std::to_string(j) + ")");
      if (i != j && alpha(i) == alpha(j)) fail("repeated alpha root");
    }
  }
  if (n > 0 && beta_.back() != special_) fail("last beta letter is not the special root");
  // beta_i = s_{alpha_1} ... s_{alpha_{i-1}}(alpha_i)
  for (int i = 1; i <= n; ++i) {
    Root r = alpha(i);
    for (int k = i - 1; k >= 1; --k) r = reflect_in(rs, alpha(k), r);
    if (r != rs.simple_root(beta(i)))
      fail("beta_" + std::to_string(i) + " is not recovered from the alphas");
  }
}

void BottSamelsonData::check_position(int i, const char* what) const {
  if (i < 1 || i > n())
    throw InputError(std::string(what) + ": position " + std::to_string(i) +
                     " out of range [1, " + std::to_string(n()) + "]");
}

int BottSamelsonData::c_dot_xi(int i, int j) const {
  check_position(i, "c_dot_xi");
  check_position(j, "c_dot_xi");
  if (i > j) return 0;
  if (i == j) return 1;
  return pair_beta(i, j);
}

std::int64_t BottSamelsonData::chow_pairing_oracle(int i, int j, int window_bound) const {
  check_position(i, "chow_pairing_oracle");
  check_position(j, "chow_pairing_oracle");
  if (i >= j) throw InputError("chow_pairing_oracle requires i < j");
  if (j - i > window_bound)
    throw InputError("chow_pairing_oracle: window " + std::to_string(j - i) +
                     " exceeds bound " + std::to_string(window_bound));
  // Each subset of the interior positions (i, j) is one strictly increasing chain.
  const int interior = j - i - 1;
  std::int64_t total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << interior); ++mask) {
    std::int64_t product = 1;
    int prev = i;
    for (int bit = 0; bit < interior && product != 0; ++bit)
      if (mask >> bit & 1) {
        const int next = i + 1 + bit;
        product *= pair_alpha(prev, next);
        prev = next;
      }
    if (product == 0) continue;
    product *= pair_alpha(prev, j);
    const int steps = std::popcount(mask) + 1;
    total += (steps % 2 ? -product : product);
  }
  return total;
}

int BottSamelsonData::c_dot_tangent(int i, int j) const {
  check_position(i, "c_dot_tangent");
  check_position(j, "c_dot_tangent");
  return i > j ? 0 : pair_beta(i, j);
}

DivisorVector BottSamelsonData::tangent_class(int j) const {
  check_position(j, "tangent_class");
  DivisorVector d{std::vector<std::int64_t>(n(), 0)};
  for (int k = 1; k <= j; ++k) d.b[k - 1] = pair_alpha(k, j);
  return d;
}

DivisorVector BottSamelsonData::line_bundle_class(const Weight& lambda) const {
  DivisorVector d{std::vector<std::int64_t>(n(), 0)};
  for (int k = 1; k <= n(); ++k) d.b[k - 1] = rs_->pairing(alpha(k), lambda);
  return d;
}

bool BottSamelsonData::is_contracted(int x) const {
  return std::binary_search(contracted_.begin(), contracted_.end(), x);
}

std::optional<int> BottSamelsonData::next_same_beta(int j) const {
  check_position(j, "next_same_beta");
  for (int k = j + 1; k <= n(); ++k)
    if (beta(k) == beta(j)) return k;
  return std::nullopt;
}

std::optional<int> BottSamelsonData::prev_same_beta(int j) const {
  check_position(j, "prev_same_beta");
  for (int k = j - 1; k >= 1; --k)
    if (beta(k) == beta(j)) return k;
  return std::nullopt;
}

CurveClass BottSamelsonData::unit_curve(int i) const {
  check_position(i, "unit_curve");
  CurveClass c{std::vector<std::int64_t>(n(), 0)};
  c.a[i - 1] = 1;
  return c;
}

CurveClass BottSamelsonData::tilde_curve(int j) const {
  CurveClass c = unit_curve(j);
  if (auto next = next_same_beta(j)) c.a[*next - 1] -= 1;
  return c;
}

CurveClass BottSamelsonData::hat_curve(int i) const {
  CurveClass c = unit_curve(i);
  for (int k = i + 1; k <= n(); ++k) c.a[k - 1] = pair_alpha(i, k);
  const DivisorVector b = intersect_xi(c);
  for (int j = 1; j <= n(); ++j)
    if (b.b[j - 1] != (i == j ? 1 : 0))
      throw InvariantViolation("hat curve " + std::to_string(i) + " is not dual to xi_" +
                               std::to_string(j) + " for word " + word_string(gamma_));
  return c;
}

CurveClass BottSamelsonData::gamma_curve(int x, int i) const {
  check_position(x, "gamma_curve");
  check_position(i, "gamma_curve");
  if (!is_contracted(x))
    throw InputError("gamma_curve: D_" + std::to_string(x) + " is not a contracted divisor");
  if (pair_alpha(i, x) != 1)
    throw InputError("gamma_curve: pairing <alpha_" + std::to_string(i) + "^vee, alpha_" +
                     std::to_string(x) + "> is " + std::to_string(pair_alpha(i, x)) +
                     ", expected 1");
  const CurveClass g = hat_curve(i) - hat_curve(x);
  const DivisorVector b = intersect_xi(g);
  for (int j = 1; j <= n(); ++j) {
    const std::int64_t expected = (j == i ? 1 : 0) - (j == x ? 1 : 0);
    if (b.b[j - 1] != expected)
      throw InvariantViolation("gamma curve (" + std::to_string(x) + "," + std::to_string(i) +
                               ") has unexpected intersection with xi_" + std::to_string(j));
  }
  if (curve_degree(g) != 0)
    throw InvariantViolation("gamma curve (" + std::to_string(x) + "," + std::to_string(i) +
                             ") is not contracted");
  return g;
}

std::int64_t BottSamelsonData::curve_degree(const CurveClass& c) const {
  if (static_cast<int>(c.a.size()) != n()) throw InputError("curve class has wrong length");
  std::int64_t d = 0;
  for (int j = 1; j <= n(); ++j)
    if (beta(j) == special_) d += c.a[j - 1];
  return d;
}

DivisorVector BottSamelsonData::intersect_xi(const CurveClass& c) const {
  if (static_cast<int>(c.a.size()) != n()) throw InputError("curve class has wrong length");
  DivisorVector d{std::vector<std::int64_t>(n(), 0)};
  for (int k = 1; k <= n(); ++k)
    for (int j = 1; j <= k; ++j) d.b[k - 1] += c.a[j - 1] * c_dot_xi(j, k);
  return d;
}

CurveClass BottSamelsonData::from_xi(const DivisorVector& d) const {
  if (static_cast<int>(d.b.size()) != n()) throw InputError("divisor vector has wrong length");
  CurveClass c{std::vector<std::int64_t>(n(), 0)};
  for (int k = 1; k <= n(); ++k) {
    std::int64_t v = d.b[k - 1];
    for (int j = 1; j < k; ++j) v -= c.a[j - 1] * c_dot_xi(j, k);
    c.a[k - 1] = v;
  }
  return c;
}

std::int64_t BottSamelsonData::intersect(const CurveClass& c, const DivisorVector& d) const {
  const DivisorVector b = intersect_xi(c);
  if (d.b.size() != b.b.size()) throw InputError("divisor vector has wrong length");
  std::int64_t s = 0;
  for (std::size_t k = 0; k < b.b.size(); ++k) s += b.b[k] * d.b[k];
  return s;
}

std::int64_t BottSamelsonData::dot_tangent(const CurveClass& c, int k) const {
  check_position(k, "dot_tangent");
  std::int64_t s = 0;
  for (int j = 1; j <= k; ++j) s += c.a[j - 1] * c_dot_tangent(j, k);
  return s;
}

BottSamelsonData swapped(const BottSamelsonData& bs, int i, Verify verify) {
  if (i < 1 || i >= bs.n()) throw InputError("swapped: position out of range");
  Word w = bs.gamma();
  std::swap(w[i - 1], w[i]);
  return BottSamelsonData::build(bs.root_system_ptr(), bs.weight_index(), std::move(w), verify);
}

}  // namespace msv
