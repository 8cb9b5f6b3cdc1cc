#include "msv/weyl.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

#include "msv/error.hpp"

namespace msv {

ParabolicSpec ParabolicSpec::full(const RootSystem& rs) {
  ParabolicSpec p;
  for (int i = 1; i <= rs.rank(); ++i) p.generators.push_back(i);
  return p;
}

ParabolicSpec ParabolicSpec::for_weight(const RootSystem& rs, int k) {
  if (k < 1 || k > rs.rank())
    throw InputError("weight index " + std::to_string(k) + " out of range for " + rs.name());
  ParabolicSpec p;
  for (int i = 1; i <= rs.rank(); ++i)
    if (i != k) p.generators.push_back(i);
  return p;
}

bool ParabolicSpec::contains(int i) const {
  return std::find(generators.begin(), generators.end(), i) != generators.end();
}

WeylElement::WeylElement(const RootSystem& rs)
    : rs_(&rs), n_(rs.rank()), m_(n_ * n_, 0), inv_(n_ * n_, 0) {
  for (int i = 0; i < n_; ++i) m_[i * n_ + i] = inv_[i * n_ + i] = 1;
}

WeylElement WeylElement::from_word(const RootSystem& rs, const Word& w) {
  WeylElement e(rs);
  for (int letter : w) e = e.times_simple(letter);
  return e;
}

// s_i acts on coordinates by changing only row i: v_i -= sum_j a_ij v_j.
WeylElement WeylElement::times_simple(int i) const {
  if (i < 1 || i > n_) throw InputError("letter " + std::to_string(i) + " out of range");
  WeylElement r = *this;
  const int c = i - 1;
  // S_i e_j = e_j - a_cj e_c, so column j of M S_i is M e_j - a_cj M e_c.
  for (int j = 0; j < n_; ++j) {
    const int a = rs_->cartan()[c][j];
    if (a == 0) continue;
    for (int row = 0; row < n_; ++row) r.m_[row * n_ + j] -= a * m_[row * n_ + c];
  }
  // S_i * Minv: row c of the result is row c - sum_j a_cj row j.
  for (int col = 0; col < n_; ++col) {
    int s = 0;
    for (int j = 0; j < n_; ++j) s += rs_->cartan()[c][j] * inv_[j * n_ + col];
    r.inv_[c * n_ + col] = inv_[c * n_ + col] - s;
  }
  return r;
}

WeylElement WeylElement::simple_times(int i) const {
  WeylElement t = *this;
  std::swap(t.m_, t.inv_);
  t = t.times_simple(i);
  std::swap(t.m_, t.inv_);
  return t;
}

Root WeylElement::apply(const Root& r) const {
  Root out{std::vector<int>(n_, 0)};
  for (int row = 0; row < n_; ++row)
    for (int j = 0; j < n_; ++j) out.coeffs[row] += m_[row * n_ + j] * r.coeffs[j];
  return out;
}

Root WeylElement::apply_inverse(const Root& r) const {
  Root out{std::vector<int>(n_, 0)};
  for (int row = 0; row < n_; ++row)
    for (int j = 0; j < n_; ++j) out.coeffs[row] += inv_[row * n_ + j] * r.coeffs[j];
  return out;
}

Root WeylElement::image_of_simple(int j) const {
  Root out{std::vector<int>(n_)};
  for (int row = 0; row < n_; ++row) out.coeffs[row] = m_[row * n_ + j - 1];
  return out;
}

Root WeylElement::preimage_of_simple(int i) const {
  Root out{std::vector<int>(n_)};
  for (int row = 0; row < n_; ++row) out.coeffs[row] = inv_[row * n_ + i - 1];
  return out;
}

int WeylElement::length() const {
  int len = 0;
  for (const Root& a : rs_->positive_roots())
    if (apply(a).is_negative()) ++len;
  return len;
}

Word WeylElement::reduced_word() const {
  Word w;
  WeylElement e = *this;
  for (;;) {
    int first = 0;
    for (int i = 1; i <= n_; ++i)
      if (e.has_left_descent(i)) {
        first = i;
        break;
      }
    if (first == 0) break;
    w.push_back(first);
    e = e.simple_times(first);
  }
  return w;
}

Root act_on(const RootSystem& rs, const Word& w, const Root& y) {
  Root r = y;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = rs.reflect(*it, r);
  return r;
}

Weight act_on(const RootSystem& rs, const Word& w, const Weight& y) {
  Weight r = y;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = rs.reflect(*it, r);
  return r;
}

int length(const RootSystem& rs, const Word& w) { return WeylElement::from_word(rs, w).length(); }

bool is_reduced(const RootSystem& rs, const Word& w) {
  return !first_non_reduced_prefix(rs, w).has_value();
}

std::optional<std::size_t> first_non_reduced_prefix(const RootSystem& rs, const Word& w) {
  // Appending s_i on the right keeps the word reduced iff the current
  // element does not already have i as a right descent.
  WeylElement e(rs);
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    if (w[pos] < 1 || w[pos] > rs.rank())
      throw InputError("letter " + std::to_string(w[pos]) + " out of range for " + rs.name());
    if (e.has_right_descent(w[pos])) return pos + 1;
    e = e.times_simple(w[pos]);
  }
  return std::nullopt;
}

Word longest_element(const RootSystem& rs) { return longest_element(rs, ParabolicSpec::full(rs)); }

Word longest_element(const RootSystem& rs, const ParabolicSpec& p) {
  WeylElement e(rs);
  Word w;
  for (;;) {
    int grow = 0;
    for (int i : p.generators)
      if (!e.has_left_descent(i)) {
        grow = i;
        break;
      }
    if (grow == 0) break;
    w.insert(w.begin(), grow);
    e = e.simple_times(grow);
  }
  return w;
}

std::vector<int> weyl_involution_table(const RootSystem& rs) {
  const WeylElement w0 = WeylElement::from_word(rs, longest_element(rs));
  std::vector<int> table(rs.rank() + 1, 0);
  for (int i = 1; i <= rs.rank(); ++i) {
    const Root image = -w0.image_of_simple(i);
    int j = 0;
    for (int c = 0; c < rs.rank(); ++c) {
      if (image.coeffs[c] == 1 && j == 0) {
        j = c + 1;
      } else if (image.coeffs[c] != 0) {
        j = -1;
        break;
      }
    }
    if (j <= 0)
      throw InvariantViolation("-w0(alpha_" + std::to_string(i) + ") is not simple in " + rs.name());
    table[i] = j;
  }
  return table;
}

int weyl_involution(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank())
    throw InputError("simple index " + std::to_string(i) + " out of range for " + rs.name());
  return weyl_involution_table(rs)[i];
}

std::optional<int> first_parabolic_descent(const RootSystem& rs, const Word& w,
                                           const ParabolicSpec& p) {
  const WeylElement e = WeylElement::from_word(rs, w);
  for (int j : p.generators)
    if (e.has_right_descent(j)) return j;
  return std::nullopt;
}

namespace {

WeylElement minimize(WeylElement e, const ParabolicSpec& p) {
  for (bool changed = true; changed;) {
    changed = false;
    for (int j : p.generators)
      if (e.has_right_descent(j)) {
        e = e.times_simple(j);
        changed = true;
      }
  }
  return e;
}

}  // namespace

Word minimal_coset_rep(const RootSystem& rs, const Word& w, const ParabolicSpec& p) {
  return minimize(WeylElement::from_word(rs, w), p).reduced_word();
}

bool is_minimal_rep(const RootSystem& rs, const Word& w, const ParabolicSpec& p) {
  return is_reduced(rs, w) && !first_parabolic_descent(rs, w, p).has_value();
}

int coset_length(const RootSystem& rs, const Word& w, const ParabolicSpec& p) {
  return minimize(WeylElement::from_word(rs, w), p).length();
}

std::vector<Word> enumerate_minuscule_cosets(const RootSystem& rs, int k, int max_length) {
  if (!is_minuscule(rs, k))
    throw InputError("fundamental weight " + std::to_string(k) + " of " + rs.name() +
                     " is not minuscule");
  const ParabolicSpec p = ParabolicSpec::for_weight(rs, k);
  std::vector<Word> out;
  std::vector<WeylElement> layer{WeylElement(rs)};
  out.push_back({});
  for (int len = 1; len <= max_length && !layer.empty(); ++len) {
    std::map<std::vector<int>, WeylElement> next;
    for (const WeylElement& e : layer)
      for (int i = 1; i <= rs.rank(); ++i) {
        if (e.has_left_descent(i)) continue;
        WeylElement f = e.simple_times(i);
        bool minimal = std::none_of(p.generators.begin(), p.generators.end(),
                                    [&](int j) { return f.has_right_descent(j); });
        if (minimal) next.emplace(f.matrix(), f);
      }
    std::vector<Word> words;
    layer.clear();
    for (auto& [key, f] : next) {
      words.push_back(f.reduced_word());
      layer.push_back(f);
    }
    std::sort(words.begin(), words.end());
    out.insert(out.end(), words.begin(), words.end());
  }
  return out;
}

ReducedWords::ReducedWords(const RootSystem& rs, const Word& w)
    : rs_(&rs), top_(WeylElement::from_word(rs, w)) {}

std::uint64_t ReducedWords::count_of(const WeylElement& e) {
  if (auto it = memo_.find(e.matrix()); it != memo_.end()) return it->second;
  std::uint64_t total = 0;
  bool identity = true;
  for (int i = 1; i <= rs_->rank(); ++i) {
    if (!e.has_left_descent(i)) continue;
    identity = false;
    const std::uint64_t c = count_of(e.simple_times(i));
    if (total > std::numeric_limits<std::uint64_t>::max() - c)
      throw InputError("reduced word count overflows 64 bits");
    total += c;
  }
  if (identity) total = 1;
  memo_.emplace(e.matrix(), total);
  return total;
}

std::uint64_t ReducedWords::count() { return count_of(top_); }

Word ReducedWords::unrank(std::uint64_t index) {
  if (index >= count()) throw InputError("reduced word rank out of range");
  Word w;
  WeylElement e = top_;
  for (;;) {
    bool advanced = false;
    for (int i = 1; i <= rs_->rank(); ++i) {
      if (!e.has_left_descent(i)) continue;
      WeylElement f = e.simple_times(i);
      const std::uint64_t c = count_of(f);
      if (index < c) {
        w.push_back(i);
        e = f;
        advanced = true;
        break;
      }
      index -= c;
    }
    if (!advanced) break;
  }
  return w;
}

std::vector<Word> ReducedWords::all() { return sample(count()); }

std::vector<Word> ReducedWords::sample(std::uint64_t cap) {
  const std::uint64_t total = count();
  std::vector<Word> out;
  if (total <= cap) {
    for (std::uint64_t r = 0; r < total; ++r) out.push_back(unrank(r));
    return out;
  }
  for (std::uint64_t t = 0; t < cap; ++t) {
    const auto r = static_cast<std::uint64_t>(static_cast<unsigned __int128>(t) * total / cap);
    out.push_back(unrank(r));
  }
  return out;
}

}  // namespace msv
