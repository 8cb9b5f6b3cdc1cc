#include "msv/root_system.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "msv/error.hpp"

namespace msv {

namespace {

void link(IntMatrix& m, int i, int j) {
  m[i - 1][j - 1] = -1;
  m[j - 1][i - 1] = -1;
}

IntMatrix identity_cartan(int rank) {
  IntMatrix m(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) m[i][i] = 2;
  return m;
}

void validate(Family f, int rank) {
  std::ostringstream msg;
  const char letter = family_letter(f);
  switch (f) {
    case Family::A:
      if (rank >= 1) return;
      msg << "type A requires rank >= 1";
      break;
    case Family::B:
      if (rank >= 2) return;
      msg << "type B requires rank >= 2";
      break;
    case Family::C:
      if (rank >= 3) return;
      msg << "type C requires rank >= 3 (C2 is B2)";
      break;
    case Family::D:
      if (rank >= 4) return;
      msg << "type D requires rank >= 4";
      break;
    case Family::E:
      if (rank >= 6 && rank <= 8) return;
      msg << "type E requires rank 6, 7 or 8";
      break;
    case Family::F:
      if (rank == 4) return;
      msg << "type F requires rank 4";
      break;
    case Family::G:
      if (rank == 2) return;
      msg << "type G requires rank 2";
      break;
  }
  msg << ", got " << letter << rank;
  throw InputError(msg.str());
}

// Bourbaki numbering.
IntMatrix cartan_matrix(Family f, int n) {
  IntMatrix m = identity_cartan(n);
  switch (f) {
    case Family::A:
      for (int i = 1; i < n; ++i) link(m, i, i + 1);
      break;
    case Family::B:
      for (int i = 1; i < n; ++i) link(m, i, i + 1);
      m[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case Family::C:
      for (int i = 1; i < n; ++i) link(m, i, i + 1);
      m[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case Family::D:
      for (int i = 1; i < n - 1; ++i) link(m, i, i + 1);
      link(m, n - 2, n);
      break;
    case Family::E:
      link(m, 1, 3);
      link(m, 2, 4);
      for (int i = 3; i < n; ++i) link(m, i, i + 1);
      break;
    case Family::F:
      link(m, 1, 2);
      link(m, 2, 3);
      link(m, 3, 4);
      m[2][1] = -2;  // alpha_3, alpha_4 short
      break;
    case Family::G:
      link(m, 1, 2);
      m[0][1] = -3;  // alpha_1 short
      break;
  }
  return m;
}

// d_i with d_i * a_ij = d_j * a_ji, scaled so min d_i = 1.
std::vector<int> symmetrize(const IntMatrix& a) {
  const int n = static_cast<int>(a.size());
  std::vector<int> d(n, 0);
  d[0] = 6;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    for (int j = 0; j < n; ++j) {
      if (i == j || a[i][j] == 0 || d[j] != 0) continue;
      d[j] = d[i] * a[i][j] / a[j][i];
      queue.push_back(j);
    }
  }
  int g = 0;
  for (int v : d) g = std::gcd(g, v);
  for (int& v : d) v /= g;
  return d;
}

}  // namespace

char family_letter(Family f) {
  static constexpr char letters[] = {'A', 'B', 'C', 'D', 'E', 'F', 'G'};
  return letters[static_cast<int>(f)];
}

Family parse_family(const std::string& s) {
  if (s.size() == 1) {
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    if (c >= 'A' && c <= 'G') return static_cast<Family>(c - 'A');
  }
  throw InputError("unknown root system family '" + s + "' (expected one of A-G)");
}

bool Root::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c == 0; });
}

bool Root::is_positive() const {
  return !is_zero() && std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c >= 0; });
}

bool Root::is_negative() const {
  return !is_zero() && std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c <= 0; });
}

int Root::height() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0); }

Root Root::operator-() const {
  Root r = *this;
  for (int& c : r.coeffs) c = -c;
  return r;
}

RootSystem RootSystem::build(Family family, int rank) {
  validate(family, rank);
  RootSystem rs;
  rs.family_ = family;
  rs.rank_ = rank;
  rs.cartan_ = cartan_matrix(family, rank);
  rs.symmetrizer_ = symmetrize(rs.cartan_);

  // Breadth-first closure of the simple roots under simple reflections.
  std::set<std::vector<int>> seen;
  std::deque<Root> queue;
  for (int i = 1; i <= rank; ++i) {
    Root r = rs.simple_root(i);
    seen.insert(r.coeffs);
    queue.push_back(r);
  }
  while (!queue.empty()) {
    Root r = std::move(queue.front());
    queue.pop_front();
    rs.positive_.push_back(r);
    for (int i = 1; i <= rank; ++i) {
      Root s = rs.reflect(i, r);
      if (s.is_positive() && seen.insert(s.coeffs).second) queue.push_back(std::move(s));
    }
  }
  std::stable_sort(rs.positive_.begin(), rs.positive_.end(), [](const Root& x, const Root& y) {
    return x.height() < y.height();
  });
  for (int idx = 0; idx < static_cast<int>(rs.positive_.size()); ++idx)
    rs.index_.emplace(rs.positive_[idx].coeffs, idx);

  rs.highest_ = rs.positive_.back();
  for (const Root& r : rs.positive_)
    for (int i = 0; i < rank; ++i)
      if (r.coeffs[i] > rs.highest_.coeffs[i])
        throw InvariantViolation("highest root is not maximal in " + rs.name());
  return rs;
}

std::string RootSystem::name() const {
  return std::string(1, family_letter(family_)) + std::to_string(rank_);
}

bool RootSystem::simply_laced() const {
  return std::all_of(symmetrizer_.begin(), symmetrizer_.end(), [](int d) { return d == 1; });
}

void RootSystem::check_index(int i) const {
  if (i < 1 || i > rank_)
    throw InputError("simple index " + std::to_string(i) + " out of range [1, " +
                     std::to_string(rank_) + "] for " + name());
}

void RootSystem::check_rank(const std::vector<int>& v) const {
  if (static_cast<int>(v.size()) != rank_)
    throw InputError("vector of length " + std::to_string(v.size()) + " used with " + name());
}

Root RootSystem::simple_root(int i) const {
  check_index(i);
  Root r{std::vector<int>(rank_, 0)};
  r.coeffs[i - 1] = 1;
  return r;
}

Weight RootSystem::fundamental_weight(int k) const {
  check_index(k);
  Weight w{std::vector<int>(rank_, 0)};
  w.coeffs[k - 1] = 1;
  return w;
}

Weight RootSystem::zero_weight() const { return Weight{std::vector<int>(rank_, 0)}; }

Weight RootSystem::to_weight(const Root& r) const {
  check_rank(r.coeffs);
  Weight w = zero_weight();
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) w.coeffs[i] += cartan_[i][j] * r.coeffs[j];
  return w;
}

int RootSystem::inner(const Root& x, const Root& y) const {
  check_rank(x.coeffs);
  check_rank(y.coeffs);
  int s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (x.coeffs[i] == 0) continue;
    for (int j = 0; j < rank_; ++j)
      s += x.coeffs[i] * y.coeffs[j] * symmetrizer_[i] * cartan_[i][j];
  }
  return s;
}

int RootSystem::pairing(const Root& x, const Root& y) const {
  if (x.is_zero()) throw InputError("pairing: the zero vector has no coroot");
  const int xx = inner(x, x);
  const int num = 2 * inner(x, y);
  if (num % xx != 0) throw InvariantViolation("pairing: non-integral coroot pairing");
  return num / xx;
}

int RootSystem::pairing(const Root& x, const Weight& y) const {
  if (x.is_zero()) throw InputError("pairing: the zero vector has no coroot");
  check_rank(y.coeffs);
  const int xx = inner(x, x);
  int num = 0;
  for (int i = 0; i < rank_; ++i) num += 2 * x.coeffs[i] * symmetrizer_[i] * y.coeffs[i];
  if (num % xx != 0) throw InvariantViolation("pairing: non-integral coroot pairing");
  return num / xx;
}

Root RootSystem::reflect(int i, const Root& y) const {
  check_index(i);
  check_rank(y.coeffs);
  int p = 0;
  for (int j = 0; j < rank_; ++j) p += cartan_[i - 1][j] * y.coeffs[j];
  Root r = y;
  r.coeffs[i - 1] -= p;
  return r;
}

Weight RootSystem::reflect(int i, const Weight& y) const {
  check_index(i);
  check_rank(y.coeffs);
  const int p = y.coeffs[i - 1];
  Weight w = y;
  // alpha_i in the fundamental-weight basis is the i-th Cartan column.
  for (int j = 0; j < rank_; ++j) w.coeffs[j] -= p * cartan_[j][i - 1];
  return w;
}

std::optional<int> RootSystem::root_index(const Root& r) const {
  if (auto it = index_.find(r.coeffs); it != index_.end()) return it->second;
  if (r.is_negative())
    if (auto it = index_.find((-r).coeffs); it != index_.end()) return it->second;
  return std::nullopt;
}

std::vector<WeightClassification> classify_minuscule(const RootSystem& rs) {
  std::vector<WeightClassification> out;
  for (int k = 1; k <= rs.rank(); ++k) {
    const Weight w = rs.fundamental_weight(k);
    bool minuscule = std::all_of(rs.positive_roots().begin(), rs.positive_roots().end(),
                                 [&](const Root& a) { return rs.pairing(a, w) <= 1; });
    // Coefficient of alpha_k in the highest root, i.e. <alpha_0, w_k^vee>.
    // Equal to <alpha_0^vee, w_k> on simply-laced types only.
    bool cominuscule = rs.highest_root().coeffs[k - 1] == 1;
    out.push_back({k, minuscule, cominuscule});
  }
  return out;
}

bool is_minuscule(const RootSystem& rs, int k) {
  if (k < 1 || k > rs.rank()) return false;
  const Weight w = rs.fundamental_weight(k);
  return std::all_of(rs.positive_roots().begin(), rs.positive_roots().end(),
                     [&](const Root& a) { return rs.pairing(a, w) <= 1; });
}

}  // namespace msv
