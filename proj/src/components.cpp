#include "msv/components.hpp"

#include <algorithm>
#include <string>

#include "msv/error.hpp"

namespace msv {

namespace {

struct Search {
  const BottSamelsonData* bs;
  std::vector<int> free;                 // free positions, ascending
  std::vector<std::int64_t> coef;        // degree coefficient per free position
};

Search prepare(const BottSamelsonData& bs, std::int64_t d) {
  if (d < 0) throw InputError("degree must be nonnegative, got " + std::to_string(d));
  Search s{&bs, {}, {}};
  const std::vector<std::int64_t> functional = degree_functional(bs);
  for (int x = 1; x <= bs.n(); ++x) {
    if (bs.is_contracted(x)) continue;
    if (functional[x - 1] <= 0)
      throw InputError("degree functional has coefficient " + std::to_string(functional[x - 1]) +
                       " on free coordinate " + std::to_string(x) +
                       "; the component enumeration would be unbounded");
    s.free.push_back(x);
    s.coef.push_back(functional[x - 1]);
  }
  return s;
}

// Fills free coordinates from `slot` on with remaining degree `left`,
// largest value first.
void descend(const Search& s, std::size_t slot, std::int64_t left, DivisorVector& b,
             std::vector<EffectiveClass>& out) {
  if (slot == s.free.size()) {
    if (left == 0) out.push_back({b, s.bs->from_xi(b)});
    return;
  }
  const std::int64_t c = s.coef[slot];
  const int pos = s.free[slot] - 1;
  for (std::int64_t v = left / c; v >= 0; --v) {
    b.b[pos] = v;
    descend(s, slot + 1, left - v * c, b, out);
  }
  b.b[pos] = 0;
}

std::uint64_t count_descend(const Search& s, std::size_t slot, std::int64_t left) {
  if (slot == s.free.size()) return left == 0 ? 1 : 0;
  std::uint64_t total = 0;
  for (std::int64_t v = left / s.coef[slot]; v >= 0; --v)
    total += count_descend(s, slot + 1, left - v * s.coef[slot]);
  return total;
}

void check_degrees(const BottSamelsonData& bs, const ComponentSet& set) {
  for (const EffectiveClass& e : set.classes)
    if (bs.curve_degree(e.a) != set.degree)
      throw InvariantViolation("effective class has degree " + std::to_string(bs.curve_degree(e.a)) +
                               ", expected " + std::to_string(set.degree));
}

}  // namespace

std::vector<std::int64_t> degree_functional(const BottSamelsonData& bs) {
  std::vector<std::int64_t> f(bs.n());
  for (int i = 1; i <= bs.n(); ++i) f[i - 1] = bs.curve_degree(bs.hat_curve(i));
  return f;
}

ComponentSet ne_set_serial(const BottSamelsonData& bs, std::int64_t d) {
  const Search s = prepare(bs, d);
  ComponentSet set;
  set.degree = d;
  DivisorVector b{std::vector<std::int64_t>(bs.n(), 0)};
  descend(s, 0, d, b, set.classes);
  check_degrees(bs, set);
  return set;
}

ComponentSet ne_set(const BottSamelsonData& bs, std::int64_t d) {
  const Search s = prepare(bs, d);
  if (s.free.empty()) return ne_set_serial(bs, d);

  const std::int64_t top = d / s.coef[0];
  std::vector<std::vector<EffectiveClass>> parts(static_cast<std::size_t>(top) + 1);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t v = 0; v <= top; ++v) {
    DivisorVector b{std::vector<std::int64_t>(bs.n(), 0)};
    b.b[s.free[0] - 1] = v;
    descend(s, 1, d - v * s.coef[0], b, parts[v]);
  }
  ComponentSet set;
  set.degree = d;
  for (std::int64_t v = top; v >= 0; --v)
    for (EffectiveClass& e : parts[v]) set.classes.push_back(std::move(e));
  check_degrees(bs, set);
  return set;
}

std::uint64_t component_count(const BottSamelsonData& bs, std::int64_t d) {
  const Search s = prepare(bs, d);
  return count_descend(s, 0, d);
}

int picard_rank_open_orbit(const BottSamelsonData& bs) {
  return bs.n() - static_cast<int>(bs.contracted_divisors().size());
}

std::int64_t component_dimension(const BottSamelsonData& bs, const CurveClass& c) {
  std::int64_t s = bs.n();
  for (int k = 1; k <= bs.n(); ++k) s += bs.dot_tangent(c, k);
  return s;
}

Partition Partition::make(std::vector<int> parts, int rows, int cols) {
  if (rows < 1 || cols < 1)
    throw InputError("partition box must be at least 1x1, got " + std::to_string(rows) + "x" +
                     std::to_string(cols));
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  if (static_cast<int>(parts.size()) > rows)
    throw InputError("partition has " + std::to_string(parts.size()) + " parts, box allows " +
                     std::to_string(rows));
  for (std::size_t r = 0; r < parts.size(); ++r) {
    if (parts[r] < 0) throw InputError("partition parts must be nonnegative");
    if (parts[r] > cols)
      throw InputError("partition part " + std::to_string(parts[r]) + " exceeds box width " +
                       std::to_string(cols));
    if (r > 0 && parts[r] > parts[r - 1])
      throw InputError("partition parts must be weakly decreasing");
  }
  return Partition{std::move(parts), rows, cols};
}

int Partition::part(int r) const {
  return r >= 1 && r <= static_cast<int>(parts.size()) ? parts[r - 1] : 0;
}

int Partition::size() const {
  int s = 0;
  for (int v : parts) s += v;
  return s;
}

GrassmannianWord partition_to_word(const Partition& p) {
  const int k = p.rows;
  GrassmannianWord g;
  g.rank = p.rows + p.cols - 1;
  g.weight_index = k;
  // Dimension diagram: the complement of the codimension diagram, rotated.
  // Its box (r, c) carries the letter k - r + c; rows are read bottom to top,
  // each right to left.
  for (int r = k; r >= 1; --r) {
    const int width = p.cols - p.part(k + 1 - r);
    for (int c = width; c >= 1; --c) g.word.push_back(k - r + c);
  }
  const RootSystem rs = RootSystem::build(Family::A, g.rank);
  if (!is_minimal_rep(rs, g.word, ParabolicSpec::for_weight(rs, k)) ||
      length(rs, g.word) != p.dimension())
    throw InvariantViolation("row-reading word of a partition is not a minimal coset word");
  return g;
}

int partition_hole_count(const Partition& p) {
  if (p.dimension() == 0)
    throw InputError("partition fills its box: the Schubert variety is a point");
  int holes = 0;
  for (int r = 1; r <= p.rows; ++r)
    if (p.part(r) < p.cols && (r == 1 || p.part(r - 1) > p.part(r))) ++holes;
  return holes;
}

namespace {

void partitions_rec(int rows, int cols, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (static_cast<int>(cur.size()) == rows) {
    out.push_back(Partition::make(cur, rows, cols));
    return;
  }
  for (int v = 0; v <= max_part; ++v) {
    cur.push_back(v);
    partitions_rec(rows, cols, v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(rows, cols, cols, cur, out);
  return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace msv
