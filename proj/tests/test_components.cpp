#include <doctest.h>

#include <memory>

#include "msv/components.hpp"
#include "msv/error.hpp"

using namespace msv;

namespace {

BottSamelsonData make(Family f, int rank, int k, Word w) {
  return BottSamelsonData::build(std::make_shared<const RootSystem>(RootSystem::build(f, rank)), k,
                                 std::move(w));
}

BottSamelsonData from_partition(std::vector<int> parts, int rows, int cols) {
  const GrassmannianWord g = partition_to_word(Partition::make(std::move(parts), rows, cols));
  return make(Family::A, g.rank, g.weight_index, g.word);
}

std::vector<std::vector<std::int64_t>> bs_of(const ComponentSet& s) {
  std::vector<std::vector<std::int64_t>> out;
  for (const EffectiveClass& e : s.classes) out.push_back(e.b.b);
  return out;
}

}  // namespace

TEST_CASE("ne_set: worked examples") {
  const BottSamelsonData plane = make(Family::A, 2, 1, {2, 1});
  for (int d = 0; d <= 6; ++d) {
    const ComponentSet s = ne_set(plane, d);
    REQUIRE(s.count() == 1);
    CHECK(s.classes[0].b.b == std::vector<std::int64_t>{d, 0});
    CHECK(s.classes[0].a.a == std::vector<std::int64_t>{d, d});
  }

  const BottSamelsonData x = make(Family::A, 3, 2, {1, 3, 2});
  CHECK(degree_functional(x) == std::vector<std::int64_t>{1, 1, 1});
  CHECK(bs_of(ne_set(x, 2)) ==
        std::vector<std::vector<std::int64_t>>{{2, 0, 0}, {1, 1, 0}, {0, 2, 0}});
  CHECK(ne_set(x, 0).count() == 1);
  CHECK(ne_set(x, 0).classes[0].b.b == std::vector<std::int64_t>{0, 0, 0});
  CHECK_THROWS_AS(ne_set(x, -1), InputError);
}

TEST_CASE("component_count") {
  const BottSamelsonData x = make(Family::A, 3, 2, {1, 3, 2});
  CHECK(component_count(x, 1) == 2);
  CHECK(component_count(x, 2) == 3);
  CHECK(component_count(x, 3) == 4);
  CHECK(component_count(x, 0) == 1);
  CHECK(component_count(make(Family::A, 2, 1, {2, 1}), 5) == 1);
}

TEST_CASE("the point has only constant maps") {
  const BottSamelsonData pt = make(Family::A, 3, 2, {});
  CHECK(component_count(pt, 0) == 1);
  CHECK(component_count(pt, 1) == 0);
  CHECK(ne_set(pt, 3).count() == 0);
}

TEST_CASE("picard rank and dimension annotation") {
  CHECK(picard_rank_open_orbit(make(Family::A, 3, 2, {1, 3, 2})) == 2);
  CHECK(picard_rank_open_orbit(make(Family::A, 2, 1, {2, 1})) == 1);
  CHECK(picard_rank_open_orbit(make(Family::A, 1, 1, {1})) == 1);
  // Lines on the plane: 2 (dim of P^2) + 3 (c_1) = 5, minus nothing; the
  // annotation is c . sum T_k + n.
  const BottSamelsonData plane = make(Family::A, 2, 1, {2, 1});
  const ComponentSet s = ne_set(plane, 1);
  CHECK(component_dimension(plane, s.classes[0].a) == 5);
}

TEST_CASE("partitions") {
  CHECK_THROWS_AS(Partition::make({3}, 2, 2), InputError);
  CHECK_THROWS_AS(Partition::make({1, 2}, 2, 2), InputError);
  CHECK_THROWS_AS(Partition::make({1, 1, 1}, 2, 2), InputError);
  CHECK_THROWS_AS(Partition::make({}, 0, 2), InputError);
  CHECK(Partition::make({1, 0}, 2, 2).parts == std::vector<int>{1});
  CHECK(partitions_in_box(2, 2).size() == 6);
  CHECK(partitions_in_box(3, 3).size() == 20);
}

TEST_CASE("partition_to_word") {
  const GrassmannianWord g = partition_to_word(Partition::make({1}, 2, 2));
  CHECK(g.rank == 3);
  CHECK(g.weight_index == 2);
  CHECK(g.word == Word{1, 3, 2});
  CHECK(partition_to_word(Partition::make({}, 1, 2)).word == Word{2, 1});
  CHECK(partition_to_word(Partition::make({2}, 1, 2)).word.empty());
  CHECK(partition_to_word(Partition::make({}, 2, 2)).word.size() == 4);
}

TEST_CASE("partition_hole_count") {
  CHECK(partition_hole_count(Partition::make({1}, 2, 2)) == 2);
  CHECK(partition_hole_count(Partition::make({}, 2, 2)) == 1);
  CHECK(partition_hole_count(Partition::make({}, 1, 2)) == 1);
  CHECK(partition_hole_count(Partition::make({2, 1}, 3, 3)) == 3);
  CHECK_THROWS_AS(partition_hole_count(Partition::make({2, 2}, 2, 2)), InputError);
}

TEST_CASE("binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(2, 3) == 0);
  CHECK(binomial(40, 20) == 137846528820ULL);
}

TEST_CASE("property: serial and parallel enumeration agree") {
  for (const Partition& p : partitions_in_box(3, 4)) {
    if (p.dimension() == 0) continue;
    const BottSamelsonData bs = from_partition(p.parts, p.rows, p.cols);
    for (int d = 0; d <= 4; ++d) {
      const ComponentSet par = ne_set(bs, d);
      const ComponentSet ser = ne_set_serial(bs, d);
      REQUIRE(par.count() == ser.count());
      CHECK(bs_of(par) == bs_of(ser));
      CHECK(par.count() == component_count(bs, d));
    }
  }
}

TEST_CASE("property: every class is effective, degree d, and vanishes on contracted divisors") {
  for (const Partition& p : partitions_in_box(3, 3)) {
    if (p.dimension() == 0) continue;
    const BottSamelsonData bs = from_partition(p.parts, p.rows, p.cols);
    std::uint64_t previous = 0;
    for (int d = 0; d <= 4; ++d) {
      const ComponentSet s = ne_set(bs, d);
      for (std::size_t c = 1; c < s.classes.size(); ++c) CHECK(s.classes[c - 1].b > s.classes[c].b);
      for (const EffectiveClass& e : s.classes) {
        CHECK(bs.curve_degree(e.a) == d);
        CHECK(bs.intersect_xi(e.a) == e.b);
        CHECK(bs.from_xi(e.b) == e.a);
        for (int k = 1; k <= bs.n(); ++k) {
          CHECK(e.b.b[k - 1] >= 0);
          if (bs.is_contracted(k)) CHECK(e.b.b[k - 1] == 0);
        }
      }
      if (d >= 2) CHECK(s.count() >= previous);
      previous = s.count();
    }
  }
}
