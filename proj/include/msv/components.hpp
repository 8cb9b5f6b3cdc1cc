#pragma once

#include <cstdint>
#include <vector>

#include "msv/bott_samelson.hpp"

namespace msv {

struct EffectiveClass {
  DivisorVector b;  // b[k] = class . xi_k
  CurveClass a;     // same class in the [C_i] basis
};

struct ComponentSet {
  std::int64_t degree = 0;
  std::vector<EffectiveClass> classes;  // descending lexicographic order of b

  std::size_t count() const { return classes.size(); }
};

// Coefficients of the degree functional in b-coordinates (degree of the
// dual class of xi_i). Zero on contracted positions is not assumed.
std::vector<std::int64_t> degree_functional(const BottSamelsonData& bs);

// Effective classes of degree d orthogonal to every contracted divisor.
// ne_set partitions the search by the first free coordinate across OpenMP
// threads; ne_set_serial is the single-threaded reference.
ComponentSet ne_set(const BottSamelsonData& bs, std::int64_t d);
ComponentSet ne_set_serial(const BottSamelsonData& bs, std::int64_t d);
std::uint64_t component_count(const BottSamelsonData& bs, std::int64_t d);

int picard_rank_open_orbit(const BottSamelsonData& bs);

// Expected dimension annotation: c . (T_1 + ... + T_n) + n.
std::int64_t component_dimension(const BottSamelsonData& bs, const CurveClass& c);

/// A Young diagram in a rows x cols box, read as the codimension partition
/// of a Schubert variety in Gr(rows, rows + cols).
struct Partition {
  std::vector<int> parts;  // weakly decreasing, trailing zeros allowed
  int rows = 0;
  int cols = 0;

  static Partition make(std::vector<int> parts, int rows, int cols);
  int part(int r) const;  // 1-based row, 0 past the end
  int size() const;
  int dimension() const { return rows * cols - size(); }
};

struct GrassmannianWord {
  Word word;
  int rank = 0;          // type A_{rank}
  int weight_index = 0;  // = rows
};

GrassmannianWord partition_to_word(const Partition& p);
int partition_hole_count(const Partition& p);
std::vector<Partition> partitions_in_box(int rows, int cols);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace msv
