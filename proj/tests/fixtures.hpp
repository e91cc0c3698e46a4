#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "zbrace/brace.hpp"
#include "zbrace/families.hpp"
#include "zbrace/group.hpp"

namespace fixtures {

using zbrace::Elem;

// A left brace on Z/2 x Z/4 (element x*4 + y) that is not two-sided;
// only the elements with y even are admissible.
inline zbrace::SkewBrace lopsided_brace() {
  std::vector<std::vector<Elem>> add(8, std::vector<Elem>(8));
  for (Elem a = 0; a < 8; ++a) {
    for (Elem b = 0; b < 8; ++b) add[a][b] = ((a / 4 + b / 4) % 2) * 4 + (a % 4 + b % 4) % 4;
  }
  const std::vector<std::vector<Elem>> mul{
      {0, 1, 2, 3, 4, 5, 6, 7}, {1, 0, 3, 2, 5, 4, 7, 6}, {2, 5, 0, 7, 6, 1, 4, 3},
      {3, 4, 1, 6, 7, 0, 5, 2}, {4, 3, 6, 1, 0, 7, 2, 5}, {5, 2, 7, 0, 1, 6, 3, 4},
      {6, 7, 4, 5, 2, 3, 0, 1}, {7, 6, 5, 4, 3, 2, 1, 0}};
  return zbrace::make_skew_brace(zbrace::validate_group(add), zbrace::validate_group(mul));
}

// The finite instances every property test runs over.
inline std::vector<std::pair<std::string, zbrace::SkewBrace>> small_instances() {
  using namespace zbrace;
  std::vector<std::pair<std::string, SkewBrace>> out;
  for (unsigned n : {2u, 3u, 4u, 5u}) out.emplace_back("cyclic" + std::to_string(n), cyclic_unit_brace(n));
  out.emplace_back("radical_2z8", from_radical_ring(residue_ring(8, 2), "2z8"));
  out.emplace_back("trivial_S3", trivial_skew_brace(symmetric_group(3), "S3"));
  out.emplace_back("cyclic2_x_S3",
                   product_brace(cyclic_unit_brace(2), trivial_skew_brace(symmetric_group(3), "S3")));
  out.emplace_back("lopsided", lopsided_brace());
  return out;
}

// Arithmetic oracle for the cyclic unit brace mod 2^n: residues, not indices.
struct CyclicOracle {
  std::uint64_t mod;
  std::uint64_t heap(std::uint64_t a, std::uint64_t b, std::uint64_t c) const {
    return (a + mod - b + c) % mod;  // a -1 b +1 c in the shifted group
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % mod; }
  std::uint64_t inv(std::uint64_t a) const {
    for (std::uint64_t x = 1; x < mod; x += 2) {
      if (a * x % mod == 1) return x;
    }
    return 0;
  }
  std::uint64_t sigma(std::uint64_t z, std::uint64_t x, std::uint64_t y) const {
    return heap(mul(x, y), mul(x, z), z);
  }
  std::uint64_t tau(std::uint64_t z, std::uint64_t y, std::uint64_t x) const {
    return mul(inv(sigma(z, x, y)), mul(x, y));
  }
};

}  // namespace fixtures
