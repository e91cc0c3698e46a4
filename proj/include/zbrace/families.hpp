#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "zbrace/brace.hpp"

namespace zbrace {

/// Odd residues mod 2^n with a + b - 1 and a * b. Element i is the residue 2i + 1.
SkewBrace cyclic_unit_brace(unsigned n, const Limits& limits = {});
std::uint64_t cyclic_unit_value(Elem i);

/// Row-major 2x2 matrix over Z/8Z.
using Mat2 = std::array<int, 4>;

/// 2x2 matrices over Z/8Z with odd diagonal and even off-diagonal,
/// with A + B - I and the matrix product. Order 256.
SkewBrace odd_matrix_brace();
Mat2 odd_matrix_value(Elem i);
Elem odd_matrix_index(const Mat2& m);

/// add = mul = g.
SkewBrace trivial_skew_brace(const FiniteGroup& g, std::string group_name = "custom");

/// Coordinatewise operations on pairs; element (i, j) has index i * n2 + j.
/// Throws BoundExceeded above limits.carrier_cap.
SkewBrace product_brace(const SkewBrace& b1, const SkewBrace& b2, const Limits& limits = {});

/// Operation tables of a finite ring on index carrier 0..n-1.
struct RingTables {
  std::vector<std::vector<Elem>> add;
  std::vector<std::vector<Elem>> mul;
  std::vector<std::string> labels;
};

/// The multiples of `step` in Z/mZ, with labels their residues.
RingTables residue_ring(unsigned modulus, unsigned step = 1);
/// The zero ring a * b = 0 on an abelian group.
RingTables zero_ring(const FiniteGroup& g);

/// (N, +, o) with a o b = a b + a + b. Throws NotRing if the tables are not
/// an associative ring, NotRadical (with the group error's witness) if o is
/// not a group.
SkewBrace from_radical_ring(const RingTables& ring, std::string name = "custom");

}  // namespace zbrace
