#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace zbrace {

/// A 0/1 permutation matrix on the k-fold tensor power of an n-dimensional
/// space, stored as the image of every basis column: M e_j = e_{map[j]}.
///
/// Basis index of (i1, ..., ik) is i1 n^(k-1) + ... + ik, leftmost factor
/// most significant. Matrix units e_{a,b} therefore contribute map[b] = a,
/// and the matrix product A * B applies B first.
class PermMatrix {
 public:
  /// Throws std::invalid_argument unless `map` is a bijection of [0, n^k).
  PermMatrix(unsigned arity, std::uint32_t dim, std::vector<std::uint32_t> map);

  static PermMatrix identity(unsigned arity, std::uint32_t dim);

  unsigned arity() const noexcept { return arity_; }
  std::uint32_t dim() const noexcept { return dim_; }
  std::uint64_t size() const noexcept { return map_.size(); }

  std::uint32_t operator()(std::uint64_t col) const noexcept { return map_[col]; }
  std::span<const std::uint32_t> map() const noexcept { return map_; }

  PermMatrix inverse() const;

  friend PermMatrix operator*(const PermMatrix& a, const PermMatrix& b);
  friend bool operator==(const PermMatrix& a, const PermMatrix& b) = default;

 private:
  unsigned arity_;
  std::uint32_t dim_;
  std::vector<std::uint32_t> map_;
};

/// dim^arity if it fits a 32-bit basis index; throws BoundExceeded otherwise.
std::uint64_t basis_size(unsigned arity, std::uint32_t dim);

bool is_bijection(std::span<const std::uint32_t> map);

/// Embeds an operator on `legs` (ascending or not, distinct) of an
/// arity-`arity` space; the remaining factors are left alone.
PermMatrix lift(const PermMatrix& op, unsigned arity, std::span<const unsigned> legs);
PermMatrix lift12(const PermMatrix& op);
PermMatrix lift23(const PermMatrix& op);
PermMatrix lift13(const PermMatrix& op);

/// a (x) b on the concatenated factors.
PermMatrix kron(const PermMatrix& a, const PermMatrix& b);

/// Smallest column on which the two permutations differ.
std::optional<std::uint64_t> first_difference(const PermMatrix& a, const PermMatrix& b);

/// Coordinate-form integer matrix, entries sorted row-major, no duplicates.
struct SparseIntMatrix {
  struct Entry {
    std::uint64_t row;
    std::uint64_t col;
    std::int64_t value;
    bool operator==(const Entry&) const = default;
  };
  std::uint64_t rows = 0;
  std::uint64_t cols = 0;
  std::vector<Entry> entries;

  bool is_zero() const noexcept { return entries.empty(); }
};

SparseIntMatrix to_sparse(const PermMatrix& m);
/// a - b; empty exactly when a == b.
SparseIntMatrix difference(const PermMatrix& a, const PermMatrix& b);

/// "rows cols nnz" then one "row col value" line per entry.
void write_coordinate(std::ostream& out, const SparseIntMatrix& m);

}  // namespace zbrace
