#include "zbrace/perm.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <tuple>

#include "zbrace/error.hpp"

namespace zbrace {

std::uint64_t basis_size(unsigned arity, std::uint32_t dim) {
  std::uint64_t size = 1;
  for (unsigned k = 0; k < arity; ++k) {
    size *= dim;
    if (size > 0xffffffffULL) {
      throw Error(ErrorKind::BoundExceeded, "tensor power " + std::to_string(dim) + "^" +
                                                std::to_string(arity) +
                                                " exceeds 32-bit basis indexing");
    }
  }
  return size;
}

bool is_bijection(std::span<const std::uint32_t> map) {
  std::vector<char> seen(map.size(), 0);
  for (std::uint32_t v : map) {
    if (v >= map.size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

PermMatrix::PermMatrix(unsigned arity, std::uint32_t dim, std::vector<std::uint32_t> map)
    : arity_(arity), dim_(dim), map_(std::move(map)) {
  if (map_.size() != basis_size(arity, dim)) {
    throw std::invalid_argument("permutation map has the wrong length");
  }
  if (!is_bijection(map_)) throw std::invalid_argument("permutation map is not a bijection");
}

PermMatrix PermMatrix::identity(unsigned arity, std::uint32_t dim) {
  std::vector<std::uint32_t> map(basis_size(arity, dim));
  std::iota(map.begin(), map.end(), 0u);
  return PermMatrix(arity, dim, std::move(map));
}

PermMatrix PermMatrix::inverse() const {
  std::vector<std::uint32_t> inv(map_.size());
  for (std::uint32_t j = 0; j < map_.size(); ++j) inv[map_[j]] = j;
  return PermMatrix(arity_, dim_, std::move(inv));
}

PermMatrix operator*(const PermMatrix& a, const PermMatrix& b) {
  if (a.arity_ != b.arity_ || a.dim_ != b.dim_) {
    throw std::invalid_argument("product of permutation matrices on different spaces");
  }
  std::vector<std::uint32_t> map(b.map_.size());
  for (std::size_t j = 0; j < map.size(); ++j) map[j] = a.map_[b.map_[j]];
  return PermMatrix(a.arity_, a.dim_, std::move(map));
}

PermMatrix lift(const PermMatrix& op, unsigned arity, std::span<const unsigned> legs) {
  if (legs.size() != op.arity()) throw std::invalid_argument("leg count differs from arity");
  const std::uint32_t n = op.dim();
  const std::uint64_t size = basis_size(arity, n);
  std::vector<std::uint64_t> weight(arity, 1);
  for (unsigned k = arity - 1; k-- > 0;) weight[k] = weight[k + 1] * n;

  std::vector<std::uint32_t> map(size);
  for (std::uint64_t j = 0; j < size; ++j) {
    std::uint64_t inner = 0;
    for (unsigned leg : legs) inner = inner * n + j / weight[leg] % n;
    std::uint64_t image_inner = op(inner);
    std::uint64_t out = j;
    for (unsigned k = static_cast<unsigned>(legs.size()); k-- > 0;) {
      const unsigned leg = legs[k];
      out -= (j / weight[leg] % n) * weight[leg];
      out += (image_inner % n) * weight[leg];
      image_inner /= n;
    }
    map[j] = static_cast<std::uint32_t>(out);
  }
  return PermMatrix(arity, n, std::move(map));
}

PermMatrix lift12(const PermMatrix& op) {
  constexpr unsigned legs[] = {0, 1};
  return lift(op, 3, legs);
}
PermMatrix lift23(const PermMatrix& op) {
  constexpr unsigned legs[] = {1, 2};
  return lift(op, 3, legs);
}
PermMatrix lift13(const PermMatrix& op) {
  constexpr unsigned legs[] = {0, 2};
  return lift(op, 3, legs);
}

PermMatrix kron(const PermMatrix& a, const PermMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("tensor factors of different dimension");
  const std::uint64_t size = basis_size(a.arity() + b.arity(), a.dim());
  const std::uint64_t bs = b.size();
  std::vector<std::uint32_t> map(size);
  for (std::uint64_t j = 0; j < size; ++j) {
    map[j] = static_cast<std::uint32_t>(std::uint64_t{a(j / bs)} * bs + b(j % bs));
  }
  return PermMatrix(a.arity() + b.arity(), a.dim(), std::move(map));
}

std::optional<std::uint64_t> first_difference(const PermMatrix& a, const PermMatrix& b) {
  if (a.size() != b.size()) return 0;
  for (std::uint64_t j = 0; j < a.size(); ++j) {
    if (a(j) != b(j)) return j;
  }
  return std::nullopt;
}

SparseIntMatrix to_sparse(const PermMatrix& m) {
  SparseIntMatrix s{m.size(), m.size(), {}};
  const PermMatrix inv = m.inverse();
  s.entries.reserve(m.size());
  for (std::uint64_t row = 0; row < m.size(); ++row) s.entries.push_back({row, inv(row), 1});
  return s;
}

SparseIntMatrix difference(const PermMatrix& a, const PermMatrix& b) {
  SparseIntMatrix s{a.size(), a.size(), {}};
  for (std::uint64_t j = 0; j < a.size(); ++j) {
    if (a(j) != b(j)) {
      s.entries.push_back({a(j), j, 1});
      s.entries.push_back({b(j), j, -1});
    }
  }
  std::ranges::sort(s.entries, [](const auto& x, const auto& y) {
    return std::tie(x.row, x.col) < std::tie(y.row, y.col);
  });
  return s;
}

void write_coordinate(std::ostream& out, const SparseIntMatrix& m) {
  out << m.rows << ' ' << m.cols << ' ' << m.entries.size() << '\n';
  for (const auto& e : m.entries) out << e.row << ' ' << e.col << ' ' << e.value << '\n';
}

}  // namespace zbrace
