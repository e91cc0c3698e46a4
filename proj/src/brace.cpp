#include "zbrace/brace.hpp"

#include <numeric>

namespace zbrace {

SkewBrace SkewBrace::with_info(BraceInfo info) const {
  SkewBrace copy = *this;
  copy.info_ = std::move(info);
  return copy;
}

SkewBrace make_skew_brace(FiniteGroup add, FiniteGroup mul, BraceInfo info) {
  const Elem n = add.order();
  if (mul.order() != n) {
    throw Error(ErrorKind::IdentityMismatch, "groups have different orders " +
                                                 std::to_string(n) + " and " +
                                                 std::to_string(mul.order()));
  }
  if (add.identity() != mul.identity()) {
    throw Error(ErrorKind::IdentityMismatch,
                "additive identity " + std::to_string(add.identity()) +
                    " differs from multiplicative identity " + std::to_string(mul.identity()),
                {add.identity(), mul.identity()});
  }

  bool two_sided = true;
  for (Elem a = 0; a < n; ++a) {
    const Elem neg_a = add.inv(a);
    for (Elem b = 0; b < n; ++b) {
      const Elem ab = mul.op(a, b);
      for (Elem c = 0; c < n; ++c) {
        const Elem lhs = mul.op(a, add.op(b, c));
        const Elem rhs = add.op(add.op(ab, neg_a), mul.op(a, c));
        if (lhs != rhs) {
          throw Error(ErrorKind::NotLeftDistributive,
                      "a o (b + c) != a o b - a + a o c at a=" + add.label(a) +
                          ", b=" + add.label(b) + ", c=" + add.label(c),
                      {a, b, c});
        }
        if (two_sided) {
          // (b + c) o a = b o a - a + c o a
          const Elem l2 = mul.op(add.op(b, c), a);
          const Elem r2 = add.op(add.op(mul.op(b, a), neg_a), mul.op(c, a));
          two_sided = l2 == r2;
        }
      }
    }
  }
  const bool left = is_abelian(add);
  return SkewBrace(std::move(add), std::move(mul), std::move(info), left, two_sided);
}

std::vector<Elem> socle(const SkewBrace& b) {
  std::vector<Elem> out;
  const Elem n = b.order();
  for (Elem s = 0; s < n; ++s) {
    bool member = true;
    for (Elem a = 0; a < n && member; ++a) member = b.circ(a, s) == b.plus(a, s);
    if (member) out.push_back(s);
  }
  return out;
}

bool is_admissible(const SkewBrace& b, Elem z) {
  // Right multiplication by z respects a - b + c exactly when
  // x -> x o z - z is additive, i.e. (a + c) o z = a o z - z + c o z.
  // This is the b = 0 instance of the three-variable law and implies it.
  const Elem n = b.order();
  for (Elem a = 0; a < n; ++a) {
    const Elem az_minus_z = b.minus(b.circ(a, z), z);
    for (Elem c = 0; c < n; ++c) {
      if (b.circ(b.plus(a, c), z) != b.plus(az_minus_z, b.circ(c, z))) return false;
    }
  }
  return true;
}

std::vector<Elem> admissible_z(const SkewBrace& b) {
  std::vector<Elem> out;
  if (b.is_two_sided()) {
    out.resize(b.order());
    std::iota(out.begin(), out.end(), Elem{0});
    return out;
  }
  for (Elem z = 0; z < b.order(); ++z) {
    if (is_admissible(b, z)) out.push_back(z);
  }
  return out;
}

}  // namespace zbrace
