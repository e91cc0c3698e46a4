#include "zbrace/families.hpp"

namespace zbrace {

namespace {

std::vector<Elem> tabulate(Elem n, auto&& f) {
  std::vector<Elem> t(std::size_t{n} * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) t[std::size_t{a} * n + b] = f(a, b);
  }
  return t;
}

}  // namespace

std::uint64_t cyclic_unit_value(Elem i) { return 2 * std::uint64_t{i} + 1; }

SkewBrace cyclic_unit_brace(unsigned n, const Limits& limits) {
  if (n < 2 || n > limits.max_exponent) {
    throw Error(ErrorKind::BoundExceeded, "cyclic unit brace exponent " + std::to_string(n) +
                                              " outside [2, " +
                                              std::to_string(limits.max_exponent) + "]");
  }
  const std::uint64_t modulus = std::uint64_t{1} << n;
  const auto order = static_cast<Elem>(modulus / 2);
  if (order > limits.carrier_cap) {
    throw Error(ErrorKind::BoundExceeded, "carrier of order " + std::to_string(order) +
                                              " exceeds cap " +
                                              std::to_string(limits.carrier_cap));
  }
  auto index = [](std::uint64_t v) { return static_cast<Elem>(v / 2); };
  auto add = tabulate(order, [&](Elem a, Elem b) {
    return index((cyclic_unit_value(a) + cyclic_unit_value(b) + modulus - 1) % modulus);
  });
  auto mul = tabulate(order, [&](Elem a, Elem b) {
    return index(cyclic_unit_value(a) * cyclic_unit_value(b) % modulus);
  });
  std::vector<std::string> labels;
  for (Elem i = 0; i < order; ++i) labels.push_back(std::to_string(cyclic_unit_value(i)));

  BraceInfo info{"cyclic2n", "n=" + std::to_string(n), n};
  return make_skew_brace(validate_group(order, std::move(add), labels),
                         validate_group(order, std::move(mul), labels), std::move(info));
}

// Index digits (a, b, c, d) with a = 2*i0 + 1, b = 2*i1, c = 2*i2, d = 2*i3 + 1.
Mat2 odd_matrix_value(Elem i) {
  return {static_cast<int>(2 * ((i >> 6) & 3) + 1), static_cast<int>(2 * ((i >> 4) & 3)),
          static_cast<int>(2 * ((i >> 2) & 3)), static_cast<int>(2 * (i & 3) + 1)};
}

Elem odd_matrix_index(const Mat2& m) {
  auto r = [](int v) { return static_cast<Elem>(((v % 8) + 8) % 8 / 2); };
  return (r(m[0]) << 6) | (r(m[1]) << 4) | (r(m[2]) << 2) | r(m[3]);
}

SkewBrace odd_matrix_brace() {
  constexpr Elem order = 256;
  auto add = tabulate(order, [](Elem a, Elem b) {
    const Mat2 x = odd_matrix_value(a), y = odd_matrix_value(b);
    return odd_matrix_index({x[0] + y[0] - 1, x[1] + y[1], x[2] + y[2], x[3] + y[3] - 1});
  });
  auto mul = tabulate(order, [](Elem a, Elem b) {
    const Mat2 x = odd_matrix_value(a), y = odd_matrix_value(b);
    return odd_matrix_index({x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
                             x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]});
  });
  std::vector<std::string> labels;
  for (Elem i = 0; i < order; ++i) {
    const Mat2 m = odd_matrix_value(i);
    labels.push_back(std::to_string(m[0]) + "," + std::to_string(m[1]) + ";" +
                     std::to_string(m[2]) + "," + std::to_string(m[3]));
  }
  return make_skew_brace(validate_group(order, std::move(add), labels),
                         validate_group(order, std::move(mul), labels),
                         BraceInfo{"oddmatrix", "", 0});
}

SkewBrace trivial_skew_brace(const FiniteGroup& g, std::string group_name) {
  return make_skew_brace(g, g, BraceInfo{"trivial", "group=" + group_name, 0});
}

SkewBrace product_brace(const SkewBrace& b1, const SkewBrace& b2, const Limits& limits) {
  const std::uint64_t n1 = b1.order(), n2 = b2.order();
  if (n1 * n2 > limits.carrier_cap) {
    throw Error(ErrorKind::BoundExceeded, "product order " + std::to_string(n1 * n2) +
                                              " exceeds cap " +
                                              std::to_string(limits.carrier_cap));
  }
  const auto n = static_cast<Elem>(n1 * n2);
  auto pair_op = [&](auto op1, auto op2) {
    return tabulate(n, [&](Elem p, Elem q) {
      return static_cast<Elem>(op1(p / n2, q / n2) * n2 + op2(p % n2, q % n2));
    });
  };
  auto add = pair_op([&](Elem a, Elem b) { return b1.plus(a, b); },
                     [&](Elem a, Elem b) { return b2.plus(a, b); });
  auto mul = pair_op([&](Elem a, Elem b) { return b1.circ(a, b); },
                     [&](Elem a, Elem b) { return b2.circ(a, b); });
  std::vector<std::string> labels;
  for (Elem p = 0; p < n; ++p) {
    labels.push_back("(" + b1.label(static_cast<Elem>(p / n2)) + "|" +
                     b2.label(static_cast<Elem>(p % n2)) + ")");
  }
  auto describe = [](const SkewBrace& b) {
    return b.info().family + (b.info().params.empty() ? "" : "(" + b.info().params + ")");
  };
  return make_skew_brace(validate_group(n, std::move(add), labels),
                         validate_group(n, std::move(mul), labels),
                         BraceInfo{"product", describe(b1) + " x " + describe(b2), 0});
}

RingTables residue_ring(unsigned modulus, unsigned step) {
  RingTables ring;
  const unsigned n = modulus / step;
  ring.add.assign(n, std::vector<Elem>(n));
  ring.mul.assign(n, std::vector<Elem>(n));
  for (unsigned a = 0; a < n; ++a) {
    ring.labels.push_back(std::to_string(a * step));
    for (unsigned b = 0; b < n; ++b) {
      ring.add[a][b] = static_cast<Elem>((a + b) * step % modulus / step);
      ring.mul[a][b] = static_cast<Elem>((a * step) * (b * step) % modulus / step);
    }
  }
  return ring;
}

RingTables zero_ring(const FiniteGroup& g) {
  RingTables ring;
  const Elem n = g.order();
  ring.labels = g.labels();
  ring.add.assign(n, std::vector<Elem>(n));
  ring.mul.assign(n, std::vector<Elem>(n, g.identity()));
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) ring.add[a][b] = g.op(a, b);
  }
  return ring;
}

SkewBrace from_radical_ring(const RingTables& ring, std::string name) {
  FiniteGroup add = validate_group(ring.add, ring.labels);
  if (!is_abelian(add)) throw Error(ErrorKind::NotRing, "ring addition is not abelian");
  const Elem n = add.order();
  if (ring.mul.size() != n) throw Error(ErrorKind::SchemaError, "multiplication table shape");
  for (const auto& row : ring.mul) {
    if (row.size() != n) throw Error(ErrorKind::SchemaError, "multiplication table shape");
    for (Elem v : row) {
      if (v >= n) throw Error(ErrorKind::NotRing, "multiplication leaves the carrier");
    }
  }
  auto times = [&](Elem a, Elem b) { return ring.mul[a][b]; };
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      for (Elem c = 0; c < n; ++c) {
        if (times(times(a, b), c) != times(a, times(b, c)) ||
            times(a, add.op(b, c)) != add.op(times(a, b), times(a, c)) ||
            times(add.op(a, b), c) != add.op(times(a, c), times(b, c))) {
          throw Error(ErrorKind::NotRing, "ring axioms fail at a=" + add.label(a) +
                                              ", b=" + add.label(b) + ", c=" + add.label(c),
                      {a, b, c});
        }
      }
    }
  }
  auto circle = tabulate(n, [&](Elem a, Elem b) { return add.op(add.op(times(a, b), a), b); });
  FiniteGroup mul = [&] {
    try {
      return validate_group(n, std::move(circle), ring.labels);
    } catch (const Error& e) {
      throw Error(ErrorKind::NotRadical,
                  std::string("adjoint operation is not a group (") + e.what() + ")",
                  e.witness());
    }
  }();
  return make_skew_brace(std::move(add), std::move(mul), BraceInfo{"radical", "ring=" + name, 0});
}

}  // namespace zbrace
