#include "zbrace/tensor.hpp"

#include <array>
#include <limits>

namespace zbrace {

namespace {

using u64 = std::uint64_t;

std::array<Elem, 3> split3(u64 j, u64 n) {
  return {static_cast<Elem>(j / (n * n)), static_cast<Elem>(j / n % n),
          static_cast<Elem>(j % n)};
}

u64 join3(u64 a, u64 b, u64 c, u64 n) { return (a * n + b) * n + c; }

// Pointwise lifts of an arity-2 permutation to the arity-3 space.
struct Lifts {
  const PermMatrix& op;
  u64 n;
  u64 on12(u64 j) const { return u64{op(j / n)} * n + j % n; }
  u64 on23(u64 j) const { return j / (n * n) * (n * n) + op(j % (n * n)); }
  u64 on13(u64 j) const {
    const auto [a, b, c] = split3(j, n);
    const u64 img = op(u64{a} * n + c);
    return join3(img / n, b, img % n, n);
  }
};

PermMatrix tabulate2(u64 n, auto&& f) {
  std::vector<std::uint32_t> map(n * n);
  for (u64 j = 0; j < n * n; ++j) map[j] = static_cast<std::uint32_t>(f(j));
  return PermMatrix(2, static_cast<std::uint32_t>(n), std::move(map));
}

PermMatrix tabulate1(u64 n, auto&& f) {
  std::vector<std::uint32_t> map(n);
  for (u64 j = 0; j < n; ++j) map[j] = static_cast<std::uint32_t>(f(static_cast<Elem>(j)));
  return PermMatrix(1, static_cast<std::uint32_t>(n), std::move(map));
}

// Builds a permutation from its displayed matrix units (row, col); nullopt
// when two units share a column or a row.
template <class Units>
std::optional<PermMatrix> from_units(u64 n, const Units& units) {
  constexpr auto unset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> map(n * n, unset);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      const auto [row, col] = units(x, y);
      if (map[col] != unset) return std::nullopt;
      map[col] = static_cast<std::uint32_t>(row);
    }
  }
  if (!is_bijection(map)) return std::nullopt;
  return PermMatrix(2, static_cast<std::uint32_t>(n), std::move(map));
}

Check compare(std::string name, const PermMatrix& a, const PermMatrix& b, unsigned arity) {
  const auto diff = first_difference(a, b);
  Check c = make_check(std::move(name), !diff, a.size());
  if (diff) c.witness = decode_point(*diff, a.dim(), arity);
  return c;
}

Check informational(Check c, const std::string& what) {
  if (c.status == Status::fail) {
    c.status = Status::pass;
    c.detail = "nonzero defect: " + what + " differ; witness is the first differing column";
  } else {
    c.detail = "zero defect: " + what + " agree" +
               (c.status == Status::sampled ? " on all sampled columns" : "");
  }
  return c;
}

}  // namespace

PermMatrix rcheck_matrix(const ZDeformedSolution& s) {
  const u64 n = s.order();
  std::vector<std::uint32_t> map(n * n);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      map[u64{s.sigma(x, y)} * n + s.tau(y, x)] = static_cast<std::uint32_t>(x * n + y);
    }
  }
  return PermMatrix(2, static_cast<std::uint32_t>(n), std::move(map));
}

PermMatrix permutation_P(std::uint32_t n) {
  return tabulate2(n, [n](u64 j) { return j % n * n + j / n; });
}

PermMatrix r_matrix(const ZDeformedSolution& s) {
  return permutation_P(s.order()) * rcheck_matrix(s);
}

Check braid_relation_check(const PermMatrix& rcheck, const SweepOptions& opts,
                           std::string name) {
  const Lifts r{rcheck, rcheck.dim()};
  return sweep(std::move(name), r.n, 3, [&](u64 j) {
    return r.on12(r.on23(r.on12(j))) == r.on23(r.on12(r.on23(j)));
  }, opts);
}

Check ybe_check(const PermMatrix& rm, const SweepOptions& opts) {
  const Lifts r{rm, rm.dim()};
  return sweep("ybe", r.n, 3, [&](u64 j) {
    return r.on12(r.on13(r.on23(j))) == r.on23(r.on13(r.on12(j)));
  }, opts);
}

std::string_view to_string(Lift3 m) {
  switch (m) {
    case Lift3::F_1_23: return "F_1,23";
    case Lift3::Fstar_12_3: return "F*_12,3";
    case Lift3::Fhatstar_1_23: return "Fhat*_1,23";
    case Lift3::Fhat_12_3: return "Fhat_12,3";
    case Lift3::F123: return "F_123";
    case Lift3::Fhat123: return "Fhat_123";
  }
  return "?";
}

TwistBundle::TwistBundle(ZDeformedSolution s)
    : s_(std::move(s)),
      F_(tabulate2(s_.order(),
                   [&](u64 j) {
                     const u64 n = s_.order();
                     return j / n * n + s_.sigma(static_cast<Elem>(j / n), static_cast<Elem>(j % n));
                   })),
      Fhat_(tabulate2(s_.order(), [&](u64 j) {
        const u64 n = s_.order();
        return u64{s_.tau(static_cast<Elem>(j % n), static_cast<Elem>(j / n))} * n + j % n;
      })) {
  const Elem n = s_.order();
  sigma_inv_.resize(std::size_t{n} * n);
  tau_inv_.resize(std::size_t{n} * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      sigma_inv_[std::size_t{a} * n + s_.sigma(a, b)] = b;
      tau_inv_[std::size_t{a} * n + s_.tau(a, b)] = b;
    }
  }
}

PermMatrix TwistBundle::V(Elem x) const {
  return tabulate1(dim(), [&](Elem y) { return s_.sigma(x, y); });
}

PermMatrix TwistBundle::W(Elem y) const {
  return tabulate1(dim(), [&](Elem eta) { return s_.tau(y, eta); });
}

PermMatrix TwistBundle::DeltaV(Elem eta) const {
  const u64 n = dim();
  return tabulate2(n, [&](u64 j) {
    const auto x = static_cast<Elem>(j / n), y = static_cast<Elem>(j % n);
    return u64{s_.sigma(eta, x)} * n + s_.sigma(s_.tau(x, eta), y);
  });
}

PermMatrix TwistBundle::DeltaW(Elem y) const {
  const u64 n = dim();
  return tabulate2(n, [&](u64 j) {
    const auto eta = static_cast<Elem>(j / n), x = static_cast<Elem>(j % n);
    return u64{s_.tau(s_.sigma(x, y), eta)} * n + s_.tau(y, x);
  });
}

std::uint64_t TwistBundle::apply(Lift3 member, std::uint64_t col) const noexcept {
  const u64 n = dim();
  const auto [e, x, y] = split3(col, n);
  const auto& s = s_;
  switch (member) {
    case Lift3::F_1_23: return join3(e, s.sigma(e, x), s.sigma(s.tau(x, e), y), n);
    case Lift3::Fstar_12_3: return join3(e, x, s.sigma(e, s.sigma(x, y)), n);
    case Lift3::Fhatstar_1_23: return join3(s.tau(y, s.tau(x, e)), x, y, n);
    case Lift3::Fhat_12_3: return join3(s.tau(s.sigma(x, y), e), s.tau(y, x), y, n);
    case Lift3::F123: return join3(e, s.sigma(e, x), s.sigma(e, s.sigma(x, y)), n);
    case Lift3::Fhat123: return join3(s.tau(y, s.tau(x, e)), s.tau(y, x), y, n);
  }
  return col;
}

PermMatrix TwistBundle::materialize(Lift3 member) const {
  const u64 size = basis_size(3, dim());
  std::vector<std::uint32_t> map(size);
  for (u64 j = 0; j < size; ++j) map[j] = static_cast<std::uint32_t>(apply(member, j));
  return PermMatrix(3, dim(), std::move(map));
}

Section coproduct_commutation_check(const TwistBundle& bundle, const PermMatrix& rcheck,
                                    const SweepOptions& opts) {
  const auto& s = bundle.solution();
  const u64 n = bundle.dim();
  Section sec{"coproduct_commutation", {}};
  auto dv = [&](Elem eta, u64 p) {
    const auto x = static_cast<Elem>(p / n), y = static_cast<Elem>(p % n);
    return u64{s.sigma(eta, x)} * n + s.sigma(s.tau(x, eta), y);
  };
  auto dw = [&](Elem y, u64 p) {
    const auto eta = static_cast<Elem>(p / n), x = static_cast<Elem>(p % n);
    return u64{s.tau(s.sigma(x, y), eta)} * n + s.tau(y, x);
  };
  // Points are (element, basis pair).
  sec.add(sweep("DeltaV_commutes_with_rcheck", n, 3, [&](u64 j) {
    const auto e = static_cast<Elem>(j / (n * n));
    const u64 p = j % (n * n);
    return dv(e, rcheck(p)) == rcheck(dv(e, p));
  }, opts));
  sec.add(sweep("DeltaW_commutes_with_rcheck", n, 3, [&](u64 j) {
    const auto e = static_cast<Elem>(j / (n * n));
    const u64 p = j % (n * n);
    return dw(e, rcheck(p)) == rcheck(dw(e, p));
  }, opts));
  return sec;
}

Section lift_commutation_check(const TwistBundle& bundle, const PermMatrix& rcheck,
                               const SweepOptions& opts) {
  const Lifts r{rcheck, bundle.dim()};
  Section sec{"lift_commutation", {}};
  auto commutes12 = [&](std::string name, Lift3 m) {
    sec.add(sweep(std::move(name), r.n, 3, [&](u64 j) {
      return r.on12(bundle.apply(m, j)) == bundle.apply(m, r.on12(j));
    }, opts));
  };
  auto commutes23 = [&](std::string name, Lift3 m) {
    sec.add(sweep(std::move(name), r.n, 3, [&](u64 j) {
      return r.on23(bundle.apply(m, j)) == bundle.apply(m, r.on23(j));
    }, opts));
  };
  commutes12("rcheck12_Fstar_12_3", Lift3::Fstar_12_3);
  commutes23("rcheck23_F_1_23", Lift3::F_1_23);
  commutes12("rcheck12_Fhat_12_3", Lift3::Fhat_12_3);
  commutes23("rcheck23_Fhatstar_1_23", Lift3::Fhatstar_1_23);
  return sec;
}

Section cocycle_check(const TwistBundle& bundle, const SweepOptions& opts) {
  const Lifts f{bundle.F(), bundle.dim()};
  const Lifts fh{bundle.Fhat(), bundle.dim()};
  const u64 n = bundle.dim();
  Section sec{"cocycle", {}};
  auto lhs_f = [&](u64 j) { return f.on12(bundle.apply(Lift3::Fstar_12_3, j)); };
  auto rhs_f = [&](u64 j) { return f.on23(bundle.apply(Lift3::F_1_23, j)); };
  auto lhs_fh = [&](u64 j) { return fh.on12(bundle.apply(Lift3::Fhat_12_3, j)); };
  auto rhs_fh = [&](u64 j) { return fh.on23(bundle.apply(Lift3::Fhatstar_1_23, j)); };
  sec.add(sweep("F12_Fstar_eq_F23_F1_23", n, 3, [&](u64 j) { return lhs_f(j) == rhs_f(j); },
                opts));
  sec.add(sweep("F123_closed_form", n, 3,
                [&](u64 j) { return lhs_f(j) == bundle.apply(Lift3::F123, j); }, opts));
  sec.add(sweep("Fhat12_Fhat12_3_eq_Fhat23_Fhatstar", n, 3,
                [&](u64 j) { return lhs_fh(j) == rhs_fh(j); }, opts));
  sec.add(sweep("Fhat123_closed_form", n, 3,
                [&](u64 j) { return lhs_fh(j) == bundle.apply(Lift3::Fhat123, j); }, opts));

  // F_{1,23} is the coproduct applied to the second leg of F, Fhat_{12,3}
  // the coproduct applied to the first leg of Fhat.
  std::vector<PermMatrix> dv, dw;
  for (Elem e = 0; e < n; ++e) {
    dv.push_back(bundle.DeltaV(e));
    dw.push_back(bundle.DeltaW(e));
  }
  sec.add(sweep("F_1_23_is_id_x_Delta_F", n, 3, [&](u64 j) {
    const u64 e = j / (n * n);
    return bundle.apply(Lift3::F_1_23, j) == e * n * n + dv[e](j % (n * n));
  }, opts));
  sec.add(sweep("Fhat_12_3_is_Delta_x_id_Fhat", n, 3, [&](u64 j) {
    const u64 y = j % n;
    return bundle.apply(Lift3::Fhat_12_3, j) == u64{dw[y](j / n)} * n + y;
  }, opts));
  return sec;
}

PermMatrix twisted_rcheck_F(const TwistBundle& bundle, const PermMatrix& rcheck) {
  return bundle.F() * rcheck * bundle.F().inverse();
}

PermMatrix twisted_rcheck_Fhat(const TwistBundle& bundle, const PermMatrix& rcheck) {
  return bundle.Fhat() * rcheck * bundle.Fhat().inverse();
}

std::optional<PermMatrix> closed_form_rF(const ZDeformedSolution& s) {
  const u64 n = s.order();
  // e_{x, sigma_x(y)} (x) e_{sigma_x(y), sigma_{sigma_x(y)}(tau_y(x))}
  return from_units(n, [&](Elem x, Elem y) {
    const Elem u = s.sigma(x, y);
    return std::pair{u64{x} * n + u, u64{u} * n + s.sigma(u, s.tau(y, x))};
  });
}

std::optional<PermMatrix> closed_form_rFhat(const ZDeformedSolution& s) {
  const u64 n = s.order();
  // e_{tau_y(x), tau_{tau_y(x)}(sigma_x(y))} (x) e_{y, tau_y(x)}
  return from_units(n, [&](Elem x, Elem y) {
    const Elem t = s.tau(y, x);
    return std::pair{u64{t} * n + y, u64{s.tau(t, s.sigma(x, y))} * n + t};
  });
}

Section twisted_solution_check(const TwistBundle& bundle, const PermMatrix& rcheck,
                               const SweepOptions& opts) {
  const auto& s = bundle.solution();
  Section sec{"twisted_solutions", {}};
  const PermMatrix rF = twisted_rcheck_F(bundle, rcheck);
  const PermMatrix rFh = twisted_rcheck_Fhat(bundle, rcheck);
  auto against = [&](std::string name, const PermMatrix& conj,
                     const std::optional<PermMatrix>& closed) {
    if (!closed) {
      sec.add(make_check(std::move(name), false, conj.size(),
                         "displayed closed form is not a permutation matrix"));
    } else {
      sec.add(compare(std::move(name), conj, *closed, 2));
    }
  };
  against("rF_closed_form", rF, closed_form_rF(s));
  against("rFhat_closed_form", rFh, closed_form_rFhat(s));
  sec.add(braid_relation_check(rF, opts, "rF_braid_relation"));
  sec.add(braid_relation_check(rFh, opts, "rFhat_braid_relation"));
  if (rcheck * rcheck == PermMatrix::identity(2, bundle.dim())) {
    const PermMatrix P = permutation_P(bundle.dim());
    sec.add(compare("involutive_rF_is_P", rF, P, 2));
    sec.add(compare("involutive_rFhat_is_P", rFh, P, 2));
  }
  return sec;
}

Section twisted_coproduct_check(const TwistBundle& bundle) {
  const auto& s = bundle.solution();
  const u64 n = bundle.dim();
  const PermMatrix Finv = bundle.F().inverse();
  const PermMatrix Fhinv = bundle.Fhat().inverse();
  Section sec{"twisted_coproducts", {}};

  std::optional<std::pair<Elem, std::uint64_t>> v_bad, w_bad, fw_bad, fhv_bad;
  std::optional<Elem> fw_shape, fhv_shape;
  for (Elem e = 0; e < n; ++e) {
    const PermMatrix dv = bundle.DeltaV(e), dw = bundle.DeltaW(e);
    const PermMatrix v = bundle.V(e), w = bundle.W(e);
    if (!v_bad) {
      if (auto d = first_difference(bundle.F() * dv * Finv, kron(v, v))) v_bad = std::pair{e, *d};
    }
    if (!w_bad) {
      if (auto d = first_difference(bundle.Fhat() * dw * Fhinv, kron(w, w))) {
        w_bad = std::pair{e, *d};
      }
    }
    // Delta_F(W_y): e_{tau_{sigma_x(y)}(eta), eta} (x)
    //               e_{tau_{sigma_{tau_x(eta)}(y)}(sigma_eta(x)), sigma_eta(x)}
    const Elem y = e;
    auto fw = from_units(n, [&](Elem eta, Elem x) {
      const Elem se = s.sigma(eta, x);
      return std::pair{u64{s.tau(s.sigma(x, y), eta)} * n + s.tau(s.sigma(s.tau(x, eta), y), se),
                       u64{eta} * n + se};
    });
    if (!fw) {
      if (!fw_shape) fw_shape = e;
    } else if (!fw_bad) {
      if (auto d = first_difference(bundle.F() * dw * Finv, *fw)) fw_bad = std::pair{e, *d};
    }
    // Delta_Fhat(V_eta): e_{sigma_{tau_{sigma_x(y)}(eta)}(tau_y(x)), tau_y(x)} (x)
    //                    e_{sigma_{tau_x(eta)}(y), y}
    const Elem eta = e;
    auto fhv = from_units(n, [&](Elem x, Elem yy) {
      const Elem t = s.tau(yy, x);
      return std::pair{u64{s.sigma(s.tau(s.sigma(x, yy), eta), t)} * n +
                           s.sigma(s.tau(x, eta), yy),
                       u64{t} * n + yy};
    });
    if (!fhv) {
      if (!fhv_shape) fhv_shape = e;
    } else if (!fhv_bad) {
      if (auto d = first_difference(bundle.Fhat() * dv * Fhinv, *fhv)) fhv_bad = std::pair{e, *d};
    }
  }
  const u64 points = n * n * n;
  auto report = [&](std::string name, const std::optional<std::pair<Elem, std::uint64_t>>& bad,
                    const std::optional<Elem>& shape = std::nullopt) {
    Check c = make_check(std::move(name), !bad && !shape, points);
    if (shape) {
      c.detail = "displayed closed form is not a permutation matrix";
      c.witness = {*shape};
    } else if (bad) {
      c.witness = {bad->first, bad->second / n, bad->second % n};
    }
    sec.add(std::move(c));
  };
  report("DeltaF_V_grouplike", v_bad);
  report("DeltaFhat_W_grouplike", w_bad);
  report("DeltaF_W_closed_form", fw_bad, fw_shape);
  report("DeltaFhat_V_closed_form", fhv_bad, fhv_shape);
  return sec;
}

namespace {

// (id (x) Delta) Delta(V_eta): (x, y, w) -> (sigma_eta(x), sigma_t(y), sigma_{tau_y(t)}(w)),
// (Delta (x) id) Delta(V_eta): (x, y, w) -> (sigma_eta(x), sigma_t(y), sigma_t(w)),
// with t = tau_x(eta). The left-leg rule sends a unit e_{sigma_eta(x), x} of
// V_eta to e_{sigma_eta(x), x} (x) V_{tau_x(eta)}.
u64 coassoc_right(const ZDeformedSolution& s, Elem eta, u64 j) {
  const u64 n = s.order();
  const auto [x, y, w] = split3(j, n);
  const Elem t = s.tau(x, eta);
  return join3(s.sigma(eta, x), s.sigma(t, y), s.sigma(s.tau(y, t), w), n);
}

u64 coassoc_left(const ZDeformedSolution& s, Elem eta, u64 j) {
  const u64 n = s.order();
  const auto [x, y, w] = split3(j, n);
  const Elem t = s.tau(x, eta);
  return join3(s.sigma(eta, x), s.sigma(t, y), s.sigma(t, w), n);
}

// r = sum e_{y, sigma_x(y)} (x) e_{x, tau_y(x)}. A unit of V_x^-1 coproducts
// to itself (x) V^-1_{tau_y(x)}, a unit of W_y^-1 to W^-1_{sigma_x(y)} (x) itself.
// Columns (a, c, b) with (x, y) = rcheck(a, b), so a = sigma_x(y), b = tau_y(x).
u64 r_delta_left(const TwistBundle& t, const PermMatrix& rc, u64 j) {
  const u64 n = t.dim();
  const auto [a, c, b] = split3(j, n);
  const u64 xy = rc(u64{a} * n + b);
  return join3(xy % n, t.sigma_inv(b, c), xy / n, n);
}

u64 r_delta_right(const TwistBundle& t, const PermMatrix& rc, u64 j) {
  const u64 n = t.dim();
  const auto [a, c, b] = split3(j, n);
  const u64 xy = rc(u64{a} * n + b);
  return join3(xy % n, t.tau_inv(a, c), xy / n, n);
}

PermMatrix tabulate3(u64 n, auto&& f) {
  const u64 size = basis_size(3, static_cast<std::uint32_t>(n));
  std::vector<std::uint32_t> map(size);
  for (u64 j = 0; j < size; ++j) map[j] = static_cast<std::uint32_t>(f(j));
  return PermMatrix(3, static_cast<std::uint32_t>(n), std::move(map));
}

Defect make_defect(std::string name, const PermMatrix& a, const PermMatrix& b) {
  return Defect{std::move(name), difference(a, b), first_difference(a, b)};
}

}  // namespace

Defect coassociativity_defect(const TwistBundle& bundle, Elem eta) {
  const auto& s = bundle.solution();
  const u64 n = bundle.dim();
  return make_defect("coassociativity_V_" + s.brace().label(eta),
                     tabulate3(n, [&](u64 j) { return coassoc_right(s, eta, j); }),
                     tabulate3(n, [&](u64 j) { return coassoc_left(s, eta, j); }));
}

Defect r_left_coproduct_defect(const TwistBundle& bundle) {
  const u64 n = bundle.dim();
  const PermMatrix rc = rcheck_matrix(bundle.solution());
  const PermMatrix r = permutation_P(bundle.dim()) * rc;
  return make_defect("Delta_x_id_r_vs_r13_r23",
                     tabulate3(n, [&](u64 j) { return r_delta_left(bundle, rc, j); }),
                     lift13(r) * lift23(r));
}

Defect r_right_coproduct_defect(const TwistBundle& bundle) {
  const u64 n = bundle.dim();
  const PermMatrix rc = rcheck_matrix(bundle.solution());
  const PermMatrix r = permutation_P(bundle.dim()) * rc;
  return make_defect("id_x_Delta_r_vs_r13_r12",
                     tabulate3(n, [&](u64 j) { return r_delta_right(bundle, rc, j); }),
                     lift13(r) * lift12(r));
}

Section coassociativity_section(const TwistBundle& bundle, const SweepOptions& opts) {
  const auto& s = bundle.solution();
  const u64 n = bundle.dim();
  Section sec{"coassociativity", {}};
  sec.add(informational(sweep("coassociativity_V", n, 4, [&](u64 p) {
    const auto eta = static_cast<Elem>(p / (n * n * n));
    const u64 j = p % (n * n * n);
    return coassoc_right(s, eta, j) == coassoc_left(s, eta, j);
  }, opts), "(id x Delta)Delta(V_eta) and (Delta x id)Delta(V_eta)"));

  const PermMatrix rc = rcheck_matrix(s);
  const PermMatrix r = permutation_P(bundle.dim()) * rc;
  const Lifts rl{r, n};
  sec.add(informational(sweep("Delta_x_id_r_vs_r13_r23", n, 3, [&](u64 j) {
    return r_delta_left(bundle, rc, j) == rl.on13(rl.on23(j));
  }, opts), "(Delta x id)r and r13 r23"));
  sec.add(informational(sweep("id_x_Delta_r_vs_r13_r12", n, 3, [&](u64 j) {
    return r_delta_right(bundle, rc, j) == rl.on13(rl.on12(j));
  }, opts), "(id x Delta)r and r13 r12"));
  return sec;
}

}  // namespace zbrace
