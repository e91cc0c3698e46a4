#include "zbrace/solution.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace zbrace {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool is_permutation_row(std::span<const Elem> row, std::vector<char>& seen) {
  std::ranges::fill(seen, 0);
  for (Elem v : row) {
    if (v >= seen.size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

}  // namespace

ZDeformedSolution ZDeformedSolution::from_tables(SkewBrace brace, Elem z, std::vector<Elem> sigma,
                                                 std::vector<Elem> tau) {
  const std::size_t nn = std::size_t{brace.order()} * brace.order();
  if (sigma.size() != nn || tau.size() != nn) {
    throw Error(ErrorKind::SchemaError, "solution tables must have n*n entries");
  }
  auto tables = std::make_shared<Tables>();
  tables->sigma = std::move(sigma);
  tables->tau = std::move(tau);
  return ZDeformedSolution(std::move(brace), z, std::move(tables));
}

std::vector<std::uint64_t> ZDeformedSolution::pair_map() const {
  const std::uint64_t n = n_;
  std::vector<std::uint64_t> map(n * n);
  for (Elem x = 0; x < n_; ++x) {
    for (Elem y = 0; y < n_; ++y) map[x * n + y] = sigma(x, y) * n + tau(y, x);
  }
  return map;
}

ZDeformedSolution build_solution(const SkewBrace& b, Elem z) {
  const Elem n = b.order();
  if (z >= n || !is_admissible(b, z)) {
    throw Error(ErrorKind::InadmissibleZ,
                "z = " + (z < n ? b.label(z) : std::to_string(z)) +
                    " does not satisfy (a - b + c) o z = a o z - b o z + c o z",
                {z});
  }
  std::vector<Elem> sigma(std::size_t{n} * n), tau(std::size_t{n} * n);
  for (Elem x = 0; x < n; ++x) {
    const Elem xz = b.circ(x, z);
    for (Elem y = 0; y < n; ++y) {
      const Elem xy = b.circ(x, y);
      const Elem s = b.heap(xy, xz, z);
      sigma[std::size_t{x} * n + y] = s;
      tau[std::size_t{y} * n + x] = b.circ(b.circ_inv(s), xy);
    }
  }
  auto sol = ZDeformedSolution::from_tables(b, z, std::move(sigma), std::move(tau));
  if (!nondegeneracy_check(sol).ok() || !transpose_identity_holds(sol)) {
    throw std::logic_error("z-deformed solution is degenerate; brace tables are inconsistent");
  }
  return sol;
}

ZDeformedSolution inverse_solution(const SkewBrace& b, Elem z) {
  const Elem n = b.order();
  if (z >= n || !is_admissible(b, z)) {
    throw Error(ErrorKind::InadmissibleZ, "inverse solution requested for inadmissible z", {z});
  }
  const Elem zinv = b.circ_inv(z);
  std::vector<Elem> sigma(std::size_t{n} * n), tau(std::size_t{n} * n);
  for (Elem x = 0; x < n; ++x) {
    const Elem xzi = b.circ(x, zinv);
    for (Elem y = 0; y < n; ++y) {
      const Elem xy = b.circ(x, y);
      const Elem s = b.plus(b.neg(xzi), b.circ(xy, zinv));
      sigma[std::size_t{x} * n + y] = s;
      tau[std::size_t{y} * n + x] = b.circ(b.circ_inv(s), xy);
    }
  }
  auto inv = ZDeformedSolution::from_tables(b, z, std::move(sigma), std::move(tau));
  const auto fwd = build_solution(b, z);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      const auto [u, v] = fwd(x, y);
      const auto [p, q] = inv(x, y);
      if (inv(u, v) != std::pair{x, y} || fwd(p, q) != std::pair{x, y}) {
        throw Error(ErrorKind::InverseCheckFailed,
                    "r* does not invert r_z at (" + b.label(x) + ", " + b.label(y) + ")", {x, y});
      }
    }
  }
  return inv;
}

Section verify_braid_constraints(const ZDeformedSolution& s, const SweepOptions& opts) {
  const std::uint64_t n = s.order();
  Section sec{"braid_constraints", {}};
  auto split = [n](std::uint64_t p) {
    return std::array<Elem, 3>{static_cast<Elem>(p / (n * n)), static_cast<Elem>(p / n % n),
                               static_cast<Elem>(p % n)};
  };
  // (eta, x, y) throughout.
  sec.add(sweep("C1", n, 3, [&](std::uint64_t p) {
    const auto [e, x, y] = split(p);
    return s.sigma(e, s.sigma(x, y)) == s.sigma(s.sigma(e, x), s.sigma(s.tau(x, e), y));
  }, opts));
  sec.add(sweep("C2", n, 3, [&](std::uint64_t p) {
    const auto [e, x, y] = split(p);
    return s.tau(y, s.tau(x, e)) == s.tau(s.tau(y, x), s.tau(s.sigma(x, y), e));
  }, opts));
  sec.add(sweep("C3", n, 3, [&](std::uint64_t p) {
    const auto [e, x, y] = split(p);
    return s.tau(s.sigma(s.tau(x, e), y), s.sigma(e, x)) ==
           s.sigma(s.tau(s.sigma(x, y), e), s.tau(y, x));
  }, opts));
  return sec;
}

Check nondegeneracy_check(const ZDeformedSolution& s) {
  const Elem n = s.order();
  std::vector<char> seen(n);
  for (Elem x = 0; x < n; ++x) {
    if (!is_permutation_row(s.sigma_table().subspan(std::size_t{x} * n, n), seen)) {
      Check c = make_check("nondegenerate", false, std::uint64_t{n} * n,
                           "sigma_" + s.brace().label(x) + " is not a bijection");
      c.witness = {x};
      return c;
    }
    if (!is_permutation_row(s.tau_table().subspan(std::size_t{x} * n, n), seen)) {
      Check c = make_check("nondegenerate", false, std::uint64_t{n} * n,
                           "tau_" + s.brace().label(x) + " is not a bijection");
      c.witness = {x};
      return c;
    }
  }
  return make_check("nondegenerate", true, 2 * std::uint64_t{n} * n);
}

Check transpose_identity_check(const ZDeformedSolution& s) {
  const std::uint64_t n = s.order();
  const auto start = Clock::now();
  const auto map = s.pair_map();
  std::vector<std::uint64_t> preimage(n * n, n * n);
  for (std::uint64_t p = 0; p < n * n; ++p) {
    if (map[p] >= n * n) break;
    std::uint64_t& slot = preimage[map[p]];
    if (slot != n * n) {
      Check c = make_check("transpose_identity", false, n * n,
                           "two pairs share the image; r r^T != id");
      c.witness = {slot / n, slot % n, p / n, p % n};
      c.seconds = since(start);
      return c;
    }
    slot = p;
  }
  Check c = make_check("transpose_identity", true, n * n);
  c.seconds = since(start);
  return c;
}

bool transpose_identity_holds(const ZDeformedSolution& s) {
  return transpose_identity_check(s).ok();
}

Check product_identity_check(const ZDeformedSolution& s) {
  const SkewBrace& b = s.brace();
  const Elem n = s.order();
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (b.circ(s.sigma(x, y), s.tau(y, x)) != b.circ(x, y)) {
        Check c = make_check("product_identity", false, std::uint64_t{n} * n,
                             "sigma_x(y) o tau_y(x) != x o y");
        c.witness = {x, y};
        return c;
      }
    }
  }
  return make_check("product_identity", true, std::uint64_t{n} * n);
}

bool sigma_equals_rump(const SkewBrace& b, Elem z) {
  const Elem n = b.order();
  for (Elem a = 0; a < n; ++a) {
    for (Elem c = 0; c < n; ++c) {
      const Elem ac = b.circ(a, c);
      if (b.heap(ac, b.circ(a, z), z) != b.minus(ac, a)) return false;
    }
  }
  return true;
}

bool rump_condition(const SkewBrace& b, Elem z) {
  for (Elem a = 0; a < b.order(); ++a) {
    if (b.circ(a, z) != b.plus(z, a)) return false;
  }
  return true;
}

Involutivity is_involutive(const ZDeformedSolution& s) {
  Involutivity out;
  const Elem n = s.order();
  out.involutive = true;
  for (Elem x = 0; x < n && out.involutive; ++x) {
    for (Elem y = 0; y < n; ++y) {
      const auto [u, v] = s(x, y);
      const auto [p, q] = s(u, v);
      if (p != x || q != y) {
        out.involutive = false;
        out.witness = {x, y, u, v, p, q};
        break;
      }
    }
  }
  out.criterion = s.brace().is_left_brace() && rump_condition(s.brace(), s.z());
  if (out.criterion != out.involutive) {
    throw Error(ErrorKind::CriterionMismatch,
                "involutivity scan and left-brace/socle criterion disagree at z = " +
                    s.brace().label(s.z()),
                {s.z()});
  }
  return out;
}

Section inverse_check(const ZDeformedSolution& s) {
  Section sec{"inverse", {}};
  const Elem n = s.order();
  const auto start = Clock::now();
  try {
    const auto inv = inverse_solution(s.brace(), s.z());
    std::optional<std::pair<Elem, Elem>> left, right;
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        const auto [u, v] = s(x, y);
        const auto [p, q] = inv(x, y);
        if (!left && inv(u, v) != std::pair{x, y}) left = std::pair{x, y};
        if (!right && s(p, q) != std::pair{x, y}) right = std::pair{x, y};
      }
    }
    Check a = make_check("inverse_after_r", !left, std::uint64_t{n} * n);
    if (left) a.witness = {left->first, left->second};
    Check c = make_check("r_after_inverse", !right, std::uint64_t{n} * n);
    if (right) c.witness = {right->first, right->second};
    a.seconds = c.seconds = since(start);
    sec.add(std::move(a));
    sec.add(std::move(c));
  } catch (const Error& e) {
    Check c = make_check("inverse_after_r", false, std::uint64_t{n} * n, e.what());
    c.witness = e.witness();
    sec.add(std::move(c));
  }
  return sec;
}

Section proposition_checks(const ZDeformedSolution& s, const SweepOptions& opts) {
  const SkewBrace& b = s.brace();
  const std::uint64_t n = s.order();
  const Elem z = s.z();
  const Elem zinv = b.circ_inv(z);
  Section sec{"sigma_tau_properties", {}};
  auto d = [n](std::uint64_t p, unsigned k, unsigned arity) {
    for (unsigned i = k + 1; i < arity; ++i) p /= n;
    return static_cast<Elem>(p % n);
  };
  sec.add(sweep("sigma_additive", n, 4, [&](std::uint64_t p) {
    const Elem a = d(p, 0, 4), x = d(p, 1, 4), y = d(p, 2, 4), w = d(p, 3, 4);
    return s.sigma(a, b.heap(x, y, w)) == b.heap(s.sigma(a, x), s.sigma(a, y), s.sigma(a, w));
  }, opts));
  sec.add(sweep("sigma_action", n, 3, [&](std::uint64_t p) {
    const Elem a = d(p, 0, 3), x = d(p, 1, 3), c = d(p, 2, 3);
    return s.sigma(a, s.sigma(x, c)) == s.sigma(b.circ(a, x), c);
  }, opts));
  sec.add(sweep("circ_sigma_shift", n, 3, [&](std::uint64_t p) {
    const Elem a = d(p, 0, 3), x = d(p, 1, 3), c = d(p, 2, 3);
    return b.circ(a, s.sigma(x, c)) ==
           b.plus(b.minus(s.sigma(b.circ(a, x), c), z), b.circ(a, z));
  }, opts));
  sec.add(sweep("z_inverse_right_distributive", n, 3, [&](std::uint64_t p) {
    const Elem a = d(p, 0, 3), x = d(p, 1, 3), c = d(p, 2, 3);
    return b.heap(b.circ(a, zinv), b.circ(x, zinv), b.circ(c, zinv)) ==
           b.circ(b.heap(a, x, c), zinv);
  }, opts));
  sec.add(sweep("sigma_tau_product", n, 2, [&](std::uint64_t p) {
    const Elem a = d(p, 0, 2), x = d(p, 1, 2);
    return b.circ(s.sigma(a, x), s.tau(x, a)) == b.circ(a, x);
  }, opts));
  sec.add(sweep("triple_product", n, 3, [&](std::uint64_t p) {
    const Elem a = d(p, 0, 3), x = d(p, 1, 3), c = d(p, 2, 3);
    const Elem sxc = s.sigma(x, c);
    const Elem lhs = b.circ(s.sigma(a, x), s.sigma(s.tau(x, a), c));
    const Elem rhs = b.circ(s.sigma(a, sxc), s.sigma(s.tau(sxc, a), s.tau(c, x)));
    return lhs == rhs;
  }, opts));
  sec.add(make_check("sigma_rump_criterion",
                     sigma_equals_rump(b, z) == rump_condition(b, z), n * n + n,
                     "sigma^z = sigma^1 iff a o z = z + a for all a"));
  return sec;
}

Section brace_law_checks(const SkewBrace& b, const SweepOptions& opts) {
  const std::uint64_t n = b.order();
  Section sec{"brace_laws", {}};
  sec.add(make_check("shared_identity", b.add().identity() == b.mul().identity(), 1));
  auto d = [n](std::uint64_t p, unsigned k, unsigned arity) {
    for (unsigned i = k + 1; i < arity; ++i) p /= n;
    return static_cast<Elem>(p % n);
  };
  sec.add(sweep("left_distributive", n, 3, [&](std::uint64_t p) {
    const Elem a = d(p, 0, 3), x = d(p, 1, 3), c = d(p, 2, 3);
    return b.circ(a, b.plus(x, c)) == b.plus(b.minus(b.circ(a, x), a), b.circ(a, c));
  }, opts));
  sec.add(sweep("ternary_distributive", n, 4, [&](std::uint64_t p) {
    const Elem a = d(p, 0, 4), x = d(p, 1, 4), c = d(p, 2, 4), w = d(p, 3, 4);
    return b.circ(a, b.heap(x, c, w)) == b.heap(b.circ(a, x), b.circ(a, c), b.circ(a, w));
  }, opts));
  Check two = sweep("right_distributive_flag", n, 3, [&](std::uint64_t p) {
    const Elem a = d(p, 0, 3), x = d(p, 1, 3), c = d(p, 2, 3);
    return b.circ(b.plus(x, c), a) == b.plus(b.minus(b.circ(x, a), a), b.circ(c, a));
  }, opts);
  // Two-sidedness is a classification, not a law; the sweep only has to
  // agree with the flag computed at construction.
  if (b.is_two_sided()) {
    two.detail = "two-sided";
  } else {
    two.detail = "not two-sided; witness violates (b + c) o a = b o a - a + c o a";
    two.status = Status::pass;
  }
  sec.add(std::move(two));
  return sec;
}

Section gv_correspondence_check(const SkewBrace& b) {
  const Elem n = b.order();
  Section sec{"gv_correspondence", {}};
  auto r1 = [&](Elem a, Elem c) {
    const Elem s = b.minus(b.circ(a, c), a);
    return std::pair{s, b.circ(b.circ_inv(s), b.circ(a, c))};
  };
  auto gv = [&](Elem a, Elem c) {
    const Elem s = b.plus(b.neg(a), b.circ(a, c));
    return std::pair{s, b.circ(b.circ_inv(s), b.circ(a, c))};
  };
  std::optional<std::pair<Elem, Elem>> conj_bad, inv_bad, eq_bad;
  std::uint64_t conj_failures = 0;
  for (Elem a = 0; a < n; ++a) {
    const Elem ai = b.circ_inv(a);
    for (Elem c = 0; c < n; ++c) {
      const Elem shifted = b.plus(b.plus(b.neg(ai), c), ai);
      if (r1(a, shifted) != gv(a, c)) {
        ++conj_failures;
        if (!conj_bad) conj_bad = std::pair{a, c};
      }
      const auto [u, v] = gv(a, c);
      const auto [p, q] = r1(a, c);
      if (!inv_bad && (r1(u, v) != std::pair{a, c} || gv(p, q) != std::pair{a, c})) {
        inv_bad = std::pair{a, c};
      }
      if (!eq_bad && gv(a, c) != r1(a, c)) eq_bad = std::pair{a, c};
    }
  }
  const std::uint64_t pairs = std::uint64_t{n} * n;
  Check conj = make_check("gv_conjugation", !conj_bad, pairs,
                          "r_1(a, -a^-1 + b + a^-1) = r_GV(a, b)");
  if (conj_bad) {
    conj.witness = {conj_bad->first, conj_bad->second};
    conj.detail += "; fails at " + std::to_string(conj_failures) + " of " +
                   std::to_string(pairs) + " pairs";
  }
  sec.add(std::move(conj));
  Check inv = make_check("gv_inverse_of_r1", !inv_bad, pairs, "r_GV = r_1^-1");
  if (inv_bad) inv.witness = {inv_bad->first, inv_bad->second};
  sec.add(std::move(inv));
  if (b.is_left_brace()) {
    Check eq = make_check("gv_equals_r1", !eq_bad, pairs, "left brace: r_GV = r_1");
    if (eq_bad) eq.witness = {eq_bad->first, eq_bad->second};
    sec.add(std::move(eq));
  }
  return sec;
}

namespace {

std::vector<std::vector<Elem>> partition_by(std::span<const Elem> zs, auto&& same) {
  std::vector<std::vector<Elem>> classes;
  for (Elem z : zs) {
    auto it = std::ranges::find_if(classes, [&](const auto& cls) { return same(cls.front(), z); });
    if (it == classes.end()) {
      classes.push_back({z});
    } else {
      it->push_back(z);
    }
  }
  return classes;
}

std::string render_classes(const SkewBrace& b, const std::vector<std::vector<Elem>>& classes) {
  std::string out;
  for (const auto& cls : classes) {
    out += out.empty() ? "{" : " {";
    for (std::size_t i = 0; i < cls.size(); ++i) out += (i ? "," : "") + b.label(cls[i]);
    out += "}";
  }
  return out;
}

}  // namespace

DedupPartition dedup_solutions(const SkewBrace& b, std::span<const Elem> zs_in) {
  std::vector<Elem> zs(zs_in.begin(), zs_in.end());
  std::ranges::sort(zs);
  zs.erase(std::unique(zs.begin(), zs.end()), zs.end());

  std::map<Elem, ZDeformedSolution> sols;
  for (Elem z : zs) sols.emplace(z, build_solution(b, z));

  DedupPartition out;
  out.classes = partition_by(zs, [&](Elem z, Elem w) {
    const auto& s = sols.at(z);
    const auto& t = sols.at(w);
    const bool sigma_eq = std::ranges::equal(s.sigma_table(), t.sigma_table());
    const bool tau_eq = std::ranges::equal(s.tau_table(), t.tau_table());
    if (sigma_eq != tau_eq) {
      throw Error(ErrorKind::CriterionMismatch,
                  "sigma tables agree but tau tables do not for z = " + b.label(z) +
                      ", w = " + b.label(w),
                  {z, w});
    }
    return sigma_eq;
  });

  auto add_criterion = [&](std::string name, auto&& same) {
    CriterionComparison c;
    c.name = std::move(name);
    c.classes = partition_by(zs, same);
    c.agrees = c.classes == out.classes;
    out.criteria.push_back(std::move(c));
  };

  const Elem n = b.order();
  add_criterion("-a o z + z = -a o w + w for all a", [&](Elem z, Elem w) {
    for (Elem a = 0; a < n; ++a) {
      if (b.plus(b.neg(b.circ(a, z)), z) != b.plus(b.neg(b.circ(a, w)), w)) return false;
    }
    return true;
  });

  const BraceInfo& info = b.info();
  if (info.family == "cyclic2n" && info.exponent >= 2 && info.exponent < 63) {
    const std::uint64_t mod = std::uint64_t{1} << info.exponent;
    auto criterion = [&](bool all_integers) {
      return [&, all_integers](Elem z, Elem w) {
        const std::uint64_t diff = (cyclic_unit_value(w) + mod - cyclic_unit_value(z)) % mod;
        for (std::uint64_t a = 0; a < mod; ++a) {
          if (!all_integers && a % 2 == 0) continue;
          const unsigned __int128 prod =
              static_cast<unsigned __int128>((a + mod - 1) % mod) * diff;
          if (prod % mod != 0) return false;
        }
        return true;
      };
    };
    add_criterion("(a-1)(w-z) = 0 mod 2^n for odd a", criterion(false));
    add_criterion("(a-1)(w-z) = 0 mod 2^n for all integers a", criterion(true));
    if (!out.criteria.back().agrees) {
      out.notes.push_back(
          "discrepancy-note: quantified over all integers a, the criterion separates "
          "every z; over the carrier (odd a) it reproduces the computed classes " + render_classes(b, out.classes) + ".");
    }
    if (info.exponent == 3) {
      out.notes.push_back(
          "discrepancy-note: r_3, r_5, r_7 are not pairwise distinct; exhaustive table "
          "comparison gives r_1 = r_5 and r_3 = r_7.");
    }
  } else if (info.family == "oddmatrix" && n == 256) {
    add_criterion("(D-I)(B-A) = 0 mod 8 for all D", [&](Elem z, Elem w) {
      const Mat2 a = odd_matrix_value(z), bm = odd_matrix_value(w);
      const Mat2 diff{bm[0] - a[0], bm[1] - a[1], bm[2] - a[2], bm[3] - a[3]};
      for (Elem i = 0; i < n; ++i) {
        Mat2 dm = odd_matrix_value(i);
        dm[0] -= 1;
        dm[3] -= 1;
        const Mat2 p{dm[0] * diff[0] + dm[1] * diff[2], dm[0] * diff[1] + dm[1] * diff[3],
                     dm[2] * diff[0] + dm[3] * diff[2], dm[2] * diff[1] + dm[3] * diff[3]};
        for (int v : p) {
          if (v % 8 != 0) return false;
        }
      }
      return true;
    });
  }
  return out;
}

}  // namespace zbrace
