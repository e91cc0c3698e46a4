#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "zbrace/error.hpp"
#include "zbrace/solution.hpp"

using namespace zbrace;

namespace {

Elem at(const SkewBrace& b, const std::string& label) { return *find_label(b.add(), label); }

std::pair<std::string, std::string> eval(const ZDeformedSolution& s, const std::string& x,
                                         const std::string& y) {
  const auto& b = s.brace();
  const auto [u, v] = s(at(b, x), at(b, y));
  return {b.label(u), b.label(v)};
}

const Check& find_check(const Section& sec, const std::string& name) {
  for (const auto& c : sec.checks) {
    if (c.name == name) return c;
  }
  throw std::runtime_error("no check " + name);
}

SweepOptions exhaustive() { return SweepOptions{std::uint64_t{1} << 26, 1000, 7, 1}; }

}  // namespace

TEST(Solution, Cyclic3Values) {
  const auto b = cyclic_unit_brace(3);
  const auto r3 = build_solution(b, at(b, "3"));
  EXPECT_EQ(eval(r3, "3", "5"), (std::pair<std::string, std::string>{"1", "7"}));
  EXPECT_EQ(eval(r3, "1", "7"), (std::pair<std::string, std::string>{"7", "1"}));
  const auto r1 = build_solution(b, at(b, "1"));
  EXPECT_EQ(eval(r1, "3", "5"), (std::pair<std::string, std::string>{"5", "3"}));
  const auto inv3 = inverse_solution(b, at(b, "3"));
  EXPECT_EQ(eval(inv3, "1", "7"), (std::pair<std::string, std::string>{"3", "5"}));
}

TEST(Solution, CyclicTablesMatchResidueArithmetic) {
  for (unsigned n : {2u, 3u, 4u, 5u}) {
    const auto b = cyclic_unit_brace(n);
    const fixtures::CyclicOracle o{std::uint64_t{1} << n};
    for (Elem z = 0; z < b.order(); ++z) {
      const auto s = build_solution(b, z);
      for (Elem x = 0; x < b.order(); ++x) {
        for (Elem y = 0; y < b.order(); ++y) {
          const std::uint64_t vz = 2 * z + 1, vx = 2 * x + 1, vy = 2 * y + 1;
          ASSERT_EQ(2 * s.sigma(x, y) + 1, o.sigma(vz, vx, vy));
          ASSERT_EQ(2 * s.tau(y, x) + 1, o.tau(vz, vy, vx));
        }
      }
    }
  }
}

TEST(Solution, TrivialS3MatchesGroupFormula) {
  // With + = o, sigma_x(y) = x y (x z)^-1 z and tau_y(x) = sigma^-1 x y.
  const auto g = symmetric_group(3);
  const auto b = trivial_skew_brace(g, "S3");
  for (Elem z = 0; z < 6; ++z) {
    const auto s = build_solution(b, z);
    for (Elem x = 0; x < 6; ++x) {
      for (Elem y = 0; y < 6; ++y) {
        const Elem sig = g.op(g.op(g.op(x, y), g.inv(g.op(x, z))), z);
        EXPECT_EQ(s.sigma(x, y), sig);
        EXPECT_EQ(s.tau(y, x), g.op(g.inv(sig), g.op(x, y)));
      }
    }
  }
}

TEST(Solution, InadmissibleZ) {
  const auto b = fixtures::lopsided_brace();
  try {
    build_solution(b, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InadmissibleZ);
  }
  EXPECT_THROW(inverse_solution(b, 3), Error);
}

TEST(Solution, CorruptedSigmaBreaksC1) {
  const auto b = cyclic_unit_brace(3);
  const auto s = build_solution(b, at(b, "3"));
  std::vector<Elem> sigma(s.sigma_table().begin(), s.sigma_table().end());
  std::vector<Elem> tau(s.tau_table().begin(), s.tau_table().end());
  std::swap(sigma[1 * 4 + 0], sigma[1 * 4 + 1]);
  const auto bad = ZDeformedSolution::from_tables(b, s.z(), sigma, tau);
  const auto sec = verify_braid_constraints(bad, exhaustive());
  const Check& c1 = find_check(sec, "C1");
  EXPECT_EQ(c1.status, Status::fail);
  ASSERT_EQ(c1.witness.size(), 3u);
  // The witness really violates C1.
  const Elem e = static_cast<Elem>(c1.witness[0]), x = static_cast<Elem>(c1.witness[1]),
             y = static_cast<Elem>(c1.witness[2]);
  EXPECT_NE(bad.sigma(e, bad.sigma(x, y)), bad.sigma(bad.sigma(e, x), bad.sigma(bad.tau(x, e), y)));
}

TEST(Solution, DuplicatedImagePairFailsTransposeIdentity) {
  const auto b = cyclic_unit_brace(3);
  const auto s = build_solution(b, at(b, "3"));
  std::vector<Elem> sigma(s.sigma_table().begin(), s.sigma_table().end());
  std::vector<Elem> tau(s.tau_table().begin(), s.tau_table().end());
  // Make (0, 1) map where (0, 2) maps.
  sigma[0 * 4 + 1] = sigma[0 * 4 + 2];
  tau[1 * 4 + 0] = tau[2 * 4 + 0];
  const auto bad = ZDeformedSolution::from_tables(b, s.z(), sigma, tau);
  EXPECT_FALSE(transpose_identity_holds(bad));
  const Check c = transpose_identity_check(bad);
  EXPECT_EQ(c.status, Status::fail);
  ASSERT_EQ(c.witness.size(), 4u);
  EXPECT_EQ(bad(static_cast<Elem>(c.witness[0]), static_cast<Elem>(c.witness[1])),
            bad(static_cast<Elem>(c.witness[2]), static_cast<Elem>(c.witness[3])));
}

TEST(Solution, NonInvolutiveWitness) {
  const auto b = cyclic_unit_brace(3);
  const auto inv = is_involutive(build_solution(b, at(b, "3")));
  EXPECT_FALSE(inv.involutive);
  EXPECT_FALSE(inv.criterion);
  ASSERT_EQ(inv.witness.size(), 6u);
  EXPECT_NE(std::pair(inv.witness[4], inv.witness[5]), std::pair(inv.witness[0], inv.witness[1]));
}

TEST(Solution, DedupCyclic) {
  const auto check = [](unsigned n, std::vector<std::vector<std::string>> expected) {
    const auto b = cyclic_unit_brace(n);
    const auto zs = admissible_z(b);
    const auto d = dedup_solutions(b, zs);
    std::vector<std::vector<std::string>> got;
    for (const auto& c : d.classes) {
      got.emplace_back();
      for (Elem e : c) got.back().push_back(b.label(e));
    }
    EXPECT_EQ(got, expected) << "n=" << n;
    // Reordering the input does not change the partition.
    std::vector<Elem> shuffled(zs.rbegin(), zs.rend());
    EXPECT_EQ(dedup_solutions(b, shuffled).classes, d.classes);
    return d;
  };
  check(2, {{"1", "3"}});
  const auto d3 = check(3, {{"1", "5"}, {"3", "7"}});
  EXPECT_TRUE(std::ranges::any_of(d3.notes, [](const std::string& s) {
    return s.find("r_1 = r_5 and r_3 = r_7") != std::string::npos;
  }));
  check(4, {{"1", "9"}, {"3", "11"}, {"5", "13"}, {"7", "15"}});
}

TEST(Solution, DedupOddMatrixCriterionAgrees) {
  const auto b = odd_matrix_brace();
  std::vector<Elem> zs;
  std::mt19937_64 rng(11);
  for (int i = 0; i < 12; ++i) zs.push_back(static_cast<Elem>(rng() % 256));
  zs.push_back(odd_matrix_index({5, 0, 0, 1}));  // differs from I only in a unit entry
  zs.push_back(b.identity());
  const auto d = dedup_solutions(b, zs);
  ASSERT_FALSE(d.criteria.empty());
  for (const auto& c : d.criteria) EXPECT_TRUE(c.agrees) << c.name;
}

TEST(Solution, GvCorrespondence) {
  for (const auto& [name, b] : fixtures::small_instances()) {
    SCOPED_TRACE(name);
    const auto sec = gv_correspondence_check(b);
    EXPECT_TRUE(find_check(sec, "gv_inverse_of_r1").ok());
    if (b.is_left_brace()) {
      EXPECT_TRUE(find_check(sec, "gv_equals_r1").ok());
      EXPECT_TRUE(find_check(sec, "gv_conjugation").ok());
    }
  }
  // With nonabelian addition the conjugated form does not reproduce r_GV.
  const auto s3 = trivial_skew_brace(symmetric_group(3), "S3");
  const Check& conj = find_check(gv_correspondence_check(s3), "gv_conjugation");
  EXPECT_EQ(conj.status, Status::fail);
  EXPECT_NE(conj.detail.find("18 of 36"), std::string::npos);
}

TEST(Solution, OneElementBrace) {
  const auto b = trivial_skew_brace(cyclic_group(1), "Z1");
  const auto s = build_solution(b, 0);
  EXPECT_EQ(s(0, 0), (std::pair<Elem, Elem>{0, 0}));
  EXPECT_TRUE(is_involutive(s).involutive);
  EXPECT_TRUE(gv_correspondence_check(b).ok());
}

// Every map-level identity, over every instance and admissible z.
TEST(SolutionProperty, MapLevelIdentities) {
  for (const auto& [name, b] : fixtures::small_instances()) {
    const auto soc = socle(b);
    EXPECT_TRUE(brace_law_checks(b, exhaustive()).ok()) << name;
    for (Elem z : admissible_z(b)) {
      SCOPED_TRACE(name + " z=" + b.label(z));
      const auto s = build_solution(b, z);
      const Elem n = b.order();
      for (Elem y = 0; y < n; ++y) EXPECT_EQ(s(b.identity(), y), (std::pair<Elem, Elem>{y, b.identity()}));

      EXPECT_TRUE(verify_braid_constraints(s, exhaustive()).ok());
      EXPECT_TRUE(nondegeneracy_check(s).ok());
      EXPECT_TRUE(transpose_identity_holds(s));
      EXPECT_TRUE(product_identity_check(s).ok());
      EXPECT_TRUE(inverse_check(s).ok());
      EXPECT_TRUE(proposition_checks(s, exhaustive()).ok());

      const auto inv = is_involutive(s);
      EXPECT_EQ(sigma_equals_rump(b, z), rump_condition(b, z));
      EXPECT_EQ(inv.involutive, b.is_left_brace() && rump_condition(b, z));
      if (b.is_left_brace()) EXPECT_EQ(inv.involutive, std::ranges::binary_search(soc, z));
      if (b.is_left_brace() && z == b.identity()) EXPECT_TRUE(inv.involutive);

      // r* inverts r on both sides; in the involutive case r* = r.
      const auto star = inverse_solution(b, z);
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
          const auto [u, v] = s(x, y);
          EXPECT_EQ(star(u, v), (std::pair{x, y}));
          const auto [p, q] = star(x, y);
          EXPECT_EQ(s(p, q), (std::pair{x, y}));
          if (inv.involutive) EXPECT_EQ(star(x, y), s(x, y));
        }
      }
    }
  }
}
