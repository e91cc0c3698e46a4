#include <gtest/gtest.h>

#include "zbrace/error.hpp"
#include "zbrace/lazy_brace.hpp"

using namespace zbrace;

namespace {

const Check& find_check(const Section& sec, const std::string& name) {
  for (const auto& c : sec.checks) {
    if (c.name == name) return c;
  }
  throw std::runtime_error("no check " + name);
}

}  // namespace

TEST(Lazy, OddFractionOperations) {
  const auto lb = odd_fractions();
  const Rational a(3, 5), b(7, 1);
  EXPECT_EQ(lb.add(a, b), Rational(3, 5) - 1 + 7);
  EXPECT_EQ(lb.add(a, lb.neg(a)), lb.one);
  EXPECT_EQ(lb.circle(a, lb.circle_inv(a)), lb.one);
  // sigma^z_x(y) = xy - xz + z in the shifted addition: xy - xz + z.
  const Rational z(3), x(5, 3), y(-1, 7);
  EXPECT_EQ(lb.sigma(z, x, y), x * y - x * z + z);
}

TEST(Lazy, SampledConstraintsHoldForThreeFifths) {
  const auto lb = odd_fractions();
  const auto sec = sampled_verify_lazy(lb, parse_odd_fraction("3/5"), 10000, 99);
  for (const char* name : {"C1", "C2", "C3", "product_identity", "z_right_distributive"}) {
    EXPECT_EQ(find_check(sec, name).status, Status::sampled) << name;
  }
  EXPECT_EQ(find_check(sec, "C1").points, 10000u);
  EXPECT_TRUE(find_check(sec, "non_involutive_witness").ok());
}

TEST(Lazy, IdentityGivesInvolution) {
  const auto lb = odd_fractions();
  const auto sec = sampled_verify_lazy(lb, Rational(1), 2000, 5);
  EXPECT_TRUE(sec.ok());
  EXPECT_EQ(find_check(sec, "involutive").status, Status::sampled);
}

TEST(Lazy, DistinguishingElement) {
  const auto lb = odd_fractions();
  const auto a = distinguishing_element(lb, Rational(3), Rational(5));
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ(*a, Rational(3));
  // -a o z + z = 1 - az + z under the shifted addition.
  EXPECT_NE(1 - 3 * 3 + 3, 1 - 3 * 5 + 5);
  EXPECT_FALSE(distinguishing_element(lb, Rational(3), Rational(3)).has_value());
}

TEST(Lazy, ParseOddFraction) {
  EXPECT_EQ(parse_odd_fraction("3/5"), Rational(3, 5));
  EXPECT_EQ(parse_odd_fraction("-7"), Rational(-7));
  EXPECT_EQ(parse_odd_fraction("9/15"), Rational(3, 5));
  for (const char* bad : {"4/3", "1/2", "x", "1/0", ""}) {
    EXPECT_THROW(parse_odd_fraction(bad), Error) << bad;
  }
}
