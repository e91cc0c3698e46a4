#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <string>

#include "zbrace/error.hpp"
#include "zbrace/group.hpp"

using namespace zbrace;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::SchemaError;
}

// Odd residues mod 8 under multiplication, built straight from arithmetic.
FiniteGroup odd_residues_mod8() {
  const std::vector<Elem> value{1, 3, 5, 7};
  std::vector<std::vector<Elem>> rows(4, std::vector<Elem>(4));
  for (Elem a = 0; a < 4; ++a) {
    for (Elem b = 0; b < 4; ++b) {
      const Elem p = value[a] * value[b] % 8;
      rows[a][b] = static_cast<Elem>(std::ranges::find(value, p) - value.begin());
    }
  }
  return validate_group(rows, {"1", "3", "5", "7"});
}

void expect_latin(const FiniteGroup& g) {
  const Elem n = g.order();
  for (Elem a = 0; a < n; ++a) {
    std::vector<int> row(n), col(n);
    for (Elem b = 0; b < n; ++b) {
      ++row[g.op(a, b)];
      ++col[g.op(b, a)];
    }
    EXPECT_TRUE(std::ranges::all_of(row, [](int c) { return c == 1; }));
    EXPECT_TRUE(std::ranges::all_of(col, [](int c) { return c == 1; }));
    EXPECT_EQ(g.inv(g.inv(a)), a);
  }
}

}  // namespace

TEST(Group, Z2) {
  const auto g = validate_group({{0, 1}, {1, 0}});
  EXPECT_EQ(g.order(), 2u);
  EXPECT_EQ(g.identity(), 0u);
  EXPECT_TRUE(is_abelian(g));
  EXPECT_EQ(group_op(g, 1, 1), 0u);
  EXPECT_EQ(group_inv(g, 1), 1u);
}

TEST(Group, ConstantRowsHaveNoIdentity) {
  EXPECT_EQ(kind_of([] { validate_group({{0, 1}, {0, 1}}); }), ErrorKind::NoIdentity);
}

TEST(Group, EntryOutsideCarrierIsNotClosed) {
  try {
    validate_group({{0, 1}, {1, 2}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotClosed);
    EXPECT_EQ(e.witness(), (std::vector<std::uint64_t>{1, 1}));
  }
}

TEST(Group, MonoidMissesInverse) {
  try {
    validate_group({{0, 1}, {1, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MissingInverse);
    EXPECT_EQ(e.witness(), (std::vector<std::uint64_t>{1}));
  }
}

TEST(Group, LoopIsNotAssociativeWithFirstWitness) {
  try {
    validate_group({{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAssociative);
    EXPECT_EQ(e.witness(), (std::vector<std::uint64_t>{1, 1, 2}));
  }
}

TEST(Group, RaggedTableIsSchemaError) {
  EXPECT_EQ(kind_of([] { validate_group({{0, 1}, {1}}); }), ErrorKind::SchemaError);
}

TEST(Group, OddResiduesMod8) {
  const auto g = odd_residues_mod8();
  EXPECT_EQ(g.order(), 4u);
  EXPECT_TRUE(is_abelian(g));
  for (Elem a = 0; a < 4; ++a) EXPECT_EQ(g.inv(a), a);
  EXPECT_EQ(g.label(group_op(g, 1, 2)), "7");
  EXPECT_EQ(g.label(group_inv(g, 1)), "3");
  expect_latin(g);
}

TEST(Group, IndicesOutOfRange) {
  const auto g = cyclic_group(3);
  EXPECT_EQ(kind_of([&] { group_op(g, 3, 0); }), ErrorKind::IndexOutOfRange);
  EXPECT_EQ(kind_of([&] { group_inv(g, 7); }), ErrorKind::IndexOutOfRange);
}

TEST(Group, SymmetricGroupMatchesComposition) {
  const auto g = symmetric_group(3);
  EXPECT_EQ(g.order(), 6u);
  EXPECT_FALSE(is_abelian(g));
  EXPECT_EQ(g.label(g.identity()), "123");
  // (a*b)(i) = a(b(i)) on one-line notation.
  for (Elem a = 0; a < 6; ++a) {
    for (Elem b = 0; b < 6; ++b) {
      const std::string& pa = g.label(a);
      const std::string& pb = g.label(b);
      std::string prod(3, ' ');
      for (int i = 0; i < 3; ++i) prod[i] = pa[pb[i] - '1'];
      EXPECT_EQ(g.label(g.op(a, b)), prod);
    }
  }
  expect_latin(g);
}

TEST(Group, CyclicGroupsAreLatinAndAbelian) {
  for (Elem n : {1u, 2u, 5u, 12u}) {
    const auto g = cyclic_group(n);
    EXPECT_TRUE(is_abelian(g));
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) EXPECT_EQ(g.op(a, b), (a + b) % n);
    }
    expect_latin(g);
  }
}

TEST(Group, FindLabel) {
  const auto g = odd_residues_mod8();
  EXPECT_EQ(find_label(g, "5"), Elem{2});
  EXPECT_FALSE(find_label(g, "2").has_value());
}
