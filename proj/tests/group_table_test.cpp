#include <gtest/gtest.h>

#include "gcode/error.hpp"
#include "gcode/group_table.hpp"

using namespace gcode;

namespace {

std::vector<int> order_profile(const FiniteGroupTable& g) {
  std::vector<int> out;
  for (int a = 0; a < g.order(); ++a) out.push_back(g.element_order(a));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_isomorphism(const FiniteGroupTable& g, const FiniteGroupTable& h, const std::vector<int>& map) {
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < g.order(); ++b) {
      if (map[static_cast<std::size_t>(g.mul(a, b))] !=
          h.mul(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)])) {
        return false;
      }
    }
  }
  auto img = map;
  std::sort(img.begin(), img.end());
  return std::adjacent_find(img.begin(), img.end()) == img.end();
}

}  // namespace

TEST(GroupSpec, Families) {
  const auto s3 = group_from_spec("S3");
  EXPECT_EQ(s3.order(), 6);
  EXPECT_FALSE(s3.is_abelian());
  const auto e = group_from_spec("E2^3");
  EXPECT_EQ(e.order(), 8);
  EXPECT_EQ(order_profile(e), (std::vector<int>{1, 2, 2, 2, 2, 2, 2, 2}));
  EXPECT_TRUE(group_from_spec("C7").is_cyclic());
  EXPECT_EQ(order_profile(group_from_spec("D8")), (std::vector<int>{1, 2, 2, 2, 2, 2, 4, 4}));
  EXPECT_EQ(order_profile(group_from_spec("Q8")), (std::vector<int>{1, 2, 4, 4, 4, 4, 4, 4}));
  EXPECT_EQ(group_from_spec("A:2x6").order(), 12);
  EXPECT_TRUE(group_from_spec("A:2x6").is_abelian());
  EXPECT_EQ(group_from_spec("S4").order(), 24);
  EXPECT_EQ(group_from_spec("C2 X S3").order(), 12);
  EXPECT_EQ(group_from_spec("C2×C3").order(), 6);
  EXPECT_TRUE(group_from_spec("C2×C3").is_cyclic());
  EXPECT_EQ(group_from_spec("MC:5,4,2").order(), 20);
}

TEST(GroupSpec, Errors) {
  EXPECT_THROW(group_from_spec("Z5"), ParseError);
  EXPECT_THROW(group_from_spec("D7"), ParseError);
  EXPECT_THROW(group_from_spec("MC:5,2,2"), ParseError);
  EXPECT_THROW(group_from_spec("C"), ParseError);
  EXPECT_THROW(group_from_spec("E4^2"), ParseError);
}

TEST(GroupTable, RejectsNonGroup) {
  // Latin square on 3 symbols with identity 0 is always a group; use a
  // non-associative loop of order 5 instead.
  const std::vector<int> loop{0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  EXPECT_THROW(FiniteGroupTable("loop", 5, loop, {1, 2}), std::invalid_argument);
  EXPECT_THROW(FiniteGroupTable("bad", 2, {0, 1, 1, 1}, {1}), std::invalid_argument);
}

TEST(Isomorphism, Examples) {
  EXPECT_FALSE(are_isomorphic(group_from_spec("C4"), group_from_spec("E2^2")));
  const auto s3 = group_from_spec("S3");
  const auto mc = group_from_spec("MC:3,2,2");
  const auto iso = are_isomorphic(mc, s3);
  ASSERT_TRUE(iso);
  EXPECT_TRUE(is_isomorphism(mc, s3, *iso));
  const auto c6 = group_from_spec("C6");
  const auto id = are_isomorphic(c6, c6);
  ASSERT_TRUE(id);
  EXPECT_TRUE(is_isomorphism(c6, c6, *id));
  EXPECT_TRUE(are_isomorphic(group_from_spec("C2XC3"), c6));
  EXPECT_TRUE(are_isomorphic(group_from_spec("D12"), group_from_spec("C2XS3")));
  EXPECT_FALSE(are_isomorphic(group_from_spec("D8"), group_from_spec("Q8")));
  EXPECT_THROW(are_isomorphic(group_from_spec("C5XC13"), group_from_spec("C65"), 64), CapExceeded);
}

TEST(Isomorphism, PermGroupAgainstTable) {
  const std::vector<Permutation> gens{Permutation::from_cycles(6, "(1,2,3)(4,5,6)"),
                                      Permutation::from_cycles(6, "(1,4)(2,6)(3,5)")};
  const auto h = PermGroupSmall::closure(6, gens, 100);
  EXPECT_TRUE(are_isomorphic(h, group_from_spec("S3")));
  EXPECT_FALSE(are_isomorphic(h, group_from_spec("C6")));
  EXPECT_EQ(identify_group(h), "S3");
}

TEST(BuiltInGroups, DistinctAndComplete) {
  // Number of isomorphism types of each order 1..13.
  const std::vector<std::size_t> counts{1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1};
  for (int n = 1; n <= kMaxTabulatedOrder; ++n) {
    const auto& list = groups_of_order(n);
    ASSERT_EQ(list.size(), counts[static_cast<std::size_t>(n - 1)]) << n;
    for (std::size_t i = 0; i < list.size(); ++i) {
      EXPECT_EQ(list[i].order(), n);
      EXPECT_EQ(identify_group(list[i]), list[i].name());
      for (std::size_t j = i + 1; j < list.size(); ++j) EXPECT_FALSE(are_isomorphic(list[i], list[j]));
    }
  }
  EXPECT_THROW(groups_of_order(14), std::invalid_argument);
}

TEST(GroupTable, Subgroups) {
  const auto s3 = group_from_spec("S3");
  EXPECT_EQ(s3.normal_subgroups().size(), 3u);
  EXPECT_EQ(group_from_spec("D8").normal_subgroups().size(), 6u);
  EXPECT_EQ(group_from_spec("Q8").normal_subgroups().size(), 6u);
  EXPECT_EQ(group_from_spec("A4").normal_subgroups().size(), 3u);
  EXPECT_EQ(group_from_spec("E2^2").normal_subgroups().size(), 5u);
  EXPECT_EQ(group_from_spec("D8").center().size(), 2u);
  EXPECT_EQ(s3.center().size(), 1u);
  for (const auto& n : s3.normal_subgroups()) {
    EXPECT_TRUE(s3.is_normal(n));
    // S3/1 is not cyclic; S3/A3 and S3/S3 are.
    EXPECT_EQ(s3.quotient_is_cyclic(n), n.size() >= 3u);
  }
}

TEST(GroupTable, RegularActions) {
  const auto g = group_from_spec("D10");
  for (int a = 0; a < g.order(); ++a) {
    const auto l = g.left_regular(a), r = g.right_regular(a);
    EXPECT_EQ(l(0), a);
    EXPECT_EQ(r(0), g.inv(a));
    for (int b = 0; b < g.order(); ++b) {
      EXPECT_EQ(l * g.left_regular(b), g.left_regular(g.mul(a, b)));
      EXPECT_EQ(r * g.right_regular(b), g.right_regular(g.mul(a, b)));
      EXPECT_EQ(l * g.right_regular(b), g.right_regular(b) * l);
    }
  }
}

TEST(GroupTable, FromPermGroupRoundTrip) {
  const auto s4 = PermGroupSmall::symmetric(4, 100);
  const auto t = FiniteGroupTable::from_perm_group(s4, "S4");
  EXPECT_TRUE(are_isomorphic(t, group_from_spec("S4")));
  EXPECT_FALSE(are_isomorphic(t, group_from_spec("A4XC2")));
}
