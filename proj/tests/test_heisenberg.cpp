#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "weylmod/heisenberg.hpp"

using namespace weylmod;

TEST(GradedCount, Examples) {
  EXPECT_EQ(graded_count(0, 2, 1), 1u);  // only (0,0)
  EXPECT_EQ(graded_count(0, 2, 2), 3u);  // (0,0), (2,-1), (-2,1)
  EXPECT_EQ(graded_count(1, 1, 1), 1u);
  EXPECT_EQ(graded_count(0, 0, 5), 1u);
  EXPECT_EQ(graded_count(3, 0, 5), 0u);
  EXPECT_EQ(graded_count(100, 3, 2), 0u);
}

TEST(GradedCount, MatchesEnumeration) {
  for (int L = 0; L <= 4; ++L)
    for (int B = 0; B <= 4; ++B)
      for (std::int64_t i = -4; i <= 4; ++i)
        EXPECT_EQ(graded_count(i, L, B), fx::graded_count_enumerated(i, L, B)) << i << " " << L << " " << B;
}

TEST(GradedCount, MonotoneInBound) {
  for (std::int64_t i = -3; i <= 3; ++i)
    for (int B = 1; B < 6; ++B) EXPECT_LT(graded_count(i, 4, B), graded_count(i, 4, B + 1)) << i << " " << B;
}

TEST(GradedCount, Symmetric) {
  for (std::int64_t i = 0; i <= 6; ++i) EXPECT_EQ(graded_count(i, 3, 3), graded_count(-i, 3, 3));
}

TEST(GradedBasis, AgreesWithCount) {
  for (std::int64_t i = -3; i <= 3; ++i) {
    auto b = graded_basis(i, 3, 2);
    EXPECT_EQ(b.size(), graded_count(i, 3, 2));
    for (const auto& g : b) EXPECT_EQ(graded_degree(g), -i);
  }
}

TEST(GradedCount, OrbitGuards) {
  EXPECT_EQ(graded_count(1, 2, 2, orbit_info(fx::a_inf(Rational(1, 2)))), graded_count(1, 2, 2));
  EXPECT_THROW(graded_count(0, 2, 2, orbit_info(fx::q_linear({0}))), DomainError);
  EXPECT_THROW(graded_count(0, 2, 2, orbit_info(fx::ideal(Field::prime(2), {{1, 1, 1}}))), DomainError);
  EXPECT_THROW(graded_count(0, -1, 2), DomainError);
}

TEST(HeisenbergAction, BracketsAndGrading) {
  auto rep = heisenberg_action_check(orbit_info(fx::a_inf(Rational(1, 2))), 4, 2);
  EXPECT_TRUE(rep.all_pass()) << rep.first_failure;
  EXPECT_EQ(rep.brackets_checked, 25200u);
  EXPECT_EQ(rep.grading_checked, 4000u);
  EXPECT_EQ(rep.central_charge, "1");
}

TEST(HeisenbergAction, OtherParameters) {
  for (auto lambda : {Rational(1, 3), Rational(-7, 2)}) {
    auto rep = heisenberg_action_check(orbit_info(fx::a_inf(lambda)), 3, 2);
    EXPECT_TRUE(rep.all_pass()) << rep.first_failure;
    EXPECT_GT(rep.brackets_checked, 0u);
  }
  auto finite = fx::q_linear({Rational(1, 2), Rational(1, 5)});
  EXPECT_TRUE(heisenberg_action_check(orbit_info(finite), 2, 3).all_pass());
}

TEST(HeisenbergAction, GeneratorDegrees) {
  auto info = orbit_info(fx::a_inf(Rational(1, 2)));
  std::vector<int> idx{1, 2};
  auto M = build_S_O(info, idx, box_window(info, idx, 2));
  ShiftVector g;
  for (int a : {1, -1, 2, -2}) {
    auto e = heisenberg_generator(M, a, g);
    ASSERT_TRUE(e.has_value());
    EXPECT_EQ(graded_degree(e->first), a);
  }
  EXPECT_FALSE(heisenberg_generator(M, 1, ShiftVector::unit(1, -2)).has_value());
}

TEST(HeisenbergAction, Rejects) {
  EXPECT_THROW(heisenberg_action_check(orbit_info(fx::q_linear({0})), 1, 1), DomainError);
}
