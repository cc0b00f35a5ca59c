#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "weylmod/simples.hpp"

using namespace weylmod;

namespace {

Field Q = Field::rationals();
Field F2 = Field::prime(2);
Field F3 = Field::prime(3);

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const DomainError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no DomainError";
  return Errc::InvalidIdeal;
}

std::set<ShiftVector> support(const WeightModule& M) {
  std::set<ShiftVector> s;
  for (const auto& g : M.window)
    if (M.dim(g)) s.insert(g);
  return s;
}

}  // namespace

TEST(ClassifySimples, Counts) {
  EXPECT_EQ(classify_simples(orbit_info(fx::q_linear({0, 0}))).size(), 4u);
  EXPECT_EQ(classify_simples(orbit_info(fx::q_linear({Rational(1, 2), Rational(2, 3)}))).size(), 1u);
  EXPECT_EQ(classify_simples(orbit_info(fx::q_linear({0, Rational(1, 3), 4}))).size(), 4u);
  EXPECT_EQ(classify_simples(orbit_info(fx::ideal(F3, {{0, 1}, {0, 1}}))).size(), 9u);
  EXPECT_EQ(classify_simples(orbit_info(fx::ideal(F3, {{0, 1}}))).size(), 3u);
  EXPECT_EQ(classify_simples(orbit_info(fx::ideal(F2, {{1, 1, 1}}))).size(), 1u);
}

TEST(ClassifySimples, FamilyShapes) {
  auto info = orbit_info(fx::ideal(F3, {{0, 1}, {0, 1}}));
  auto list = classify_simples(info);
  std::map<std::size_t, int> by_size;
  std::set<std::string> labels;
  for (const auto& d : list) {
    EXPECT_EQ(d.kind, SimpleDescriptor::Kind::family);
    ++by_size[d.gamma.size()];
    labels.insert(d.label());
    EXPECT_EQ(d.xi.size(), d.gamma.size());
    EXPECT_EQ(d.N, "symbolic");
  }
  EXPECT_EQ(by_size, (std::map<std::size_t, int>{{0, 1}, {1, 4}, {2, 4}}));
  EXPECT_EQ(labels.size(), list.size());
  auto tw = classify_simples(orbit_info(fx::ideal(F2, {{1, 1, 1}})));
  ASSERT_EQ(tw.front().presentation.size(), 1u);
  EXPECT_NE(tw.front().presentation.front().find("sigma_1"), std::string::npos);
}

TEST(BuildSO, ScalarsAndRelations) {
  auto info = orbit_info(fx::q_linear({Rational(1, 2)}));
  std::vector<int> idx{1};
  auto M = build_S_O(info, idx, box_window(info, idx, 4));
  EXPECT_TRUE(verify_relations(M).all_pass());
  for (int g = -4; g <= 4; ++g) {
    auto t = info.t_scalar(1, g);
    EXPECT_EQ(t, Q.from_rational(Rational(1, 2) + g));
    EXPECT_FALSE(t.is_zero());
    if (g > -4) EXPECT_EQ(M.dmap(1, ShiftVector::unit(1, g))->mat, Matrix::scalar(info.t_scalar(1, g - 1), 1));
  }
  EXPECT_TRUE(closure_is_full(M, submodule_closure(M, {{ShiftVector{}, unit_vector(Q, 1, 0)}})));
  EXPECT_TRUE(structural_simplicity(M));
}

TEST(BuildSO, CyclicInTwoVariables) {
  auto info = orbit_info(fx::q_linear({Rational(1, 2), Rational(-2, 3)}));
  auto idx = info.indices();
  auto M = build_S_O(info, idx, box_window(info, idx, 3));
  EXPECT_TRUE(verify_relations(M).all_pass());
  for (const auto& g : M.window)
    EXPECT_TRUE(closure_is_full(M, submodule_closure(M, {{g, unit_vector(Q, 1, 0)}}))) << g.to_string();
}

TEST(BuildSO, Errors) {
  std::vector<int> idx{1};
  auto deg = orbit_info(fx::q_linear({0}));
  EXPECT_EQ(code_of([&] { build_S_O(deg, idx, box_window(deg, idx, 1)); }), Errc::DegenerateOrbit);
  auto cyc = orbit_info(fx::ideal(F2, {{1, 1, 1}}));
  EXPECT_EQ(code_of([&] { build_S_O(cyc, idx, box_window(cyc, idx, 1)); }), Errc::WrongCharacteristic);
}

TEST(BuildSOp, HalfLineSupport) {
  auto info = orbit_info(fx::q_linear({0}));
  std::vector<int> idx{1};
  auto win = box_window(info, idx, 4);
  auto M = build_S_O_p(info, ShiftVector::unit(1), idx, win);
  for (const auto& g : win) EXPECT_EQ(M.dim(g), g[1] >= 1 ? 1u : 0u);
  EXPECT_TRUE(verify_relations(M).all_pass());
  EXPECT_TRUE(structural_simplicity(M));
  // d kills the lowest vector, as in A/Ad
  EXPECT_TRUE(M.dmap(1, ShiftVector::unit(1))->mat.is_zero());
  auto L = build_S_O_p(info, ShiftVector{}, idx, win);
  for (const auto& g : win) EXPECT_EQ(L.dim(g), g[1] <= 0 ? 1u : 0u);
  EXPECT_TRUE(L.xmap(1, ShiftVector{})->mat.is_zero());
}

TEST(BuildSOp, QuadrantSupport) {
  auto info = orbit_info(fx::q_linear({0, 0}));
  auto idx = info.indices();
  auto win = box_window(info, idx, 3);
  std::set<std::set<ShiftVector>> supports;
  for (const auto& p : info.skeleton_objects) {
    auto M = build_S_O_p(info, p, idx, win);
    EXPECT_TRUE(verify_relations(M).all_pass());
    EXPECT_TRUE(structural_simplicity(M));
    EXPECT_TRUE(is_simple_finite(M));
    supports.insert(support(M));
    if (p.is_zero()) {
      for (const auto& g : win) EXPECT_EQ(M.dim(g), g[1] <= 0 && g[2] <= 0 ? 1u : 0u);
      // x1 and x2 kill the corner, as in A/A(x1, x2)
      EXPECT_TRUE(M.xmap(1, ShiftVector{})->mat.is_zero());
      EXPECT_TRUE(M.xmap(2, ShiftVector{})->mat.is_zero());
    }
  }
  EXPECT_EQ(supports.size(), 4u);  // pairwise distinct
}

TEST(BuildSOp, BoundaryTransitionsVanish) {
  auto info = orbit_info(fx::q_linear({0, 0, Rational(1, 2)}));
  auto idx = info.indices();
  auto win = box_window(info, idx, 2);
  for (const auto& p : info.skeleton_objects) {
    auto M = build_S_O_p(info, p, idx, win);
    for (int i : idx)
      for (const auto& g : win)
        for (int s : {1, -1}) {
          auto op = s == 1 ? M.xmap(i, g) : M.dmap(i, g);
          if (!op || !M.dim(g)) continue;
          bool inside = M.dim(M.step(g, i, s)) > 0;
          EXPECT_EQ(inverse(op->mat).has_value(), inside);
        }
  }
}

TEST(BuildSOp, NotASkeletonObject) {
  auto info = orbit_info(fx::q_linear({0}));
  std::vector<int> idx{1};
  EXPECT_EQ(code_of([&] { build_S_O_p(info, ShiftVector::unit(1, 2), idx, box_window(info, idx, 1)); }),
            Errc::NotASkeletonObject);
  auto nd = orbit_info(fx::q_linear({Rational(1, 2)}));
  EXPECT_EQ(code_of([&] { build_S_O_p(nd, ShiftVector{}, idx, box_window(nd, idx, 1)); }), Errc::NotASkeletonObject);
}

TEST(CharP, SixDimensionalOverF2) {
  auto info = orbit_info(fx::ideal(F2, {{1, 1, 1}}));
  auto desc = classify_simples(info).front();
  auto M = build_S_char_p(info, desc, Poly::from_ints(F2, {1, 1, 0, 1}));
  EXPECT_EQ(M.base_dim(), 6u);
  EXPECT_EQ(M.total_dim(), 3u);
  EXPECT_TRUE(M.twisted());
  EXPECT_TRUE(verify_relations(M).all_pass());
  EXPECT_TRUE(is_simple_finite(M));
}

TEST(CharP, DimensionPOverF3) {
  auto info = orbit_info(fx::ideal(F3, {{2, 1}}));  // t - 1
  ASSERT_TRUE(info.degenerate);
  auto list = classify_simples(info);
  ASSERT_EQ(list.size(), 3u);
  for (const auto& d : list) {
    std::vector<std::optional<Poly>> params{std::nullopt};
    if (!d.gamma.empty()) params = {Poly::from_ints(F3, {-1, 1}), Poly::from_ints(F3, {-2, 1})};
    for (const auto& N : params) {
      auto M = build_S_char_p(info, d, N);
      EXPECT_EQ(M.base_dim(), 3u) << d.label();
      EXPECT_TRUE(verify_relations(M).all_pass());
    }
  }
}

TEST(CharP, UniqueSimpleOverF2) {
  auto info = orbit_info(fx::ideal(F2, {{0, 1}}));
  auto list = classify_simples(info);
  ASSERT_EQ(list.front().gamma.size(), 0u);
  auto M = build_S_char_p(info, list.front(), std::nullopt);
  EXPECT_EQ(M.base_dim(), 2u);
  EXPECT_TRUE(is_simple_finite(M));
}

TEST(CharP, NondegenerateLinearFamilies) {
  // (t^2 + 1) over F3: c acts linearly over F9, N = (c - lambda) gives dimension 3 over F9
  auto info = orbit_info(fx::ideal(F3, {{1, 0, 1}}));
  auto d = classify_simples(info).front();
  std::set<std::string> seen;
  for (std::int64_t lambda : {1, 2}) {
    auto M = build_S_char_p(info, d, Poly::from_ints(F3, {-lambda, 1}));
    EXPECT_EQ(M.total_dim(), 3u);
    EXPECT_EQ(M.base_dim(), 6u);
    EXPECT_TRUE(verify_relations(M).all_pass());
    seen.insert(to_skeleton_B(build_skeleton(info), M).c.at(1).to_string());
  }
  EXPECT_EQ(seen.size(), 2u);  // different annihilators
}

TEST(CharP, Errors) {
  auto tw = orbit_info(fx::ideal(F2, {{1, 1, 1}}));
  auto d = classify_simples(tw).front();
  EXPECT_EQ(code_of([&] { build_S_char_p(tw, d, Poly::from_ints(F2, {0, 1})); }), Errc::DegenerateGenerator);
  EXPECT_EQ(code_of([&] { build_S_char_p(tw, d, Poly::from_ints(F2, {1, 0, 1})); }), Errc::NotMaximal);
  EXPECT_EQ(code_of([&] { build_S_char_p(tw, d, std::nullopt); }), Errc::NotPrincipal);
  auto two = orbit_info(fx::ideal(F2, {{0, 1}, {1, 1, 1}}));
  auto list = classify_simples(two);
  const SimpleDescriptor* big = nullptr;
  for (const auto& x : list)
    if (!x.gamma.empty()) big = &x;
  ASSERT_NE(big, nullptr);
  EXPECT_EQ(code_of([&] { build_S_char_p(two, *big, Poly::from_ints(F2, {1, 1})); }),
            Errc::QuotientNotFiniteDimensional);
  auto q = orbit_info(fx::q_linear({0}));
  SimpleDescriptor fam;
  fam.kind = SimpleDescriptor::Kind::family;
  EXPECT_EQ(code_of([&] { build_S_char_p(q, fam, std::nullopt); }), Errc::WrongCharacteristic);
  EXPECT_EQ(code_of([&] { build_S_O_p(tw, ShiftVector{}, {1}, {ShiftVector{}}); }), Errc::WrongCharacteristic);
}
