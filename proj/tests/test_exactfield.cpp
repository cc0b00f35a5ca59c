#include <random>
#include <set>

#include <gtest/gtest.h>

#include "weylmod/exactfield.hpp"
#include "weylmod/linalg.hpp"

using namespace weylmod;

namespace {

Poly P(const Field& f, std::initializer_list<std::int64_t> c) { return Poly::from_ints(f, c); }

Poly random_poly(const Field& f, std::mt19937& rng, int maxdeg) {
  std::uniform_int_distribution<int> deg(-1, maxdeg);
  std::uniform_int_distribution<std::int64_t> coef(-9, 9);
  int d = deg(rng);
  std::vector<Elem> c;
  for (int k = 0; k <= d; ++k) {
    if (f.is_finite()) c.push_back(f.from_index(static_cast<std::uint64_t>(rng()) % static_cast<std::uint64_t>(f.order())));
    else c.push_back(f.from_rational(Rational(coef(rng), 1 + (rng() % 4))));
  }
  return Poly(f, c);
}

std::string encode(const Poly& f) {
  std::string s;
  for (const auto& c : f.coeffs()) s += std::to_string(f.field().index_of(c)) + ",";
  return s;
}

// every product of two monic factors of positive degree with total degree <= maxdeg
std::set<std::string> reducible_sieve(const Field& F, int maxdeg) {
  std::set<std::string> out;
  for (int d = 1; d < maxdeg; ++d)
    for (int e = d; d + e <= maxdeg; ++e)
      detail::for_each_monic(F, d, [&](const Poly& g) {
        detail::for_each_monic(F, e, [&](const Poly& h) {
          out.insert(encode(g * h));
          return false;
        });
        return false;
      });
  return out;
}

std::vector<Field> small_fields() {
  return {Field::prime(2), Field::prime(3), Field::prime(5), Field::prime(7), finite_field(4), finite_field(8),
          finite_field(9)};
}

}  // namespace

TEST(Poly, DivmodOverF2) {
  Field f2 = Field::prime(2);
  auto [q, r] = P(f2, {1, 1, 1}).divmod(P(f2, {1, 1}));
  EXPECT_EQ(q, P(f2, {0, 1}));
  EXPECT_EQ(r, P(f2, {1}));
}

TEST(Poly, GcdWithZeroIsMonic) {
  Field q = Field::rationals();
  Poly f(q, {q.from_int(4), q.from_int(2)});
  EXPECT_EQ(gcd(f, Poly(q)), f.monic());
  EXPECT_TRUE(gcd(f, Poly(q)).is_monic());
  EXPECT_EQ(gcd(P(q, {-1, 0, 1}), P(q, {1, 2, 1})), P(q, {1, 1}));
}

TEST(Poly, EvalOverF2) {
  Field f2 = Field::prime(2);
  EXPECT_TRUE(P(f2, {1, 1, 1}).eval(f2.one()).is_one());
}

TEST(Poly, DivisionByZeroRaises) {
  Field q = Field::rationals();
  try {
    (void)P(q, {1, 1}).divmod(Poly(q));
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), Errc::DivisionByZeroPoly);
  }
}

TEST(Poly, FieldMismatchRaises) {
  try {
    (void)(P(Field::prime(2), {1}) + P(Field::prime(3), {1}));
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), Errc::FieldMismatch);
  }
}

TEST(Poly, ShiftExamples) {
  Field q = Field::rationals();
  EXPECT_EQ(P(q, {-3, 1}).shift(3), P(q, {0, 1}));
  Field f2 = Field::prime(2);
  EXPECT_EQ(P(f2, {1, 1, 1}).shift(1), P(f2, {1, 1, 1}));
}

TEST(Poly, ShiftComposes) {
  std::mt19937 rng(7);
  for (const Field& f : {Field::rationals(), Field::prime(5), finite_field(9)}) {
    for (int trial = 0; trial < 40; ++trial) {
      Poly g = random_poly(f, rng, 5);
      std::int64_t a = static_cast<int>(rng() % 21) - 10, b = static_cast<int>(rng() % 21) - 10;
      EXPECT_EQ(g.shift(a).shift(b), g.shift(a + b));
      EXPECT_EQ(g.shift(0), g);
    }
  }
}

TEST(Poly, ShiftByCharacteristicIsIdentity) {
  std::mt19937 rng(11);
  for (const Field& f : small_fields())
    for (int trial = 0; trial < 20; ++trial) {
      Poly g = random_poly(f, rng, 6);
      EXPECT_EQ(g.shift(f.characteristic()), g);
    }
}

TEST(Poly, DivmodIdentityRandom) {
  std::mt19937 rng(3);
  for (const Field& f : {Field::rationals(), Field::prime(2), Field::prime(7), finite_field(4), finite_field(27)}) {
    for (int trial = 0; trial < 200; ++trial) {
      Poly a = random_poly(f, rng, 7), b = random_poly(f, rng, 4);
      if (b.is_zero()) continue;
      auto [q, r] = a.divmod(b);
      EXPECT_EQ(q * b + r, a);
      EXPECT_LT(r.degree(), b.degree());
    }
  }
}

TEST(Field, AxiomsExhaustive) {
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u, 32u, 49u, 64u}) {
    Field f = finite_field(q);
    auto el = f.elements();
    ASSERT_EQ(el.size(), q);
    for (const auto& x : el)
      if (!x.is_zero()) EXPECT_TRUE((x * x.inverse()).is_one());
    if (q > 16) continue;  // cubic triple loop kept small
    for (const auto& x : el)
      for (const auto& y : el)
        for (const auto& z : el) EXPECT_EQ(x * (y + z), x * y + x * z);
  }
}

TEST(Field, IndexRoundTrip) {
  Field f = finite_field(27);
  for (std::uint64_t i = 0; i < 27; ++i) EXPECT_EQ(f.index_of(f.from_index(i)), i);
}

TEST(Field, PrimeCheck) {
  EXPECT_THROW(Field::prime(9), DomainError);
  EXPECT_NO_THROW(Field::prime(101));
}

TEST(Irreducible, Examples) {
  Field f2 = Field::prime(2), q = Field::rationals();
  EXPECT_EQ(is_irreducible(P(f2, {1, 1, 1})), Tri::yes);
  EXPECT_EQ(is_irreducible(P(q, {0, 0, 1})), Tri::no);
  EXPECT_EQ(is_irreducible(P(q, {-2, 0, 1})), Tri::yes);
  EXPECT_EQ(is_irreducible(P(q, {-4, 0, 1})), Tri::no);
  EXPECT_EQ(is_irreducible(P(q, {-2, 0, 0, 0, 1})), Tri::unknown);
}

TEST(Irreducible, AgreesWithFactorizationOracle) {
  for (const Field& f : small_fields()) {
    if (f.order() > 9) continue;
    auto sieve = reducible_sieve(f, 4);
    for (int d = 1; d <= 4; ++d) {
      detail::for_each_monic(f, d, [&](const Poly& g) {
        bool irr = is_irreducible(g) == Tri::yes;
        EXPECT_EQ(irr, !sieve.count(encode(g))) << g.to_string() << " over " << f.describe();
        return false;
      });
    }
  }
}

TEST(Irreducible, BudgetGuard) {
  Field f2 = Field::prime(2);
  std::vector<Elem> c(10, f2.zero());
  c[0] = f2.one();
  c[9] = f2.one();
  try {
    (void)is_irreducible(Poly(f2, c));
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), Errc::EnumerationBudgetExceeded);
  }
  Limits lim;
  lim.irreducible_max_degree = 9;
  EXPECT_EQ(is_irreducible(Poly(f2, c), lim), Tri::no);  // t^9 + 1 has root 1
}

TEST(Irreducible, QTower) {
  Field q = Field::rationals();
  Field k = Field::extension(q, P(q, {-2, 0, 1}).coeffs());
  // t^3 - 3 stays irreducible over a quadratic extension
  EXPECT_EQ(is_irreducible(P(q, {-3, 0, 0, 1}).over(k)), Tri::yes);
  EXPECT_EQ(is_irreducible(P(q, {-3, 0, 1}).over(k)), Tri::unknown);
  // splits over the tower, but only rational roots are searched
  EXPECT_EQ(is_irreducible(P(q, {-2, 0, 1}).over(k)), Tri::unknown);
  EXPECT_EQ(is_irreducible(P(q, {-1, 0, 1}).over(k)), Tri::no);
}

TEST(Extension, TowerArithmetic) {
  Field f2 = Field::prime(2);
  Field f4 = Field::extension(f2, P(f2, {1, 1, 1}).coeffs());
  Elem w = f4.gen();
  EXPECT_EQ(w * w, w + f4.one());
  EXPECT_TRUE(w.pow(3).is_one());
  Field f16 = Field::extension(f4, {w, f4.one(), f4.one()});  // u^2 + u + w
  for (const auto& x : f16.elements())
    if (!x.is_zero()) EXPECT_TRUE((x * x.inverse()).is_one());
  EXPECT_EQ(f16.order(), 16);
  EXPECT_EQ(f16.embed(w) * f16.embed(w), f16.embed(w + f4.one()));
}

TEST(Linalg, NullspaceAndInverse) {
  Field q = Field::rationals();
  Matrix m(q, 2, 3);
  m(0, 0) = q.from_int(1);
  m(0, 1) = q.from_int(2);
  m(1, 2) = q.from_int(3);
  auto ns = nullspace(m);
  ASSERT_EQ(ns.size(), 1u);
  auto img = m.apply(ns[0]);
  EXPECT_TRUE(img[0].is_zero() && img[1].is_zero());
  Matrix a(q, 2, 2);
  a(0, 0) = q.from_int(2);
  a(0, 1) = q.from_int(1);
  a(1, 0) = q.from_int(1);
  a(1, 1) = q.from_int(1);
  auto inv = inverse(a);
  ASSERT_TRUE(inv);
  EXPECT_TRUE((a * *inv).is_identity());
  Matrix sing(q, 2, 2);
  EXPECT_FALSE(inverse(sing));
}
