#include <gtest/gtest.h>

#include <random>

#include "res3/upoly.hpp"

using namespace res3;

namespace {

Poly P(const Field& f, std::vector<int> c) { return Poly::from_ints(f, c); }

Poly random_poly(const Field& f, int deg, std::mt19937& rng) {
  std::vector<Elem> v;
  for (int i = 0; i <= deg; ++i) v.push_back(f.from_index(std::uniform_int_distribution<uint32_t>(0, f.order() - 1)(rng)));
  return Poly(f, v);
}

// Oracle: count roots with multiplicity by brute-force evaluation of
// successive derivative-free divisions.
int root_multiplicity(Poly f, const Elem& r) {
  int m = 0;
  Poly lin = Poly::linear(r);
  while (!f.is_zero()) {
    auto [q, rem] = divmod(f, lin);
    if (!rem.is_zero()) break;
    f = q;
    ++m;
  }
  return m;
}

}  // namespace

TEST(Poly, Arithmetic) {
  const Field& f = gf(1);
  EXPECT_EQ(P(f, {-1, 1}) * P(f, {1, 1}), P(f, {2, 0, 1}));
  Poly cof = P(f, {-1, 1, 0, 0, 0, 0, 0, 0, 0, -1, 1, 1});
  EXPECT_EQ(P(f, {-1, 1}) * cof, P(f, {1, 1, 1, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1}));
  auto [q, r] = divmod(P(f, {1, 0, 0, 1}), P(f, {1, 1}));
  EXPECT_EQ(q, P(f, {1, -1, 1}));
  EXPECT_TRUE(r.is_zero());
  EXPECT_THROW(divmod(P(f, {1}), Poly(f)), ArithmeticError);
}

TEST(Poly, DivmodIdentity) {
  std::mt19937 rng(7);
  for (int k : {1, 2, 3}) {
    const Field& f = gf(k);
    for (int n = 0; n < 200; ++n) {
      Poly a = random_poly(f, 12, rng), b = random_poly(f, 5, rng);
      if (b.is_zero()) continue;
      auto [q, r] = divmod(a, b);
      EXPECT_EQ(q * b + r, a);
      EXPECT_LT(r.degree(), b.degree());
    }
  }
}

TEST(Poly, Derivative) {
  const Field& f = gf(1);
  EXPECT_TRUE(derivative(P(f, {1, 0, 0, 1})).is_zero());
  EXPECT_EQ(derivative(P(f, {0, 1, 1})), P(f, {1, 2}));
  EXPECT_EQ(derivative(P(f, {0, 0, 0, 1, 1})), P(f, {0, 0, 0, 1}));
}

TEST(Poly, Serialization) {
  const Field& f = gf(2);
  Poly p = parse_poly(f, "1,0;2,0;0,1");
  Elem i = f.gen();
  EXPECT_EQ(p, Poly(f, {f.one(), f.from_int(2), i}));
  EXPECT_EQ(parse_poly(f, p.to_string()), p);
  EXPECT_EQ(parse_poly(f, "0"), Poly(f));
  EXPECT_THROW(parse_poly(f, "1;;2"), ParseError);
}

TEST(Poly, SquarefreeDecomposition) {
  const Field& f = gf(1);
  auto d = squarefree_decomposition(P(f, {-1, 1}).pow(2) * P(f, {1, 1}));
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0], std::make_pair(P(f, {1, 1}), 1));
  EXPECT_EQ(d[1], std::make_pair(P(f, {-1, 1}), 2));
  d = squarefree_decomposition(P(f, {2, 0, 0, 1}));
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0], std::make_pair(P(f, {-1, 1}), 3));
  d = squarefree_decomposition(P(f, {0, 0, 0, 0, 0, 0, 2, 0, 0, 1}));
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0], std::make_pair(P(f, {-1, 1}), 3));
  EXPECT_EQ(d[1], std::make_pair(P(f, {0, 1}), 6));
  EXPECT_THROW(squarefree_decomposition(Poly(f)), ArithmeticError);
}

TEST(Poly, SquarefreeOfCubes) {
  std::mt19937 rng(3);
  for (int k : {1, 2}) {
    const Field& f = gf(k);
    for (int n = 0; n < 100; ++n) {
      Poly g = random_poly(f, 4, rng);
      if (g.degree() < 1) continue;
      Poly c = g.pow(3);
      EXPECT_TRUE(derivative(c).is_zero());
      Poly back = Poly::constant(c.lead());
      for (auto& [h, m] : squarefree_decomposition(c)) {
        EXPECT_EQ(m % 3, 0);
        back = back * h.pow(m);
      }
      EXPECT_EQ(back, c);
    }
  }
}

TEST(Poly, Factor) {
  const Field& f3 = gf(1);
  Factorization a = factor(P(f3, {1, 0, 1}));
  ASSERT_EQ(a.factors.size(), 1u);
  EXPECT_EQ(a.factors[0].first.degree(), 2);
  const Field& f9 = gf(2);
  Factorization b = factor(Poly::from_ints(f9, {1, 0, 1}));
  ASSERT_EQ(b.factors.size(), 2u);
  Elem i = f9.gen();
  std::vector<Poly> want = {Poly::linear(i), Poly::linear(-i)};
  for (auto& [p, m] : b.factors) {
    EXPECT_EQ(m, 1);
    EXPECT_TRUE(p == want[0] || p == want[1]);
  }
  Poly d = P(f3, {1, 1, 1, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1});
  Factorization c = factor(d);
  bool found = false;
  for (auto& [p, m] : c.factors)
    if (p == P(f3, {-1, 1}) && m == 1) found = true;
  EXPECT_TRUE(found);
  EXPECT_EQ(c.expand(), d);
}

TEST(Poly, FactorRoundTrip) {
  std::mt19937 rng(11);
  for (int k : {1, 2, 3}) {
    const Field& f = gf(k);
    for (int n = 0; n < 1000; ++n) {
      int deg = std::uniform_int_distribution<int>(1, 12)(rng);
      Poly p = random_poly(f, deg, rng);
      if (n % 3 == 0) p = p * random_poly(f, 2, rng).pow(2);
      if (p.degree() > 12) continue;
      if (p.is_zero()) continue;
      Factorization fa = factor(p, uint64_t(n));
      ASSERT_EQ(fa.expand(), p);
      for (auto& [g, m] : fa.factors) {
        EXPECT_EQ(g.lead(), f.one());
        // Irreducibility oracle for small degree: no roots, and for
        // degree <= 3 that suffices.
        if (g.degree() >= 2 && g.degree() <= 3)
          for (Elem x : f.elements()) EXPECT_FALSE(g.eval(x).is_zero());
      }
      EXPECT_EQ(multiplicity_profile(p), multiplicity_profile_by_factoring(p, uint64_t(n)));
    }
  }
}

TEST(Poly, FactorDeterministic) {
  const Field& f = gf(2);
  std::mt19937 rng(5);
  Poly p = random_poly(f, 10, rng);
  EXPECT_EQ(factor(p, 0).factors, factor(p, 0).factors);
}

TEST(Poly, Roots) {
  const Field& f = gf(2);
  std::mt19937 rng(9);
  for (int n = 0; n < 100; ++n) {
    Poly p = random_poly(f, 8, rng);
    if (p.degree() < 1) continue;
    std::vector<Elem> want;
    for (Elem x : f.elements())
      if (p.eval(x).is_zero()) want.push_back(x);
    EXPECT_EQ(roots(p), want);
  }
}

TEST(Poly, MultiplicityProfile) {
  const Field& f9 = gf(2);
  Elem i = f9.gen();
  Poly p = Poly::linear(f9.one()).pow(5) * Poly::linear(-f9.one()).pow(5) * Poly(f9, {i, f9.zero(), f9.one()});
  EXPECT_EQ(multiplicity_profile(p), (MultiplicityProfile{{5, 2}, {1, 2}}));
  EXPECT_EQ(multiplicity_profile(Poly::from_ints(gf(1), {1, 0, 1})), (MultiplicityProfile{{1, 2}}));
  EXPECT_EQ(multiplicity_profile(Poly::monomial(gf(1).one(), 12)), (MultiplicityProfile{{12, 1}}));
}

TEST(Poly, ProfileAgreesWithRootCounting) {
  // Over GF(9), products of linear factors: compare with a direct count.
  const Field& f = gf(2);
  std::mt19937 rng(21);
  for (int n = 0; n < 200; ++n) {
    Poly p = Poly::constant(f.one());
    int deg = 0;
    while (deg < 12) {
      Elem r = f.from_index(std::uniform_int_distribution<uint32_t>(0, 8)(rng));
      int e = std::uniform_int_distribution<int>(1, 12 - deg)(rng);
      p = p * Poly::linear(r).pow(e);
      deg += e;
    }
    MultiplicityProfile want;
    for (Elem x : f.elements()) {
      int m = root_multiplicity(p, x);
      if (m) want[m] += 1;
    }
    EXPECT_EQ(multiplicity_profile(p), want);
  }
}

TEST(Poly, ProfileUnionAndBaseChange) {
  std::mt19937 rng(31);
  const Field& f3 = gf(1);
  const Field& f9 = gf(2);
  for (int n = 0; n < 200; ++n) {
    Poly a = random_poly(f3, 5, rng), b = random_poly(f3, 6, rng);
    if (a.degree() < 1 || b.degree() < 1) continue;
    if (gcd(a, b).degree() > 0) continue;
    EXPECT_EQ(multiplicity_profile(a * b), profile_union(multiplicity_profile(a), multiplicity_profile(b)));
    EXPECT_EQ(multiplicity_profile(a), multiplicity_profile(embed(a, f9)));
  }
}
