#include <gtest/gtest.h>

#include <random>

#include "res3/kodaira.hpp"

using namespace res3;

namespace {

Poly P(const Field& f, std::vector<int> c) { return Poly::from_ints(f, c); }

Poly random_poly(const Field& f, int deg, std::mt19937& rng) {
  std::vector<Elem> v;
  for (int i = 0; i <= deg; ++i)
    v.push_back(f.from_index(std::uniform_int_distribution<uint32_t>(0, f.order() - 1)(rng)));
  return Poly(f, v);
}

WeierstrassModel ii9() {
  const Field& f = gf(1);
  return WeierstrassModel(P(f, {0, 0, 1}), -P(f, {0, 1, 1}), P(f, {0, 2, 1}));
}

// y^2 = x^3 + t x^2 + t^2 x + t^3 (t+2).
WeierstrassModel i0s_iv_1() {
  const Field& f = gf(1);
  return WeierstrassModel(P(f, {0, 1}), -P(f, {0, 0, 1}), P(f, {0, 0, 0, 2, 1}));
}

// Random models that are minimal everywhere (skipping ones that are not).
std::vector<WeierstrassModel> random_models(const Field& f, int count, uint32_t seed, bool additive_at_0) {
  std::mt19937 rng(seed);
  std::vector<WeierstrassModel> out;
  while (int(out.size()) < count) {
    Poly b2 = random_poly(f, 2, rng), b4 = random_poly(f, 4, rng), b6 = random_poly(f, 6, rng);
    if (additive_at_0) {
      b2 = b2 - Poly::constant(b2.coeff(0));
      b4 = b4 - Poly::constant(b4.coeff(0));
      b6 = b6 - Poly::constant(b6.coeff(0));
    }
    WeierstrassModel m(b2, b4, b6, false);
    if (discriminant(m).is_zero()) continue;
    try {
      classify_all(m);
    } catch (const NonMinimalError&) {
      continue;
    }
    out.push_back(m);
  }
  return out;
}

std::vector<std::pair<std::string, int>> signature(const Configuration& c) {
  std::vector<std::pair<std::string, int>> s;
  for (const Fibre& f : c.fibres()) s.emplace_back(f.type.symbol(), f.delta);
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

TEST(Kodaira, Notation) {
  Configuration c = parse_configuration("II 5 2 1^2");
  EXPECT_EQ(c.to_string(), "II 5 2 1^2");
  EXPECT_EQ(c.fibres()[0].delta, 3);
  EXPECT_EQ(parse_configuration("I1* 2^2 1").to_string(), "I1* 2^2 1");
  EXPECT_EQ(parse_configuration("1 2 2 I1*").to_string(), "I1* 2^2 1");
  EXPECT_EQ(parse_configuration("III II 4 2").to_string(), "III II 4 2");
  EXPECT_EQ(parse_configuration("1^12").to_string(), "1^12");
  EXPECT_EQ(parse_configuration("I0* IV 1").to_string(), "I0* IV 1");
  EXPECT_THROW(parse_configuration("V 3"), ParseError);
  EXPECT_THROW(parse_configuration(""), ParseError);
  EXPECT_THROW(parse_configuration("3^x"), ParseError);
}

TEST(Kodaira, Invariants) {
  LatticeData i7 = invariants(KodairaType::I(7));
  EXPECT_EQ(i7.r, 6);
  EXPECT_EQ(i7.lattice.to_string(), "A6");
  EXPECT_EQ(i7.d, 7);
  LatticeData e7 = invariants({Kind::kIIIStar, 0});
  EXPECT_EQ(e7.r, 7);
  EXPECT_EQ(e7.lattice.to_string(), "E7");
  EXPECT_EQ(e7.d, 2);
  LatticeData i1 = invariants(KodairaType::I(1));
  EXPECT_EQ(i1.r, 0);
  EXPECT_TRUE(i1.lattice.trivial());
  EXPECT_EQ(invariants({Kind::kII, 0}).d, 0);
  // Lattice discriminants agree with the d column.
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(invariants(KodairaType::Istar(n)).lattice.disc(), 4);
  for (Kind k : {Kind::kIII, Kind::kIV, Kind::kIVStar, Kind::kIIIStar, Kind::kIIStar})
    EXPECT_EQ(invariants({k, 0}).lattice.disc(), invariants({k, 0}).d);
}

TEST(Kodaira, LangCase) {
  EXPECT_EQ(lang_case({Kind::kII, 0}, 6), "1C");
  EXPECT_EQ(lang_case(KodairaType::Istar(0), 6), "4");
  EXPECT_FALSE(lang_case({Kind::kII, 0}, 5).has_value());
  EXPECT_EQ(lang_case({Kind::kIV, 0}, 8), "3C");
  EXPECT_EQ(lang_case_labels().size(), 23u);
}

TEST(Kodaira, TwoModelsFromTheLists) {
  Classification c = classify_all(ii9());
  ASSERT_EQ(c.places.size(), 2u);
  EXPECT_EQ(c.places[0].type.symbol(), "II");
  EXPECT_EQ(c.places[0].inv.delta, 3);
  EXPECT_EQ(c.places[0].inv.lang_case, "1A");
  EXPECT_TRUE(c.places[1].place.infinity);
  EXPECT_EQ(c.places[1].type.symbol(), "I9");
  EXPECT_EQ(c.places[1].inv.lattice.to_string(), "A8");
  EXPECT_EQ(c.places[1].inv.d, 9);
  EXPECT_EQ(c.config.to_string(), "II 9");

  const Field& f = gf(1);
  EXPECT_EQ(discriminant(i0s_iv_1()), P(f, {0, 0, 0, 0, 0, 0, 1, -1}));
  Classification d = classify_all(i0s_iv_1());
  EXPECT_EQ(d.config.to_string(), "I0* IV 1");
  PlaceResult at0 = tate_classify(i0s_iv_1(), {false, P(f, {0, 1})});
  EXPECT_EQ(at0.type.symbol(), "I0*");
  EXPECT_EQ(at0.inv.delta, 6);
  PlaceResult at1 = tate_classify(i0s_iv_1(), {false, P(f, {-1, 1})});
  EXPECT_EQ(at1.type.symbol(), "I1");
  PlaceResult inf = tate_classify(i0s_iv_1(), {true, Poly(f)});
  EXPECT_EQ(inf.type.symbol(), "IV");
  EXPECT_EQ(inf.inv.delta, 5);
  EXPECT_EQ(inf.inv.lang_case, "3A");
  EXPECT_THROW(tate_classify(i0s_iv_1(), {false, P(f, {1, 1})}), ArithmeticError);
}

TEST(Kodaira, DeltaSumsToTwelve) {
  for (int k : {1, 2}) {
    for (bool add : {false, true}) {
      for (const WeierstrassModel& m : random_models(gf(k), 300, 40 + k, add)) {
        Configuration c = classify_all(m).config;
        EXPECT_EQ(c.delta_sum(), 12) << m.to_string();
        EXPECT_TRUE(classify_config(m) == c);
      }
    }
  }
}

TEST(Kodaira, MultiplicativeCriterion) {
  for (const WeierstrassModel& m : random_models(gf(1), 300, 9, false)) {
    Poly d = discriminant(m);
    for (const auto& [g, e] : factor(d).factors) {
      if (g.degree() != 1) continue;
      Elem p = -g.coeff(0);
      PlaceResult r = tate_classify(m, {false, g});
      if (!m.b2().eval(p).is_zero()) {
        EXPECT_EQ(r.type, KodairaType::I(e));
      } else {
        EXPECT_TRUE(r.type.additive());
      }
    }
  }
}

TEST(Kodaira, AdditiveTypesHaveTableRows) {
  // Every additive fibre found has delta >= 3 and a Lang case, and I_n* has
  // delta = n + 6.
  for (int k : {1, 2}) {
    for (const WeierstrassModel& m : random_models(gf(k), 400, 70 + k, true)) {
      for (const PlaceResult& r : classify_all(m).places) {
        if (!r.type.additive()) continue;
        EXPECT_GE(r.inv.delta, 3);
        EXPECT_TRUE(r.inv.lang_case.has_value()) << r.type.symbol() << " " << r.inv.delta;
        if (r.type.kind == Kind::kInStar) EXPECT_EQ(r.inv.delta, r.type.n + 6);
      }
    }
  }
}

TEST(Kodaira, InvariantUnderMoebiusAndRescale) {
  const Field& f = gf(2);
  std::mt19937 rng(3);
  for (const WeierstrassModel& m : random_models(f, 200, 12, true)) {
    auto sig = signature(classify_all(m).config);
    Elem u = f.from_index(1 + rng() % 8);
    EXPECT_EQ(signature(classify_all(rescale(m, u)).config), sig);
    Elem a, b, c, d;
    do {
      a = f.from_index(rng() % 9);
      b = f.from_index(rng() % 9);
      c = f.from_index(rng() % 9);
      d = f.from_index(rng() % 9);
    } while ((a * d - b * c).is_zero());
    EXPECT_EQ(signature(classify_all(moebius_transform(m, a, b, c, d)).config), sig);
    EXPECT_EQ(signature(classify_all(flip_to_infinity(m)).config), sig);
  }
}

TEST(Kodaira, PlaceOfDegreeTwoMatchesBaseChange) {
  const Field& f3 = gf(1);
  const Field& f9 = gf(2);
  int checked = 0;
  for (const WeierstrassModel& m : random_models(f3, 3000, 5, false)) {
    for (const auto& [g, e] : factor(discriminant(m)).factors) {
      if (g.degree() != 2) continue;
      PlaceResult r = tate_classify(m, {false, g});
      WeierstrassModel me = embed(m, f9);
      for (const Elem& root : roots(embed(g, f9))) {
        PlaceResult s = tate_classify(me, {false, Poly::linear(root)});
        EXPECT_EQ(r.type, s.type);
        EXPECT_EQ(r.inv.delta, s.inv.delta);
      }
      ++checked;
    }
  }
  EXPECT_GT(checked, 0);
  // Additive degree-two places: b2, b4, b6 all divisible by t^2+1.
  std::mt19937 rng(8);
  Poly g = P(f3, {1, 0, 1});
  int additive = 0;
  for (int n = 0; n < 3000 && additive < 20; ++n) {
    Poly b4 = g * random_poly(f3, 2, rng);
    Poly b6 = g * random_poly(f3, 4, rng);
    WeierstrassModel m(g.scale(f3.from_int(1 + n % 2)), b4, b6, false);
    if (discriminant(m).is_zero()) continue;
    PlaceResult r;
    try {
      r = tate_classify(m, {false, g});
    } catch (const NonMinimalError&) {
      continue;
    }
    ++additive;
    EXPECT_TRUE(r.type.additive());
    WeierstrassModel me = embed(m, f9);
    for (const Elem& root : roots(embed(g, f9))) {
      PlaceResult s = tate_classify(me, {false, Poly::linear(root)});
      EXPECT_EQ(r.type, s.type);
    }
  }
  EXPECT_GT(additive, 0);
}

TEST(Kodaira, NonMinimalIsAnError) {
  const Field& f = gf(1);
  // b2 = t^2, b4 = t^4, b6 = t^6: everything divisible by the weights.
  WeierstrassModel m(P(f, {0, 0, 1}), P(f, {0, 0, 0, 0, 1}), P(f, {0, 0, 0, 0, 0, 0, 1}));
  EXPECT_THROW(tate_at_zero(m, discriminant(m).ord0()), NonMinimalError);
}
