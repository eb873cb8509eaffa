#include "res3/surface.hpp"

#include <sstream>

namespace res3 {

WeierstrassModel::WeierstrassModel(Poly b2, Poly b4, Poly b6, bool check)
    : b2_(std::move(b2)), b4_(std::move(b4)), b6_(std::move(b6)) {
  if (b2_.field_ptr() != b4_.field_ptr() || b2_.field_ptr() != b6_.field_ptr() || !b2_.field_ptr())
    throw ArithmeticError("model coefficients over different fields");
  if (b2_.degree() > 2 || b4_.degree() > 4 || b6_.degree() > 6)
    throw ArithmeticError("model violates deg b_i <= i");
  if (check && discriminant(b2_, b4_, b6_).is_zero())
    throw ArithmeticError("discriminant vanishes identically");
}

const Poly& WeierstrassModel::b(int i) const {
  switch (i) {
    case 2: return b2_;
    case 4: return b4_;
    case 6: return b6_;
    default: throw ArithmeticError("no coefficient b" + std::to_string(i));
  }
}

std::string WeierstrassModel::to_string() const {
  std::ostringstream os;
  os << "field=" << field().spec() << "\n";
  os << "b2=" << b2_.to_string() << "\n";
  os << "b4=" << b4_.to_string() << "\n";
  os << "b6=" << b6_.to_string() << "\n";
  return os.str();
}

Poly discriminant(const Poly& b2, const Poly& b4, const Poly& b6) {
  return -(b2 * b2 * (b2 * b6 - b4 * b4)) + b4 * b4 * b4;
}

Poly discriminant(const WeierstrassModel& m) { return discriminant(m.b2(), m.b4(), m.b6()); }

Poly discriminant_oracle(const WeierstrassModel& m) {
  const Field& F = m.field();
  auto k = [&](int v) { return Poly::constant(F.from_int(v)); };
  Poly a1(F), a3(F);
  Poly a2 = m.b2();
  Poly a4 = -m.b4();
  Poly a6 = m.b6();
  Poly B2 = a1 * a1 + k(4) * a2;
  Poly B4 = k(2) * a4 + a1 * a3;
  Poly B6 = a3 * a3 + k(4) * a6;
  Poly B8 = a1 * a1 * a6 + k(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  return -(B2 * B2 * B8) - k(8) * B4 * B4 * B4 - k(27) * B6 * B6 + k(9) * B2 * B4 * B6;
}

namespace {

// (ct+d)^w f((at+b)/(ct+d)) for deg f <= w.
Poly homogenized_pullback(const Poly& f, int w, const Poly& num, const Poly& den) {
  const Field& F = num.field();
  Poly acc(F);
  for (int j = 0; j <= f.degree(); ++j) {
    if (f.coeff(j).is_zero()) continue;
    acc += (num.pow(j) * den.pow(w - j)).scale(f.coeff(j));
  }
  return acc;
}

}  // namespace

WeierstrassModel moebius_transform(const WeierstrassModel& m, const Elem& a, const Elem& b, const Elem& c,
                                   const Elem& d) {
  if ((a * d - b * c).is_zero()) throw ArithmeticError("singular Moebius transformation");
  const Field& F = m.field();
  Poly num(F, {b, a});
  Poly den(F, {d, c});
  return WeierstrassModel(homogenized_pullback(m.b2(), 2, num, den), homogenized_pullback(m.b4(), 4, num, den),
                          homogenized_pullback(m.b6(), 6, num, den));
}

WeierstrassModel rescale(const WeierstrassModel& m, const Elem& u) {
  if (u.is_zero()) throw ArithmeticError("rescale by zero");
  Elem u2 = u * u;
  return WeierstrassModel(m.b2().scale(u2), m.b4().scale(u2 * u2), m.b6().scale(u2 * u2 * u2));
}

WeierstrassModel flip_to_infinity(const WeierstrassModel& m) {
  return WeierstrassModel(m.b2().reverse(2), m.b4().reverse(4), m.b6().reverse(6));
}

WeierstrassModel translate(const WeierstrassModel& m, const Elem& a) {
  const Field& F = m.field();
  Poly s(F, {a, F.one()});
  return WeierstrassModel(m.b2().compose(s), m.b4().compose(s), m.b6().compose(s), false);
}

WeierstrassModel embed(const WeierstrassModel& m, const Field& target) {
  return WeierstrassModel(embed(m.b2(), target), embed(m.b4(), target), embed(m.b6(), target), false);
}

// ---- normal forms ----

std::optional<StarForm> recognize_star_form(const Poly& delta, const StarOptions& opt) {
  if (delta.degree() != 12) return std::nullopt;
  Elem unit = delta.lead();
  Poly d = delta.monic();
  if (!d.coeff(11).is_zero()) return std::nullopt;
  if (!opt.allow_linear_term && !d.coeff(1).is_zero()) return std::nullopt;
  StarForm f;
  f.unit = unit;
  f.l = d.coeff(10);
  f.linear = d.coeff(1);
  if (opt.convention == StarConvention::kProof) {
    f.m = d.coeff(2);
    f.n = d.coeff(0);
  } else {
    f.n = d.coeff(2);
    f.m = d.coeff(0);
  }
  std::vector<Elem> p6;
  for (int i = 3; i <= 9; ++i) p6.push_back(d.coeff(i));
  f.P6 = Poly(d.field(), p6);
  Elem lhs = f.m * f.m * f.m;
  Elem rhs = f.n * f.n * f.l * f.l * f.l;
  if (lhs != rhs || lhs.is_zero()) return std::nullopt;
  return f;
}

Poly star_delta(const StarForm& f, StarConvention conv) {
  const Field& F = f.l.field();
  Poly d = Poly::monomial(F.one(), 12) + Poly::monomial(f.l, 10) + f.P6.shift(3);
  if (!f.linear.is_zero()) d += Poly::monomial(f.linear, 1);
  if (conv == StarConvention::kProof)
    d += Poly::monomial(f.m, 2) + Poly::constant(f.n);
  else
    d += Poly::monomial(f.n, 2) + Poly::constant(f.m);
  return d;
}

std::optional<DoubleRootForm> recognize_doubleroot_form(const Poly& delta) {
  if (delta.degree() != 12) return std::nullopt;
  Elem unit = delta.lead();
  Poly d = delta.monic();
  if (!d.coeff(11).is_zero() || !d.coeff(10).is_zero()) return std::nullopt;
  DoubleRootForm f;
  f.unit = unit;
  f.l = d.coeff(9);
  f.m = d.coeff(8);
  f.n = -d.coeff(7);
  std::vector<Elem> p6;
  for (int i = 0; i <= 6; ++i) p6.push_back(d.coeff(i));
  f.P6 = Poly(d.field(), p6);
  Elem lhs = f.n * f.n * f.n;
  Elem rhs = f.l * f.m * f.m * f.m;
  if (lhs != rhs || lhs.is_zero()) return std::nullopt;
  return f;
}

Poly doubleroot_delta(const DoubleRootForm& f) {
  const Field& F = f.l.field();
  return Poly::monomial(F.one(), 12) + Poly::monomial(f.l, 9) + Poly::monomial(f.m, 8) - Poly::monomial(f.n, 7) +
         f.P6;
}

std::string to_string(AdditiveDelta a) {
  switch (a) {
    case AdditiveDelta::kDistinctRoots: return "DistinctRoots";
    case AdditiveDelta::kDoubleRoot: return "DoubleRoot";
    case AdditiveDelta::kB2Zero: return "B2Zero";
    case AdditiveDelta::kNotAdditiveNormal: return "NotAdditiveNormal";
  }
  return "?";
}

AdditiveDeltaInfo recognize_additive_delta(const WeierstrassModel& m) {
  const Field& F = m.field();
  auto div_t = [](const Poly& p) { return p.is_zero() || p.ord0() >= 1; };
  if (!div_t(m.b2()) || !div_t(m.b4()) || !div_t(m.b6()))
    throw ArithmeticError("model is not in additive shape at t = 0");
  if (m.b2().is_zero()) {
    Poly d = discriminant(m);
    bool ok = d == m.b4() * m.b4() * m.b4();
    return {ok ? AdditiveDelta::kB2Zero : AdditiveDelta::kNotAdditiveNormal, m};
  }
  if (m.b2().ord0() >= 2) {
    Poly d = discriminant(m);
    bool ok = d.coeff(4).is_zero() && d.coeff(5).is_zero();
    return {ok ? AdditiveDelta::kDoubleRoot : AdditiveDelta::kNotAdditiveNormal, m};
  }
  WeierstrassModel n = m;
  if (m.b2().degree() == 2) {
    // Send the second root r of b2 to infinity: t <- r t / (t + 1).
    Elem r = -m.b2().coeff(1) / m.b2().coeff(2);
    n = moebius_transform(m, r, F.zero(), F.one(), F.one());
  }
  Poly d = discriminant(n);
  bool ok = d.coeff(11).is_zero();
  return {ok ? AdditiveDelta::kDistinctRoots : AdditiveDelta::kNotAdditiveNormal, n};
}

}  // namespace res3
