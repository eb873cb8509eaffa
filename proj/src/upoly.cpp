#include "res3/upoly.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace res3 {

namespace {

void check_same(const Poly& a, const Poly& b) {
  if (a.field_ptr() != b.field_ptr() || !a.field_ptr())
    throw ArithmeticError("polynomial arithmetic over different fields");
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    uint32_t x = a.coeff(i).index(), y = b.coeff(i).index();
    if (x != y) return x < y;
  }
  return false;
}

}  // namespace

Poly::Poly(const Field& f, std::vector<Elem> coeffs) : f_(&f), c_(std::move(coeffs)) {
  for (const Elem& e : c_)
    if (e.field_ptr() != f_) throw ArithmeticError("coefficient from a different field");
  normalize();
}

void Poly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const Elem& c) { return Poly(c.field(), {c}); }

Poly Poly::monomial(const Elem& c, int deg) {
  const Field& f = c.field();
  std::vector<Elem> v(size_t(deg) + 1, f.zero());
  v[size_t(deg)] = c;
  return Poly(f, std::move(v));
}

Poly Poly::t(const Field& f) { return monomial(f.one(), 1); }

Poly Poly::linear(const Elem& root) {
  const Field& f = root.field();
  return Poly(f, {-root, f.one()});
}

Poly Poly::from_ints(const Field& f, const std::vector<int>& coeffs) {
  std::vector<Elem> v;
  for (int c : coeffs) v.push_back(f.from_int(c));
  return Poly(f, std::move(v));
}

const Field& Poly::field() const {
  if (!f_) throw ArithmeticError("polynomial has no field");
  return *f_;
}

Elem Poly::coeff(int i) const {
  if (i < 0 || i >= int(c_.size())) return field().zero();
  return c_[size_t(i)];
}

Elem Poly::lead() const { return c_.empty() ? field().zero() : c_.back(); }

int Poly::ord0() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return int(i);
  return -1;
}

void Poly::set_coeff(int i, const Elem& v) {
  if (v.field_ptr() != f_) throw ArithmeticError("coefficient from a different field");
  if (i >= int(c_.size())) c_.resize(size_t(i) + 1, field().zero());
  c_[size_t(i)] = v;
  normalize();
}

Poly Poly::operator+(const Poly& o) const {
  check_same(*this, o);
  std::vector<Elem> r(std::max(c_.size(), o.c_.size()), f_->zero());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return Poly(*f_, std::move(r));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (Elem& e : r.c_) e = -e;
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  check_same(*this, o);
  if (c_.empty() || o.c_.empty()) return Poly(*f_);
  std::vector<Elem> r(c_.size() + o.c_.size() - 1, f_->zero());
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return Poly(*f_, std::move(r));
}

Poly Poly::operator/(const Poly& o) const { return divmod(*this, o).first; }
Poly Poly::operator%(const Poly& o) const { return divmod(*this, o).second; }

Poly Poly::scale(const Elem& c) const {
  std::vector<Elem> r = c_;
  for (Elem& e : r) e *= c;
  return Poly(field(), std::move(r));
}

Poly Poly::pow(int e) const {
  Poly r = Poly::constant(field().one());
  Poly b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  return scale(lead().inv());
}

Elem Poly::eval(const Elem& x) const {
  Elem acc = field().zero();
  for (int i = degree(); i >= 0; --i) acc = acc * x + c_[size_t(i)];
  return acc;
}

Poly Poly::compose(const Poly& g) const {
  Poly acc(field());
  for (int i = degree(); i >= 0; --i) acc = acc * g + Poly::constant(c_[size_t(i)]);
  return acc;
}

Poly Poly::reverse(int n) const {
  if (degree() > n) throw ArithmeticError("reverse: degree exceeds bound");
  std::vector<Elem> r(size_t(n) + 1, field().zero());
  for (int i = 0; i <= degree(); ++i) r[size_t(n - i)] = c_[size_t(i)];
  return Poly(field(), std::move(r));
}

Poly Poly::shift(int n) const {
  if (c_.empty()) return *this;
  if (n >= 0) {
    std::vector<Elem> r(size_t(n), field().zero());
    r.insert(r.end(), c_.begin(), c_.end());
    return Poly(field(), std::move(r));
  }
  if (ord0() < -n) throw ArithmeticError("shift: inexact division by t");
  return Poly(field(), std::vector<Elem>(c_.begin() + (-n), c_.end()));
}

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < c_.size(); ++i) os << (i ? ";" : "") << c_[i].to_string();
  return os.str();
}

std::string Poly::pretty() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Elem& c = c_[size_t(i)];
    if (c.is_zero()) continue;
    std::string cs = c.pretty();
    bool compound = cs.find_first_of("+ix") != std::string::npos;
    std::string term;
    if (i == 0) {
      term = compound ? "(" + cs + ")" : cs;
    } else {
      if (!c.is_one()) term = compound ? "(" + cs + ")" : cs;
      term += "t";
      if (i > 1) term += "^" + std::to_string(i);
    }
    if (!out.empty()) out += "+";
    out += term;
  }
  return out;
}

Poly parse_poly(const Field& f, const std::string& s) {
  std::string trimmed;
  for (char ch : s)
    if (!isspace(static_cast<unsigned char>(ch))) trimmed += ch;
  if (trimmed.empty()) throw ParseError("empty polynomial");
  if (trimmed == "0") return Poly(f);
  std::vector<Elem> v;
  std::stringstream ss(trimmed);
  std::string tok;
  while (std::getline(ss, tok, ';')) v.push_back(parse_elem(f, tok));
  if (!trimmed.empty() && trimmed.back() == ';') throw ParseError("trailing ';' in polynomial");
  return Poly(f, std::move(v));
}

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g) {
  check_same(f, g);
  if (g.is_zero()) throw ArithmeticError("division by the zero polynomial");
  const Field& F = f.field();
  int dg = g.degree();
  if (f.degree() < dg) return {Poly(F), f};
  std::vector<Elem> r = f.coeffs();
  std::vector<Elem> q(size_t(f.degree() - dg) + 1, F.zero());
  Elem inv = g.lead().inv();
  const std::vector<Elem>& gc = g.coeffs();
  for (int i = f.degree(); i >= dg; --i) {
    Elem c = r[size_t(i)] * inv;
    if (c.is_zero()) continue;
    q[size_t(i - dg)] = c;
    for (int j = 0; j <= dg; ++j) r[size_t(i - dg + j)] -= c * gc[size_t(j)];
  }
  r.resize(size_t(dg));
  return {Poly(F, std::move(q)), Poly(F, std::move(r))};
}

Poly derivative(const Poly& f) {
  const Field& F = f.field();
  std::vector<Elem> r;
  for (int i = 1; i <= f.degree(); ++i) r.push_back(f.coeff(i) * F.from_int(i));
  return Poly(F, std::move(r));
}

Poly gcd(const Poly& a0, const Poly& b0) {
  check_same(a0, b0);
  Poly a = a0, b = b0;
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly powmod(const Poly& base, uint64_t e, const Poly& m) {
  const Field& F = m.field();
  if (m.degree() < 1) return Poly(F);
  Poly r = Poly::constant(F.one()) % m;
  Poly b = base % m;
  while (e > 0) {
    if (e & 1) r = (r * b) % m;
    e >>= 1;
    if (e) b = (b * b) % m;
  }
  return r;
}

Poly embed(const Poly& f, const Field& target) {
  std::vector<Elem> v;
  for (const Elem& e : f.coeffs()) v.push_back(embed(e, target));
  return Poly(target, std::move(v));
}

// ---- squarefree decomposition ----

namespace {

// g(t^3) -> h(t) with h^3 = g(t^3).
Poly cube_root_poly(const Poly& g) {
  const Field& F = g.field();
  std::vector<Elem> r;
  for (int i = 0; i <= g.degree(); i += 3) r.push_back(cube_root(g.coeff(i)));
  for (int i = 0; i <= g.degree(); ++i)
    if (i % 3 != 0 && !g.coeff(i).is_zero()) throw ArithmeticError("polynomial is not a cube");
  return Poly(F, std::move(r));
}

void sfd_rec(const Poly& f, int mult, std::map<int, Poly>& out) {
  if (f.degree() < 1) return;
  Poly c = gcd(f, derivative(f));
  Poly w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly z = w / y;
    if (z.degree() > 0) {
      auto it = out.find(i * mult);
      if (it == out.end())
        out.emplace(i * mult, z.monic());
      else
        it->second = (it->second * z).monic();
    }
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree() > 0) sfd_rec(cube_root_poly(c.monic()), mult * 3, out);
}

}  // namespace

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f) {
  if (f.is_zero()) throw ArithmeticError("squarefree decomposition of zero");
  std::map<int, Poly> parts;
  sfd_rec(f.monic(), 1, parts);
  std::vector<std::pair<Poly, int>> out;
  for (auto& [m, g] : parts) out.emplace_back(g, m);
  return out;
}

// ---- factorization ----

namespace {

Elem random_elem(const Field& F, std::mt19937_64& rng) {
  std::uniform_int_distribution<uint32_t> d(0, F.order() - 1);
  return F.from_index(d(rng));
}

Poly random_poly(const Field& F, int deg_below, std::mt19937_64& rng) {
  std::vector<Elem> v;
  for (int i = 0; i < deg_below; ++i) v.push_back(random_elem(F, rng));
  return Poly(F, std::move(v));
}

// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<std::pair<Poly, int>> ddf(Poly f) {
  const Field& F = f.field();
  const uint64_t q = F.order();
  std::vector<std::pair<Poly, int>> out;
  Poly x = Poly::t(F);
  Poly h = x % f;
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    h = powmod(h, q, f);
    Poly g = gcd(h - x, f);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f.monic(), f.degree());
  return out;
}

// Equal-degree splitting (Cantor-Zassenhaus, odd characteristic).
void edf(const Poly& g, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (g.degree() == d) {
    out.push_back(g.monic());
    return;
  }
  const Field& F = g.field();
  const uint64_t q = F.order();
  Poly one = Poly::constant(F.one());
  for (;;) {
    Poly a = random_poly(F, g.degree(), rng);
    if (a.degree() < 1) continue;
    // a^((q^d-1)/2) = (prod_j a^(q^j))^((q-1)/2)
    Poly norm = a % g;
    Poly fr = norm;
    for (int j = 1; j < d; ++j) {
      fr = powmod(fr, q, g);
      norm = (norm * fr) % g;
    }
    Poly b = powmod(norm, (q - 1) / 2, g);
    Poly h = gcd(b - one, g);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      edf(h, d, rng, out);
      edf(g / h, d, rng, out);
      return;
    }
  }
}

}  // namespace

Poly Factorization::expand() const {
  Poly r = Poly::constant(unit);
  for (const auto& [p, e] : factors) r = r * p.pow(e);
  return r;
}

Factorization factor(const Poly& f, uint64_t seed) {
  if (f.is_zero()) throw ArithmeticError("factorization of zero");
  std::mt19937_64 rng(seed);
  Factorization out;
  out.unit = f.lead();
  for (const auto& [g, m] : squarefree_decomposition(f)) {
    for (const auto& [h, d] : ddf(g)) {
      std::vector<Poly> irr;
      edf(h, d, rng, irr);
      for (Poly& p : irr) out.factors.emplace_back(std::move(p), m);
    }
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return poly_less(a.first, b.first);
    return a.second < b.second;
  });
  return out;
}

std::vector<Elem> roots(const Poly& f, uint64_t seed) {
  if (f.is_zero()) throw ArithmeticError("roots of the zero polynomial");
  const Field& F = f.field();
  std::vector<Elem> out;
  if (f.degree() < 1) return out;
  Poly x = Poly::t(F);
  Poly m = f.monic();
  Poly g = gcd(powmod(x, F.order(), m) - x, m);
  if (g.degree() < 1) return out;
  std::mt19937_64 rng(seed);
  std::vector<Poly> lin;
  edf(g, 1, rng, lin);
  for (const Poly& p : lin) out.push_back(-p.coeff(0));
  std::sort(out.begin(), out.end(), [](const Elem& a, const Elem& b) { return a.index() < b.index(); });
  return out;
}

MultiplicityProfile multiplicity_profile(const Poly& f) {
  MultiplicityProfile p;
  for (const auto& [g, m] : squarefree_decomposition(f)) p[m] += g.degree();
  return p;
}

MultiplicityProfile multiplicity_profile_by_factoring(const Poly& f, uint64_t seed) {
  MultiplicityProfile p;
  for (const auto& [g, m] : factor(f, seed).factors) p[m] += g.degree();
  return p;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.pretty(); }
std::ostream& operator<<(std::ostream& os, const Elem& e) { return os << e.pretty(); }

MultiplicityProfile profile_union(const MultiplicityProfile& a, const MultiplicityProfile& b) {
  MultiplicityProfile r = a;
  for (const auto& [m, c] : b) r[m] += c;
  return r;
}

}  // namespace res3
