#include "res3/kodaira.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace res3 {

// ---- symbols ----

std::string KodairaType::symbol() const {
  switch (kind) {
    case Kind::kIn: return "I" + std::to_string(n);
    case Kind::kII: return "II";
    case Kind::kIII: return "III";
    case Kind::kIV: return "IV";
    case Kind::kInStar: return "I" + std::to_string(n) + "*";
    case Kind::kIVStar: return "IV*";
    case Kind::kIIIStar: return "III*";
    case Kind::kIIStar: return "II*";
  }
  return "?";
}

std::string KodairaType::token() const { return kind == Kind::kIn ? std::to_string(n) : symbol(); }

KodairaType parse_kodaira(const std::string& s_in) {
  std::string s;
  for (char c : s_in)
    if (c != '_' && c != '{' && c != '}' && c != '^' && !isspace(static_cast<unsigned char>(c))) s += c;
  static const std::map<std::string, KodairaType> fixed = {
      {"II", {Kind::kII, 0}},         {"III", {Kind::kIII, 0}},       {"IV", {Kind::kIV, 0}},
      {"IV*", {Kind::kIVStar, 0}},    {"III*", {Kind::kIIIStar, 0}},  {"II*", {Kind::kIIStar, 0}},
  };
  auto it = fixed.find(s);
  if (it != fixed.end()) return it->second;
  auto all_digits = [](const std::string& x) {
    return !x.empty() && std::all_of(x.begin(), x.end(), [](char c) { return isdigit(static_cast<unsigned char>(c)); });
  };
  if (all_digits(s)) return KodairaType::I(std::stoi(s));
  if (s.size() >= 2 && s[0] == 'I') {
    bool star = s.back() == '*';
    std::string num = s.substr(1, s.size() - 1 - (star ? 1 : 0));
    if (all_digits(num)) return star ? KodairaType::Istar(std::stoi(num)) : KodairaType::I(std::stoi(num));
  }
  throw ParseError("unknown Kodaira symbol '" + s_in + "'");
}

LatticeData invariants(const KodairaType& t) {
  switch (t.kind) {
    case Kind::kIn:
      if (t.n <= 1) return {0, ADELattice(), t.n == 0 ? 1 : 1};
      return {t.n - 1, ADELattice::A(t.n - 1), t.n};
    case Kind::kII: return {0, ADELattice(), 0};
    case Kind::kIII: return {1, ADELattice::A(1), 2};
    case Kind::kIV: return {2, ADELattice::A(2), 3};
    case Kind::kInStar: return {4 + t.n, ADELattice::D(4 + t.n), 4};
    case Kind::kIVStar: return {6, ADELattice::E(6), 3};
    case Kind::kIIIStar: return {7, ADELattice::E(7), 2};
    case Kind::kIIStar: return {8, ADELattice::E(8), 1};
  }
  return {0, ADELattice(), 1};
}

namespace {

struct LangRow {
  const char* label;
  KodairaType type;
  int delta;
};

const std::vector<LangRow>& lang_rows() {
  static const std::vector<LangRow> rows = {
      {"1A", {Kind::kII, 0}, 3},      {"1B", {Kind::kII, 0}, 4},      {"1C", {Kind::kII, 0}, 6},
      {"1D", {Kind::kII, 0}, 7},      {"1E", {Kind::kII, 0}, 9},      {"1F", {Kind::kII, 0}, 12},
      {"2", {Kind::kIII, 0}, 3},      {"3A", {Kind::kIV, 0}, 5},      {"3B", {Kind::kIV, 0}, 6},
      {"3C", {Kind::kIV, 0}, 8},      {"3D", {Kind::kIV, 0}, 9},      {"3E", {Kind::kIV, 0}, 12},
      {"4", {Kind::kInStar, 0}, 6},   {"5A", {Kind::kInStar, 1}, 7},  {"5B", {Kind::kInStar, 2}, 8},
      {"5C", {Kind::kInStar, 3}, 9},  {"5D", {Kind::kInStar, 4}, 10}, {"6A", {Kind::kIVStar, 0}, 9},
      {"6B", {Kind::kIVStar, 0}, 10}, {"6C", {Kind::kIVStar, 0}, 12}, {"7", {Kind::kIIIStar, 0}, 9},
      {"8A", {Kind::kIIStar, 0}, 11}, {"8B", {Kind::kIIStar, 0}, 12},
  };
  return rows;
}

}  // namespace

std::optional<std::string> lang_case(const KodairaType& t, int delta) {
  for (const LangRow& r : lang_rows())
    if (r.type == t && r.delta == delta) return std::string(r.label);
  return std::nullopt;
}

std::optional<std::pair<KodairaType, int>> lang_case_type(const std::string& label) {
  for (const LangRow& r : lang_rows())
    if (label == r.label) return std::make_pair(r.type, r.delta);
  return std::nullopt;
}

const std::vector<std::string>& lang_case_labels() {
  static const std::vector<std::string> labels = [] {
    std::vector<std::string> v;
    for (const LangRow& r : lang_rows()) v.push_back(r.label);
    return v;
  }();
  return labels;
}

FibreInvariants fibre_invariants(const KodairaType& t, int delta) {
  LatticeData ld = invariants(t);
  FibreInvariants inv;
  inv.delta = delta;
  inv.r = ld.r;
  inv.lattice = ld.lattice;
  inv.d = ld.d;
  if (t.additive()) inv.lang_case = lang_case(t, delta);
  return inv;
}

// ---- configurations ----

Configuration::Configuration(std::vector<Fibre> fibres) : fibres_(std::move(fibres)) {
  fibres_.erase(std::remove_if(fibres_.begin(), fibres_.end(), [](const Fibre& f) { return f.type.smooth(); }),
                fibres_.end());
  std::sort(fibres_.begin(), fibres_.end(), [](const Fibre& a, const Fibre& b) {
    if (a.type.additive() != b.type.additive()) return a.type.additive();
    if (a.type.additive()) {
      int ra = invariants(a.type).r, rb = invariants(b.type).r;
      if (ra != rb) return ra > rb;
      if (a.type.kind != b.type.kind) return int(a.type.kind) > int(b.type.kind);
      return a.delta > b.delta;
    }
    return a.type.n > b.type.n;
  });
}

int Configuration::delta_sum() const {
  int s = 0;
  for (const Fibre& f : fibres_) s += f.delta < 0 ? 0 : f.delta;
  return s;
}

int Configuration::additive_count() const {
  return int(std::count_if(fibres_.begin(), fibres_.end(), [](const Fibre& f) { return f.type.additive(); }));
}

int Configuration::multiplicative_count() const { return int(fibres_.size()) - additive_count(); }

std::vector<int> Configuration::partition() const {
  std::vector<int> p;
  for (const Fibre& f : fibres_)
    if (!f.type.additive()) p.push_back(f.type.n);
  return p;
}

ADELattice Configuration::lattice() const {
  ADELattice l;
  for (const Fibre& f : fibres_) l = l + invariants(f.type).lattice;
  return l;
}

int Configuration::rank() const {
  int r = 0;
  for (const Fibre& f : fibres_) r += invariants(f.type).r;
  return r;
}

long long Configuration::disc_product() const {
  long long d = 1;
  for (const Fibre& f : fibres_) d *= invariants(f.type).d;
  return d;
}

std::string Configuration::to_string() const {
  std::string out;
  auto add = [&](const std::string& s) {
    if (!out.empty()) out += " ";
    out += s;
  };
  for (size_t i = 0; i < fibres_.size();) {
    const Fibre& f = fibres_[i];
    if (f.type.additive()) {
      add(f.type.token());
      ++i;
      continue;
    }
    size_t j = i;
    while (j < fibres_.size() && fibres_[j].type == f.type) ++j;
    std::string tok = f.type.token();
    if (j - i > 1) tok += "^" + std::to_string(j - i);
    add(tok);
    i = j;
  }
  return out;
}

bool Configuration::matches(const Configuration& o) const {
  if (fibres_.size() != o.fibres_.size()) return false;
  // Compare as multisets of types; then deltas for additive fibres where known.
  std::vector<Fibre> a = fibres_, b = o.fibres_;
  std::vector<bool> used(b.size(), false);
  for (const Fibre& f : a) {
    bool found = false;
    for (size_t j = 0; j < b.size() && !found; ++j) {
      if (used[j] || b[j].type != f.type) continue;
      if (f.delta >= 0 && b[j].delta >= 0 && f.delta != b[j].delta) continue;
      used[j] = true;
      found = true;
    }
    if (!found) return false;
  }
  return true;
}

Configuration parse_configuration(const std::string& s) {
  std::istringstream is(s);
  std::string tok;
  std::vector<Fibre> fibres;
  while (is >> tok) {
    std::string base = tok;
    int rep = 1;
    size_t caret = tok.find('^');
    if (caret != std::string::npos) {
      base = tok.substr(0, caret);
      std::string r = tok.substr(caret + 1);
      if (r.size() >= 2 && r.front() == '{' && r.back() == '}') r = r.substr(1, r.size() - 2);
      if (r.empty() || !std::all_of(r.begin(), r.end(), ::isdigit))
        throw ParseError("bad repetition in '" + tok + "'");
      rep = std::stoi(r);
      if (rep < 1) throw ParseError("bad repetition in '" + tok + "'");
    }
    KodairaType t = parse_kodaira(base);
    if (t.smooth()) throw ParseError("I0 is not a singular fibre");
    for (int i = 0; i < rep; ++i) fibres.push_back({t, t.additive() ? -1 : t.n});
  }
  if (fibres.empty()) throw ParseError("empty configuration");
  int add = 0, msum = 0;
  for (const Fibre& f : fibres) {
    if (f.type.additive())
      ++add;
    else
      msum += f.delta;
  }
  if (add == 1)
    for (Fibre& f : fibres)
      if (f.type.additive()) f.delta = 12 - msum;
  return Configuration(std::move(fibres));
}

// ---- Tate's algorithm ----

namespace {

constexpr int kInf = 1 << 20;

int v(const Poly& p) { return p.is_zero() ? kInf : p.ord0(); }

struct Local {
  Poly a2, a4, a6;
  // x <- x + r.
  void shift_x(const Poly& r) {
    Poly two = Poly::constant(r.field().from_int(2));
    Poly a4n = a4 + two * r * a2;
    Poly a6n = a6 + r * a4 + r * r * a2 + r * r * r;
    a4 = std::move(a4n);
    a6 = std::move(a6n);
  }
  Elem c(const Poly& p, int j) const { return p.coeff(j); }
};

}  // namespace

KodairaType tate_at_zero(const WeierstrassModel& m, int delta) {
  if (delta == 0) return KodairaType::I(0);
  const Field& F = m.field();
  Local L{m.b2(), -m.b4(), m.b6()};
  if (!L.a2.coeff(0).is_zero()) return KodairaType::I(delta);
  if (!L.a4.coeff(0).is_zero()) throw ArithmeticError("Tate: place does not divide the discriminant");
  // Move the singular point of the reduction to x = 0.
  Elem x0 = cube_root(-L.a6.coeff(0));
  if (!x0.is_zero()) L.shift_x(Poly::constant(x0));
  if (v(L.a6) < 2) return {Kind::kII, 0};
  Poly b8 = L.a2 * L.a6 - L.a4 * L.a4;
  if (v(b8) < 3) return {Kind::kIII, 0};
  if (v(L.a6) < 3) return {Kind::kIV, 0};
  if (v(L.a2) < 1 || v(L.a4) < 2 || v(L.a6) < 3) throw ArithmeticError("Tate: unexpected valuations");
  Poly t = Poly::t(F);
  Elem a21 = L.a2.coeff(1), a42 = L.a4.coeff(2), a63 = L.a6.coeff(3);
  Poly P(F, {a63, a42, a21, F.one()});
  MultiplicityProfile prof = multiplicity_profile(P);
  if (prof.count(1) && prof.at(1) == 3) return KodairaType::Istar(0);
  if (prof.count(2)) {
    // Double root rho = a42 / a21 (-1/2 = 1 in characteristic 3).
    Elem rho = a42 / a21;
    L.shift_x(t.scale(rho));
    Elem A = L.a2.coeff(1);
    for (int n = 1; n <= delta; ++n) {
      if (n % 2 == 1) {
        int j = (n + 1) / 2;
        if (!L.a6.coeff(2 * j + 2).is_zero()) return KodairaType::Istar(n);
      } else {
        int j = n / 2;
        Elem B = L.a4.coeff(j + 2), C = L.a6.coeff(2 * j + 3);
        if (!(B * B - A * C).is_zero()) return KodairaType::Istar(n);
        L.shift_x(Poly::monomial(B / A, j + 1));
      }
    }
    throw NonMinimalError("Tate: I_n* loop did not terminate");
  }
  // Triple root: P = T^3 + a63.
  Elem rho = cube_root(-a63);
  L.shift_x(t.scale(rho));
  if (!L.a6.coeff(4).is_zero()) return {Kind::kIVStar, 0};
  if (v(L.a4) < 4) return {Kind::kIIIStar, 0};
  if (v(L.a6) < 6) return {Kind::kIIStar, 0};
  throw NonMinimalError("model is not minimal at the place");
}

std::string Place::to_string() const {
  if (infinity) return "inf";
  if (poly.degree() == 1) {
    Elem r = -poly.coeff(0);
    return "t=" + r.pretty();
  }
  return poly.pretty();
}

namespace {

int multiplicity_in(const Poly& delta, const Poly& g) {
  int e = 0;
  Poly d = delta;
  for (;;) {
    auto [q, r] = divmod(d, g);
    if (!r.is_zero()) break;
    d = q;
    ++e;
  }
  return e;
}

KodairaType classify_local(const WeierstrassModel& m, const Poly& g, int delta) {
  const Field& K = m.field();
  if (!(m.b2() % g).is_zero()) return KodairaType::I(delta);
  if (g.degree() == 1) {
    Elem alpha = -g.coeff(0) / g.coeff(1);
    return tate_at_zero(translate(m, alpha), delta);
  }
  int k = K.degree() * g.degree();
  if (k > 12) throw ArithmeticError("place of degree " + std::to_string(g.degree()) + " needs a field beyond GF(3^12)");
  const Field& L = gf(k);
  WeierstrassModel me = embed(m, L);
  std::vector<Elem> rs = roots(embed(g, L));
  if (rs.empty()) throw ArithmeticError("no root of place in extension");
  return tate_at_zero(translate(me, rs.front()), delta);
}

PlaceResult infinity_result(const WeierstrassModel& m, int e) {
  WeierstrassModel fl = flip_to_infinity(m);
  PlaceResult r;
  r.place.infinity = true;
  r.type = tate_at_zero(fl, e);
  r.inv = fibre_invariants(r.type, e);
  return r;
}

}  // namespace

PlaceResult tate_classify(const WeierstrassModel& m, const Place& place) {
  Poly delta = discriminant(m);
  if (place.infinity) {
    int e = 12 - delta.degree();
    if (e <= 0) throw ArithmeticError("good reduction at infinity");
    return infinity_result(m, e);
  }
  Poly g = place.poly.monic();
  int e = multiplicity_in(delta, g);
  if (e == 0) throw ArithmeticError("place does not divide the discriminant");
  PlaceResult r;
  r.place.poly = g;
  r.type = classify_local(m, g, e);
  r.inv = fibre_invariants(r.type, e);
  r.count = g.degree();
  return r;
}

Classification classify_all(const WeierstrassModel& m, uint64_t seed) {
  Poly delta = discriminant(m);
  Classification out;
  std::vector<Fibre> fibres;
  for (const auto& [g, e] : factor(delta, seed).factors) {
    PlaceResult r;
    r.place.poly = g;
    r.type = classify_local(m, g, e);
    r.inv = fibre_invariants(r.type, e);
    r.count = g.degree();
    for (int i = 0; i < r.count; ++i) fibres.push_back({r.type, e});
    out.places.push_back(std::move(r));
  }
  int e_inf = 12 - delta.degree();
  if (e_inf > 0) {
    PlaceResult r = infinity_result(m, e_inf);
    fibres.push_back({r.type, e_inf});
    out.places.push_back(std::move(r));
  }
  out.config = Configuration(std::move(fibres));
  return out;
}

Configuration classify_config(const WeierstrassModel& m) {
  Poly delta = discriminant(m);
  std::vector<Fibre> fibres;
  for (const auto& [g, e] : squarefree_decomposition(delta)) {
    Poly h = m.b2().is_zero() ? g : gcd(g, m.b2());
    int mult_pts = g.degree() - h.degree();
    for (int i = 0; i < mult_pts; ++i) fibres.push_back({KodairaType::I(e), e});
    if (h.degree() < 1) continue;
    for (const auto& [p, one] : factor(h).factors) {
      KodairaType t = classify_local(m, p, e);
      for (int i = 0; i < p.degree(); ++i) fibres.push_back({t, e});
    }
  }
  int e_inf = 12 - delta.degree();
  if (e_inf > 0) fibres.push_back({infinity_result(m, e_inf).type, e_inf});
  return Configuration(std::move(fibres));
}

}  // namespace res3
