#include "res3/ff.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>

namespace res3 {

namespace {

// Small dense polynomials over GF(3), constant first, used only for field
// construction and the irreducibility test.
using P3 = std::vector<int>;

void trim(P3& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

P3 p3_mod(P3 a, const P3& m) {
  trim(a);
  int dm = int(m.size()) - 1;
  int inv_lead = m.back() == 1 ? 1 : 2;
  while (int(a.size()) - 1 >= dm) {
    int shift = int(a.size()) - 1 - dm;
    int c = (a.back() * inv_lead) % 3;
    for (int i = 0; i <= dm; ++i) a[i + shift] = ((a[i + shift] - c * m[i]) % 3 + 3) % 3;
    trim(a);
  }
  return a;
}

P3 p3_mul(const P3& a, const P3& b) {
  if (a.empty() || b.empty()) return {};
  P3 r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % 3;
  trim(r);
  return r;
}

P3 p3_sub(P3 a, const P3& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % 3 + 3) % 3;
  trim(a);
  return a;
}

P3 p3_gcd(P3 a, P3 b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    P3 r = p3_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(3^e) mod m by repeated cubing.
P3 p3_frob_x(int e, const P3& m) {
  P3 r = p3_mod({0, 1}, m);
  for (int i = 0; i < e; ++i) r = p3_mod(p3_mul(p3_mul(r, r), r), m);
  return r;
}

std::vector<int> prime_factors(uint64_t n) {
  std::vector<int> out;
  for (uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(int(p));
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(int(n));
  return out;
}

uint32_t pow3(int k) {
  uint32_t q = 1;
  for (int i = 0; i < k; ++i) q *= 3;
  return q;
}

uint64_t mod_inverse(uint64_t a, uint64_t n) {
  int64_t t = 0, nt = 1, r = int64_t(n), nr = int64_t(a % n);
  while (nr != 0) {
    int64_t qq = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - qq * nt);
    std::tie(r, nr) = std::make_pair(nr, r - qq * nr);
  }
  if (t < 0) t += int64_t(n);
  return uint64_t(t);
}

struct Registry {
  std::mutex mu;
  std::map<std::vector<int>, std::unique_ptr<Field>> fields;
  std::map<std::pair<const Field*, const Field*>, uint32_t> embed_logs;
};

Registry& registry() {
  static Registry* r = new Registry();
  return *r;
}

}  // namespace

// ---- construction ----

std::vector<int> builtin_modulus(int k) {
  switch (k) {
    case 1: return {0, 1};
    case 2: return {1, 0, 1};
    case 3: return {2, 2, 0, 1};
    case 4: return {2, 1, 0, 0, 1};
    case 5: return {1, 2, 0, 0, 0, 1};
    case 6: return {2, 1, 0, 0, 0, 0, 1};
    case 7: return {2, 0, 1, 0, 0, 0, 0, 1};
    case 8: return {2, 0, 1, 0, 0, 0, 0, 0, 1};
    case 9: return {2, 0, 0, 0, 1, 0, 0, 0, 0, 1};
    case 10: return {1, 0, 2, 0, 0, 0, 0, 0, 0, 0, 1};
    case 11: return {2, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1};
    case 12: return {2, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1};
    default: throw ArithmeticError("no built-in field of degree " + std::to_string(k));
  }
}

bool gf3_irreducible(const std::vector<int>& poly) {
  P3 f = poly;
  for (int& c : f) c = ((c % 3) + 3) % 3;
  trim(f);
  int k = int(f.size()) - 1;
  if (k < 1) return false;
  if (k == 1) return true;
  P3 x = {0, 1};
  if (p3_sub(p3_frob_x(k, f), x) != P3{}) return false;
  for (int p : prime_factors(uint64_t(k))) {
    P3 h = p3_sub(p3_frob_x(k / p, f), x);
    if (p3_gcd(h, f).size() != 1) return false;
  }
  return true;
}

Field::Field(int k, std::vector<int> modulus) : k_(k), q_(pow3(k)), mod_(std::move(modulus)) {
  const uint32_t n = q_ - 1;
  P3 m = k == 1 ? P3{0, 1} : mod_;
  auto to_poly = [&](uint32_t idx) {
    P3 p;
    for (int i = 0; i < k_; ++i) {
      p.push_back(int(idx % 3));
      idx /= 3;
    }
    trim(p);
    return p;
  };
  auto to_idx = [&](const P3& p) {
    uint32_t idx = 0;
    for (int i = int(p.size()) - 1; i >= 0; --i) idx = idx * 3 + uint32_t(p[i]);
    return idx;
  };
  auto mul_idx = [&](uint32_t a, uint32_t b) {
    if (k_ == 1) return (a * b) % 3;
    return to_idx(p3_mod(p3_mul(to_poly(a), to_poly(b)), m));
  };
  auto pow_idx = [&](uint32_t a, uint64_t e) {
    uint32_t r = 1;
    while (e) {
      if (e & 1) r = mul_idx(r, a);
      a = mul_idx(a, a);
      e >>= 1;
    }
    return r;
  };
  std::vector<int> ps = prime_factors(n);
  uint32_t g = 0;
  for (uint32_t c = (k_ == 1 ? 2u : 3u); c < q_ && g == 0; ++c) {
    bool prim = true;
    for (int p : ps)
      if (pow_idx(c, n / uint32_t(p)) == 1) {
        prim = false;
        break;
      }
    if (prim) g = c;
  }
  if (g == 0) throw ArithmeticError("no primitive element found");
  exp_.resize(n);
  log_.assign(q_, Elem::kZeroLog);
  uint32_t cur = 1;
  for (uint32_t e = 0; e < n; ++e) {
    exp_[e] = cur;
    log_[cur] = e;
    cur = mul_idx(cur, g);
  }
  zech_.resize(n);
  for (uint32_t e = 0; e < n; ++e) {
    uint32_t idx = exp_[e];
    uint32_t d0 = idx % 3;
    uint32_t idx1 = idx - d0 + (d0 + 1) % 3;
    zech_[e] = log_[idx1];
  }
}

const Field& gf(int k, const std::vector<int>& modulus) {
  if (k < 1 || k > 12) throw ArithmeticError("field degree must be in 1..12");
  std::vector<int> m = modulus;
  for (int& c : m) c = ((c % 3) + 3) % 3;
  if (int(m.size()) != k + 1 || m.back() != 1)
    throw ArithmeticError("modulus must be monic of degree " + std::to_string(k));
  if (k == 1) m = {0, 1};
  if (k > 1 && !gf3_irreducible(m)) throw ArithmeticError("modulus is reducible over GF(3)");
  Registry& reg = registry();
  std::lock_guard<std::mutex> lock(reg.mu);
  auto it = reg.fields.find(m);
  if (it != reg.fields.end()) return *it->second;
  std::unique_ptr<Field> f(new Field(k, m));
  const Field& ref = *f;
  reg.fields.emplace(m, std::move(f));
  return ref;
}

const Field& gf(int k) { return gf(k, builtin_modulus(k)); }

// ---- field helpers ----

std::string Field::spec() const {
  if (k_ == 1) return "GF(3)";
  std::ostringstream os;
  os << "GF(3^" << k_ << ")/";
  for (size_t i = 0; i < mod_.size(); ++i) os << (i ? "," : "") << mod_[i];
  return os.str();
}

Elem Field::from_int(int64_t v) const {
  int r = int(((v % 3) + 3) % 3);
  if (r == 0) return zero();
  if (r == 1) return one();
  return -one();
}

Elem Field::from_index(uint32_t idx) const {
  if (idx >= q_) throw ArithmeticError("element index out of range");
  return Elem(this, log_[idx]);
}

Elem Field::from_digits(const std::vector<int>& d) const {
  if (int(d.size()) > k_) throw ArithmeticError("too many digits for field");
  uint32_t idx = 0;
  for (int i = int(d.size()) - 1; i >= 0; --i) idx = idx * 3 + uint32_t(((d[i] % 3) + 3) % 3);
  return from_index(idx);
}

Elem Field::gen() const { return k_ == 1 ? one() : from_index(3); }

std::vector<Elem> Field::elements() const {
  std::vector<Elem> out;
  out.reserve(q_);
  for (uint32_t i = 0; i < q_; ++i) out.push_back(from_index(i));
  return out;
}

const Field& parse_field(const std::string& spec_in) {
  std::string s;
  for (char c : spec_in)
    if (!isspace(static_cast<unsigned char>(c))) s += c;
  auto fail = [&]() -> const Field& { throw ParseError("bad field spec: '" + spec_in + "'"); };
  if (s.rfind("GF(", 0) != 0) return fail();
  size_t close = s.find(')');
  if (close == std::string::npos) return fail();
  std::string inner = s.substr(3, close - 3);
  int k = 0;
  try {
    if (inner == "3") {
      k = 1;
    } else if (inner.rfind("3^", 0) == 0) {
      size_t used = 0;
      k = std::stoi(inner.substr(2), &used);
      if (used != inner.size() - 2) return fail();
    } else {
      size_t used = 0;
      long q = std::stol(inner, &used);
      if (used != inner.size()) return fail();
      long p = 1;
      while (p < q) {
        p *= 3;
        ++k;
      }
      if (p != q || k == 0) return fail();
    }
  } catch (const std::logic_error&) {
    return fail();
  }
  if (k < 1 || k > 12) return fail();
  std::string rest = s.substr(close + 1);
  if (rest.empty()) return gf(k);
  if (rest[0] != '/') return fail();
  std::vector<int> m;
  std::stringstream ss(rest.substr(1));
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) return fail();
    try {
      m.push_back(std::stoi(tok));
    } catch (const std::logic_error&) {
      return fail();
    }
  }
  try {
    return gf(k, m);
  } catch (const ArithmeticError& e) {
    throw ParseError(std::string("bad field spec: ") + e.what());
  }
}

Elem parse_elem(const Field& f, const std::string& s) {
  std::vector<int> d;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t a = tok.find_first_not_of(" \t");
    size_t b = tok.find_last_not_of(" \t");
    if (a == std::string::npos) throw ParseError("empty digit in element '" + s + "'");
    tok = tok.substr(a, b - a + 1);
    try {
      size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw ParseError("bad digit in element '" + s + "'");
      d.push_back(v);
    } catch (const std::logic_error&) {
      throw ParseError("bad digit in element '" + s + "'");
    }
  }
  if (d.empty()) throw ParseError("empty element");
  if (int(d.size()) > f.degree()) throw ParseError("element '" + s + "' has too many digits");
  return f.from_digits(d);
}

// ---- element helpers ----

uint32_t Elem::index() const {
  const Field& f = field();
  return is_zero() ? 0 : f.exp_index(log_);
}

std::vector<int> Elem::digits() const {
  const Field& f = field();
  uint32_t idx = index();
  std::vector<int> d(size_t(f.degree()), 0);
  for (int i = 0; i < f.degree(); ++i) {
    d[size_t(i)] = int(idx % 3);
    idx /= 3;
  }
  return d;
}

std::string Elem::to_string() const {
  std::vector<int> d = digits();
  std::ostringstream os;
  for (size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  return os.str();
}

std::string Elem::pretty() const {
  std::vector<int> d = digits();
  std::string g = field().degree() == 2 ? "i" : "x";
  std::string out;
  for (size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(d[i]);
      continue;
    }
    if (d[i] != 1) out += std::to_string(d[i]);
    out += g;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

Elem Elem::pow(int64_t e) const {
  const Field& f = field();
  if (is_zero()) {
    if (e < 0) throw ArithmeticError("division by zero");
    return e == 0 ? f.one() : *this;
  }
  int64_t n = f.group_order();
  int64_t em = ((e % n) + n) % n;
  __int128 s = __int128(log_) * em % n;
  return Elem(f_, uint32_t(s));
}

bool lex_less(const Elem& a, const Elem& b) {
  std::vector<int> da = a.digits(), db = b.digits();
  return da < db;
}

std::optional<Elem> sqrt(const Elem& a) {
  const Field& f = a.field();
  if (a.is_zero()) return a;
  if (a.log() % 2 == 1) return std::nullopt;
  Elem r1(&f, a.log() / 2);
  Elem r2 = -r1;
  return lex_less(r2, r1) ? r2 : r1;
}

bool is_square(const Elem& a) { return a.is_zero() || a.log() % 2 == 0; }

Elem frobenius(const Elem& a) { return a.pow(3); }

Elem cube_root(const Elem& a) {
  const Field& f = a.field();
  if (a.is_zero()) return a;
  uint64_t n = f.group_order();
  uint64_t inv3 = mod_inverse(3 % n, n);
  if (n == 2) inv3 = 1;
  return Elem(&f, uint32_t(uint64_t(a.log()) * inv3 % n));
}

bool embeds_into(const Field& small, const Field& big) { return big.degree() % small.degree() == 0; }

namespace {

uint32_t compute_embed_log(const Field& src, const Field& tgt) {
  if (src.degree() == 1) return tgt.half();
  const uint32_t ns = src.group_order(), nt = tgt.group_order();
  const uint32_t step = nt / ns;
  const std::vector<int>& m = src.modulus();
  Elem best;
  bool have = false;
  for (uint32_t j = 0; j < ns; ++j) {
    Elem beta(&tgt, j * step);
    Elem acc = tgt.zero();
    for (int i = int(m.size()) - 1; i >= 0; --i) acc = acc * beta + tgt.from_int(m[size_t(i)]);
    if (!acc.is_zero()) continue;
    if (!have || lex_less(beta, best)) {
      best = beta;
      have = true;
    }
  }
  if (!have) throw ArithmeticError("no root of source modulus in target field");
  Elem img = tgt.zero();
  std::vector<int> d = src.primitive().digits();
  for (int i = int(d.size()) - 1; i >= 0; --i) img = img * best + tgt.from_int(d[size_t(i)]);
  return img.log();
}

}  // namespace

Elem embed(const Elem& a, const Field& target) {
  const Field& src = a.field();
  if (&src == &target) return a;
  if (!embeds_into(src, target))
    throw ArithmeticError("cannot embed " + src.spec() + " into " + target.spec());
  if (a.is_zero()) return target.zero();
  Registry& reg = registry();
  uint32_t L;
  {
    std::lock_guard<std::mutex> lock(reg.mu);
    auto key = std::make_pair(&src, &target);
    auto it = reg.embed_logs.find(key);
    if (it == reg.embed_logs.end()) it = reg.embed_logs.emplace(key, compute_embed_log(src, target)).first;
    L = it->second;
  }
  uint64_t s = uint64_t(a.log()) * L % target.group_order();
  return Elem(&target, uint32_t(s));
}

const Field& common_field(const Field& a, const Field& b) {
  if (&a == &b) return a;
  if (embeds_into(a, b) && b.degree() > a.degree()) return b;
  if (embeds_into(b, a) && a.degree() > b.degree()) return a;
  int k = std::lcm(a.degree(), b.degree());
  if (k > 12) throw ArithmeticError("no common built-in field");
  return gf(k);
}

}  // namespace res3
