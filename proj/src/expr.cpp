#include "res3/expr.hpp"

#include <cctype>
#include <sstream>

#include "res3/error.hpp"

namespace res3 {

Poly XTPoly::coeff(int j) const {
  if (j < 0 || j >= int(c.size())) return Poly(*f);
  return c[size_t(j)];
}

namespace {

void trim(XTPoly& p) {
  while (!p.c.empty() && p.c.back().is_zero()) p.c.pop_back();
}

XTPoly constant(const Field& f, const Poly& v) {
  XTPoly p{&f, {v}};
  trim(p);
  return p;
}

XTPoly add(const XTPoly& a, const XTPoly& b, bool sub) {
  XTPoly r{a.f, {}};
  size_t n = std::max(a.c.size(), b.c.size());
  for (size_t j = 0; j < n; ++j) {
    Poly x = a.coeff(int(j)), y = b.coeff(int(j));
    r.c.push_back(sub ? x - y : x + y);
  }
  trim(r);
  return r;
}

XTPoly mul(const XTPoly& a, const XTPoly& b) {
  XTPoly r{a.f, {}};
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, Poly(*a.f));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  trim(r);
  return r;
}

XTPoly divide(const XTPoly& a, const XTPoly& b) {
  if (b.is_zero()) throw ArithmeticError("division by zero in expression");
  if (b.x_degree() > 0) throw ArithmeticError("division by an expression involving x");
  const Poly& d = b.c[0];
  XTPoly r{a.f, {}};
  if (d.degree() == 0) {
    Elem inv = d.coeff(0).inv();
    for (const Poly& p : a.c) r.c.push_back(p.scale(inv));
    return r;
  }
  for (const Poly& p : a.c) {
    auto [q, rem] = divmod(p, d);
    if (!rem.is_zero()) throw ArithmeticError("inexact polynomial division in expression");
    r.c.push_back(q);
  }
  trim(r);
  return r;
}

class Parser {
 public:
  Parser(const std::string& s, const Field& f, const Assignment* vals, char as_t, bool allow_x)
      : s_(s), f_(f), vals_(vals), as_t_(as_t), allow_x_(allow_x) {}

  XTPoly parse() {
    XTPoly v = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("expression \"" + s_ + "\" at " + std::to_string(i_) + ": " + why);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  int peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : -1;
  }

  XTPoly expr() {
    XTPoly acc{&f_, {}};
    bool first = true;
    for (;;) {
      int c = peek();
      bool neg = false;
      if (c == '+' || c == '-') {
        neg = c == '-';
        ++i_;
      } else if (!first) {
        return acc;
      }
      XTPoly t = term();
      acc = add(acc, t, neg);
      first = false;
    }
  }

  bool starts_factor(int c) const {
    return c == '(' || c == '[' || std::isdigit(c) || std::isalpha(c);
  }

  XTPoly term() {
    XTPoly acc = factor();
    for (;;) {
      int c = peek();
      if (c == '*') {
        ++i_;
        acc = mul(acc, factor());
      } else if (c == '/') {
        ++i_;
        acc = divide(acc, factor());
      } else if (starts_factor(c)) {
        acc = mul(acc, factor());
      } else {
        return acc;
      }
    }
  }

  XTPoly factor() {
    int c = peek();
    if (c == '-') {
      ++i_;
      XTPoly v = factor();
      return add(XTPoly{&f_, {}}, v, true);
    }
    XTPoly base = primary();
    if (peek() == '^') {
      ++i_;
      int e = exponent();
      XTPoly r = constant(f_, Poly::constant(f_.one()));
      for (int k = 0; k < e; ++k) r = mul(r, base);
      return r;
    }
    return base;
  }

  int exponent() {
    bool paren = peek() == '(';
    if (paren) ++i_;
    skip();
    size_t st = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (st == i_) fail("expected an integer exponent");
    int e = std::stoi(s_.substr(st, i_ - st));
    if (paren) {
      if (peek() != ')') fail("expected ')'");
      ++i_;
    }
    return e;
  }

  XTPoly primary() {
    int c = peek();
    if (c == '(') {
      ++i_;
      XTPoly v = expr();
      if (peek() != ')') fail("expected ')'");
      ++i_;
      return v;
    }
    if (c == '[') {
      size_t end = s_.find(']', i_);
      if (end == std::string::npos) fail("expected ']'");
      Poly p = parse_poly(f_, s_.substr(i_ + 1, end - i_ - 1));
      i_ = end + 1;
      return constant(f_, p);
    }
    if (c >= 0 && std::isdigit(c)) {
      long long n = 0;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) n = (n * 10 + (s_[i_++] - '0')) % 3;
      return constant(f_, Poly::constant(f_.from_int(int(n))));
    }
    if (c >= 0 && std::isalpha(c)) {
      ++i_;
      char name = char(c);
      if (name == as_t_) return constant(f_, Poly::t(f_));
      if (name == 'x') {
        if (!allow_x_) fail("x is not allowed here");
        XTPoly r{&f_, {Poly(f_), Poly::constant(f_.one())}};
        return r;
      }
      if (name == 't') fail("t is not allowed here");
      if (!vals_) fail(std::string("unbound constant ") + name);
      auto it = vals_->find(name);
      if (it == vals_->end()) fail(std::string("unbound constant ") + name);
      if (it->second.field_ptr() != &f_) throw ArithmeticError("constant from a different field");
      return constant(f_, Poly::constant(it->second));
    }
    fail("expected a value");
  }

  const std::string& s_;
  const Field& f_;
  const Assignment* vals_;
  char as_t_;
  bool allow_x_;
  size_t i_ = 0;
};

}  // namespace

XTPoly eval_xt(const std::string& s, const Field& f, const Assignment& vals) {
  return Parser(s, f, &vals, 't', true).parse();
}

Poly eval_t(const std::string& s, const Field& f, const Assignment& vals, char as_t) {
  XTPoly p = Parser(s, f, &vals, as_t, false).parse();
  return p.coeff(0);
}

std::set<char> expr_symbols(const std::string& s) {
  std::set<char> out;
  for (char c : s)
    if (std::isalpha(static_cast<unsigned char>(c)) && c != 't' && c != 'x') out.insert(c);
  return out;
}

ConstraintSet parse_constraints(const std::string& s) {
  ConstraintSet cs;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ';')) {
    if (part.find_first_not_of(" \t") == std::string::npos) continue;
    size_t ne = part.find("!=");
    if (ne != std::string::npos) {
      cs.inequations.push_back({part.substr(0, ne), part.substr(ne + 2)});
      continue;
    }
    size_t eq = part.find('=');
    if (eq == std::string::npos || part.find('=', eq + 1) != std::string::npos)
      throw ParseError("constraint \"" + part + "\" needs exactly one '=' or '!='");
    cs.equations.push_back({part.substr(0, eq), part.substr(eq + 1)});
  }
  return cs;
}

namespace {

std::string diff(const std::pair<std::string, std::string>& e) {
  return "(" + e.first + ")-(" + e.second + ")";
}

struct Solver {
  const ConstraintSet& cs;
  std::vector<char> symbols;
  const Field& f;
  const std::function<bool(const Assignment&)>& visit;
  size_t cap;
  size_t seen = 0;
  bool stop = false;
  std::vector<std::set<char>> eq_syms, ne_syms;

  bool holds_all_known(const Assignment& a) {
    for (size_t k = 0; k < cs.equations.size(); ++k) {
      bool known = true;
      for (char c : eq_syms[k]) known = known && a.count(c);
      if (!known) continue;
      try {
        if (!eval_t(diff(cs.equations[k]), f, a).is_zero()) return false;
      } catch (const ArithmeticError&) {
        return false;
      }
    }
    for (size_t k = 0; k < cs.inequations.size(); ++k) {
      bool known = true;
      for (char c : ne_syms[k]) known = known && a.count(c);
      if (!known) continue;
      try {
        if (eval_t(diff(cs.inequations[k]), f, a).is_zero()) return false;
      } catch (const ArithmeticError&) {
        return false;
      }
    }
    return true;
  }

  void rec(Assignment& a) {
    if (stop) return;
    if (!holds_all_known(a)) return;
    if (a.size() == symbols.size()) {
      if (++seen > cap) {
        stop = true;
        return;
      }
      if (visit(a)) stop = true;
      return;
    }
    // Prefer an equation with exactly one unbound symbol.
    for (size_t k = 0; k < cs.equations.size(); ++k) {
      char unknown = 0;
      int n = 0;
      for (char c : eq_syms[k])
        if (!a.count(c)) {
          unknown = c;
          ++n;
        }
      if (n != 1) continue;
      Poly p;
      try {
        p = eval_t(diff(cs.equations[k]), f, a, unknown);
      } catch (const ArithmeticError&) {
        return;
      }
      if (p.is_zero()) continue;
      for (const Elem& r : roots(p)) {
        a[unknown] = r;
        rec(a);
        a.erase(unknown);
        if (stop) return;
      }
      return;
    }
    for (char c : symbols) {
      if (a.count(c)) continue;
      for (const Elem& v : f.elements()) {
        a[c] = v;
        rec(a);
        a.erase(c);
        if (stop) return;
      }
      return;
    }
  }
};

}  // namespace

bool for_each_solution(const ConstraintSet& cs, const std::set<char>& symbols, const Field& f,
                       const std::function<bool(const Assignment&)>& visit, size_t cap) {
  std::set<char> all = symbols;
  for (auto& e : cs.equations) {
    auto s = expr_symbols(diff(e));
    all.insert(s.begin(), s.end());
  }
  for (auto& e : cs.inequations) {
    auto s = expr_symbols(diff(e));
    all.insert(s.begin(), s.end());
  }
  Solver sv{cs, std::vector<char>(all.begin(), all.end()), f, visit, cap, 0, false, {}, {}};
  for (auto& e : cs.equations) sv.eq_syms.push_back(expr_symbols(diff(e)));
  for (auto& e : cs.inequations) sv.ne_syms.push_back(expr_symbols(diff(e)));
  Assignment a;
  sv.rec(a);
  return sv.stop && sv.seen <= cap;
}

std::string to_string(const Assignment& a) {
  std::string out;
  for (auto& [k, v] : a) {
    if (!out.empty()) out += ", ";
    out += std::string(1, k) + "=" + v.pretty();
  }
  return out;
}

}  // namespace res3
