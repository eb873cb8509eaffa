#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "res3/upoly.hpp"

namespace res3 {

// Polynomial in x whose coefficients are polynomials in t.
struct XTPoly {
  const Field* f = nullptr;
  // c[j] is the coefficient of x^j; no trailing zeros.
  std::vector<Poly> c;

  bool is_zero() const { return c.empty(); }
  int x_degree() const { return int(c.size()) - 1; }
  Poly coeff(int j) const;
};

// Values for the named constants of an expression.
using Assignment = std::map<char, Elem>;

// Expression syntax: integers (read mod 3), single-letter names, + - * / ^,
// parentheses and juxtaposition as multiplication. "[...]" is a literal
// polynomial in t in serialized form (see parse_poly). 't' and 'x' are the
// variables; every other letter must be bound in `vals`. Division is by
// nonzero constants or by exact polynomial divisors in t.
// Throws ParseError on bad syntax and ArithmeticError on bad division.
XTPoly eval_xt(const std::string& s, const Field& f, const Assignment& vals);
// As eval_xt but rejects any occurrence of x. `as_t` names a letter read as t.
Poly eval_t(const std::string& s, const Field& f, const Assignment& vals, char as_t = 't');
// Letters other than t and x occurring in s.
std::set<char> expr_symbols(const std::string& s);

// Constraints are "lhs = rhs" or "lhs != rhs", ';'-separated.
struct ConstraintSet {
  std::vector<std::pair<std::string, std::string>> equations;  // lhs - rhs
  std::vector<std::pair<std::string, std::string>> inequations;
};
ConstraintSet parse_constraints(const std::string& s);

// Calls `visit` on every assignment of `symbols` over f satisfying the
// constraints, stopping early when `visit` returns true or after `cap`
// assignments. Symbols fixed by an equation take its roots; others range
// over all of f. Returns true if `visit` returned true.
bool for_each_solution(const ConstraintSet& cs, const std::set<char>& symbols, const Field& f,
                       const std::function<bool(const Assignment&)>& visit, size_t cap = 100000);

std::string to_string(const Assignment& a);

}  // namespace res3
