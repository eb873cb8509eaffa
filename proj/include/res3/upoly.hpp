#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "res3/ff.hpp"

namespace res3 {

// Dense univariate polynomial in t over a Field, lowest degree first.
// The coefficient list never has a trailing zero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Field& f) : f_(&f) {}
  Poly(const Field& f, std::vector<Elem> coeffs);

  static Poly constant(const Elem& c);
  static Poly monomial(const Elem& c, int deg);
  // The variable t.
  static Poly t(const Field& f);
  // Linear factor t - root.
  static Poly linear(const Elem& root);
  // Coefficients given as integers mod 3.
  static Poly from_ints(const Field& f, const std::vector<int>& coeffs);

  const Field& field() const;
  const Field* field_ptr() const { return f_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  int degree() const { return int(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  Elem coeff(int i) const;
  Elem lead() const;
  // Valuation at t = 0; -1 for the zero polynomial.
  int ord0() const;

  void set_coeff(int i, const Elem& v);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly operator/(const Poly& o) const;
  Poly operator%(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scale(const Elem& c) const;
  Poly pow(int e) const;
  Poly monic() const;
  Elem eval(const Elem& x) const;
  // f(g(t)).
  Poly compose(const Poly& g) const;
  // t^n f(1/t) for n >= deg f.
  Poly reverse(int n) const;
  // Multiply by t^n (n >= 0) or exactly divide by t^-n (n < 0).
  Poly shift(int n) const;

  bool operator==(const Poly& o) const { return f_ == o.f_ && c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Serialization: ';'-separated element digit vectors, lowest degree first.
  std::string to_string() const;
  // Human-readable, e.g. "t^2+(1+2i)t+1".
  std::string pretty() const;

 private:
  void normalize();
  const Field* f_ = nullptr;
  std::vector<Elem> c_;
};

Poly parse_poly(const Field& f, const std::string& s);

// f = q*g + r with deg r < deg g.
std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g);
Poly derivative(const Poly& f);
// Monic gcd (zero if both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);
// base^e mod m.
Poly powmod(const Poly& base, uint64_t e, const Poly& m);
// Image of f under the field embedding.
Poly embed(const Poly& f, const Field& target);

// f = unit * prod g_i^{m_i}; g_i monic squarefree, pairwise coprime,
// sorted by multiplicity.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f);

struct Factorization {
  Elem unit;
  // Monic irreducible factors with multiplicity, sorted by (degree, coeffs).
  std::vector<std::pair<Poly, int>> factors;
  Poly expand() const;
};

Factorization factor(const Poly& f, uint64_t seed = 0);

// Distinct roots of f lying in its coefficient field, sorted by index.
std::vector<Elem> roots(const Poly& f, uint64_t seed = 0);

// multiplicity e -> number of closure roots with multiplicity e.
using MultiplicityProfile = std::map<int, int>;

MultiplicityProfile multiplicity_profile(const Poly& f);
// The same profile computed through the full factorization.
MultiplicityProfile multiplicity_profile_by_factoring(const Poly& f, uint64_t seed = 0);
// Multiset union of two profiles.
MultiplicityProfile profile_union(const MultiplicityProfile& a, const MultiplicityProfile& b);

std::ostream& operator<<(std::ostream& os, const Poly& p);
std::ostream& operator<<(std::ostream& os, const Elem& e);

}  // namespace res3
