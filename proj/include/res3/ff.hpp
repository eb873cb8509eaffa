#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "res3/error.hpp"

namespace res3 {

class Field;

// An element of GF(3^k). Stored as a discrete logarithm with respect to a
// fixed primitive element of its field; zero is a sentinel.
class Elem {
 public:
  static constexpr uint32_t kZeroLog = 0xFFFFFFFFu;

  Elem() = default;
  Elem(const Field* f, uint32_t log) : f_(f), log_(log) {}

  const Field& field() const;
  const Field* field_ptr() const { return f_; }
  uint32_t log() const { return log_; }

  bool is_zero() const { return log_ == kZeroLog; }
  bool is_one() const { return log_ == 0; }

  // Base-3 digits, constant first; length is the field degree.
  std::vector<int> digits() const;
  // The digits packed as a base-3 integer (digit 0 least significant).
  uint32_t index() const;
  // Comma-separated digits, e.g. "1,2" for 1+2i.
  std::string to_string() const;
  // Human-readable form in terms of the generator, e.g. "1+2i" or "x^2+1".
  std::string pretty() const;

  Elem operator+(const Elem& o) const;
  Elem operator-(const Elem& o) const;
  Elem operator*(const Elem& o) const;
  Elem operator/(const Elem& o) const;
  Elem operator-() const;
  Elem& operator+=(const Elem& o) { return *this = *this + o; }
  Elem& operator-=(const Elem& o) { return *this = *this - o; }
  Elem& operator*=(const Elem& o) { return *this = *this * o; }
  Elem& operator/=(const Elem& o) { return *this = *this / o; }

  Elem inv() const;
  Elem pow(int64_t e) const;

  bool operator==(const Elem& o) const { return f_ == o.f_ && log_ == o.log_; }
  bool operator!=(const Elem& o) const { return !(*this == o); }

 private:
  const Field* f_ = nullptr;
  uint32_t log_ = kZeroLog;
};

// GF(3^k) = GF(3)[x]/(m). Instances are interned and never destroyed, so
// two elements share a field iff their Field pointers are equal.
class Field {
 public:
  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  int degree() const { return k_; }
  uint32_t order() const { return q_; }
  // Monic modulus, constant first, length k+1. For k = 1 this is x.
  const std::vector<int>& modulus() const { return mod_; }
  // "GF(3)" or "GF(3^k)/m0,m1,...".
  std::string spec() const;

  Elem zero() const { return Elem(this, Elem::kZeroLog); }
  Elem one() const { return Elem(this, 0); }
  Elem from_int(int64_t v) const;
  Elem from_digits(const std::vector<int>& d) const;
  Elem from_index(uint32_t idx) const;
  // The class of x (written i in GF(9)); for k = 1 this is 1.
  Elem gen() const;
  // The primitive element used as logarithm base.
  Elem primitive() const { return Elem(this, q_ > 2 ? 1 : 0); }
  // All elements ordered by index.
  std::vector<Elem> elements() const;

  // Internal tables, exposed for the inline arithmetic.
  uint32_t group_order() const { return q_ - 1; }
  uint32_t half() const { return (q_ - 1) / 2; }
  uint32_t zech(uint32_t n) const { return zech_[n]; }
  uint32_t exp_index(uint32_t n) const { return exp_[n]; }
  uint32_t log_of_index(uint32_t idx) const { return log_[idx]; }

 private:
  friend const Field& gf(int k, const std::vector<int>& modulus);
  Field(int k, std::vector<int> modulus);

  int k_;
  uint32_t q_;
  std::vector<int> mod_;
  std::vector<uint32_t> exp_;   // log -> index
  std::vector<uint32_t> log_;   // index -> log (kZeroLog at 0)
  std::vector<uint32_t> zech_;  // n -> log(1 + g^n)
};

// Built-in field of degree k (1 <= k <= 12); GF(9) is GF(3)[i]/(i^2+1).
const Field& gf(int k);
// Field with an explicit monic modulus (constant first); checked irreducible.
const Field& gf(int k, const std::vector<int>& modulus);
// Parse "GF(3)", "GF(3^k)" or "GF(3^k)/m0,...,mk".
const Field& parse_field(const std::string& spec);
// Built-in modulus for degree k.
std::vector<int> builtin_modulus(int k);
// Irreducibility of a monic polynomial over GF(3), constant first.
bool gf3_irreducible(const std::vector<int>& poly);

// Parse comma-separated digits into an element of f.
Elem parse_elem(const Field& f, const std::string& s);

// Square root; among the two roots the one with lexicographically smaller
// digit vector (constant first) is returned.
std::optional<Elem> sqrt(const Elem& a);
bool is_square(const Elem& a);
Elem frobenius(const Elem& a);
Elem cube_root(const Elem& a);
// Lexicographic comparison of digit vectors, constant first.
bool lex_less(const Elem& a, const Elem& b);

// Image of a under the cached embedding of its field into target.
Elem embed(const Elem& a, const Field& target);
// Whether the degree of `small` divides the degree of `big`.
bool embeds_into(const Field& small, const Field& big);
// The smallest common extension among the built-in fields.
const Field& common_field(const Field& a, const Field& b);

// ---- inline arithmetic ----

inline const Field& Elem::field() const {
  if (!f_) throw ArithmeticError("element has no field");
  return *f_;
}

namespace detail {
inline void same_field(const Elem& a, const Elem& b) {
  if (a.field_ptr() != b.field_ptr() || !a.field_ptr())
    throw ArithmeticError("arithmetic on elements of different fields");
}
}  // namespace detail

inline Elem Elem::operator*(const Elem& o) const {
  detail::same_field(*this, o);
  if (is_zero() || o.is_zero()) return Elem(f_, kZeroLog);
  uint64_t s = uint64_t(log_) + o.log_;
  uint32_t n = f_->group_order();
  return Elem(f_, uint32_t(s >= n ? s - n : s));
}

inline Elem Elem::operator+(const Elem& o) const {
  detail::same_field(*this, o);
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  uint32_t n = f_->group_order();
  uint32_t d = o.log_ >= log_ ? o.log_ - log_ : o.log_ + n - log_;
  uint32_t z = f_->zech(d);
  if (z == kZeroLog) return Elem(f_, kZeroLog);
  uint64_t s = uint64_t(log_) + z;
  return Elem(f_, uint32_t(s >= n ? s - n : s));
}

inline Elem Elem::operator-() const {
  if (!f_) throw ArithmeticError("element has no field");
  if (is_zero()) return *this;
  uint32_t n = f_->group_order();
  uint64_t s = uint64_t(log_) + f_->half();
  return Elem(f_, uint32_t(s >= n ? s - n : s));
}

inline Elem Elem::operator-(const Elem& o) const { return *this + (-o); }

inline Elem Elem::inv() const {
  if (!f_) throw ArithmeticError("element has no field");
  if (is_zero()) throw ArithmeticError("division by zero");
  return Elem(f_, log_ == 0 ? 0 : f_->group_order() - log_);
}

inline Elem Elem::operator/(const Elem& o) const {
  detail::same_field(*this, o);
  return *this * o.inv();
}

}  // namespace res3
