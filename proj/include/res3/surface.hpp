#pragma once

#include <optional>
#include <string>

#include "res3/upoly.hpp"

namespace res3 {

// y^2 = x^3 + b2 x^2 - b4 x + b6 over P^1_t, with deg b_i <= i.
class WeierstrassModel {
 public:
  // Throws ArithmeticError on degree-bound violation or a zero discriminant
  // (unless check is false).
  WeierstrassModel(Poly b2, Poly b4, Poly b6, bool check = true);

  const Field& field() const { return b2_.field(); }
  const Poly& b2() const { return b2_; }
  const Poly& b4() const { return b4_; }
  const Poly& b6() const { return b6_; }
  // Coefficient b_i for i in {2, 4, 6}.
  const Poly& b(int i) const;

  bool operator==(const WeierstrassModel& o) const {
    return b2_ == o.b2_ && b4_ == o.b4_ && b6_ == o.b6_;
  }

  // Record form: field=..., b2=..., b4=..., b6=... (one per line).
  std::string to_string() const;

 private:
  Poly b2_, b4_, b6_;
};

// -b2^2 (b2 b6 - b4^2) + b4^3.
Poly discriminant(const Poly& b2, const Poly& b4, const Poly& b6);
Poly discriminant(const WeierstrassModel& m);
// The general a-invariant discriminant with (a1,a2,a3,a4,a6) = (0,b2,0,-b4,b6).
Poly discriminant_oracle(const WeierstrassModel& m);

// t <- (a t + b)/(c t + d), with b_i homogenised of weight i.
WeierstrassModel moebius_transform(const WeierstrassModel& m, const Elem& a, const Elem& b, const Elem& c,
                                   const Elem& d);
// (b2, b4, b6) -> (u^2 b2, u^4 b4, u^6 b6).
WeierstrassModel rescale(const WeierstrassModel& m, const Elem& u);
// Chart at infinity: b_i(s) -> s^i b_i(1/s).
WeierstrassModel flip_to_infinity(const WeierstrassModel& m);
// t <- t + a.
WeierstrassModel translate(const WeierstrassModel& m, const Elem& a);
// Coefficientwise image in a larger field.
WeierstrassModel embed(const WeierstrassModel& m, const Field& target);

// Where l, m, n sit in t^12 + l t^10 + t^3 P6 + (t^2 coeff) + (t^0 coeff).
enum class StarConvention {
  kProof,    // m on t^2, n constant
  kPrinted,  // n on t^2, m constant
};

struct StarOptions {
  StarConvention convention = StarConvention::kProof;
  // Accept a nonzero t^1 coefficient (it is then reported in `linear`).
  bool allow_linear_term = false;
};

struct StarForm {
  Elem l, m, n;
  Poly P6;
  Elem linear;
  // Monic normalisation factor: delta = unit * (normal form).
  Elem unit;
};

struct DoubleRootForm {
  Elem l, m, n;
  Poly P6;
  Elem unit;
};

std::optional<StarForm> recognize_star_form(const Poly& delta, const StarOptions& opt = {});
std::optional<DoubleRootForm> recognize_doubleroot_form(const Poly& delta);
// Expand a star form back to its degree-12 polynomial (monic).
Poly star_delta(const StarForm& f, StarConvention conv = StarConvention::kProof);
Poly doubleroot_delta(const DoubleRootForm& f);

enum class AdditiveDelta { kDistinctRoots, kDoubleRoot, kB2Zero, kNotAdditiveNormal };

std::string to_string(AdditiveDelta a);

struct AdditiveDeltaInfo {
  AdditiveDelta kind;
  // The base-normalised model the vanishing constraints were checked on.
  WeierstrassModel normalized;
};

// Requires an additive fibre at t = 0 in shape t | b2 (or b2 = 0), t | b4,
// t | b6; throws ArithmeticError otherwise.
AdditiveDeltaInfo recognize_additive_delta(const WeierstrassModel& m);

}  // namespace res3
