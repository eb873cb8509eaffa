#pragma once

#include <optional>
#include <string>
#include <vector>

#include "res3/ade.hpp"
#include "res3/surface.hpp"

namespace res3 {

enum class Kind { kIn, kII, kIII, kIV, kInStar, kIVStar, kIIIStar, kIIStar };

struct KodairaType {
  Kind kind = Kind::kIn;
  int n = 0;  // for I_n and I_n*

  static KodairaType I(int n) { return {Kind::kIn, n}; }
  static KodairaType Istar(int n) { return {Kind::kInStar, n}; }

  bool additive() const { return kind != Kind::kIn; }
  bool smooth() const { return kind == Kind::kIn && n == 0; }
  // "I5", "II", "I0*", "IV*", ...
  std::string symbol() const;
  // Token used in configuration notation: bare n for I_n.
  std::string token() const;

  bool operator==(const KodairaType& o) const { return kind == o.kind && n == o.n; }
  bool operator!=(const KodairaType& o) const { return !(*this == o); }
};

// Throws ParseError. Accepts "II", "I0*", "I_3", "I3", bare "3".
KodairaType parse_kodaira(const std::string& s);

struct FibreInvariants {
  int delta = 0;
  int r = 0;
  ADELattice lattice;
  long long d = 1;
  std::optional<std::string> lang_case;
};

// (r, lattice, d) of a Kodaira symbol.
struct LatticeData {
  int r;
  ADELattice lattice;
  long long d;
};
LatticeData invariants(const KodairaType& t);
// Lang case label for an additive (type, delta); "4" for I0* with delta 6.
std::optional<std::string> lang_case(const KodairaType& t, int delta);
// The additive type and delta named by a Lang case label.
std::optional<std::pair<KodairaType, int>> lang_case_type(const std::string& label);
// All Lang case labels in table order.
const std::vector<std::string>& lang_case_labels();
FibreInvariants fibre_invariants(const KodairaType& t, int delta);

struct Fibre {
  KodairaType type;
  int delta = -1;  // -1 when not determined by the notation

  bool operator==(const Fibre& o) const { return type == o.type && delta == o.delta; }
};

// Multiset of singular fibres, kept in canonical order: additive fibres by
// decreasing (r, delta), then I_n by decreasing n.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::vector<Fibre> fibres);

  const std::vector<Fibre>& fibres() const { return fibres_; }
  int delta_sum() const;
  int additive_count() const;
  int multiplicative_count() const;
  // Multiplicative parts n (for I_n), decreasing.
  std::vector<int> partition() const;
  ADELattice lattice() const;
  int rank() const;
  long long disc_product() const;

  // Printed notation, e.g. "II 5 2 1^2".
  std::string to_string() const;
  // Same types; deltas compared only where both sides know them.
  bool matches(const Configuration& o) const;
  bool operator==(const Configuration& o) const { return fibres_ == o.fibres_; }

 private:
  std::vector<Fibre> fibres_;
};

// Parse printed notation; when exactly one additive fibre is present its delta
// is inferred from sum delta = 12.
Configuration parse_configuration(const std::string& s);

// A place of P^1: a monic irreducible polynomial, or infinity.
struct Place {
  bool infinity = false;
  Poly poly;
  std::string to_string() const;
};

struct PlaceResult {
  Place place;
  KodairaType type;
  FibreInvariants inv;
  // Number of geometric points (degree of the place).
  int count = 1;
};

struct Classification {
  std::vector<PlaceResult> places;
  Configuration config;
};

// Tate's algorithm at t = 0 for a model over its own field; delta is ord_0 of
// the discriminant. Throws NonMinimalError.
KodairaType tate_at_zero(const WeierstrassModel& m, int delta);
// Classify the fibre at a place dividing the discriminant.
PlaceResult tate_classify(const WeierstrassModel& m, const Place& place);
// All singular fibres, including infinity.
Classification classify_all(const WeierstrassModel& m, uint64_t seed = 0);
// Configuration only; avoids factoring multiplicative places.
Configuration classify_config(const WeierstrassModel& m);

}  // namespace res3
