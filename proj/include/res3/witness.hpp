#pragma once

#include <optional>
#include <string>
#include <vector>

#include "res3/expr.hpp"
#include "res3/kodaira.hpp"
#include "res3/surface.hpp"

namespace res3 {

enum class WitnessKind {
  kMultiplicativeDelta,  // factored and expanded discriminant
  kFullModel,            // Weierstrass model
  kNonexistence,         // claimed not to exist, with cited lemmas
  kHeaderOnly,           // claimed to exist with no printed model
};

std::string to_string(WitnessKind k);

struct WitnessRecord {
  std::string id;
  WitnessKind kind = WitnessKind::kFullModel;
  // "auto" picks the smallest GF(3^k) in which the constraints are solvable.
  std::string field = "auto";
  // Either b2/b4/b6 or a right-hand side in x and t.
  std::string b2, b4, b6, weierstrass;
  std::string delta_factored, delta_expanded;
  std::string config;
  std::string constraints;
  // Lemma ids cited for nonexistence, ','-separated.
  std::string cites;
  // Case label of the worst fibre for additive items.
  std::string lang_case;
  std::string source;
  // Verbatim text kept for records that cannot be read as printed.
  std::string verbatim;
  // Tags asserted in the file (e.g. UNPARSEABLE).
  std::vector<std::string> tags;
  int line = 0;
};

// Line-oriented "key: value" records separated by blank lines; '#' starts a
// comment line. Throws ParseError with the line number.
std::vector<WitnessRecord> parse_witness_text(const std::string& text);
std::vector<WitnessRecord> load_witness_file(const std::string& path);
std::string format_record(const WitnessRecord& w);

inline constexpr const char* kTagPrintMismatch = "PRINT-MISMATCH";
inline constexpr const char* kTagUnparseable = "UNPARSEABLE";
inline constexpr const char* kTagPaperTypo = "PAPER-TYPO";

struct VerifyOptions {
  // Require the proof-convention normal form with zero t coefficient.
  bool strict_star = false;
  // Count mismatches in printed cross-check lines as failures.
  bool strict_print = false;
  // Largest extension degree tried when the field is "auto".
  int max_field_degree = 6;
  uint64_t seed = 0;
};

struct VerifyResult {
  // The record establishes its claimed configuration.
  bool ok = false;
  std::vector<std::string> tags;
  std::string detail;
  const Field* field = nullptr;
  Assignment assignment;
  std::optional<Poly> delta;
  std::optional<WeierstrassModel> model;
  std::optional<Configuration> found;
};

// Nonexistence and header-only records verify trivially (ok = true, nothing checked).
VerifyResult verify(const WitnessRecord& w, const VerifyOptions& opt = {});

// The model a record describes, over its field or the smallest GF(3^k),
// k <= max_field_degree, where its constraints are solvable (first solution).
// Throws ParseError or ArithmeticError.
WeierstrassModel instantiate_model(const WitnessRecord& w, int max_field_degree = 6);

// Model with b2 = t whose discriminant is (1/l)^3 times the star-form
// polynomial. Throws ArithmeticError if l or m is zero, m^3 != n^2 l^3, or
// the form has a t coefficient.
WeierstrassModel reconstruct_from_star_form(const StarForm& f, const Elem& xi1, const Elem& xi2, const Elem& xi3);

struct SearchOptions {
  uint64_t budget = 1'000'000;
  uint64_t seed = 0;
  int jobs = 1;
};

struct SearchStats {
  uint64_t candidates = 0;
  bool exhausted = false;
};

// Random factored discriminants with the target multiplicities (one root of
// the highest multiplicity pinned at t = 1) over f, kept when they are in
// either normal form. Returns a verifying record or nothing.
std::optional<WitnessRecord> search_multiplicative(const Configuration& target, const Field& f,
                                                   const SearchOptions& opt = {}, SearchStats* stats = nullptr);

// Coefficient shape of a case: b2 = t^e2 c, B = t^e4 c', C = t^e6 c'' with
// the Weierstrass form y^2 = x^3 + b2 x^2 + B x + C.
struct CaseShape {
  std::string label;
  // Valuation and free-degree of each coefficient; deg < 0 means absent.
  int e2, d2, e4, d4, e6, d6;
  // The cofactor must not vanish at t = 0.
  bool nz2, nz4, nz6;
};
const CaseShape& case_shape(const std::string& label);
const std::vector<CaseShape>& case_shapes();

// Enumerates (or, when the space exceeds the budget, samples with a seeded
// generator) the free coefficients of the case's shape and returns the
// first model whose configuration is the case's fibre plus `residual`.
std::optional<WitnessRecord> search_additive(const std::string& lang_case, const Configuration& residual,
                                             const Field& f, const SearchOptions& opt = {},
                                             SearchStats* stats = nullptr);

}  // namespace res3
