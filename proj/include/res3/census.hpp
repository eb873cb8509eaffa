#pragma once

#include <optional>
#include <string>
#include <vector>

#include "res3/kodaira.hpp"
#include "res3/witness.hpp"

namespace res3 {

// The 77 partitions of 12 as pure I_n configurations, in list order: the
// parts written in increasing order, compared lexicographically.
std::vector<Configuration> enumerate_multiplicative();

// Independent count of the partitions of n (Euler's pentagonal recurrence).
long long partition_count(int n);

// How the worst fibre's case constrains b2 = t^e c.
enum class B2Shape {
  kZero,          // b2 = 0: every singular fibre is additive
  kDoubleNonzero, // b2 = c t^2, c != 0: one additive fibre
  kDoubleMaybe,   // b2 = c t^2: as above unless c = 0
  kLinear,        // b2 = t c1: at most two additive fibres unless b2 = 0
  kLinearNonzero, // b2 = t c1, c1(0) != 0: at most two additive fibres
};
B2Shape b2_shape(const std::string& lang_case);

struct Exclusion {
  // Every lemma that fires, in precedence order.
  std::vector<std::string> firings;
  // The first firing lemma, or empty.
  std::string headline;
};

// Lemma precedence: sigma-r, prod-d, lattice, mult3, b2, add3, algman. The
// b2 rule needs the case of the worst fibre and is skipped without it.
Exclusion exclusion_engine(const Configuration& cfg, const std::string& lang_case = "");

bool add3_fires(const Configuration& cfg);
// The explicit list of configurations shown impossible by hand.
bool algman_listed(const Configuration& cfg);
const std::vector<std::string>& algman_list();

enum class Verdict { kExists, kExcluded, kPaperProof, kUnresolved };
std::string to_string(Verdict v);

struct CensusEntry {
  std::string id;
  std::string config;
  std::string lang_case;
  bool additive = false;
  // What the list claims.
  bool claimed_exists = false;
  std::string cites;
  Verdict verdict = Verdict::kUnresolved;
  std::string lemma;
  std::vector<std::string> firings;
  // Record id or search id backing an Exists verdict.
  std::string witness;
  std::vector<std::string> tags;
  // The printed witness does not establish the claim on its own.
  bool printed_failed = false;
  std::string detail;
  std::optional<WitnessRecord> replacement;
  // Verdict and citation agree with the list.
  bool agrees = false;
  std::string problem;
  // Citation remarks that do not change the verdict.
  std::string note;
};

struct CensusOptions {
  std::string mult_path = "data/witnesses_mult.txt";
  std::string add_path = "data/witnesses_add.txt";
  SearchOptions search;
  // Extension degrees tried by replacement searches, in order.
  std::vector<int> search_degrees = {1, 2};
  bool search_replacements = true;
  int jobs = 1;
};

struct CensusTotals {
  int entries = 0, exists = 0, not_exists = 0, unresolved = 0;
  int mult_exists = 0, mult_not = 0, add_exists = 0, add_not = 0;
};

struct CensusReport {
  std::vector<CensusEntry> entries;
  CensusTotals totals;
  std::vector<std::string> problems;
  // All list verdicts and totals reproduced.
  bool reproduced() const;
};

inline constexpr CensusTotals kListedTotals{372, 267, 105, 0, 40, 37, 227, 68};

CensusEntry census_entry(const WitnessRecord& w, bool additive, const CensusOptions& opt);
CensusReport run_census(const CensusOptions& opt = {});

struct CharRow {
  std::string partition;
  bool char0, char2, char3_printed, char3_engine;
};
struct CharComparison {
  std::vector<CharRow> rows;
  int char0_not_char3 = 0, char2_not_char3 = 0, char3_not_char2 = 0;
};
inline constexpr int kProseChar0NotChar3 = 6, kProseChar2NotChar3 = 6, kProseChar3NotChar2 = 10;

// The printed three-column table for the 77 partitions, char 3 as printed.
const std::vector<CharRow>& printed_char_table();
// Char 3 column replaced by the census verdicts.
CharComparison char_comparison(const CensusReport& r);

// census.tsv, summary.md, annex.md and table3.tsv under dir.
void write_census(const CensusReport& r, const std::string& dir);
std::string census_summary(const CensusReport& r);
std::string census_annex(const CensusReport& r);
std::string census_tsv(const CensusReport& r);
std::string char_table_tsv(const CharComparison& c);

}  // namespace res3
