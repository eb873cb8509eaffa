#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "res3/ade.hpp"
#include "res3/kodaira.hpp"

namespace res3 {

struct E8SearchStats {
  uint64_t nodes = 0;
  bool budget_exhausted = false;
};

// Default node budget for one embedding search.
constexpr uint64_t kE8NodeBudget = 50'000'000;

// Backtracking over the 240 roots of E8 for a system of simple roots
// realising L. Throws ArithmeticError when rank(L) > 8 or the budget is hit.
bool embeds_in_E8_search(const ADELattice& L, E8SearchStats* stats = nullptr, uint64_t budget = kE8NodeBudget);
// Rank <= 6 always embeds; rank 7 and 8 embed unless listed as exceptions.
bool embeds_in_E8_table(const ADELattice& L);
// The rank 7 and 8 exceptions used by the table oracle.
const std::vector<ADELattice>& e8_table_exceptions();
// Every direct sum of A_n (n>=1), D_n (n>=4), E_n (n=6,7,8) of rank 1..max_rank.
std::vector<ADELattice> all_ade_sums(int max_rank);

// The 240 E8 roots in doubled coordinates (all entries even, or all odd
// with an even number of negative entries). Inner products are 4x the true ones.
const std::vector<std::array<int8_t, 8>>& e8_roots_doubled();

// Lemma identifiers, in precedence order.
inline constexpr const char* kLemmaSigmaR = "sigma-r";
inline constexpr const char* kLemmaProdD = "prod-d";
inline constexpr const char* kLemmaLattice = "lattice";
inline constexpr const char* kLemmaMult3 = "mult3";
inline constexpr const char* kLemmaB2 = "b2";
inline constexpr const char* kLemmaAdd3 = "add3";
inline constexpr const char* kLemmaAlgman = "algman";

bool is_perfect_square(long long n);

// Purely multiplicative with three (not necessarily distinct) root triples:
// sum of floor(n/3) over the I_n is at least 3.
bool mult3_fires(const Configuration& cfg);

// Violated numeric lemmas (sigma-r, prod-d, lattice) for a configuration.
std::vector<std::string> lemma_checks(const Configuration& cfg);

}  // namespace res3
