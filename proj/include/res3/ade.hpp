#pragma once

#include <string>
#include <utility>
#include <vector>

namespace res3 {

// Direct sum of irreducible root lattices A_n (n >= 1), D_n (n >= 4),
// E_n (n in {6,7,8}). Components are kept in canonical order: E, D, A,
// each by decreasing rank.
class ADELattice {
 public:
  ADELattice() = default;
  explicit ADELattice(std::vector<std::pair<char, int>> comps);

  static ADELattice A(int n) { return ADELattice({{'A', n}}); }
  static ADELattice D(int n) { return ADELattice({{'D', n}}); }
  static ADELattice E(int n) { return ADELattice({{'E', n}}); }

  const std::vector<std::pair<char, int>>& components() const { return comps_; }
  bool trivial() const { return comps_.empty(); }
  int rank() const;
  // Product of component discriminants.
  long long disc() const;

  ADELattice operator+(const ADELattice& o) const;
  bool operator==(const ADELattice& o) const { return comps_ == o.comps_; }
  bool operator<(const ADELattice& o) const { return comps_ < o.comps_; }

  // "A2+A1^5", "D4+A2+A1", "E8"; "0" for the trivial lattice.
  std::string to_string() const;

 private:
  std::vector<std::pair<char, int>> comps_;
};

// Inverse of ADELattice::to_string; throws ParseError.
ADELattice parse_lattice(const std::string& s);
// Discriminant of a single component.
long long component_disc(char family, int n);

}  // namespace res3
