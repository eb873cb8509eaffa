#include "res3/ade.hpp"

#include <algorithm>
#include <cctype>

#include "res3/error.hpp"

namespace res3 {

namespace {

int family_order(char f) { return f == 'E' ? 0 : f == 'D' ? 1 : 2; }

void validate(char f, int n) {
  bool ok = (f == 'A' && n >= 1) || (f == 'D' && n >= 4) || (f == 'E' && n >= 6 && n <= 8);
  if (!ok) throw ParseError(std::string("invalid root lattice ") + f + std::to_string(n));
}

}  // namespace

ADELattice::ADELattice(std::vector<std::pair<char, int>> comps) : comps_(std::move(comps)) {
  for (auto& [f, n] : comps_) validate(f, n);
  std::sort(comps_.begin(), comps_.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return family_order(a.first) < family_order(b.first);
    return a.second > b.second;
  });
}

int ADELattice::rank() const {
  int r = 0;
  for (auto& [f, n] : comps_) r += n;
  return r;
}

long long component_disc(char family, int n) {
  switch (family) {
    case 'A': return n + 1;
    case 'D': return 4;
    case 'E': return 9 - n;
    default: throw ParseError("unknown lattice family");
  }
}

long long ADELattice::disc() const {
  long long d = 1;
  for (auto& [f, n] : comps_) d *= component_disc(f, n);
  return d;
}

ADELattice ADELattice::operator+(const ADELattice& o) const {
  std::vector<std::pair<char, int>> c = comps_;
  c.insert(c.end(), o.comps_.begin(), o.comps_.end());
  return ADELattice(std::move(c));
}

std::string ADELattice::to_string() const {
  if (comps_.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < comps_.size();) {
    size_t j = i;
    while (j < comps_.size() && comps_[j] == comps_[i]) ++j;
    if (!out.empty()) out += "+";
    out += comps_[i].first + std::to_string(comps_[i].second);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

ADELattice parse_lattice(const std::string& s_in) {
  std::string s;
  for (char c : s_in)
    if (!isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "0") return ADELattice();
  if (s.empty()) throw ParseError("empty lattice");
  std::vector<std::pair<char, int>> comps;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t end = s.find('+', pos);
    std::string tok = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    if (tok.size() < 2) throw ParseError("bad lattice term '" + tok + "'");
    char f = char(toupper(static_cast<unsigned char>(tok[0])));
    if (f != 'A' && f != 'D' && f != 'E') throw ParseError("bad lattice family in '" + tok + "'");
    size_t caret = tok.find('^');
    std::string rank_s = tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
    std::string mult_s = caret == std::string::npos ? "1" : tok.substr(caret + 1);
    auto to_int = [&](const std::string& x) {
      if (x.empty() || !std::all_of(x.begin(), x.end(), ::isdigit)) throw ParseError("bad number in '" + tok + "'");
      return std::stoi(x);
    };
    int n = to_int(rank_s), k = to_int(mult_s);
    if (k < 1) throw ParseError("bad multiplicity in '" + tok + "'");
    validate(f, n);
    for (int i = 0; i < k; ++i) comps.emplace_back(f, n);
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  return ADELattice(std::move(comps));
}

}  // namespace res3
