#include "res3/lattice.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

namespace res3 {

// ---- E8 roots ----

const std::vector<std::array<int8_t, 8>>& e8_roots_doubled() {
  static const std::vector<std::array<int8_t, 8>> roots = [] {
    std::vector<std::array<int8_t, 8>> out;
    // (+-2, +-2, 0^6) up to position.
    for (int i = 0; i < 8; ++i)
      for (int j = i + 1; j < 8; ++j)
        for (int si : {2, -2})
          for (int sj : {2, -2}) {
            std::array<int8_t, 8> v{};
            v[i] = int8_t(si);
            v[j] = int8_t(sj);
            out.push_back(v);
          }
    // (+-1)^8 with an even number of minus signs.
    for (int mask = 0; mask < 256; ++mask) {
      if (__builtin_popcount(unsigned(mask)) % 2) continue;
      std::array<int8_t, 8> v{};
      for (int i = 0; i < 8; ++i) v[i] = (mask >> i) & 1 ? -1 : 1;
      out.push_back(v);
    }
    // Positive roots (first nonzero entry > 0) first.
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      auto pos = [](const std::array<int8_t, 8>& v) {
        for (int8_t x : v)
          if (x) return x > 0;
        return false;
      };
      return pos(a) && !pos(b);
    });
    return out;
  }();
  return roots;
}

namespace {

bool is_positive(const std::array<int8_t, 8>& v) {
  for (int8_t x : v)
    if (x) return x > 0;
  return false;
}

struct Gram {
  std::vector<std::vector<int8_t>> ip;
  std::vector<bool> positive;
};

const Gram& gram() {
  static const Gram g = [] {
    const auto& R = e8_roots_doubled();
    Gram out;
    out.ip.assign(R.size(), std::vector<int8_t>(R.size(), 0));
    for (size_t a = 0; a < R.size(); ++a) {
      out.positive.push_back(is_positive(R[a]));
      for (size_t b = 0; b < R.size(); ++b) {
        int s = 0;
        for (int i = 0; i < 8; ++i) s += R[a][i] * R[b][i];
        out.ip[a][b] = int8_t(s / 4);
      }
    }
    return out;
  }();
  return g;
}

struct Node {
  int component;
  bool first_of_component;
  bool a1;
  // Index of the previous identical component's first node, or -1.
  int prev_identical_first;
  // Required inner products with every earlier node.
  std::vector<int8_t> req;
};

// Dynkin edges (i, j) with i < j for a single component, nodes in
// attachment order.
std::vector<std::pair<int, int>> dynkin_edges(char f, int n) {
  std::vector<std::pair<int, int>> e;
  if (f == 'A') {
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  } else if (f == 'D') {
    for (int i = 0; i + 2 < n; ++i) e.push_back({i, i + 1});
    e.push_back({n - 3, n - 1});
  } else {
    for (int i = 0; i + 2 < n; ++i) e.push_back({i, i + 1});
    e.push_back({2, n - 1});
  }
  return e;
}

}  // namespace

bool embeds_in_E8_search(const ADELattice& L, E8SearchStats* stats, uint64_t budget) {
  if (L.rank() > 8) throw ArithmeticError("lattice rank exceeds 8");
  if (L.trivial()) return true;
  const Gram& G = gram();
  const size_t R = G.ip.size();
  std::vector<Node> nodes;
  const auto& comps = L.components();
  int prev_first = -1;
  for (size_t c = 0; c < comps.size(); ++c) {
    auto [f, n] = comps[c];
    int base = int(nodes.size());
    bool same_as_prev = c > 0 && comps[c - 1] == comps[c];
    auto edges = dynkin_edges(f, n);
    for (int i = 0; i < n; ++i) {
      Node nd;
      nd.component = int(c);
      nd.first_of_component = i == 0;
      nd.a1 = f == 'A' && n == 1;
      nd.prev_identical_first = (i == 0 && same_as_prev) ? prev_first : -1;
      nd.req.assign(size_t(base + i), 0);
      for (auto [a, b] : edges)
        if (b == i) nd.req[size_t(base + a)] = -1;
      nodes.push_back(std::move(nd));
    }
    prev_first = base;
  }
  std::vector<int> chosen(nodes.size(), -1);
  uint64_t count = 0;
  bool exhausted = false;
  std::function<bool(size_t)> place = [&](size_t k) -> bool {
    if (k == nodes.size()) return true;
    const Node& nd = nodes[k];
    size_t lo = 0;
    if (nd.prev_identical_first >= 0) lo = size_t(chosen[size_t(nd.prev_identical_first)]) + 1;
    size_t hi = (k == 0) ? 1 : R;
    for (size_t r = lo; r < hi; ++r) {
      if (nd.a1 && !G.positive[r]) continue;
      bool ok = true;
      for (size_t j = 0; j < k && ok; ++j) ok = G.ip[r][size_t(chosen[j])] == nd.req[j];
      if (!ok) continue;
      if (++count > budget) {
        exhausted = true;
        return false;
      }
      chosen[k] = int(r);
      if (place(k + 1)) return true;
      if (exhausted) return false;
    }
    return false;
  };
  bool found = place(0);
  if (stats) {
    stats->nodes = count;
    stats->budget_exhausted = exhausted;
  }
  if (exhausted) throw ArithmeticError("E8 embedding search exceeded its node budget");
  return found;
}

const std::vector<ADELattice>& e8_table_exceptions() {
  static const std::vector<ADELattice> t = [] {
    std::vector<ADELattice> v;
    for (const char* s : {
             // rank 7
             "A2+A1^5", "A2^2+A1^3", "A3+A2^2", "A4+A1^3", "D4+A2+A1",
             // rank 8
             "A2+A1^6", "A2^2+A1^4", "A3+A1^5", "A3+A2+A1^3", "A2^3+A1^2", "A3+A2^2+A1", "A3^2+A2", "A4+A2^2",
             "A5+A3", "A6+A2", "A4+A1^4", "A4+A2+A1^2", "A4+A3+A1", "A5+A1^3", "A6+A1^2", "D4+A2+A1^2", "D4+A2^2",
             "D4+A3+A1", "D5+A2+A1", "D6+A2", "D7+A1", "D5+A1^3", "E6+A1^2"})
      v.push_back(parse_lattice(s));
    return v;
  }();
  return t;
}

bool embeds_in_E8_table(const ADELattice& L) {
  int r = L.rank();
  if (r > 8) throw ArithmeticError("lattice rank exceeds 8");
  if (r <= 6) return true;
  const auto& ex = e8_table_exceptions();
  return std::find(ex.begin(), ex.end(), L) == ex.end();
}

std::vector<ADELattice> all_ade_sums(int max_rank) {
  std::vector<std::pair<char, int>> kinds;
  for (int n = 1; n <= 8; ++n) kinds.push_back({'A', n});
  for (int n = 4; n <= 8; ++n) kinds.push_back({'D', n});
  for (int n = 6; n <= 8; ++n) kinds.push_back({'E', n});
  std::vector<ADELattice> out;
  std::vector<std::pair<char, int>> cur;
  std::function<void(size_t, int)> rec = [&](size_t from, int rank) {
    if (!cur.empty()) out.push_back(ADELattice(cur));
    for (size_t i = from; i < kinds.size(); ++i) {
      if (rank + kinds[i].second > max_rank) continue;
      cur.push_back(kinds[i]);
      rec(i, rank + kinds[i].second);
      cur.pop_back();
    }
  };
  rec(0, 0);
  std::sort(out.begin(), out.end(), [](const ADELattice& a, const ADELattice& b) {
    if (a.rank() != b.rank()) return a.rank() < b.rank();
    return a.to_string() < b.to_string();
  });
  return out;
}

bool is_perfect_square(long long n) {
  if (n < 0) return false;
  long long s = (long long)std::llround(std::sqrt(double(n)));
  for (long long c = std::max(0LL, s - 2); c <= s + 2; ++c)
    if (c * c == n) return true;
  return false;
}

bool mult3_fires(const Configuration& cfg) {
  if (cfg.additive_count() > 0) return false;
  int big = 0;
  for (int n : cfg.partition()) big += n / 3;
  return big >= 3;
}

std::vector<std::string> lemma_checks(const Configuration& cfg) {
  std::vector<std::string> out;
  bool delta_known = true;
  for (const Fibre& f : cfg.fibres())
    if (f.delta < 0) delta_known = false;
  int r = cfg.rank();
  if ((delta_known && cfg.delta_sum() != 12) || r > 8) out.push_back(kLemmaSigmaR);
  if (r == 8 && !is_perfect_square(cfg.disc_product())) out.push_back(kLemmaProdD);
  if (r <= 8 && !embeds_in_E8_table(cfg.lattice())) out.push_back(kLemmaLattice);
  return out;
}

}  // namespace res3
