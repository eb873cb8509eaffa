#include "res3/census.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "res3/error.hpp"
#include "res3/lattice.hpp"

namespace res3 {

// ---- configuration space ----

std::vector<Configuration> enumerate_multiplicative() {
  std::vector<std::vector<int>> parts;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int min_part) {
    if (rest == 0) {
      parts.push_back(cur);
      return;
    }
    for (int p = min_part; p <= rest; ++p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(12, 1);
  // Increasing part lists in lexicographic order.
  std::sort(parts.begin(), parts.end());
  std::vector<Configuration> out;
  for (const auto& p : parts) {
    std::vector<Fibre> fs;
    for (int n : p) fs.push_back({KodairaType::I(n), n});
    out.emplace_back(fs);
  }
  return out;
}

long long partition_count(int n) {
  std::vector<long long> p(size_t(n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    long long s = 0;
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      long long sign = (k % 2) ? 1 : -1;
      s += sign * p[size_t(m - g1)];
      if (g2 <= m) s += sign * p[size_t(m - g2)];
    }
    p[size_t(m)] = s;
  }
  return p[size_t(n)];
}

// ---- exclusion lemmas ----

B2Shape b2_shape(const std::string& lang_case) {
  const CaseShape& s = case_shape(lang_case);
  if (s.d2 < 0) return B2Shape::kZero;
  if (s.e2 == 2) return s.nz2 ? B2Shape::kDoubleNonzero : B2Shape::kDoubleMaybe;
  return s.nz2 ? B2Shape::kLinearNonzero : B2Shape::kLinear;
}

namespace {

bool b2_fires(const Configuration& cfg, B2Shape shape) {
  int a = cfg.additive_count(), m = cfg.multiplicative_count();
  switch (shape) {
    case B2Shape::kZero: return m >= 1;
    case B2Shape::kDoubleNonzero: return a >= 2;
    case B2Shape::kDoubleMaybe: return a >= 2 && m >= 1;
    case B2Shape::kLinear: return a >= 3 && m >= 1;
    case B2Shape::kLinearNonzero: return a >= 3;
  }
  return false;
}

// X 3^2 2 1 and its specialisations: the I_3 fibres may merge with each
// other or with the I_2 or I_1 (not both into one fibre), and the I_2 or the
// I_1 (not both) may merge into X.
const std::vector<std::vector<int>>& add3_patterns() {
  static const std::vector<std::vector<int>> p = {
      {3, 3, 2, 1}, {6, 2, 1}, {5, 3, 1}, {4, 3, 2}, {8, 1}, {7, 2}, {5, 4},
      {3, 3, 2},    {6, 2},    {5, 3},    {8},       {3, 3, 1}, {6, 1}, {4, 3}, {7},
  };
  return p;
}

}  // namespace

bool add3_fires(const Configuration& cfg) {
  if (cfg.additive_count() != 1) return false;
  std::vector<int> p = cfg.partition();
  std::sort(p.rbegin(), p.rend());
  for (const auto& q : add3_patterns())
    if (p == q) return true;
  return false;
}

const std::vector<std::string>& algman_list() {
  static const std::vector<std::string> l = {
      "II 3^2",   "II 6",       "IV 2^3",      "IV 4 2",       "IV 3 2 1",     "IV 5 1",
      "I1* 4 1",  "III 4^2 1",  "III 5 4",     "III III 3^2",  "III III 6",    "III II 3^2",
      "III II 6", "III III 4 2", "III II 4 2",
  };
  return l;
}

bool algman_listed(const Configuration& cfg) {
  static const std::vector<std::string> canon = [] {
    std::vector<std::string> v;
    for (const auto& s : algman_list()) v.push_back(parse_configuration(s).to_string());
    return v;
  }();
  return std::find(canon.begin(), canon.end(), cfg.to_string()) != canon.end();
}

Exclusion exclusion_engine(const Configuration& cfg, const std::string& lang_case) {
  Exclusion ex;
  ex.firings = lemma_checks(cfg);
  if (mult3_fires(cfg)) ex.firings.push_back(kLemmaMult3);
  if (!lang_case.empty() && b2_fires(cfg, b2_shape(lang_case))) ex.firings.push_back(kLemmaB2);
  if (add3_fires(cfg)) ex.firings.push_back(kLemmaAdd3);
  if (algman_listed(cfg)) ex.firings.push_back(kLemmaAlgman);
  if (!ex.firings.empty()) ex.headline = ex.firings.front();
  return ex;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kExists: return "Exists";
    case Verdict::kExcluded: return "Excluded";
    case Verdict::kPaperProof: return "PaperProof";
    case Verdict::kUnresolved: return "Unresolved";
  }
  return "?";
}

// ---- census ----

namespace {

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    part.erase(0, part.find_first_not_of(' '));
    part.erase(part.find_last_not_of(' ') + 1);
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

std::string join(const std::vector<std::string>& v, const char* sep = ",") {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : sep) + s;
  return out;
}

// The configuration without one fibre of the given type.
std::optional<Configuration> residual_of(const Configuration& cfg, const KodairaType& t) {
  std::vector<Fibre> fs = cfg.fibres();
  for (size_t i = 0; i < fs.size(); ++i)
    if (fs[i].type == t) {
      fs.erase(fs.begin() + long(i));
      return Configuration(fs);
    }
  return std::nullopt;
}

std::optional<WitnessRecord> find_replacement(const WitnessRecord& w, const Configuration& cfg, bool additive,
                                              const CensusOptions& opt, std::string* why) {
  SearchOptions so = opt.search;
  so.jobs = 1;
  std::optional<Configuration> residual;
  if (additive) {
    auto ct = lang_case_type(w.lang_case);
    if (!ct) {
      *why = "record has no valid case";
      return std::nullopt;
    }
    residual = residual_of(cfg, ct->first);
    if (!residual) {
      *why = "configuration has no " + ct->first.symbol() + " fibre for case " + w.lang_case;
      return std::nullopt;
    }
  }
  for (int k : opt.search_degrees) {
    const Field& f = gf(k);
    auto r = additive ? search_additive(w.lang_case, *residual, f, so) : search_multiplicative(cfg, f, so);
    if (r) {
      r->id = w.id + "/" + r->id;
      return r;
    }
  }
  *why = "no replacement within the search budget";
  return std::nullopt;
}

}  // namespace

CensusEntry census_entry(const WitnessRecord& w, bool additive, const CensusOptions& opt) {
  CensusEntry e;
  e.id = w.id;
  e.config = w.config;
  e.lang_case = w.lang_case;
  e.additive = additive;
  e.cites = w.cites;
  Configuration cfg = parse_configuration(w.config);
  Exclusion ex = exclusion_engine(cfg, w.lang_case);
  e.firings = ex.firings;
  auto excluded_verdict = [&] {
    e.lemma = ex.headline;
    e.verdict = ex.headline == kLemmaAlgman ? Verdict::kPaperProof : Verdict::kExcluded;
  };

  if (w.kind == WitnessKind::kNonexistence) {
    e.claimed_exists = false;
    std::vector<std::string> missing;
    for (const auto& c : split_commas(w.cites)) {
      if (std::find(ex.firings.begin(), ex.firings.end(), c) != ex.firings.end()) continue;
      if (c == kLemmaLattice && cfg.rank() <= 8 && !embeds_in_E8_search(cfg.lattice())) {
        // The table misses this lattice; the search oracle confirms the lemma.
        e.firings.push_back(std::string(kLemmaLattice) + "(search)");
        e.note = cfg.lattice().to_string() + " is absent from the non-embedding table; the search oracle fires";
        continue;
      }
      if (c == kLemmaAlgman) {
        // A hand argument by citation; not on the lemma's own list.
        e.note = "cited algman, which does not list this configuration";
        if (ex.firings.empty()) ex.headline = kLemmaAlgman;
        continue;
      }
      missing.push_back(c);
    }
    if (ex.headline.empty()) {
      e.verdict = Verdict::kUnresolved;
      e.problem = "no lemma fires";
    } else {
      excluded_verdict();
    }
    if (!missing.empty()) e.problem += (e.problem.empty() ? "" : "; ") + std::string("cited lemma does not fire: ") + join(missing);
    // A hand argument is not machine-checked: look for a counterexample.
    if (e.verdict == Verdict::kPaperProof && opt.search_replacements) {
      std::string why;
      if (auto rep = find_replacement(w, cfg, additive, opt, &why)) {
        e.verdict = Verdict::kExists;
        e.witness = rep->id;
        e.replacement = rep;
        e.problem += (e.problem.empty() ? "" : "; ") + std::string("search witness contradicts the hand argument (") +
                     kLemmaAlgman + ")";
      }
    }
    e.agrees = e.problem.empty();
    return e;
  }

  e.claimed_exists = true;
  bool hand_only = !ex.firings.empty() && std::all_of(ex.firings.begin(), ex.firings.end(),
                                                      [](const std::string& l) { return l == kLemmaAlgman; });
  if (hand_only) e.note = "listed as existing although algman names it";
  if (!ex.firings.empty() && !hand_only) {
    excluded_verdict();
    e.problem = "lemma fires on a configuration listed as existing: " + join(ex.firings);
    if (w.kind == WitnessKind::kFullModel) {
      VerifyResult r = verify(w);
      if (r.found) e.detail = "printed model classifies as " + r.found->to_string();
    }
    return e;
  }
  bool need_search = w.kind == WitnessKind::kHeaderOnly;
  if (!need_search) {
    VerifyOptions vo;
    vo.strict_star = true;
    vo.seed = opt.search.seed;
    VerifyResult r = verify(w, vo);
    e.tags = r.tags;
    for (const auto& t : w.tags)
      if (std::find(e.tags.begin(), e.tags.end(), t) == e.tags.end()) e.tags.push_back(t);
    e.detail = r.detail;
    if (r.ok) {
      e.verdict = Verdict::kExists;
      e.witness = w.id;
      e.agrees = true;
      return e;
    }
    e.printed_failed = true;
    need_search = true;
  }
  if (need_search && opt.search_replacements) {
    std::string why;
    if (auto rep = find_replacement(w, cfg, additive, opt, &why)) {
      e.verdict = Verdict::kExists;
      e.witness = rep->id;
      e.replacement = rep;
      e.agrees = true;
      return e;
    }
    e.detail += (e.detail.empty() ? "" : "; ") + why;
  }
  if (hand_only) {
    excluded_verdict();
    e.problem = "lemma fires on a configuration listed as existing: " + join(ex.firings);
    return e;
  }
  e.verdict = Verdict::kUnresolved;
  e.problem = "no verified witness";
  return e;
}

bool CensusReport::reproduced() const {
  const CensusTotals& t = totals;
  const CensusTotals& p = kListedTotals;
  return problems.empty() && t.entries == p.entries && t.exists == p.exists && t.not_exists == p.not_exists &&
         t.unresolved == 0 && t.mult_exists == p.mult_exists && t.mult_not == p.mult_not &&
         t.add_exists == p.add_exists && t.add_not == p.add_not;
}

CensusReport run_census(const CensusOptions& opt) {
  std::vector<std::pair<WitnessRecord, bool>> work;
  for (auto& w : load_witness_file(opt.mult_path)) work.push_back({w, false});
  for (auto& w : load_witness_file(opt.add_path)) work.push_back({w, true});
  CensusReport rep;
  rep.entries.resize(work.size());
  std::atomic<size_t> next{0};
  std::vector<std::string> errors(work.size());
  auto worker = [&] {
    for (size_t i; (i = next++) < work.size();) {
      try {
        rep.entries[i] = census_entry(work[i].first, work[i].second, opt);
      } catch (const std::exception& ex) {
        CensusEntry& e = rep.entries[i];
        e.id = work[i].first.id;
        e.config = work[i].first.config;
        e.additive = work[i].second;
        e.claimed_exists = work[i].first.kind != WitnessKind::kNonexistence;
        e.verdict = Verdict::kUnresolved;
        e.problem = std::string("error: ") + ex.what();
      }
    }
  };
  int jobs = std::max(1, opt.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> ts;
    for (int j = 0; j < jobs; ++j) ts.emplace_back(worker);
    for (auto& t : ts) t.join();
  }

  // Multiplicative records must be the 77 partitions in list order.
  std::vector<Configuration> parts = enumerate_multiplicative();
  size_t m = 0;
  for (const auto& e : rep.entries)
    if (!e.additive) {
      if (m < parts.size() && parse_configuration(e.config).to_string() != parts[m].to_string())
        rep.problems.push_back(e.id + ": expected partition " + parts[m].to_string() + ", found " + e.config);
      ++m;
    }
  if (m != parts.size())
    rep.problems.push_back("multiplicative list has " + std::to_string(m) + " entries, expected " +
                           std::to_string(parts.size()));

  CensusTotals& t = rep.totals;
  for (const auto& e : rep.entries) {
    ++t.entries;
    bool ex = e.verdict == Verdict::kExists;
    bool no = e.verdict == Verdict::kExcluded || e.verdict == Verdict::kPaperProof;
    t.exists += ex;
    t.not_exists += no;
    t.unresolved += !ex && !no;
    (e.additive ? t.add_exists : t.mult_exists) += ex;
    (e.additive ? t.add_not : t.mult_not) += no;
    if (!e.agrees)
      rep.problems.push_back(e.id + " (" + e.config + "): " + e.problem + (e.detail.empty() ? "" : "; " + e.detail));
  }
  return rep;
}

// ---- comparison with other characteristics ----

const std::vector<CharRow>& printed_char_table() {
  struct Raw {
    const char* p;
    int c0, c2, c3;
  };
  static const std::vector<CharRow> rows = [] {
    static const Raw raw[] = {
      {"1^12", 1, 1, 1}, {"2 1^10", 1, 1, 1}, {"3 1^9", 1, 1, 1}, {"2^2 1^8", 1, 1, 1}, {"4 1^8", 1, 1, 1},
      {"3 2 1^7", 1, 1, 1}, {"5 1^7", 1, 1, 1}, {"2^3 1^6", 1, 1, 1}, {"4 2 1^6", 1, 1, 1}, {"3^2 1^6", 1, 1, 1},
      {"6 1^6", 1, 1, 1}, {"3 2^2 1^5", 1, 1, 1}, {"5 2 1^5", 1, 1, 1}, {"4 3 1^5", 1, 1, 1}, {"7 1^5", 1, 1, 1},
      {"2^4 1^4", 1, 1, 1}, {"4 2^2 1^4", 1, 1, 1}, {"3^2 2 1^4", 1, 1, 1}, {"6 2 1^4", 1, 1, 1},
      {"5 3 1^4", 1, 1, 1}, {"4^2 1^4", 1, 1, 1}, {"8 1^4", 1, 1, 1}, {"3 2^3 1^3", 1, 1, 1},
      {"5 2^2 1^3", 1, 1, 1}, {"4 3 2 1^3", 1, 1, 1}, {"7 2 1^3", 1, 1, 1}, {"3^3 1^3", 1, 1, 0},
      {"6 3 1^3", 1, 1, 0}, {"5 4 1^3", 1, 1, 1}, {"9 1^3", 1, 1, 0}, {"2^5 1^2", 1, 0, 1}, {"4 2^3 1^2", 1, 0, 1},
      {"3^2 2^2 1^2", 1, 1, 1}, {"6 2^2 1^2", 1, 0, 1}, {"5 3 2 1^2", 1, 1, 1}, {"4^2 2 1^2", 1, 0, 1},
      {"8 2 1^2", 1, 0, 1}, {"4 3^2 1^2", 0, 0, 0}, {"7 3 1^2", 0, 0, 0}, {"6 4 1^2", 0, 0, 0},
      {"5^2 1^2", 1, 1, 1}, {"10 1^2", 0, 0, 0}, {"3 2^4 1", 1, 0, 1}, {"5 2^3 1", 0, 0, 0},
      {"4 3 2^2 1", 1, 0, 1}, {"7 2^2 1", 0, 0, 0}, {"3^3 2 1", 1, 1, 0}, {"6 3 2 1", 1, 0, 0},
      {"5 4 2 1", 0, 0, 0}, {"9 2 1", 0, 0, 0}, {"5 3^2 1", 0, 0, 0}, {"4^2 3 1", 0, 0, 0}, {"8 3 1", 0, 0, 0},
      {"7 4 1", 0, 0, 0}, {"6 5 1", 0, 0, 0}, {"11 1", 0, 0, 0}, {"2^6", 1, 0, 1}, {"4 2^4", 1, 0, 1},
      {"3^2 2^3", 0, 0, 0}, {"6 2^3", 0, 0, 0}, {"5 3 2^2", 0, 0, 0}, {"4^2 2^2", 1, 0, 1}, {"8 2^2", 0, 0, 0},
      {"4 3^2 2", 0, 0, 0}, {"7 3 2", 0, 0, 0}, {"6 4 2", 0, 0, 0}, {"5^2 2", 0, 0, 0}, {"10 2", 0, 0, 0},
      {"3^4", 1, 1, 0}, {"6 3^2", 0, 0, 0}, {"5 4 3", 0, 0, 0}, {"9 3", 0, 0, 0}, {"4^3", 0, 0, 0},
      {"8 4", 0, 0, 0}, {"7 5", 0, 0, 0}, {"6^2", 0, 0, 0}, {"12", 0, 0, 0},
    };
    std::vector<CharRow> v;
    for (const Raw& r : raw) v.push_back({r.p, r.c0 != 0, r.c2 != 0, r.c3 != 0, r.c3 != 0});
    return v;
  }();
  return rows;
}

CharComparison char_comparison(const CensusReport& r) {
  std::map<std::string, bool> engine;
  for (const auto& e : r.entries)
    if (!e.additive) engine[parse_configuration(e.config).to_string()] = e.verdict == Verdict::kExists;
  CharComparison c;
  for (CharRow row : printed_char_table()) {
    std::string key = parse_configuration(row.partition).to_string();
    auto it = engine.find(key);
    if (it == engine.end()) throw Error("census has no entry for partition " + row.partition);
    row.char3_engine = it->second;
    c.char0_not_char3 += row.char0 && !row.char3_engine;
    c.char2_not_char3 += row.char2 && !row.char3_engine;
    c.char3_not_char2 += row.char3_engine && !row.char2;
    c.rows.push_back(row);
  }
  return c;
}

// ---- reports ----

std::string census_tsv(const CensusReport& r) {
  std::ostringstream os;
  os << "id\tconfig\tcase\tclaimed\tverdict\tlemma\tfirings\twitness\ttags\tagrees\tdetail\n";
  for (const auto& e : r.entries)
    os << e.id << "\t" << e.config << "\t" << e.lang_case << "\t" << (e.claimed_exists ? "exists" : "not") << "\t"
       << to_string(e.verdict) << "\t" << e.lemma << "\t" << join(e.firings) << "\t" << e.witness << "\t"
       << join(e.tags) << "\t" << (e.agrees ? "yes" : "no") << "\t" << (e.problem.empty() ? e.detail : e.problem)
       << "\n";
  return os.str();
}

std::string char_table_tsv(const CharComparison& c) {
  std::ostringstream os;
  os << "partition\tchar0\tchar2\tchar3_printed\tchar3_engine\n";
  auto mark = [](bool b) { return b ? "yes" : "no"; };
  for (const auto& row : c.rows)
    os << row.partition << "\t" << mark(row.char0) << "\t" << mark(row.char2) << "\t" << mark(row.char3_printed)
       << "\t" << mark(row.char3_engine) << "\n";
  return os.str();
}

std::string census_summary(const CensusReport& r) {
  const CensusTotals& t = r.totals;
  const CensusTotals& p = kListedTotals;
  std::ostringstream os;
  auto row = [&](const char* what, int got, int want) {
    os << "| " << what << " | " << got << " | " << want << " | " << (got == want ? "yes" : "NO") << " |\n";
  };
  os << "# Census\n\n| quantity | computed | listed | match |\n|---|---|---|---|\n";
  row("entries", t.entries, p.entries);
  row("exist", t.exists, p.exists);
  row("do not exist", t.not_exists, p.not_exists);
  row("unresolved", t.unresolved, 0);
  row("multiplicative exist", t.mult_exists, p.mult_exists);
  row("multiplicative do not exist", t.mult_not, p.mult_not);
  row("additive exist", t.add_exists, p.add_exists);
  row("additive do not exist", t.add_not, p.add_not);
  int failed = 0, replaced = 0;
  for (const auto& e : r.entries) {
    failed += e.printed_failed;
    replaced += e.printed_failed && e.replacement.has_value();
  }
  os << "\nPrinted witnesses that do not verify: " << failed << " (replaced by search: " << replaced << ").\n";
  os << "Disagreements with the lists: " << r.problems.size() << ".\n";
  CharComparison c = char_comparison(r);
  os << "\n## Other characteristics\n\n| count | computed | stated |\n|---|---|---|\n";
  os << "| exist in char 0, not char 3 | " << c.char0_not_char3 << " | " << kProseChar0NotChar3 << " |\n";
  os << "| exist in char 2, not char 3 | " << c.char2_not_char3 << " | " << kProseChar2NotChar3 << " |\n";
  os << "| exist in char 3, not char 2 | " << c.char3_not_char2 << " | " << kProseChar3NotChar2 << " |\n";
  int col = 0;
  for (const auto& row2 : c.rows) col += row2.char3_engine != row2.char3_printed;
  os << "\nRows where the computed char 3 verdict differs from the printed column: " << col << ".\n";
  os << "\nResult: " << (r.reproduced() ? "all list verdicts and totals reproduced" : "discrepancies found") << ".\n";
  return os.str();
}

std::string census_annex(const CensusReport& r) {
  std::ostringstream os;
  os << "# Discrepancy annex\n\n## Printed witnesses that do not verify\n\n";
  os << "| id | config | tags | problem | resolution |\n|---|---|---|---|---|\n";
  int n = 0;
  for (const auto& e : r.entries) {
    if (!e.printed_failed) continue;
    ++n;
    os << "| " << e.id << " | " << e.config << " | " << join(e.tags) << " | " << e.detail << " | "
       << (e.replacement ? "replaced by " + e.replacement->id : std::string("UNRESOLVED")) << " |\n";
  }
  os << "\n" << n << " records.\n\n## Replacement witnesses\n\n";
  for (const auto& e : r.entries)
    if (e.replacement) os << "```\n" << format_record(*e.replacement) << "```\n\n";
  os << "## Cross-check mismatches on verified witnesses\n\n";
  os << "The governing data (product form or model) verifies; a printed cross-check line does not.\n\n";
  os << "| id | config | tags | detail |\n|---|---|---|---|\n";
  for (const auto& e : r.entries)
    if (!e.printed_failed && e.verdict == Verdict::kExists && !e.tags.empty())
      os << "| " << e.id << " | " << e.config << " | " << join(e.tags) << " | " << e.detail << " |\n";
  os << "\n## Citation remarks\n\n";
  for (const auto& e : r.entries)
    if (!e.note.empty()) os << "- " << e.id << " (" << e.config << "): " << e.note << "\n";
  os << "\n## Disagreements with the lists\n\n";
  if (r.problems.empty()) os << "None.\n";
  for (const auto& p : r.problems) os << "- " << p << "\n";
  return os.str();
}

void write_census(const CensusReport& r, const std::string& dir) {
  std::filesystem::create_directories(dir);
  auto put = [&](const char* name, const std::string& body) {
    std::ofstream out(std::filesystem::path(dir) / name);
    if (!out) throw Error("cannot write " + (std::filesystem::path(dir) / name).string());
    out << body;
  };
  put("census.tsv", census_tsv(r));
  put("summary.md", census_summary(r));
  put("annex.md", census_annex(r));
  put("table3.tsv", char_table_tsv(char_comparison(r)));
}

}  // namespace res3
