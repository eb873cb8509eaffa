#include "res3/witness.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "res3/error.hpp"
#include "res3/lattice.hpp"

namespace res3 {

std::string to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::kMultiplicativeDelta: return "mult";
    case WitnessKind::kFullModel: return "model";
    case WitnessKind::kNonexistence: return "none";
    case WitnessKind::kHeaderOnly: return "header";
  }
  return "?";
}

// ---- record I/O ----

namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

WitnessKind parse_kind(const std::string& s, int line) {
  if (s == "mult") return WitnessKind::kMultiplicativeDelta;
  if (s == "model") return WitnessKind::kFullModel;
  if (s == "none") return WitnessKind::kNonexistence;
  if (s == "header") return WitnessKind::kHeaderOnly;
  throw ParseError("line " + std::to_string(line) + ": unknown kind \"" + s + "\"");
}

std::string* slot(WitnessRecord& w, const std::string& key) {
  if (key == "id") return &w.id;
  if (key == "field") return &w.field;
  if (key == "b2") return &w.b2;
  if (key == "b4") return &w.b4;
  if (key == "b6") return &w.b6;
  if (key == "weierstrass") return &w.weierstrass;
  if (key == "delta_factored") return &w.delta_factored;
  if (key == "delta_expanded") return &w.delta_expanded;
  if (key == "config") return &w.config;
  if (key == "constraints") return &w.constraints;
  if (key == "cites") return &w.cites;
  if (key == "case") return &w.lang_case;
  if (key == "source") return &w.source;
  if (key == "verbatim") return &w.verbatim;
  return nullptr;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    part = strip(part);
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

struct Pending {
  WitnessRecord w;
  std::map<std::string, std::string> raw;
  bool open = false;
};

void finish(Pending& p, std::vector<WitnessRecord>& out) {
  if (!p.open) return;
  WitnessRecord& w = p.w;
  auto need = [&](const char* k) {
    if (!p.raw.count(k)) throw ParseError("line " + std::to_string(w.line) + ": record lacks \"" + k + "\"");
  };
  need("id");
  need("kind");
  need("config");
  for (auto& [k, v] : p.raw) {
    if (k == "kind") {
      w.kind = parse_kind(v, w.line);
    } else if (k == "tags") {
      w.tags = split_list(v);
    } else {
      *slot(w, k) = v;
    }
  }
  try {
    parse_configuration(w.config);
  } catch (const ParseError& e) {
    throw ParseError("line " + std::to_string(w.line) + ": " + e.what());
  }
  out.push_back(std::move(w));
  p = Pending{};
}

}  // namespace

std::vector<WitnessRecord> parse_witness_text(const std::string& text) {
  std::vector<WitnessRecord> out;
  Pending cur;
  std::string last_key;
  std::stringstream ss(text);
  std::string line;
  int no = 0;
  while (std::getline(ss, line)) {
    ++no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (strip(line).empty()) {
      finish(cur, out);
      last_key.clear();
      continue;
    }
    if (strip(line)[0] == '#') continue;
    if (line[0] == ' ' || line[0] == '\t') {
      // Continuation of the previous value.
      if (last_key.empty()) throw ParseError("line " + std::to_string(no) + ": continuation without a key");
      cur.raw[last_key] += " " + strip(line);
      continue;
    }
    size_t colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("line " + std::to_string(no) + ": expected \"key: value\"");
    std::string key = strip(line.substr(0, colon));
    std::string value = strip(line.substr(colon + 1));
    WitnessRecord probe;
    if (key != "kind" && key != "tags" && !slot(probe, key))
      throw ParseError("line " + std::to_string(no) + ": unknown key \"" + key + "\"");
    if (!cur.open) {
      cur.open = true;
      cur.w.line = no;
    }
    if (cur.raw.count(key)) throw ParseError("line " + std::to_string(no) + ": duplicate key \"" + key + "\"");
    cur.raw[key] = value;
    last_key = key;
  }
  finish(cur, out);
  return out;
}

std::vector<WitnessRecord> load_witness_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open witness file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_witness_text(ss.str());
}

std::string format_record(const WitnessRecord& w) {
  std::ostringstream os;
  auto put = [&](const char* k, const std::string& v) {
    if (!v.empty()) os << k << ": " << v << "\n";
  };
  put("id", w.id);
  put("kind", to_string(w.kind));
  if (w.field != "auto") put("field", w.field);
  put("config", w.config);
  put("case", w.lang_case);
  put("weierstrass", w.weierstrass);
  put("b2", w.b2);
  put("b4", w.b4);
  put("b6", w.b6);
  put("delta_factored", w.delta_factored);
  put("delta_expanded", w.delta_expanded);
  put("constraints", w.constraints);
  put("cites", w.cites);
  put("source", w.source);
  put("verbatim", w.verbatim);
  std::string tags;
  for (auto& t : w.tags) tags += (tags.empty() ? "" : ",") + t;
  put("tags", tags);
  return os.str();
}

// ---- verification ----

namespace {

bool has_tag(const std::vector<std::string>& tags, const std::string& t) {
  return std::find(tags.begin(), tags.end(), t) != tags.end();
}

void add_tag(VerifyResult& r, const std::string& t) {
  if (!has_tag(r.tags, t)) r.tags.push_back(t);
}

// First coefficient where a and b differ.
std::string first_difference(const Poly& a, const Poly& b, const char* what_a, const char* what_b) {
  int n = std::max(a.degree(), b.degree());
  for (int i = n; i >= 0; --i)
    if (a.coeff(i) != b.coeff(i))
      return std::string("t^") + std::to_string(i) + ": " + what_a + " " + a.coeff(i).pretty() + ", " + what_b +
             " " + b.coeff(i).pretty();
  return "";
}

MultiplicityProfile claimed_profile(const Configuration& c) {
  MultiplicityProfile p;
  for (int n : c.partition()) p[n]++;
  return p;
}

std::string profile_string(const MultiplicityProfile& p) {
  std::string s;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    if (!s.empty()) s += " ";
    s += std::to_string(it->first);
    if (it->second > 1) s += "^" + std::to_string(it->second);
  }
  return s;
}

VerifyResult attempt_mult(const WitnessRecord& w, const Configuration& claim, const Field& f, const Assignment& a,
                          const VerifyOptions& opt) {
  VerifyResult r;
  r.field = &f;
  r.assignment = a;
  const std::string& gov = w.delta_factored.empty() ? w.delta_expanded : w.delta_factored;
  Poly F = eval_t(gov, f, a);
  r.delta = F;
  if (F.degree() != 12) {
    r.detail = "discriminant has degree " + std::to_string(F.degree()) + ", expected 12";
    return r;
  }
  if (!w.delta_factored.empty() && !w.delta_expanded.empty()) {
    try {
      Poly E = eval_t(w.delta_expanded, f, a);
      if (E != F) {
        add_tag(r, kTagPrintMismatch);
        r.detail = "printed expansion differs at " + first_difference(E, F, "printed", "product");
      }
    } catch (const Error& e) {
      add_tag(r, kTagPrintMismatch);
      r.detail = std::string("printed expansion unreadable: ") + e.what();
    }
  }
  MultiplicityProfile got = multiplicity_profile(F), want = claimed_profile(claim);
  if (got != want) {
    r.detail = "multiplicity profile " + profile_string(got) + ", claimed " + profile_string(want);
    return r;
  }
  r.found = claim;
  if (auto sf = recognize_star_form(F)) {
    // Rebuild a surface and classify it end to end.
    WeierstrassModel m = reconstruct_from_star_form(*sf, f.zero(), f.zero(), f.zero());
    Configuration got_cfg = classify_config(m);
    r.model = m;
    r.found = got_cfg;
    if (!claim.matches(got_cfg)) {
      r.detail = "reconstructed surface has configuration " + got_cfg.to_string();
      return r;
    }
  } else if (!recognize_doubleroot_form(F)) {
    bool lenient = false;
    for (auto conv : {StarConvention::kProof, StarConvention::kPrinted})
      lenient = lenient || recognize_star_form(F, {conv, true}).has_value();
    if (!lenient) {
      r.detail = "discriminant is in neither normal form";
      return r;
    }
    add_tag(r, kTagPaperTypo);
    if (r.detail.empty()) r.detail = "normal form only up to a t term or the printed l,m,n placement";
    if (opt.strict_star) return r;
  }
  r.ok = !(opt.strict_print && has_tag(r.tags, kTagPrintMismatch));
  return r;
}

WeierstrassModel model_from_record(const WitnessRecord& w, const Field& f, const Assignment& a) {
  Poly b2(f), b4(f), b6(f);
  if (!w.weierstrass.empty()) {
    XTPoly p = eval_xt(w.weierstrass, f, a);
    if (p.x_degree() != 3 || p.coeff(3) != Poly::constant(f.one()))
      throw ArithmeticError("right-hand side is not x^3 + b2 x^2 - b4 x + b6");
    b2 = p.coeff(2);
    b4 = -p.coeff(1);
    b6 = p.coeff(0);
  } else {
    if (!w.b2.empty()) b2 = eval_t(w.b2, f, a);
    if (!w.b4.empty()) b4 = eval_t(w.b4, f, a);
    if (!w.b6.empty()) b6 = eval_t(w.b6, f, a);
  }
  return WeierstrassModel(b2, b4, b6);
}

std::set<char> record_symbols(const WitnessRecord& w, const ConstraintSet& cs) {
  std::set<char> symbols;
  auto collect = [&](const std::string& s) {
    auto x = expr_symbols(s);
    symbols.insert(x.begin(), x.end());
  };
  if (w.kind == WitnessKind::kMultiplicativeDelta) {
    collect(w.delta_factored.empty() ? w.delta_expanded : w.delta_factored);
  } else {
    collect(w.weierstrass);
    collect(w.b2);
    collect(w.b4);
    collect(w.b6);
  }
  for (auto& e : cs.equations) collect(e.first + e.second);
  for (auto& e : cs.inequations) collect(e.first + e.second);
  return symbols;
}

std::vector<const Field*> candidate_fields(const WitnessRecord& w, const std::set<char>& symbols, int max_degree) {
  std::vector<const Field*> fields;
  if (w.field != "auto") {
    fields.push_back(&parse_field(w.field));
  } else {
    int top = symbols.empty() ? 1 : max_degree;
    for (int k = 1; k <= top; ++k) fields.push_back(&gf(k));
  }
  return fields;
}

VerifyResult attempt_model(const WitnessRecord& w, const Configuration& claim, const Field& f, const Assignment& a,
                           const VerifyOptions& opt) {
  VerifyResult r;
  r.field = &f;
  r.assignment = a;
  WeierstrassModel m = model_from_record(w, f, a);
  r.model = m;
  Poly D = discriminant(m);
  r.delta = D;
  for (const std::string* s : {&w.delta_expanded, &w.delta_factored}) {
    if (s->empty()) continue;
    try {
      Poly P = eval_t(*s, f, a);
      // The printed line is either Delta or -Delta.
      if (P != D && P != -D) {
        add_tag(r, kTagPrintMismatch);
        r.detail = "printed discriminant differs at " + first_difference(P, D, "printed", "computed");
      }
    } catch (const Error& e) {
      add_tag(r, kTagPrintMismatch);
      r.detail = std::string("printed discriminant unreadable: ") + e.what();
    }
  }
  Classification c = classify_all(m, opt.seed);
  r.found = c.config;
  if (!claim.matches(c.config)) {
    r.detail = "classified as " + c.config.to_string();
    return r;
  }
  r.ok = !(opt.strict_print && has_tag(r.tags, kTagPrintMismatch));
  return r;
}

int rank_result(const VerifyResult& r) {
  if (r.ok && r.tags.empty()) return 3;
  if (r.ok) return 2;
  return r.found ? 1 : 0;
}

}  // namespace

VerifyResult verify(const WitnessRecord& w, const VerifyOptions& opt) {
  VerifyResult res;
  if (w.kind == WitnessKind::kNonexistence || w.kind == WitnessKind::kHeaderOnly) {
    res.ok = true;
    res.detail = w.kind == WitnessKind::kNonexistence ? "nonexistence claim" : "no printed witness";
    return res;
  }
  if (has_tag(w.tags, kTagUnparseable)) {
    res.tags.push_back(kTagUnparseable);
    res.detail = "printed witness is unreadable";
    return res;
  }
  Configuration claim = parse_configuration(w.config);
  ConstraintSet cs = parse_constraints(w.constraints);
  std::set<char> symbols = record_symbols(w, cs);
  std::vector<const Field*> fields = candidate_fields(w, symbols, opt.max_field_degree);

  bool have = false;
  int solvable_fields = 0;
  for (const Field* f : fields) {
    bool any = false;
    bool done = false;
    try {
      for_each_solution(
          cs, symbols, *f,
          [&](const Assignment& a) {
            any = true;
            VerifyResult r;
            try {
              r = w.kind == WitnessKind::kMultiplicativeDelta ? attempt_mult(w, claim, *f, a, opt)
                                                               : attempt_model(w, claim, *f, a, opt);
            } catch (const ParseError&) {
              throw;
            } catch (const NonMinimalError& e) {
              r.field = f;
              r.assignment = a;
              r.detail = std::string("non-minimal model: ") + e.what();
            } catch (const Error& e) {
              r.field = f;
              r.assignment = a;
              r.detail = e.what();
            }
            if (!have || rank_result(r) > rank_result(res)) {
              res = r;
              have = true;
            }
            done = rank_result(res) == 3;
            return done;
          },
          2000);
    } catch (const ParseError& e) {
      VerifyResult r;
      r.tags.push_back(kTagUnparseable);
      r.detail = e.what();
      return r;
    }
    if (done || (res.ok && any)) break;
    if (any && ++solvable_fields >= 3) break;
  }
  if (!have) res.detail = "constraints have no solution in the fields tried";
  return res;
}

WeierstrassModel instantiate_model(const WitnessRecord& w, int max_field_degree) {
  ConstraintSet cs = parse_constraints(w.constraints);
  std::set<char> symbols = record_symbols(w, cs);
  std::optional<WeierstrassModel> out;
  std::string last = "constraints have no solution in the fields tried";
  for (const Field* f : candidate_fields(w, symbols, max_field_degree)) {
    for_each_solution(
        cs, symbols, *f,
        [&](const Assignment& a) {
          try {
            out = model_from_record(w, *f, a);
          } catch (const ArithmeticError& e) {
            last = e.what();
          }
          return out.has_value();
        },
        2000);
    if (out) return *out;
  }
  throw ArithmeticError(last);
}

WeierstrassModel reconstruct_from_star_form(const StarForm& f, const Elem& xi1, const Elem& xi2, const Elem& xi3) {
  const Field& F = f.l.field();
  if (f.l.is_zero() || f.m.is_zero() || f.n.is_zero()) throw ArithmeticError("star form needs l, m, n nonzero");
  if (!f.linear.is_zero()) throw ArithmeticError("star form has a t coefficient");
  if (f.m.pow(3) != f.n * f.n * f.l.pow(3)) throw ArithmeticError("star form violates m^3 = n^2 l^3");
  Elem a = f.l.inv(), b = f.n / f.m;
  Poly target = star_delta(f).scale(a.pow(3));
  Poly t = Poly::t(F);
  Poly b2 = t;
  Poly b4 = Poly::monomial(a, 4) + Poly::monomial(xi3, 3) + Poly::monomial(xi2, 2) + Poly::monomial(xi1, 1) +
            Poly::constant(b);
  Poly num = t.pow(2) * b4 * b4 + b4.pow(3) - target;
  if (num.ord0() >= 0 && num.ord0() < 3) throw ArithmeticError("star form does not lift to a model");
  Poly b6 = num.shift(-3);
  WeierstrassModel m(b2, b4, b6);
  if (discriminant(m) != target) throw ArithmeticError("star form reconstruction failed its discriminant check");
  return m;
}

// ---- searches ----

namespace {

uint64_t mix(uint64_t seed, uint64_t i) {
  uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (i + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Lowest index in [0, n) whose evaluation yields a record. Workers take
// indices by residue and stop once past the best index found so far.
template <class Eval>
std::optional<WitnessRecord> first_hit(uint64_t n, int jobs, Eval eval, uint64_t* at) {
  jobs = std::max(1, jobs);
  std::atomic<uint64_t> best{UINT64_MAX};
  std::vector<std::optional<WitnessRecord>> hits(static_cast<size_t>(jobs));
  std::vector<uint64_t> hit_at(static_cast<size_t>(jobs), UINT64_MAX);
  std::mutex err_mu;
  std::exception_ptr err;
  auto work = [&](int w) {
    try {
      for (uint64_t i = uint64_t(w); i < n; i += uint64_t(jobs)) {
        if (i >= best.load()) return;
        if (auto r = eval(i)) {
          hits[size_t(w)] = std::move(r);
          hit_at[size_t(w)] = i;
          uint64_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          return;
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(err_mu);
      if (!err) err = std::current_exception();
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> ts;
    for (int w = 0; w < jobs; ++w) ts.emplace_back(work, w);
    for (auto& t : ts) t.join();
  }
  if (err) std::rethrow_exception(err);
  size_t win = size_t(std::min_element(hit_at.begin(), hit_at.end()) - hit_at.begin());
  *at = hit_at[win];
  return hits[win];
}

Poly random_monic(const Field& f, int deg, std::mt19937_64& rng) {
  std::vector<Elem> c;
  for (int i = 0; i < deg; ++i) c.push_back(f.from_index(uint32_t(rng() % f.order())));
  c.push_back(f.one());
  return Poly(f, c);
}

}  // namespace

std::optional<WitnessRecord> search_multiplicative(const Configuration& target, const Field& f,
                                                   const SearchOptions& opt, SearchStats* stats) {
  if (stats) *stats = {};
  if (target.additive_count() > 0) throw ArithmeticError("multiplicative search needs a purely multiplicative target");
  if (target.delta_sum() != 12) throw ArithmeticError("target does not sum to 12");
  // Excluded configurations are not searched.
  if (!lemma_checks(target).empty() || mult3_fires(target)) return std::nullopt;
  std::map<int, int> counts;
  for (int n : target.partition()) counts[n]++;
  int top = counts.rbegin()->first;
  auto eval = [&](uint64_t i) -> std::optional<WitnessRecord> {
    std::mt19937_64 rng(mix(opt.seed, i));
    std::vector<std::pair<Poly, int>> parts;
    Poly acc = Poly::constant(f.one());
    for (auto it = counts.rbegin(); it != counts.rend(); ++it) {
      auto [e, c] = *it;
      Poly g = e == top ? Poly::linear(f.one()) * random_monic(f, c - 1, rng) : random_monic(f, c, rng);
      if (gcd(g, derivative(g)).degree() > 0) return std::nullopt;
      if (gcd(acc, g).degree() > 0) return std::nullopt;
      acc *= g;
      parts.push_back({g, e});
    }
    Poly D = Poly::constant(f.one());
    for (auto& [g, e] : parts) D *= g.pow(e);
    if (!recognize_star_form(D) && !recognize_doubleroot_form(D)) return std::nullopt;
    WitnessRecord w;
    w.id = "search:" + target.to_string();
    w.kind = WitnessKind::kMultiplicativeDelta;
    w.field = f.spec();
    w.config = target.to_string();
    for (auto& [g, e] : parts) w.delta_factored += "[" + g.to_string() + "]^" + std::to_string(e);
    w.delta_expanded = "[" + D.to_string() + "]";
    w.source = "search seed=" + std::to_string(opt.seed) + " index=" + std::to_string(i);
    VerifyOptions vo;
    vo.strict_star = true;
    vo.strict_print = true;
    vo.seed = opt.seed;
    if (!verify(w, vo).ok) return std::nullopt;
    return w;
  };
  uint64_t at = UINT64_MAX;
  auto r = first_hit(opt.budget, opt.jobs, eval, &at);
  if (stats) {
    stats->candidates = r ? at + 1 : opt.budget;
    stats->exhausted = !r;
  }
  return r;
}

const std::vector<CaseShape>& case_shapes() {
  static const std::vector<CaseShape> shapes = {
      {"1A", 1, 1, 1, 3, 1, 5, false, true, true},   {"1B", 1, 1, 2, 2, 1, 5, true, false, true},
      {"1C", 2, 0, 2, 2, 1, 5, false, true, true},   {"1D", 2, 0, 3, 1, 1, 5, true, false, true},
      {"1E", 0, -1, 3, 1, 1, 5, false, true, true},  {"1F", 0, -1, 4, 0, 1, 5, false, true, true},
      {"2", 1, 1, 1, 3, 2, 4, false, true, false},   {"3A", 1, 1, 2, 2, 2, 4, true, false, true},
      {"3B", 2, 0, 2, 2, 2, 4, false, true, true},   {"3C", 2, 0, 3, 1, 2, 4, true, false, true},
      {"3D", 0, -1, 3, 1, 2, 4, false, true, true},  {"3E", 0, -1, 4, 0, 2, 4, false, true, true},
      {"4", 1, 1, 2, 2, 3, 3, false, false, false},  {"5A", 1, 1, 4, 0, 4, 2, true, false, true},
      {"5B", 1, 1, 4, 0, 5, 1, true, false, true},   {"5C", 1, 1, 4, 0, 6, 0, true, false, true},
      {"5D", 1, 1, 4, 0, 0, -1, true, true, false},  {"6A", 2, 0, 3, 1, 4, 2, false, true, true},
      {"6B", 2, 0, 4, 0, 4, 2, true, false, true},   {"6C", 0, -1, 4, 0, 4, 2, false, true, true},
      {"7", 2, 0, 3, 1, 5, 1, false, true, false},   {"8A", 2, 0, 4, 0, 5, 1, true, false, true},
      {"8B", 0, -1, 4, 0, 5, 1, false, true, true},
  };
  return shapes;
}

const CaseShape& case_shape(const std::string& label) {
  for (const CaseShape& s : case_shapes())
    if (s.label == label) return s;
  throw ParseError("unknown Lang case \"" + label + "\"");
}

std::optional<WitnessRecord> search_additive(const std::string& lang_case, const Configuration& residual,
                                             const Field& f, const SearchOptions& opt, SearchStats* stats) {
  if (stats) *stats = {};
  const CaseShape& sh = case_shape(lang_case);
  auto ct = lang_case_type(lang_case);
  if (!ct) throw ParseError("unknown Lang case \"" + lang_case + "\"");
  auto [ktype, kdelta] = *ct;
  std::vector<Fibre> fibres = residual.fibres();
  fibres.push_back({ktype, kdelta});
  Configuration target(fibres);
  int rdelta = 0;
  for (const Fibre& fb : residual.fibres()) rdelta += std::max(fb.delta, 0);
  bool deltas_known = std::all_of(residual.fibres().begin(), residual.fibres().end(),
                                  [](const Fibre& fb) { return fb.delta >= 0; });
  if (deltas_known && rdelta + kdelta != 12) throw ArithmeticError("residual does not complete the case to 12");

  // Free coefficient slots: (polynomial, degree index, nonzero at t = 0).
  struct Slot {
    int which, power;
    bool nonzero;
  };
  std::vector<Slot> slots;
  int e[3] = {sh.e2, sh.e4, sh.e6}, d[3] = {sh.d2, sh.d4, sh.d6};
  bool nz[3] = {sh.nz2, sh.nz4, sh.nz6};
  for (int k = 0; k < 3; ++k)
    for (int j = 0; j <= d[k]; ++j) slots.push_back({k, e[k] + j, nz[k] && j == 0});
  const uint64_t q = f.order();
  long double space = 1;
  for (const Slot& s : slots) space *= (long double)(s.nonzero ? q - 1 : q);
  bool enumerate = space <= (long double)opt.budget;
  uint64_t n = enumerate ? uint64_t(space) : opt.budget;

  auto eval = [&](uint64_t i) -> std::optional<WitnessRecord> {
    std::mt19937_64 rng(mix(opt.seed, i));
    uint64_t rest = i;
    Poly c[3] = {Poly(f), Poly(f), Poly(f)};
    for (const Slot& s : slots) {
      uint64_t radix = s.nonzero ? q - 1 : q;
      uint64_t v;
      if (enumerate) {
        v = rest % radix;
        rest /= radix;
      } else {
        v = rng() % radix;
      }
      if (s.nonzero) ++v;
      c[s.which].set_coeff(s.power, f.from_index(uint32_t(v)));
    }
    Poly b2 = c[0], b4 = -c[1], b6 = c[2];
    Poly D = discriminant(b2, b4, b6);
    if (D.is_zero() || D.ord0() != kdelta) return std::nullopt;
    try {
      WeierstrassModel m(b2, b4, b6);
      if (tate_at_zero(m, kdelta) != ktype) return std::nullopt;
      Configuration got = classify_config(m);
      if (!target.matches(got)) return std::nullopt;
      WitnessRecord w;
      w.id = "search:" + lang_case + ":" + residual.to_string();
      w.kind = WitnessKind::kFullModel;
      w.field = f.spec();
      w.config = got.to_string();
      w.lang_case = lang_case;
      w.b2 = "[" + b2.to_string() + "]";
      w.b4 = "[" + b4.to_string() + "]";
      w.b6 = "[" + b6.to_string() + "]";
      w.source = std::string("search ") + (enumerate ? "enumeration" : "sample seed=" + std::to_string(opt.seed)) +
                 " index=" + std::to_string(i);
      return w;
    } catch (const NonMinimalError&) {
      return std::nullopt;
    } catch (const ArithmeticError&) {
      return std::nullopt;
    }
  };
  uint64_t at = UINT64_MAX;
  auto r = first_hit(n, opt.jobs, eval, &at);
  if (stats) {
    stats->candidates = r ? at + 1 : n;
    stats->exhausted = !r;
  }
  return r;
}

}  // namespace res3
