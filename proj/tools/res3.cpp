// res3: command-line front end (classify, verify, census, embed, search, report).

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "res3/census.hpp"
#include "res3/error.hpp"
#include "res3/lattice.hpp"
#include "res3/witness.hpp"

using namespace res3;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDiscrepancy = 1;
constexpr int kExitInput = 2;
constexpr int kExitNonMinimal = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Model file: "key: value" or "key=value" lines with keys field, b2, b4, b6,
// weierstrass, constraints. With '=' the b_i are serialized polynomials.
WitnessRecord parse_model_file(const std::string& text) {
  WitnessRecord w;
  w.id = "input";
  w.kind = WitnessKind::kFullModel;
  std::istringstream in(text);
  std::string line;
  static const std::regex kv(R"(^\s*([a-z0-9_]+)\s*([:=])\s*(.*?)\s*$)");
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') continue;
    std::smatch m;
    if (!std::regex_match(line, m, kv)) throw ParseError("model file line " + std::to_string(n) + ": expected key: value");
    std::string key = m[1], val = m[3];
    bool serialized = m[2] == "=";
    if (key == "field") {
      w.field = val;
    } else if (key == "b2" || key == "b4" || key == "b6") {
      std::string& dst = key == "b2" ? w.b2 : key == "b4" ? w.b4 : w.b6;
      dst = serialized ? "[" + val + "]" : val;
    } else if (key == "weierstrass") {
      w.weierstrass = val;
    } else if (key == "constraints") {
      w.constraints = val;
    } else {
      throw ParseError("model file line " + std::to_string(n) + ": unknown key \"" + key + "\"");
    }
  }
  if (w.weierstrass.empty() && w.b2.empty() && w.b4.empty() && w.b6.empty())
    throw ParseError("model file defines no model");
  return w;
}

uint64_t default_seed() {
  if (const char* s = std::getenv("RES3_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw ParseError(std::string("RES3_SEED is not an integer: ") + s);
    }
  }
  return 0;
}

int cmd_classify(const std::string& path, uint64_t seed) {
  WitnessRecord w = parse_model_file(read_file(path));
  WeierstrassModel m = instantiate_model(w);
  Classification c = classify_all(m, seed);
  std::cout << c.config.to_string() << "\n";
  std::cout << "place\ttype\tdelta\tr\tlattice\td\tcase\tcount\n";
  for (const auto& p : c.places)
    std::cout << p.place.to_string() << "\t" << p.type.symbol() << "\t" << p.inv.delta << "\t" << p.inv.r << "\t"
              << p.inv.lattice.to_string() << "\t" << p.inv.d << "\t" << p.inv.lang_case.value_or("-") << "\t"
              << p.count << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& path, bool strict, uint64_t seed) {
  auto recs = load_witness_file(path);
  VerifyOptions o;
  o.strict_star = o.strict_print = strict;
  o.seed = seed;
  int bad = 0;
  std::cout << "id\tkind\tconfig\tresult\ttags\tfield\tdetail\n";
  for (const auto& w : recs) {
    VerifyResult r = verify(w, o);
    std::string tags;
    for (const auto& t : r.tags) tags += (tags.empty() ? "" : ",") + t;
    if (!r.ok) ++bad;
    std::cout << w.id << "\t" << to_string(w.kind) << "\t" << w.config << "\t" << (r.ok ? "ok" : "DISCREPANCY") << "\t"
              << tags << "\t" << (r.field ? r.field->spec() : "") << "\t" << r.detail << "\n";
  }
  std::cerr << recs.size() << " records, " << bad << " discrepancies\n";
  return bad == 0 ? kExitOk : kExitDiscrepancy;
}

CensusOptions census_options(const std::string& data, bool no_search, uint64_t budget, uint64_t seed, int jobs) {
  CensusOptions o;
  o.mult_path = data + "/witnesses_mult.txt";
  o.add_path = data + "/witnesses_add.txt";
  o.search_replacements = !no_search;
  o.search.budget = budget;
  o.search.seed = seed;
  o.jobs = jobs;
  return o;
}

int cmd_census(const CensusOptions& o, const std::string& out) {
  CensusReport r = run_census(o);
  write_census(r, out);
  std::cout << census_summary(r);
  return r.reproduced() ? kExitOk : kExitDiscrepancy;
}

int cmd_report(const CensusOptions& o, bool table) {
  CensusReport r = run_census(o);
  if (table)
    std::cout << char_table_tsv(char_comparison(r));
  else
    std::cout << census_summary(r);
  return r.reproduced() ? kExitOk : kExitDiscrepancy;
}

int cmd_embed(const std::string& text, const std::string& oracle) {
  ADELattice L = parse_lattice(text);
  bool by_table = embeds_in_E8_table(L);
  if (oracle == "table") {
    std::cout << (by_table ? "embeds" : "does not embed") << "\n";
    return kExitOk;
  }
  E8SearchStats st;
  bool by_search = L.rank() <= 8 && embeds_in_E8_search(L, &st);
  if (oracle == "search") {
    std::cout << (by_search ? "embeds" : "does not embed") << "\t(" << st.nodes << " nodes)\n";
    return kExitOk;
  }
  std::cout << (by_search ? "embeds" : "does not embed") << "\n";
  if (by_search != by_table)
    std::cout << "oracles disagree: table says " << (by_table ? "embeds" : "does not embed") << "\n";
  return by_search == by_table ? kExitOk : kExitDiscrepancy;
}

int cmd_search(const std::string& config, const std::string& field, const std::string& lang_case,
               const SearchOptions& so) {
  Configuration cfg = parse_configuration(config);
  const Field& f = parse_field(field);
  SearchStats st;
  std::optional<WitnessRecord> w;
  if (lang_case.empty()) {
    if (cfg.additive_count() > 0) throw ParseError("additive configurations need --case");
    w = search_multiplicative(cfg, f, so, &st);
  } else {
    auto ct = lang_case_type(lang_case);
    if (!ct) throw ParseError("unknown case \"" + lang_case + "\"");
    std::vector<Fibre> rest = cfg.fibres();
    auto it = std::find_if(rest.begin(), rest.end(), [&](const Fibre& fb) { return fb.type == ct->first; });
    if (it == rest.end()) throw ParseError("configuration has no " + ct->first.symbol() + " fibre");
    rest.erase(it);
    w = search_additive(lang_case, Configuration(rest), f, so, &st);
  }
  if (!w) {
    std::cout << "no witness found (" << st.candidates << " candidates" << (st.exhausted ? ", space exhausted" : "")
              << ")\n";
    return kExitDiscrepancy;
  }
  std::cout << format_record(*w);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational elliptic surfaces in characteristic 3"};
  app.require_subcommand(1);
  uint64_t seed = 0;
  int jobs = 1;
  bool seed_set = false;
  app.add_option_function<uint64_t>(
         "--seed", [&](uint64_t s) { seed = s, seed_set = true; }, "random seed (default $RES3_SEED or 0)")
      ->type_name("N");
  app.add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));

  std::string model_path;
  auto* classify = app.add_subcommand("classify", "classify the singular fibres of a model file");
  classify->add_option("model", model_path, "model file")->required();

  std::string witnesses;
  bool strict = false;
  auto* verify_cmd = app.add_subcommand("verify", "verify a witness file");
  verify_cmd->add_option("--witnesses", witnesses, "witness file")->required();
  verify_cmd->add_flag("--strict-star", strict, "require the strict normal form and exact printed lines");

  std::string out = "census_out", data = RES3_DATA_DIR;
  bool no_search = false, table = false;
  uint64_t budget = 1'000'000;
  auto* census = app.add_subcommand("census", "run the census and write its reports");
  census->add_option("--out", out, "output directory");
  census->add_option("--data", data, "directory holding the witness files");
  census->add_flag("--no-search", no_search, "skip replacement searches");
  census->add_option("--budget", budget, "search budget per field");

  auto* report = app.add_subcommand("report", "print the census summary or the characteristic table");
  report->add_option("--data", data, "directory holding the witness files");
  report->add_flag("--no-search", no_search, "skip replacement searches");
  report->add_option("--budget", budget, "search budget per field");
  report->add_flag("--table", table, "print the 77-row characteristic table");

  std::string lattice, oracle = "both";
  auto* embed = app.add_subcommand("embed", "decide whether a root lattice embeds in E8");
  embed->add_option("lattice", lattice, "lattice such as A2+A1^5")->required();
  embed->add_option("--oracle", oracle, "table, search or both")->check(CLI::IsMember({"table", "search", "both"}));

  std::string config, field = "GF(3)", lang_case;
  auto* search = app.add_subcommand("search", "search for a witness");
  search->add_option("--config", config, "configuration")->required();
  search->add_option("--field", field, "field such as GF(3^2)");
  search->add_option("--budget", budget, "candidate budget");
  search->add_option("--case", lang_case, "case of the additive fibre at t = 0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (!seed_set) seed = default_seed();
    if (*classify) return cmd_classify(model_path, seed);
    if (*verify_cmd) return cmd_verify(witnesses, strict, seed);
    if (*census) return cmd_census(census_options(data, no_search, budget, seed, jobs), out);
    if (*report) return cmd_report(census_options(data, no_search, budget, seed, jobs), table);
    if (*embed) return cmd_embed(lattice, oracle);
    if (*search) {
      SearchOptions so;
      so.budget = budget;
      so.seed = seed;
      so.jobs = jobs;
      return cmd_search(config, field, lang_case, so);
    }
  } catch (const NonMinimalError& e) {
    std::cerr << "non-minimal model: " << e.what() << "\n";
    return kExitNonMinimal;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
