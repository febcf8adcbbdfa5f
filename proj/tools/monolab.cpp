#include "monolab/acceptance.hpp"
#include "monolab/group_cohomology.hpp"
#include "monolab/json_io.hpp"
#include "monolab/parallel.hpp"
#include "monolab/prime_scan.hpp"
#include "monolab/selmer.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#ifndef MONOLAB_FIXTURE_PATH
#define MONOLAB_FIXTURE_PATH ""
#endif

namespace {

using monolab::Json;

struct RunConfig {
  std::string format = "json";
  std::string out;
  unsigned workers = 1;
  std::string memory_budget;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void flatten(const Json& v, const std::string& path, std::vector<std::pair<std::string, std::string>>& rows) {
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) flatten(x, path.empty() ? k : path + "." + k, rows);
  } else if (v.is_array()) {
    if (v.empty()) rows.emplace_back(path, "");
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], path + "[" + std::to_string(i) + "]", rows);
  } else {
    rows.emplace_back(path, scalar_text(v));
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string render(const Json& doc, const std::string& format) {
  if (format == "json") return doc.dump(2) + "\n";
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(doc, "", rows);
  std::ostringstream s;
  if (format == "csv") {
    s << "path,value\n";
    for (const auto& [k, v] : rows) s << csv_field(k) << "," << csv_field(v) << "\n";
  } else {
    for (const auto& [k, v] : rows) s << k << ": " << v << "\n";
  }
  return s.str();
}

void emit(const Json& doc, const RunConfig& cfg) {
  const std::string text = render(doc, cfg.format);
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw UsageError("cannot write " + cfg.out);
  f << text;
}

monolab::SolverOptions solver_options(const RunConfig& cfg) {
  monolab::SolverOptions o;
  o.memory_budget = cfg.memory_budget.empty() ? monolab::memory_budget_from_env()
                                              : monolab::parse_byte_size(cfg.memory_budget);
  return o;
}

std::vector<monolab::SimpleType> parse_types(const std::string& spec) {
  if (spec == "all" || spec == "exceptional") return monolab::exceptional_types();
  std::vector<monolab::SimpleType> out;
  std::stringstream ss(spec);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(monolab::SimpleType::parse(item));
  return out;
}

std::pair<std::uint32_t, std::uint32_t> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const auto v = static_cast<std::uint32_t>(std::stoul(s));
      return {v, v};
    }
    return {static_cast<std::uint32_t>(std::stoul(s.substr(0, dots))),
            static_cast<std::uint32_t>(std::stoul(s.substr(dots + 2)))};
  } catch (const std::exception&) {
    throw UsageError("bad range '" + s + "' (expected a or a..b)");
  }
}

int cmd_roots(const RunConfig& cfg, const std::string& type) {
  const auto types = parse_types(type);
  if (types.size() == 1) {
    emit(monolab::to_json(monolab::RootDatum(types[0])), cfg);
  } else {
    Json arr = Json::array();
    for (const auto& t : types) arr.push_back(monolab::to_json(monolab::RootDatum(t)));
    emit(arr, cfg);
  }
  return 0;
}

int cmd_kostant(const RunConfig& cfg, const std::string& type) {
  const auto types = parse_types(type);
  auto docs = monolab::parallel_map(types.size(), cfg.workers, [&](std::size_t i) {
    return monolab::to_json(monolab::kostant_decomposition(monolab::build_chevalley_algebra(types[i])));
  });
  emit(docs.size() == 1 ? docs[0] : Json(docs), cfg);
  return 0;
}

int cmd_primescan(const RunConfig& cfg, const std::string& type, bool check_paper) {
  const auto types = parse_types(type);
  auto reports = monolab::parallel_map(types.size(), cfg.workers,
                                       [&](std::size_t i) { return monolab::run_prime_scan(types[i]); });
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(monolab::to_json(r));
  emit(arr.size() == 1 ? arr[0] : arr, cfg);
  if (!check_paper) return 0;
  int code = 0;
  for (const auto& r : reports) {
    const auto diff = monolab::check_against_fixture(r);
    if (!diff.empty()) {
      std::cerr << "fixture mismatch " << diff << "\n";
      code = 2;
    }
  }
  return code;
}

Json cohomology_doc(std::uint32_t ell, int r, int twist, const monolab::CohomologyReport& rep, std::size_t order,
                    const std::string& desc) {
  return Json{{"group", "SL2(F_" + std::to_string(ell) + ")"},
              {"order", order},
              {"ell", ell},
              {"sym", r},
              {"twist", twist},
              {"module", desc},
              {"report", monolab::to_json(rep)}};
}

int cmd_cohomology(const RunConfig& cfg, std::uint32_t ell, int sym, int twist, bool allow_large_r) {
  monolab::prime_field(ell);
  const auto g = monolab::sl2_group(ell);
  const auto m = monolab::sym_module(g, sym, -twist, allow_large_r);
  const auto rep = monolab::h1(g, m, solver_options(cfg));
  emit(cohomology_doc(ell, sym, twist, rep, g.order(), m.description), cfg);
  return 0;
}

int cmd_sweep(const RunConfig& cfg, const std::string& type, const std::string& range) {
  const auto [lo, hi] = parse_range(range);
  const auto opts = solver_options(cfg);
  Json out = Json::array();
  for (const auto& t : parse_types(type)) {
    const int bound = 2 * monolab::RootDatum(t).coxeter_number() - 1;
    std::vector<std::uint32_t> primes;
    for (std::uint64_t p = monolab::next_prime(lo); p <= hi; p = monolab::next_prime(p + 1))
      primes.push_back(static_cast<std::uint32_t>(p));
    auto rows = monolab::parallel_map(primes.size(), cfg.workers, [&](std::size_t i) {
      Json row{{"type", t.name()}, {"ell", primes[i]}};
      if (primes[i] < static_cast<std::uint32_t>(bound)) {
        row["skipped"] = "ell < 2h-1 = " + std::to_string(bound);
        return row;
      }
      const auto a = monolab::adjoint_h1_via_kostant(t, primes[i], opts);
      row.update(monolab::to_json(a));
      return row;
    });
    for (auto& r : rows) out.push_back(std::move(r));
  }
  emit(out, cfg);
  return 0;
}

int cmd_selmer(const RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open ledger " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const std::exception& e) {
    throw UsageError(std::string("ledger is not valid JSON: ") + e.what());
  }
  emit(monolab::selmer_summary(monolab::ledger_from_json(j)), cfg);
  return 0;
}

int cmd_bounds(const RunConfig& cfg, const std::string& type) {
  const auto types = parse_types(type);
  Json arr = Json::array();
  for (const auto& t : types) arr.push_back(monolab::to_json(monolab::lifting_prime_bounds(t)));
  emit(arr.size() == 1 ? arr[0] : arr, cfg);
  return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& only, const std::string& fixtures, bool nightly) {
  monolab::acceptance::Options o;
  std::stringstream ss(only);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) o.only.insert(item);
  o.fixture_path = fixtures;
  o.nightly = nightly;
  o.workers = cfg.workers;
  o.solver = solver_options(cfg);
  const auto results = monolab::acceptance::run(o);
  if (results.empty()) throw UsageError("--only selected no criteria");
  for (const auto& r : results) std::cerr << monolab::acceptance::format_line(r) << "\n";
  emit(monolab::acceptance::to_json(results), cfg);
  return monolab::acceptance::exit_code(results);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"monolab: Chevalley bases, principal sl2 and the cohomology checks behind exceptional monodromy lifts"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("-o,--out", cfg.out, "Write output to a file instead of stdout");
  app.add_option("--workers", cfg.workers, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--memory-budget", cfg.memory_budget, "Cohomology solver budget, e.g. 512M or 2G");

  std::string type = "E8";
  auto* roots = app.add_subcommand("roots", "Root datum summary");
  roots->add_option("--type", type, "Simple type (E6, G2, B4, ...), list, or 'all'")->required();

  auto* kostant = app.add_subcommand("kostant", "Principal sl2 triple and Kostant basis of the centralizer");
  kostant->add_option("--type", type)->required();

  bool check_paper = false;
  auto* scan = app.add_subcommand("primescan", "Primes at which a simple-root projection vanishes");
  scan->add_option("--type", type)->required();
  scan->add_flag("--check-paper", check_paper, "Exit 2 if the result differs from the published list");

  std::uint32_t ell = 0;
  int sym = 0, twist = 0;
  bool allow_large_r = false;
  auto* coh = app.add_subcommand("cohomology", "H^0 and H^1 of SL2(F_ell) on Sym^r (x) det^twist");
  coh->add_option("--ell", ell, "Prime");
  coh->add_option("--sym", sym, "Degree r of the symmetric power");
  coh->add_option("--twist", twist, "Exponent of det");
  coh->add_flag("--allow-large-r", allow_large_r, "Permit r >= ell");
  std::string range;
  auto* sweep = coh->add_subcommand("sweep", "Adjoint H^1 through the Kostant decomposition over a prime range");
  sweep->add_option("--type", type)->required();
  sweep->add_option("--ell", range, "Prime or range a..b")->required();

  std::string ledger;
  auto* selmer = app.add_subcommand("selmer", "Evaluate Selmer dimension identities on a ledger");
  selmer->add_option("--ledger", ledger, "Ledger JSON")->required()->check(CLI::ExistingFile);

  auto* bounds = app.add_subcommand("bounds", "Prime bounds for the lifting theorems");
  bounds->add_option("--type", type)->required();

  std::string only, fixtures = MONOLAB_FIXTURE_PATH;
  bool nightly = std::getenv("MONOLAB_NIGHTLY") && std::string(std::getenv("MONOLAB_NIGHTLY")) == "1";
  auto* verify = app.add_subcommand("verify-paper", "Run the reproduction checks");
  verify->add_option("--only", only, "Comma-separated criterion ids or tags");
  verify->add_option("--fixtures", fixtures, "Reference data file");
  verify->add_flag("--nightly", nightly, "Exhaustive Jacobi sweep for E6, E7, E8");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*roots) return cmd_roots(cfg, type);
    if (*kostant) return cmd_kostant(cfg, type);
    if (*scan) return cmd_primescan(cfg, type, check_paper);
    if (*sweep) return cmd_sweep(cfg, type, range);
    if (*coh) {
      if (coh->count("--ell") == 0 || coh->count("--sym") == 0) throw UsageError("cohomology needs --ell and --sym");
      return cmd_cohomology(cfg, ell, sym, twist, allow_large_r);
    }
    if (*selmer) return cmd_selmer(cfg, ledger);
    if (*bounds) return cmd_bounds(cfg, type);
    if (*verify) return cmd_verify(cfg, only, fixtures, nightly);
  } catch (const monolab::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
