// signcount: exact computation of sign-vector interval counts, their
// pair-independent invariants, prime-product specializations, and the
// hyperplane-slab generalization. All arithmetic is exact; exit codes:
// 0 ok, 2 invalid mathematical input, 3 parse/IO, 4 guardrail, 5 cross-check.
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "signcount/geomslab.hpp"
#include "signcount/invariants.hpp"
#include "signcount/io.hpp"
#include "signcount/primorial.hpp"
#include "signcount/signspace.hpp"
#include "signcount/verify.hpp"

using namespace signcount;

namespace {

struct GlobalOptions {
  std::string format = "table";
  std::string threads = "auto";
  std::string engine = "auto";
};

int parse_thread_count(const std::string& text, const char* what) {
  if (text == "auto") {
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
  }
  int v = std::atoi(text.c_str());
  if (v < 1) throw ParseError(std::string(what) + " must be a positive integer or \"auto\"");
  return std::min(v, 256);
}

int resolve_threads(const GlobalOptions& g) {
  if (const char* env = std::getenv("SIGNCOUNT_THREADS"))
    return parse_thread_count(env, "SIGNCOUNT_THREADS");
  return parse_thread_count(g.threads, "--threads");
}

EngineConfig engine_config(const GlobalOptions& g) {
  EngineConfig cfg;
  if (g.engine == "brute")
    cfg.engine = Engine::Brute;
  else if (g.engine == "mitm")
    cfg.engine = Engine::Mitm;
  else if (g.engine == "auto")
    cfg.engine = Engine::Auto;
  else
    throw ParseError("unknown engine '" + g.engine + "'");
  cfg.threads = resolve_threads(g);
  return cfg;
}

bool json_output(const GlobalOptions& g) {
  if (g.format == "json") return true;
  if (g.format == "table") return false;
  throw ParseError("unknown format '" + g.format + "'");
}

void emit(const GlobalOptions& g, const Json& j, const std::string& table) {
  if (json_output(g))
    std::cout << dump_json(j);
  else
    std::cout << table;
}

int pair_index(int one_based, int m, const char* name) {
  if (one_based < 1 || one_based > m)
    throw MathError(std::string(name) + " must be between 1 and " + std::to_string(m));
  return one_based - 1;
}

// ---------------------------------------------------------------------------
// invariants
// ---------------------------------------------------------------------------

struct InvariantsArgs {
  std::string weights_file;
  std::string mode = "calligraphic";
  int i = 0, j = 0;
  bool all_pairs = false;
};

ReportMode parse_mode(const std::string& mode) {
  if (mode == "plain") return ReportMode::Plain;
  if (mode == "calligraphic") return ReportMode::Calligraphic;
  throw ParseError("unknown mode '" + mode + "'");
}

void run_invariants_compute(const GlobalOptions& g, const InvariantsArgs& args) {
  AlphaInstance a(WeightVector(load_weights_file(args.weights_file)));
  EngineConfig cfg = engine_config(g);
  ReportMode mode = parse_mode(args.mode);
  if (args.all_pairs || (args.i == 0 && args.j == 0)) {
    InvariantReport report = all_pairs_report(a, mode, cfg);
    emit(g, invariant_report_to_json(report, a.alpha().weights()), render_invariant_table(report));
    return;
  }
  int i = pair_index(args.i, a.m(), "--i");
  int j = pair_index(args.j, a.m(), "--j");
  long long value = mode == ReportMode::Plain ? n_ij(a, i, j, cfg) : n_cal_ij(a, i, j, cfg);
  Json out;
  out["mode"] = args.mode;
  out["i"] = args.i;
  out["j"] = args.j;
  out["value"] = value;
  emit(g, out, "N(" + std::to_string(args.i) + "," + std::to_string(args.j) + ") = " +
                   std::to_string(value) + "\n");
}

void run_invariants_closed_form(const GlobalOptions& g, const InvariantsArgs& args) {
  AlphaInstance a(WeightVector(load_weights_file(args.weights_file)));
  long long h = h_alpha(a, engine_config(g));
  Json out;
  out["m"] = a.m();
  out["h"] = h;
  emit(g, out, "h = " + std::to_string(h) + "\n");
}

void run_invariants_parity(const GlobalOptions& g, const InvariantsArgs& args) {
  AlphaInstance a(WeightVector(load_weights_file(args.weights_file)));
  EngineConfig cfg = engine_config(g);
  if (args.i != 0 || args.j != 0) {
    int i = pair_index(args.i, a.m(), "--i");
    int j = pair_index(args.j, a.m(), "--j");
    int parity = s_parity(a, i, j, cfg);
    Json out;
    out["i"] = args.i;
    out["j"] = args.j;
    out["parity"] = parity;
    emit(g, out, "parity = " + std::to_string(parity) + "\n");
    return;
  }
  InvariantReport report = all_pairs_report(a, ReportMode::Plain, cfg);
  std::string table;
  Json pairs = Json::array();
  for (const PairEntry& e : report.pairs) {
    table += "(" + std::to_string(e.i + 1) + "," + std::to_string(e.j + 1) +
             ") parity=" + std::to_string(e.parity) + "\n";
    Json row;
    row["i"] = e.i + 1;
    row["j"] = e.j + 1;
    row["parity"] = e.parity;
    pairs.push_back(std::move(row));
  }
  bool constant = report.parity_constant();
  table += std::string("parity_constant=") + (constant ? "true" : "false") + "\n";
  Json out;
  out["pairs"] = std::move(pairs);
  out["parity_constant"] = constant;
  emit(g, out, table);
}

// ---------------------------------------------------------------------------
// evenmap
// ---------------------------------------------------------------------------

struct EvenMapArgs {
  std::string map_file;
  int u = 0, v = 0;
  bool force_verify = false;
  bool with_total = false;
};

void run_evenmap_verify(const GlobalOptions& g, const EvenMapArgs& args) {
  EvenMapOracle map = load_map_file(args.map_file);
  EvenCheck check = verify_even(map);
  Json out;
  out["m"] = map.size();
  out["even"] = check.even;
  std::string table = std::string("even: ") + (check.even ? "true" : "false") + "\n";
  if (!check.even) {
    out["counterexample"] = to_pm_string(*check.counterexample);
    table += "counterexample: " + to_pm_string(*check.counterexample) + "\n";
  }
  emit(g, out, table);
}

void run_evenmap_nsigma(const GlobalOptions& g, const EvenMapArgs& args) {
  EvenMapOracle map = load_map_file(args.map_file);
  if (args.force_verify) {
    EvenCheck check = verify_even(map);
    if (!check.even)
      throw MathError("map is not even; counterexample " + to_pm_string(*check.counterexample));
    map.mark_verified();
  }
  int u = pair_index(args.u, map.size(), "--u");
  int v = pair_index(args.v, map.size(), "--v");
  long long value = n_sigma(map, u, v);
  Json out;
  out["m"] = map.size();
  out["u"] = args.u;
  out["v"] = args.v;
  out["n_sigma"] = value;
  std::string table =
      "N(" + std::to_string(args.u) + "," + std::to_string(args.v) + ") = " + std::to_string(value) + "\n";
  if (args.with_total) {
    TotalSignSum total = total_sign_sum(map, resolve_threads(g));
    out["sum"] = total.sum;
    out["quarter"] = total.quarter;
    table += "sum = " + std::to_string(total.sum) + ", sum/4 = " + std::to_string(total.quarter) + "\n";
  }
  emit(g, out, table);
}

// ---------------------------------------------------------------------------
// primorial
// ---------------------------------------------------------------------------

struct PrimorialArgs {
  int m = 0;
  std::string method = "both";
  std::string n_text;
  std::string factors_text;
  int i = 0, j = 0;
  int odd_max = 23;
  std::uint32_t scan_max = 100000;
  bool force = false;
};

GMethod parse_g_method(const std::string& method) {
  if (method == "definition") return GMethod::Definition;
  if (method == "via-q") return GMethod::ViaQ;
  if (method == "both") return GMethod::Both;
  throw ParseError("unknown method '" + method + "'");
}

void check_primorial_guardrail(int m, bool force) {
  if (m > 23 && !force)
    throw GuardrailError("m > 23 needs --force (subset walks grow as 2^m; hard cap " +
                         std::to_string(kPrimorialMaxM) + ")");
}

void run_primorial_g(const GlobalOptions& g, const PrimorialArgs& args) {
  check_primorial_guardrail(args.m, args.force);
  PrimorialContext ctx = PrimorialContext::make(args.m);
  long long value = g_m(ctx, parse_g_method(args.method));
  Json out;
  out["m"] = args.m;
  out["method"] = args.method;
  out["g"] = value;
  emit(g, out, "g(" + std::to_string(args.m) + ") = " + std::to_string(value) + "\n");
}

void run_primorial_table(const GlobalOptions& g, const PrimorialArgs& args) {
  if (args.odd_max < 3) throw ParseError("--odd-max must be at least 3");
  check_primorial_guardrail(args.odd_max, args.force);
  Json rows = Json::array();
  std::string table = "m     definition  via-Q\n";
  for (int m = 3; m <= args.odd_max; m += 2) {
    PrimorialContext ctx = PrimorialContext::make(m);
    long long by_definition = g_m(ctx, GMethod::Definition);
    long long by_q = g_m(ctx, GMethod::ViaQ);
    Json row;
    row["m"] = m;
    row["definition"] = by_definition;
    row["via_q"] = by_q;
    rows.push_back(std::move(row));
    std::string ms = std::to_string(m);
    std::string ds = std::to_string(by_definition);
    table += ms + std::string(6 - ms.size(), ' ') + ds +
             std::string(ds.size() < 12 ? 12 - ds.size() : 1, ' ') + std::to_string(by_q) + "\n";
  }
  Json out;
  out["rows"] = std::move(rows);
  emit(g, out, table);
}

void run_primorial_q(const GlobalOptions& g, const PrimorialArgs& args) {
  FactoredInteger n = [&] {
    if (!args.factors_text.empty()) {
      std::vector<std::uint64_t> primes;
      std::stringstream ss(args.factors_text);
      std::string token;
      while (std::getline(ss, token, ',')) {
        try {
          primes.push_back(std::stoull(token));
        } catch (const std::exception&) {
          throw ParseError("bad factor '" + token + "'");
        }
      }
      FactoredInteger built = FactoredInteger::from_primes(primes);
      if (!args.n_text.empty() && built.value() != Int(args.n_text))
        throw ParseError("--factors product does not equal --n");
      return built;
    }
    if (args.n_text.empty()) throw ParseError("q needs --n or --factors");
    Int n_value;
    try {
      n_value = Int(args.n_text);
    } catch (const std::exception&) {
      throw ParseError("bad integer '" + args.n_text + "'");
    }
    if (n_value < 1) throw MathError("Q(n) is defined for n >= 1");
    return FactoredInteger::from_value(n_value);
  }();
  long long q = q_of_n(n);
  Json out;
  out["n"] = n.value().get_str();
  out["q"] = q;
  emit(g, out, "Q(" + n.value().get_str() + ") = " + std::to_string(q) + "\n");
}

void run_primorial_nij(const GlobalOptions& g, const PrimorialArgs& args) {
  check_primorial_guardrail(args.m, args.force);
  PrimorialContext ctx = PrimorialContext::make(args.m);
  int i = pair_index(args.i, args.m, "--i");
  int j = pair_index(args.j, args.m, "--j");
  BetaMethod method;
  if (args.method == "direct")
    method = BetaMethod::Direct;
  else if (args.method == "moebius")
    method = BetaMethod::Moebius;
  else if (args.method == "both")
    method = BetaMethod::Both;
  else
    throw ParseError("unknown method '" + args.method + "'");
  long long value = n_ij_beta(ctx, i, j, method);
  Json out;
  out["m"] = args.m;
  out["i"] = args.i;
  out["j"] = args.j;
  out["method"] = args.method;
  out["value"] = value;
  emit(g, out,
       "N(" + std::to_string(args.i) + "," + std::to_string(args.j) + ") = " + std::to_string(value) + "\n");
}

void run_primorial_scan(const GlobalOptions& g, const PrimorialArgs& args) {
  SquarefreeScan scan = scan_squarefree(args.scan_max);
  Json out;
  out["max"] = args.scan_max;
  out["checked"] = scan.checked;
  out["primes"] = scan.primes;
  out["even_omega"] = scan.even_omega;
  out["odd_omega_even"] = scan.odd_omega_even;
  std::string table = "checked " + std::to_string(scan.checked) + " squarefree numbers up to " +
                      std::to_string(args.scan_max) + ": " + std::to_string(scan.primes) +
                      " primes, " + std::to_string(scan.even_omega) + " with even omega, " +
                      std::to_string(scan.odd_omega_even) + " with odd omega >= 3; all classified\n";
  emit(g, out, table);
}

// ---------------------------------------------------------------------------
// geom
// ---------------------------------------------------------------------------

struct GeomArgs {
  std::string points_file;
  std::string normal_text;
  std::uint64_t seed = 42;
  bool all_pairs = false;
  int i = 0, j = 0;
};

void run_geom_slab(const GlobalOptions& g, const GeomArgs& args) {
  auto points = load_points_file(args.points_file);
  SlabInstance inst = args.normal_text.empty()
                          ? SlabInstance::search(points, args.seed)
                          : SlabInstance::validate(points, parse_vector(args.normal_text));
  EngineConfig cfg = engine_config(g);

  Json out;
  std::string table;
  if (args.normal_text.empty()) {
    out["rng"] = SplitMix64::name();
    out["seed"] = args.seed;
    table += "# rng=" + std::string(SplitMix64::name()) + " seed=" + std::to_string(args.seed) + "\n";
  }
  out["m"] = inst.m();
  out["normal"] = weights_to_json(inst.normal());
  out["projections"] = weights_to_json(inst.projections().weights());
  table += "normal:";
  for (const auto& x : inst.normal()) table += " " + x.str();
  table += "\nprojections:";
  for (const auto& a : inst.projections().weights()) table += " " + a.str();
  table += "\n";

  if (args.i != 0 || args.j != 0) {
    int i = pair_index(args.i, inst.m(), "--i");
    int j = pair_index(args.j, inst.m(), "--j");
    long long value = m_ij(inst, i, j, cfg);
    out["i"] = args.i;
    out["j"] = args.j;
    out["value"] = value;
    emit(g, out,
         table + "M(" + std::to_string(args.i) + "," + std::to_string(args.j) + ") = " +
             std::to_string(value) + "\n");
    return;
  }
  if (args.all_pairs && inst.m() % 2 == 0) {
    // even m: report the raw table, no invariance claim applies
    Json pairs = Json::array();
    table += "pair    M\n";
    for (int i = 0; i < inst.m(); ++i)
      for (int j = 0; j < inst.m(); ++j) {
        if (i == j) continue;
        long long value = m_ij(inst, i, j, cfg);
        Json row;
        row["i"] = i + 1;
        row["j"] = j + 1;
        row["m"] = value;
        pairs.push_back(std::move(row));
        table += "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")  " +
                 std::to_string(value) + "\n";
      }
    out["pairs"] = std::move(pairs);
    emit(g, out, table);
    return;
  }
  SlabReport report = slab_report(inst, cfg);
  out["c"] = report.c;
  out["abs_m"] = report.abs_m;
  table += "c=" + std::to_string(report.c) + " |M|=" + std::to_string(report.abs_m) + "\n";
  if (args.all_pairs) {
    Json pairs = Json::array();
    table += "pair    M        sgn(a_j)\n";
    for (const SlabPairEntry& e : report.pairs) {
      Json row;
      row["i"] = e.i + 1;
      row["j"] = e.j + 1;
      row["m"] = e.m;
      row["sign_aj"] = e.sign_aj;
      pairs.push_back(std::move(row));
      std::string pair = "(" + std::to_string(e.i + 1) + "," + std::to_string(e.j + 1) + ")";
      std::string ms = std::to_string(e.m);
      table += pair + std::string(pair.size() < 8 ? 8 - pair.size() : 1, ' ') + ms +
               std::string(ms.size() < 9 ? 9 - ms.size() : 1, ' ') +
               (e.sign_aj > 0 ? "+1" : "-1") + "\n";
    }
    out["pairs"] = std::move(pairs);
  }
  emit(g, out, table);
}

// ---------------------------------------------------------------------------
// verify / bench
// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::uint64_t seed = 7;
  bool quick = false;
  std::string inject_fault;
};

int run_verify_all(const GlobalOptions& g, const VerifyArgs& args) {
  VerifyOptions options;
  options.seed = args.seed;
  options.quick = args.quick;
  options.threads = resolve_threads(g);
  options.inject_fault = args.inject_fault;
  auto results = run_all_suites(options);

  bool all_passed = true;
  Json suites = Json::array();
  std::string table = "# rng=" + std::string(SplitMix64::name()) + " seed=" + std::to_string(args.seed) +
                      " mode=" + (args.quick ? "quick" : "full") + "\n";
  for (const SuiteResult& r : results) {
    all_passed = all_passed && r.passed;
    Json row;
    row["name"] = r.name;
    row["passed"] = r.passed;
    row["checks"] = r.checks;
    if (!r.passed) row["failure"] = r.failure;
    suites.push_back(std::move(row));
    table += (r.passed ? "PASS " : "FAIL ") + r.name + " (" + std::to_string(r.checks) + " checks)" +
             (r.passed ? "" : ": " + r.failure) + "\n";
  }
  table += all_passed ? "all suites passed\n" : "FAILURES above\n";
  Json out;
  out["rng"] = SplitMix64::name();
  out["seed"] = args.seed;
  out["mode"] = args.quick ? "quick" : "full";
  out["suites"] = std::move(suites);
  out["all_passed"] = all_passed;
  emit(g, out, table);
  return all_passed ? 0 : 5;
}

struct BenchArgs {
  int m = 22;
  int bits = 60;
  std::uint64_t seed = 1;
};

int run_bench(const GlobalOptions& g, const BenchArgs& args) {
  if (args.bits < 1 || args.bits > 62) throw ParseError("--bits must be in 1..62");
  if (args.m < 1 || args.m > kBruteMaxR)
    throw ParseError("--m must be in 1.." + std::to_string(kBruteMaxR));
  SplitMix64 rng(args.seed);
  std::vector<ExactScalar> w;
  w.reserve(args.m);
  for (int k = 0; k < args.m; ++k) {
    std::uint64_t v = (rng.next() >> (64 - args.bits)) | 1ull;  // bits-wide, odd so nonzero
    w.push_back(ExactScalar(Int(static_cast<unsigned long>(v))));
  }
  EngineConfig cfg;
  cfg.engine = Engine::Brute;
  cfg.threads = resolve_threads(g);
  auto start = std::chrono::steady_clock::now();
  long long value = alternating_sign_sum(WeightVector(w), cfg);
  auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  // timing goes to stderr so stdout stays byte-identical across thread counts
  std::cerr << "elapsed_ms=" << elapsed.count() << " threads=" << cfg.threads << "\n";
  Json out;
  out["op"] = "alternating-sign-sum";
  out["rng"] = SplitMix64::name();
  out["seed"] = args.seed;
  out["m"] = args.m;
  out["bits"] = args.bits;
  out["value"] = value;
  emit(g, out,
       "# rng=" + std::string(SplitMix64::name()) + " seed=" + std::to_string(args.seed) + "\n" +
           "alternating-sign-sum m=" + std::to_string(args.m) + " bits=" + std::to_string(args.bits) +
           " value=" + std::to_string(value) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact sign-vector counting toolkit"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--format", global.format, "output format: table or json")->capture_default_str();
  app.add_option("--threads", global.threads, "worker threads: a count or \"auto\" (SIGNCOUNT_THREADS overrides)")->capture_default_str();
  app.add_option("--engine", global.engine, "counting engine: brute, mitm, auto")->capture_default_str();

  int exit_code = 0;

  // invariants ---------------------------------------------------------
  auto* invariants_cmd = app.add_subcommand("invariants", "per-pair interval counts over a weight family");
  invariants_cmd->require_subcommand(1);
  InvariantsArgs inv;
  auto add_weights_opts = [&](CLI::App* cmd, bool with_pairs) {
    cmd->add_option("--weights", inv.weights_file, "weights JSON file")->required();
    if (with_pairs) {
      cmd->add_option("--i", inv.i, "first index (1-based)");
      cmd->add_option("--j", inv.j, "second index (1-based)");
      cmd->add_flag("--all-pairs", inv.all_pairs, "tabulate every ordered pair");
    }
  };
  auto* inv_compute = invariants_cmd->add_subcommand("compute", "per-pair signed counts");
  add_weights_opts(inv_compute, true);
  inv_compute->add_option("--mode", inv.mode, "plain (positive entries) or calligraphic")
      ->capture_default_str();
  inv_compute->callback([&] { run_invariants_compute(global, inv); });
  auto* inv_closed = invariants_cmd->add_subcommand("closed-form", "the pair-independent value h");
  add_weights_opts(inv_closed, false);
  inv_closed->callback([&] { run_invariants_closed_form(global, inv); });
  auto* inv_parity = invariants_cmd->add_subcommand("parity", "solution-count parity per pair");
  add_weights_opts(inv_parity, true);
  inv_parity->callback([&] { run_invariants_parity(global, inv); });

  // evenmap --------------------------------------------------------------
  auto* evenmap_cmd = app.add_subcommand("evenmap", "subset maps to {-1,+1}");
  evenmap_cmd->require_subcommand(1);
  EvenMapArgs em;
  auto* em_verify = evenmap_cmd->add_subcommand("verify", "check the complement symmetry");
  em_verify->add_option("--map", em.map_file, "dense map JSON file")->required();
  em_verify->callback([&] { run_evenmap_verify(global, em); });
  auto* em_nsigma = evenmap_cmd->add_subcommand("nsigma", "the signed pair count");
  em_nsigma->add_option("--map", em.map_file, "dense map JSON file")->required();
  em_nsigma->add_option("--u", em.u, "index u (1-based)")->required();
  em_nsigma->add_option("--v", em.v, "index v (1-based)")->required();
  em_nsigma->add_flag("--verify-even", em.force_verify, "verify evenness before counting");
  em_nsigma->add_flag("--total", em.with_total, "also print the all-subsets sum and its quarter");
  em_nsigma->callback([&] { run_evenmap_nsigma(global, em); });

  // primorial -----------------------------------------------------------
  auto* primorial_cmd = app.add_subcommand("primorial", "prime-product specializations");
  primorial_cmd->require_subcommand(1);
  PrimorialArgs pa;
  auto* pg = primorial_cmd->add_subcommand("g", "the invariant over the first m primes");
  pg->add_option("--m", pa.m, "number of primes")->required();
  pg->add_option("--method", pa.method, "definition, via-q, or both")->capture_default_str();
  pg->add_flag("--force", pa.force, "allow m beyond 23 (up to the hard cap)");
  pg->callback([&] { run_primorial_g(global, pa); });
  auto* pt = primorial_cmd->add_subcommand("table", "tabulate odd m by both methods");
  pt->add_option("--odd-max", pa.odd_max, "largest odd m")->capture_default_str();
  pt->add_flag("--force", pa.force, "allow odd-max beyond 23");
  pt->callback([&] { run_primorial_table(global, pa); });
  auto* pq = primorial_cmd->add_subcommand("q", "squarefree divisor sum up to the square root");
  pq->add_option("--n", pa.n_text, "the integer (factored by trial division)");
  pq->add_option("--factors", pa.factors_text, "comma-separated prime factorization");
  pq->callback([&] { run_primorial_q(global, pa); });
  auto* pn = primorial_cmd->add_subcommand("nij", "per-pair count over prime-log weights");
  pn->add_option("--m", pa.m, "number of primes")->required();
  pn->add_option("--i", pa.i, "first index (1-based)")->required();
  pn->add_option("--j", pa.j, "second index (1-based)")->required();
  pn->add_option("--method", pa.method, "direct, moebius, or both")->capture_default_str();
  pn->add_flag("--force", pa.force, "allow m beyond 23");
  pn->callback([&] { run_primorial_nij(global, pa); });
  auto* ps = primorial_cmd->add_subcommand("scan-prop1", "classify every squarefree number up to a limit");
  ps->add_option("--max", pa.scan_max, "scan limit")->capture_default_str();
  ps->callback([&] { run_primorial_scan(global, pa); });

  // geom ------------------------------------------------------------------
  auto* geom_cmd = app.add_subcommand("geom", "points, hyperplanes, and slab counts");
  geom_cmd->require_subcommand(1);
  GeomArgs ga;
  auto* gs = geom_cmd->add_subcommand("slab", "validate a normal and count between the hyperplanes");
  gs->add_option("--points", ga.points_file, "points JSON file")->required();
  gs->add_option("--normal", ga.normal_text, "explicit normal, e.g. \"1,0\"");
  gs->add_option("--seed", ga.seed, "seed for the normal search")->capture_default_str();
  gs->add_flag("--all-pairs", ga.all_pairs, "tabulate M over every ordered pair");
  gs->add_option("--i", ga.i, "first index (1-based)");
  gs->add_option("--j", ga.j, "second index (1-based)");
  gs->callback([&] { run_geom_slab(global, ga); });

  // verify ----------------------------------------------------------------
  auto* verify_cmd = app.add_subcommand("verify", "run the property suites");
  verify_cmd->require_subcommand(1);
  VerifyArgs va;
  auto* verify_all_cmd = verify_cmd->add_subcommand("all", "every suite in one run");
  verify_all_cmd->add_option("--seed", va.seed, "RNG seed")->capture_default_str();
  verify_all_cmd->add_flag("--quick", va.quick, "reduced instance counts");
  verify_all_cmd->add_option("--inject-fault", va.inject_fault, "sabotage a named check (self-test)")
      ->group("");  // hidden
  verify_all_cmd->callback([&] { exit_code = run_verify_all(global, va); });

  // bench -------------------------------------------------------------------
  auto* bench_cmd = app.add_subcommand("bench", "time the exhaustive alternating sign sum");
  BenchArgs ba;
  bench_cmd->add_option("--m", ba.m, "number of weights")->capture_default_str();
  bench_cmd->add_option("--bits", ba.bits, "weight magnitude in bits")->capture_default_str();
  bench_cmd->add_option("--seed", ba.seed, "RNG seed")->capture_default_str();
  bench_cmd->callback([&] { exit_code = run_bench(global, ba); });

  // let the global --format/--threads/--engine appear after a subcommand too
  auto enable_fallthrough = [](auto&& self, CLI::App* cmd) -> void {
    cmd->fallthrough();
    for (CLI::App* sub : cmd->get_subcommands(nullptr)) self(self, sub);
  };
  enable_fallthrough(enable_fallthrough, &app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 5;
  }
  return exit_code;
}
