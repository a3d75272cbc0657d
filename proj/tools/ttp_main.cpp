#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ttp/bounds.hpp"
#include "ttp/construction.hpp"
#include "ttp/errors.hpp"
#include "ttp/instance.hpp"
#include "ttp/oracle.hpp"
#include "ttp/serialize.hpp"

namespace {

using namespace ttp;

InstanceKind parse_kind(const std::string& kind) {
  if (kind == "unit") return InstanceKind::unit;
  if (kind == "circle") return InstanceKind::circle;
  if (kind == "euclidean" || kind == "euclidean-random")
    return InstanceKind::euclidean_random;
  throw DomainError("unknown instance kind '" + kind + "'");
}

std::string read_stream(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

DistanceMatrix load_auto(const std::string& path, const std::string& format) {
  std::string text = read_stream(path);
  InstanceFormat fmt;
  if (format == "plain") {
    fmt = InstanceFormat::plain;
  } else if (format == "tsplib") {
    fmt = InstanceFormat::tsplib_full_matrix;
  } else {
    fmt = text.find("EDGE_WEIGHT_SECTION") != std::string::npos
              ? InstanceFormat::tsplib_full_matrix
              : InstanceFormat::plain;
  }
  std::istringstream in(text);
  return load_instance(in, fmt);
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
}

void emit_json(const json& j) { std::cout << j.dump(2) << "\n"; }

// k >= n is equivalent to k = n-1; clamp with a warning per the interface
int clamp_k(int k, int n) {
  if (k >= n) {
    std::cerr << "warning: k >= n is equivalent to k = n-1; clamping\n";
    return n - 1;
  }
  return k;
}

struct GridSpec {
  int n_lo = 4, n_hi = 30;
  int k_lo = 2;
  int k_hi = -1;  // -1 means n-1
};

GridSpec parse_grid(const std::string& text) {
  GridSpec g;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    auto eq = part.find('=');
    if (eq == std::string::npos)
      throw DomainError("bad grid component '" + part + "'");
    std::string key = part.substr(0, eq), range = part.substr(eq + 1);
    auto dots = range.find("..");
    std::string lo = dots == std::string::npos ? range : range.substr(0, dots);
    std::string hi =
        dots == std::string::npos ? range : range.substr(dots + 2);
    auto as_int = [&](const std::string& s, bool allow_nm1) -> int {
      if (allow_nm1 && (s == "n-1" || s == "n−1")) return -1;
      try {
        return std::stoi(s);
      } catch (const std::exception&) {
        throw DomainError("bad grid bound '" + s + "'");
      }
    };
    if (key == "n") {
      g.n_lo = as_int(lo, false);
      g.n_hi = as_int(hi, false);
      if (g.n_lo % 2 || g.n_hi % 2 || g.n_lo < 4)
        throw DomainError("grid n bounds must be even and >= 4");
    } else if (key == "k") {
      g.k_lo = as_int(lo, false);
      g.k_hi = as_int(hi, true);
    } else {
      throw DomainError("unknown grid key '" + key + "'");
    }
  }
  return g;
}

int cmd_flaw(int n, int k, const std::string& in, const std::string& format) {
  DistanceMatrix m = in.empty() ? generate_instance(InstanceKind::unit, n, 1)
                                : load_auto(in, format);
  n = m.size();
  k = clamp_k(k, n);
  Tour t = christofides(m);
  int hub = select_hub(m, t);
  auto labelings = enumerate_labelings(shortcut_tour(t, hub), hub);
  int l = candidate_ls(n, k).front();

  Schedule good = cons(m, labelings[0], k, l);
  Schedule flawed = flawed_cons(m, labelings[0], k, l);
  ValidationReport good_rep = validate(good, k);
  ValidationReport flawed_rep = validate(flawed, k);
  int r = (n - 1) % (2 * k);
  bool predicate = r <= k && k < n - 1;
  bool observed = !flawed_rep.bounded_by_k_ok;
  emit_json({{"n", n},
             {"k", k},
             {"l", l},
             {"r", r},
             {"cons", validation_to_json(good_rep)},
             {"flawed_cons", validation_to_json(flawed_rep)},
             {"predicate_r_le_k_lt_n_minus_1", predicate},
             {"observed_infeasible", observed},
             {"match", predicate == observed}});
  return predicate == observed ? 0 : 1;
}

int cmd_bench(const std::string& grid_text, const std::string& kinds_csv,
              const std::string& out_path, int exact_limit) {
  GridSpec grid = parse_grid(grid_text);
  std::vector<std::string> kinds;
  {
    std::stringstream ss(kinds_csv);
    std::string k;
    while (std::getline(ss, k, ',')) kinds.push_back(k);
  }
  struct Cell {
    int n, k;
    std::string kind;
  };
  std::vector<Cell> cells;
  for (int n = grid.n_lo; n <= grid.n_hi; n += 2) {
    int k_hi = grid.k_hi < 0 ? n - 1 : std::min(grid.k_hi, n - 1);
    for (int k = grid.k_lo; k <= k_hi; ++k)
      for (const auto& kind : kinds) cells.push_back({n, k, kind});
  }
  std::vector<std::string> rows(cells.size());
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < static_cast<int>(cells.size()); ++i) {
    try {
      const Cell& c = cells[i];
      DistanceMatrix m = generate_instance(
          parse_kind(c.kind), c.n,
          static_cast<unsigned long long>(c.n));  // euclidean seed = n
      SolveResult sol = solve_serial(m, c.k);
      BoundsReport rep = certify(m, c.k, sol, exact_limit);
      bool feasible = validate(sol.schedule, c.k).ok();
      int r = (c.n - 1) % (2 * c.k);
      bool predicate = r <= c.k && c.k < c.n - 1;
      Tour t = sol.tour;
      int hub = select_hub(m, t);
      auto labelings = enumerate_labelings(shortcut_tour(t, hub), hub);
      Schedule flawed =
          flawed_cons(m, labelings[0], c.k, candidate_ls(c.n, c.k).front());
      bool observed = !validate(flawed, c.k).bounded_by_k_ok;
      std::ostringstream row;
      row << c.n << ',' << c.k << ',' << c.kind << ',' << sol.cost.str()
          << ',' << rep.lb.str() << ',' << rep.ub_analyzed.str() << ','
          << (rep.certified_ratio ? rep.certified_ratio->decimal(6) : "0")
          << ',' << (feasible ? 1 : 0) << ',' << (predicate ? 1 : 0) << ','
          << (observed ? 1 : 0);
      rows[i] = row.str();
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  std::ostringstream csv;
  csv << "n,k,kind,cost,lb,ub,ratio,feasible,flaw_predicate,flaw_observed\n";
  for (const std::string& row : rows) csv << row << "\n";
  write_output(out_path, csv.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"TTP-k schedule construction, certification and flaw harness"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate an instance file");
  std::string gen_kind = "unit", gen_out = "-";
  int gen_n = 8;
  unsigned long long gen_seed = 1;
  gen->add_option("--kind", gen_kind, "unit|circle|euclidean");
  gen->add_option("--n", gen_n, "team count (even, >= 4)")->required();
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--out", gen_out, "output path ('-' for stdout)");

  // tour
  auto* tour_cmd = app.add_subcommand("tour", "emit a Hamiltonian cycle");
  std::string tour_in, tour_format = "auto";
  bool tour_exact = false;
  int tour_limit = kDefaultExactTourLimit;
  tour_cmd->add_option("--in", tour_in, "instance path")->required();
  tour_cmd->add_option("--format", tour_format, "plain|tsplib|auto");
  tour_cmd->add_flag("--exact", tour_exact, "Held-Karp exact tour");
  tour_cmd->add_option("--limit", tour_limit, "exact tour size limit");

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "run the derandomized solver");
  std::string solve_in, solve_format = "auto", solve_itins;
  int solve_k = 0;
  bool emit_candidates = false, no_guarantee = false;
  solve_cmd->add_option("--in", solve_in, "instance path")->required();
  solve_cmd->add_option("--k", solve_k, "streak cap")->required();
  solve_cmd->add_option("--format", solve_format, "plain|tsplib|auto");
  solve_cmd->add_flag("--emit-candidates", emit_candidates,
                      "include every (labeling, l) candidate cost");
  solve_cmd->add_flag("--no-guarantee", no_guarantee,
                      "allow the greedy matching fallback (drops the 3/2 "
                      "tour guarantee)");
  solve_cmd->add_option("--itineraries", solve_itins,
                        "write per-team itinerary CSV to this path");

  // validate
  auto* val_cmd = app.add_subcommand("validate", "check a schedule JSON");
  std::string val_schedule;
  int val_k = 0;
  val_cmd->add_option("--schedule", val_schedule, "schedule JSON path")
      ->required();
  val_cmd->add_option("--k", val_k, "streak cap")->required();

  // bounds / certify
  auto* bounds_cmd = app.add_subcommand("bounds", "emit lower/upper bounds");
  auto* cert_cmd =
      app.add_subcommand("certify", "solve and certify cost against bounds");
  std::string bc_in, bc_format = "auto";
  int bc_k = 0, bc_limit = kDefaultExactTourLimit;
  for (auto* cmd : {bounds_cmd, cert_cmd}) {
    cmd->add_option("--in", bc_in, "instance path")->required();
    cmd->add_option("--k", bc_k, "streak cap")->required();
    cmd->add_option("--format", bc_format, "plain|tsplib|auto");
    cmd->add_option("--exact-limit", bc_limit, "exact tour size limit");
  }

  // flaw
  auto* flaw_cmd =
      app.add_subcommand("flaw", "compare cons against the prior construction");
  int flaw_n = 20, flaw_k = 4;
  std::string flaw_in, flaw_format = "auto";
  flaw_cmd->add_option("--n", flaw_n, "team count (unit instance)");
  flaw_cmd->add_option("--k", flaw_k, "streak cap")->required();
  flaw_cmd->add_option("--in", flaw_in, "optional instance path");
  flaw_cmd->add_option("--format", flaw_format, "plain|tsplib|auto");

  // oracle
  auto* oracle_cmd =
      app.add_subcommand("oracle", "exact TTP optimum for n in {4,6}");
  std::string oracle_in, oracle_format = "auto";
  int oracle_k = 0;
  double oracle_budget = 60.0;
  oracle_cmd->add_option("--in", oracle_in, "instance path")->required();
  oracle_cmd->add_option("--k", oracle_k, "streak cap")->required();
  oracle_cmd->add_option("--budget", oracle_budget, "time budget in seconds");

  // bench
  auto* bench_cmd =
      app.add_subcommand("bench", "run the acceptance grid, emit CSV");
  std::string bench_grid = "n=4..30,k=2..n-1";
  std::string bench_kinds = "unit,circle,euclidean";
  std::string bench_out = "-";
  int bench_limit = kDefaultExactTourLimit;
  bench_cmd->add_option("--grid", bench_grid, "e.g. n=4..30,k=2..n-1");
  bench_cmd->add_option("--kinds", bench_kinds, "comma-separated kinds");
  bench_cmd->add_option("--out", bench_out, "CSV output path");
  bench_cmd->add_option("--exact-limit", bench_limit, "exact tour size limit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (*gen) {
      DistanceMatrix m = generate_instance(parse_kind(gen_kind), gen_n, gen_seed);
      std::ostringstream out;
      save_instance(m, out);
      write_output(gen_out, out.str());
      return 0;
    }
    if (*tour_cmd) {
      DistanceMatrix m = load_auto(tour_in, tour_format);
      Tour t = tour_exact ? exact_tour(m, tour_limit) : christofides(m);
      emit_json(tour_to_json(t));
      return 0;
    }
    if (*solve_cmd) {
      DistanceMatrix m = load_auto(solve_in, solve_format);
      int k = clamp_k(solve_k, m.size());
      SolveOptions opt;
      opt.collect_candidates = emit_candidates;
      opt.matching =
          no_guarantee ? MatchingMode::greedy : MatchingMode::exact;
      SolveResult res = solve(m, k, opt);
      emit_json(solve_result_to_json(res));
      if (!solve_itins.empty())
        write_output(solve_itins, itineraries_to_csv(res.schedule, m));
      return 0;
    }
    if (*val_cmd) {
      Schedule s = schedule_from_json(json::parse(read_stream(val_schedule)));
      ValidationReport rep = validate(s, val_k);
      emit_json(validation_to_json(rep));
      return rep.ok() ? 0 : 1;
    }
    if (*bounds_cmd) {
      DistanceMatrix m = load_auto(bc_in, bc_format);
      int k = clamp_k(bc_k, m.size());
      BoundsReport rep = lower_bounds(m, k, bc_limit);
      rep.ub_analyzed = analyzed_upper_bound(m, k, christofides(m));
      emit_json(bounds_to_json(rep));
      return 0;
    }
    if (*cert_cmd) {
      DistanceMatrix m = load_auto(bc_in, bc_format);
      int k = clamp_k(bc_k, m.size());
      SolveResult sol = solve(m, k);
      BoundsReport rep = certify(m, k, sol, bc_limit);
      emit_json(bounds_to_json(rep));
      return rep.ub_holds && rep.ratio_holds ? 0 : 1;
    }
    if (*flaw_cmd) return cmd_flaw(flaw_n, flaw_k, flaw_in, flaw_format);
    if (*oracle_cmd) {
      DistanceMatrix m = load_auto(oracle_in, oracle_format);
      int k = oracle_k >= 2 ? clamp_k(oracle_k, m.size()) : oracle_k;
      OracleResult res =
          exact_ttp(m, k, static_cast<long long>(oracle_budget * 1000));
      json j;
      switch (res.status) {
        case OracleResult::Status::optimal:
          j["status"] = "optimal";
          break;
        case OracleResult::Status::infeasible:
          j["status"] = "infeasible";
          break;
        case OracleResult::Status::timeout:
          j["status"] = "timeout";
          break;
      }
      if (res.status != OracleResult::Status::infeasible) {
        j["cost"] = rat_to_json(res.best_cost);
        j["lower_bound"] = rat_to_json(res.lower_bound);
        if (res.schedule) j["schedule"] = schedule_to_json(*res.schedule);
      }
      emit_json(j);
      return 0;
    }
    if (*bench_cmd)
      return cmd_bench(bench_grid, bench_kinds, bench_out, bench_limit);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
