// Command-line front end: encode, construct, count, signotope, sls,
// solve, realize, cubes, bounds, verify. Exit codes: 0 success,
// 1 malformed input, 2 resource budget exceeded, 3 internal
// verification mismatch.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pentamin/bounds.hpp"
#include "pentamin/constructions.hpp"
#include "pentamin/encoder.hpp"
#include "pentamin/geom.hpp"
#include "pentamin/maxsat_bb.hpp"
#include "pentamin/rational.hpp"
#include "pentamin/realizer.hpp"
#include "pentamin/signotope.hpp"
#include "pentamin/sls.hpp"
#include "pentamin/tuples.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kBadInput = 1;
constexpr int kBudget = 2;
constexpr int kMismatch = 3;

// "-" means stdin/stdout.
std::unique_ptr<std::istream> open_input(const std::string& path) {
  if (path == "-") return nullptr;
  auto f = std::make_unique<std::ifstream>(path);
  if (!*f) throw std::invalid_argument("cannot open input file: " + path);
  return f;
}

std::unique_ptr<std::ostream> open_output(const std::string& path) {
  if (path == "-") return nullptr;
  auto f = std::make_unique<std::ofstream>(path);
  if (!*f) throw std::invalid_argument("cannot open output file: " + path);
  return f;
}

pent::PointSet read_points(const std::string& path) {
  auto f = open_input(path);
  return pent::read_pointset_json(f ? *f : std::cin);
}

pent::SignotopeAssignment read_signotope(const std::string& path) {
  auto f = open_input(path);
  return pent::signotope_from_text(f ? *f : std::cin);
}

void write_model_file(const std::string& path, const std::vector<int>& model) {
  auto f = open_output(path);
  std::ostream& out = f ? *f : std::cout;
  out << "v";
  for (int lit : model) out << ' ' << lit;
  out << " 0\n";
}

struct EncodeArgs {
  int n = 0;
  std::string cnf_path, wcnf_path, cubes_path;
  int cube_index = -1;
  bool symmetry = false, no_axioms = false, new_format = false, json = false;
};

int cmd_encode(const EncodeArgs& a) {
  const bool want_cnf =
      !a.cnf_path.empty() || (a.wcnf_path.empty() && a.cubes_path.empty());
  const std::string cnf_path = a.cnf_path.empty() ? "-" : a.cnf_path;
  if (a.symmetry && a.wcnf_path.empty())
    throw std::invalid_argument("--symmetry requires --wcnf");
  if (a.no_axioms && !a.wcnf_path.empty())
    throw std::invalid_argument("--no-axioms applies to the plain CNF only");
  if (a.cube_index >= 0 && a.wcnf_path.empty())
    throw std::invalid_argument("--cube requires --wcnf");
  if (a.json &&
      ((want_cnf && cnf_path == "-") || a.wcnf_path == "-" || a.cubes_path == "-"))
    throw std::invalid_argument("--json needs file outputs, not stdout");

  ordered_json j;
  j["n"] = a.n;
  if (want_cnf) {
    const pent::CnfFormula f = pent::encode_sat(a.n, !a.no_axioms);
    auto out = open_output(cnf_path);
    pent::write_dimacs(f, out ? *out : std::cout);
    j["cnf"] = {{"num_vars", f.num_vars},
                {"clauses", static_cast<long long>(f.clauses.size())}};
  }
  if (!a.wcnf_path.empty()) {
    const pent::WcnfFormula f = pent::encode_maxsat(a.n, a.symmetry);
    auto out = open_output(a.wcnf_path);
    if (a.cube_index >= 0) {
      const auto cubes = pent::make_cubes(a.n);
      if (a.cube_index >= static_cast<int>(cubes.size()))
        throw std::invalid_argument("--cube index out of range (have " +
                                    std::to_string(cubes.size()) + " cubes)");
      pent::write_wcnf_cube(f, cubes[a.cube_index], out ? *out : std::cout,
                            a.new_format);
    } else {
      pent::write_wcnf(f, out ? *out : std::cout, a.new_format);
    }
    j["wcnf"] = {{"num_vars", f.num_vars},
                 {"hard", static_cast<long long>(f.hard.size())},
                 {"soft", static_cast<long long>(f.soft_lits.size())},
                 {"symmetry", f.num_symmetry},
                 {"top", f.top_weight}};
  }
  if (!a.cubes_path.empty()) {
    const auto cubes = pent::make_cubes(a.n);
    auto out = open_output(a.cubes_path);
    pent::write_cube_list(cubes, out ? *out : std::cout);
    j["cubes"] = {{"count", static_cast<long long>(cubes.size())}};
  }
  if (a.json) std::cout << j.dump() << "\n";
  return kOk;
}

int cmd_construct(const std::string& kind, int n, const std::string& out_path) {
  pent::PointSet s = [&] {
    if (kind == "pinwheel") {
      if (n < 4 || n % 4 != 0)
        throw std::invalid_argument("pinwheel requires n to be a multiple of 4");
      return pent::pinwheel(n / 4);
    }
    if (n < 1) throw std::invalid_argument("parabolic requires n >= 1");
    return pent::parabolic(n);
  }();
  auto out = open_output(out_path);
  pent::write_pointset_json(s, out ? *out : std::cout);
  return kOk;
}

int cmd_count(const std::string& points_path, int k, bool witnesses, bool json) {
  const pent::PointSet s = read_points(points_path);
  std::vector<std::vector<int>> wit;
  long long count = 0;
  if (k <= s.n()) count = pent::count_convex_kgons(s, k, witnesses ? &wit : nullptr);
  if (json) {
    ordered_json j;
    j["n"] = s.n();
    j["k"] = k;
    j["count"] = count;
    if (witnesses) j["witnesses"] = wit;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << count << "\n";
    if (witnesses)
      for (const auto& w : wit) {
        for (size_t i = 0; i < w.size(); ++i) std::cout << (i ? " " : "") << w[i];
        std::cout << "\n";
      }
  }
  return kOk;
}

int cmd_signotope(const std::string& points_path, const std::string& out_path) {
  const pent::PointSet s = read_points(points_path);
  auto out = open_output(out_path);
  (out ? *out : std::cout) << pent::to_text(pent::signotope_of(s));
  return kOk;
}

int cmd_sls(int n, const pent::SlsConfig& cfg, int seeds, int jobs) {
  const pent::SlsResult r = seeds > 1 ? pent::sls_portfolio(n, cfg, seeds, jobs)
                                      : pent::sls_minimize(n, cfg);
  ordered_json j;
  j["n"] = n;
  j["best"] = r.best_falsified;
  j["flips"] = r.flips_used;
  j["restarts"] = r.restarts;
  j["seed"] = r.seed;
  std::cout << j.dump() << "\n";
  if (cfg.target >= 0 && r.best_falsified > cfg.target) return kBudget;
  return kOk;
}

struct SolveArgs {
  int n = 0;
  std::string wcnf_path;
  long long ub_hint = -1;
  bool no_symmetry = false, use_cubes = false;
  int jobs = 1;
  uint64_t max_propagations = 1'000'000'000ULL;
  std::string branch_order = "lex";
  std::string model_out;
};

int cmd_solve(const SolveArgs& a) {
  if ((a.n > 0) == !a.wcnf_path.empty())
    throw std::invalid_argument("give exactly one of --n and --wcnf");
  pent::WcnfFormula f;
  if (a.n > 0) {
    f = pent::encode_maxsat(a.n, !a.no_symmetry);
  } else {
    auto in = open_input(a.wcnf_path);
    f = pent::read_wcnf(in ? *in : std::cin);
  }
  pent::SolveOptions opts;
  if (a.ub_hint >= 0) opts.ub_hint = a.ub_hint;
  opts.max_propagations = a.max_propagations;
  opts.branch_order = a.branch_order == "layered" ? pent::BranchOrder::Layered
                                                  : pent::BranchOrder::LexTriples;
  pent::SolveResult res;
  if (a.use_cubes) {
    if (f.n == 0)
      throw std::invalid_argument("--cubes needs a formula with a known n");
    res = pent::solve_exact_cubes(f, pent::make_cubes(f.n), opts, a.jobs);
  } else {
    res = pent::solve_exact(f, opts);
  }

  ordered_json j;
  if (f.n > 0)
    j["n"] = f.n;
  else
    j["n"] = nullptr;
  if (res.status == pent::SolveStatus::BudgetExceeded) {
    j["status"] = "budget_exceeded";
    j["lower"] = res.lower;
    j["upper"] = res.upper;
    j["propagations"] = res.propagations;
    j["time"] = res.time;
    std::cout << j.dump() << "\n";
    return kBudget;
  }
  if (res.status == pent::SolveStatus::HardUnsat)
    throw std::invalid_argument("hard clauses are unsatisfiable");

  const long long optimum = pent::optimum_of(res);
  // Independent witness check: the model must satisfy every hard clause
  // and falsify exactly `optimum` soft clauses.
  const pent::WcnfEval ev =
      pent::evaluate_wcnf(f, pent::model_to_values(f.num_vars, res.model));
  if (!ev.hard_ok || ev.soft_falsified != optimum) {
    std::cerr << "verification mismatch: evaluator says hard_ok=" << ev.hard_ok
              << " soft_falsified=" << ev.soft_falsified << " vs optimum "
              << optimum << "\n";
    return kMismatch;
  }
  // For in-process formulas the abstract pentagon count of the decoded
  // signotope must equal the optimum as well.
  if (a.n > 0) {
    const pent::SignotopeAssignment dec = pent::decode_model(a.n, res.model);
    if (!pent::check_axioms(dec).empty() ||
        pent::count_convex_pentagons(dec) != optimum) {
      std::cerr << "verification mismatch: decoded signotope disagrees with "
                   "the reported optimum\n";
      return kMismatch;
    }
  }
  if (!a.model_out.empty()) write_model_file(a.model_out, res.model);
  j["optimum"] = optimum;
  if (a.model_out.empty())
    j["model_file"] = nullptr;
  else
    j["model_file"] = a.model_out;
  j["propagations"] = res.propagations;
  j["time"] = res.time;
  std::cout << j.dump() << "\n";
  return kOk;
}

int cmd_realize(const std::string& sig_path, const std::string& out_path,
                const std::string& svg_path, const pent::RealizerConfig& cfg,
                bool json) {
  const pent::SignotopeAssignment a = read_signotope(sig_path);
  const pent::RealizationResult r = pent::realize(a, cfg);
  if (r.status == pent::RealizeStatus::Realized) {
    if (!json || out_path != "-") {
      auto out = open_output(out_path);
      pent::write_pointset_json(*r.points, out ? *out : std::cout);
    }
    if (!svg_path.empty()) {
      auto svg = open_output(svg_path);
      pent::write_svg(*r.points, svg ? *svg : std::cout, true);
    }
  }
  if (json) {
    ordered_json j;
    j["n"] = a.n();
    j["status"] = r.status == pent::RealizeStatus::Realized ? "realized" : "not_found";
    j["z"] = r.z;
    j["min_slack"] = r.min_orientation_slack;
    j["restarts"] = r.restarts_used;
    j["time"] = r.time;
    std::cout << j.dump() << "\n";
  }
  if (r.status != pent::RealizeStatus::Realized) {
    if (!json) std::cerr << "no realization found within the search budget\n";
    return kBudget;
  }
  return kOk;
}

int cmd_cubes(int n, const std::string& out_path, bool json) {
  const auto cubes = pent::make_cubes(n);
  if (json && out_path == "-") {
    ordered_json j;
    j["n"] = n;
    j["count"] = static_cast<long long>(cubes.size());
    std::vector<int> vars;
    if (!cubes.empty())
      for (int lit : cubes.front().literals) vars.push_back(std::abs(lit));
    j["vars"] = vars;
    std::cout << j.dump() << "\n";
    return kOk;
  }
  auto out = open_output(out_path);
  pent::write_cube_list(cubes, out ? *out : std::cout);
  return kOk;
}

int cmd_bounds(long long n, const std::string& from, bool json) {
  pent::BoundRecord rec;
  if (from.empty()) {
    rec = pent::derive_bounds(n);
  } else {
    const auto eq = from.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("--from expects m=r, e.g. --from 16=112");
    const int m = std::stoi(from.substr(0, eq));
    const pent::Int r(from.substr(eq + 1));
    rec = pent::derive_bounds_from(n, m, r);
  }
  if (json) {
    ordered_json j;
    j["n"] = rec.n;
    j["lower"] = rec.lower.str();
    j["upper"] = rec.upper.str();
    j["provenance"] = rec.provenance;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << pent::bounds_csv_header() << "\n" << pent::bounds_csv_row(rec) << "\n";
  }
  return kOk;
}

int cmd_verify(const std::string& points_path, const std::string& sig_path,
               uint64_t seed, bool json) {
  if (points_path.empty() == sig_path.empty())
    throw std::invalid_argument("give exactly one of --points and --signotope");
  long long geometric = 0, abstract = 0;
  int n = 0;
  if (!points_path.empty()) {
    const pent::PointSet s = read_points(points_path);
    n = s.n();
    geometric = s.n() >= 5 ? pent::count_convex_kgons(s, 5) : 0;
    abstract = pent::count_convex_pentagons(pent::signotope_of(s));
  } else {
    const pent::SignotopeAssignment a = read_signotope(sig_path);
    n = a.n();
    abstract = pent::count_convex_pentagons(a);  // throws if axiom-inconsistent
    pent::RealizerConfig cfg;
    cfg.seed = seed;
    const pent::RealizationResult r = pent::realize(a, cfg);
    if (r.status != pent::RealizeStatus::Realized) {
      std::cerr << "cannot verify: no realization found within the budget\n";
      return kBudget;
    }
    geometric = r.points->n() >= 5 ? pent::count_convex_kgons(*r.points, 5) : 0;
  }
  const bool match = geometric == abstract;
  if (json) {
    ordered_json j;
    j["n"] = n;
    j["geometric"] = geometric;
    j["abstract"] = abstract;
    j["match"] = match;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "n=" << n << " geometric=" << geometric << " abstract=" << abstract
              << (match ? " match" : " MISMATCH") << "\n";
  }
  return match ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pentamin: minimal convex pentagons in planar point sets"};
  app.require_subcommand(1);

  EncodeArgs enc;
  auto* enc_cmd = app.add_subcommand("encode", "Emit DIMACS CNF/WCNF formulas");
  enc_cmd->add_option("--n", enc.n, "number of points")->required();
  enc_cmd->add_option("--cnf", enc.cnf_path, "write plain CNF here ('-' = stdout)");
  enc_cmd->add_option("--wcnf", enc.wcnf_path, "write MaxSAT WCNF here");
  enc_cmd->add_option("--cubes", enc.cubes_path, "write the cube list here");
  enc_cmd->add_option("--cube", enc.cube_index, "restrict --wcnf to one cube index");
  enc_cmd->add_flag("--symmetry", enc.symmetry, "append symmetry-breaking units");
  enc_cmd->add_flag("--no-axioms", enc.no_axioms, "omit axiom clauses (CNF only)");
  enc_cmd->add_flag("--new-format", enc.new_format, "use 'h'-prefixed WCNF style");
  enc_cmd->add_flag("--json", enc.json, "print a size summary as JSON");

  std::string con_kind;
  int con_n = 0;
  std::string con_out = "-";
  auto* con_cmd = app.add_subcommand("construct", "Generate a point set");
  con_cmd->add_option("--kind", con_kind, "pinwheel or parabolic")
      ->required()
      ->check(CLI::IsMember({"pinwheel", "parabolic"}));
  con_cmd->add_option("--n", con_n, "number of points")->required();
  con_cmd->add_option("-o,--out", con_out, "output file ('-' = stdout)");

  std::string cnt_points = "-";
  int cnt_k = 5;
  bool cnt_wit = false, cnt_json = false;
  auto* cnt_cmd = app.add_subcommand("count", "Count convex k-gons in a point set");
  cnt_cmd->add_option("--points", cnt_points, "point-set JSON ('-' = stdin)");
  cnt_cmd->add_option("--k", cnt_k, "polygon size")->check(CLI::Range(3, 1000));
  cnt_cmd->add_flag("--witnesses", cnt_wit, "also list the convex subsets");
  cnt_cmd->add_flag("--json", cnt_json, "JSON output");

  std::string sig_points = "-", sig_out = "-";
  auto* sig_cmd =
      app.add_subcommand("signotope", "Extract the signotope of a point set");
  sig_cmd->add_option("--points", sig_points, "point-set JSON ('-' = stdin)");
  sig_cmd->add_option("-o,--out", sig_out, "output file ('-' = stdout)");

  int sls_n = 0, sls_seeds = 1, sls_jobs = 1;
  pent::SlsConfig sls_cfg;
  bool sls_json = false;
  auto* sls_cmd = app.add_subcommand("sls", "Stochastic local search minimization");
  sls_cmd->add_option("--n", sls_n, "number of points")->required();
  sls_cmd->add_option("--seed", sls_cfg.seed, "RNG seed");
  sls_cmd->add_option("--max-flips", sls_cfg.max_flips, "flip budget per run");
  sls_cmd->add_option("--restart-interval", sls_cfg.restart_interval,
                      "flips between restarts");
  sls_cmd->add_option("--target", sls_cfg.target, "stop when best <= target");
  sls_cmd->add_option("--report-interval", sls_cfg.report_interval,
                      "progress line interval (0 = quiet)");
  sls_cmd->add_option("--seeds", sls_seeds, "portfolio size")->check(CLI::Range(1, 4096));
  sls_cmd->add_option("--jobs", sls_jobs, "parallel workers")->check(CLI::Range(1, 256));
  sls_cmd->add_flag("--json", sls_json, "(JSON is always printed)");

  SolveArgs sol;
  auto* sol_cmd = app.add_subcommand("solve", "Exact MaxSAT optimum");
  sol_cmd->add_option("--n", sol.n, "encode this n in-process");
  sol_cmd->add_option("--wcnf", sol.wcnf_path, "solve this WCNF file instead");
  sol_cmd->add_option("--ub-hint", sol.ub_hint, "known valid upper bound");
  sol_cmd->add_flag("--no-symmetry", sol.no_symmetry, "encode without symmetry units");
  sol_cmd->add_flag("--cubes", sol.use_cubes, "split on the cube variables");
  sol_cmd->add_option("--jobs", sol.jobs, "parallel cube workers")
      ->check(CLI::Range(1, 256));
  sol_cmd->add_option("--max-propagations", sol.max_propagations,
                      "propagation budget");
  sol_cmd->add_option("--branch-order", sol.branch_order, "lex or layered")
      ->check(CLI::IsMember({"lex", "layered"}));
  sol_cmd->add_option("--model-out", sol.model_out, "write the optimal model here");

  std::string rea_sig = "-", rea_out = "-", rea_svg;
  pent::RealizerConfig rea_cfg;
  bool rea_json = false;
  auto* rea_cmd = app.add_subcommand("realize", "Find exact coordinates realizing "
                                                "a signotope");
  rea_cmd->add_option("--signotope", rea_sig, "signotope text file ('-' = stdin)");
  rea_cmd->add_option("-o,--out", rea_out, "point-set JSON output");
  rea_cmd->add_option("--svg", rea_svg, "also draw the points as SVG");
  rea_cmd->add_option("--seed", rea_cfg.seed, "RNG seed");
  rea_cmd->add_option("--restarts", rea_cfg.restarts, "restart budget");
  rea_cmd->add_option("--max-iters", rea_cfg.max_iters, "proposals per restart");
  rea_cmd->add_option("--epsilon", rea_cfg.epsilon, "required orientation slack");
  rea_cmd->add_flag("--json", rea_json, "JSON result summary");

  int cub_n = 0;
  std::string cub_out = "-";
  bool cub_json = false;
  auto* cub_cmd = app.add_subcommand("cubes", "Emit the cube-and-conquer split");
  cub_cmd->add_option("--n", cub_n, "number of points")->required();
  cub_cmd->add_option("-o,--out", cub_out, "output file ('-' = stdout)");
  cub_cmd->add_flag("--json", cub_json, "JSON summary instead of the list");

  long long bnd_n = 0;
  std::string bnd_from;
  bool bnd_json = false;
  auto* bnd_cmd = app.add_subcommand("bounds", "Derive lower/upper bounds");
  bnd_cmd->add_option("--n", bnd_n, "target n")->required();
  bnd_cmd->add_option("--from", bnd_from, "propagate from a base value, m=r");
  bnd_cmd->add_flag("--json", bnd_json, "JSON output");

  std::string ver_points, ver_sig;
  uint64_t ver_seed = 1;
  bool ver_json = false;
  auto* ver_cmd =
      app.add_subcommand("verify", "Cross-check geometric vs abstract counts");
  ver_cmd->add_option("--points", ver_points, "point-set JSON file");
  ver_cmd->add_option("--signotope", ver_sig, "signotope text file");
  ver_cmd->add_option("--seed", ver_seed, "realizer seed for --signotope");
  ver_cmd->add_flag("--json", ver_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*enc_cmd) return cmd_encode(enc);
    if (*con_cmd) return cmd_construct(con_kind, con_n, con_out);
    if (*cnt_cmd) return cmd_count(cnt_points, cnt_k, cnt_wit, cnt_json);
    if (*sig_cmd) return cmd_signotope(sig_points, sig_out);
    if (*sls_cmd) return cmd_sls(sls_n, sls_cfg, sls_seeds, sls_jobs);
    if (*sol_cmd) return cmd_solve(sol);
    if (*rea_cmd) return cmd_realize(rea_sig, rea_out, rea_svg, rea_cfg, rea_json);
    if (*cub_cmd) return cmd_cubes(cub_n, cub_out, cub_json);
    if (*bnd_cmd) return cmd_bounds(bnd_n, bnd_from, bnd_json);
    if (*ver_cmd) return cmd_verify(ver_points, ver_sig, ver_seed, ver_json);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
