#include "pentamin/encoder.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace pent {

namespace {

// Appends the 8 axiom clauses of one quadruple (equation 1..4, conjunct
// 1..2) using variable ids v(abc), v(abd), v(acd), v(bcd).
void axiom_clauses(int abc, int abd, int acd, int bcd,
                   std::vector<std::vector<int>>& out) {
  out.push_back({abc, -abd, acd});
  out.push_back({-abc, abd, -acd});
  out.push_back({abc, -acd, bcd});
  out.push_back({-abc, acd, -bcd});
  out.push_back({abc, -abd, bcd});
  out.push_back({-abc, abd, -bcd});
  out.push_back({abd, -acd, bcd});
  out.push_back({-abd, acd, -bcd});
}

// Appends the 8 convexity clauses of one 5-tuple, in the fixed clause
// order (the two blockers of each case I..IV). `relax`, when nonzero,
// is appended to every clause.
void convexity_clauses(const VarMap& vm, const std::array<int, 5>& t, int relax,
                       std::vector<std::vector<int>>& out) {
  const auto [a, b, c, d, e] = t;
  const int abc = vm.sigma_index(a, b, c), abd = vm.sigma_index(a, b, d),
            abe = vm.sigma_index(a, b, e), acd = vm.sigma_index(a, c, d),
            ace = vm.sigma_index(a, c, e), ade = vm.sigma_index(a, d, e),
            bcd = vm.sigma_index(b, c, d), bce = vm.sigma_index(b, c, e),
            bde = vm.sigma_index(b, d, e), cde = vm.sigma_index(c, d, e);
  const std::vector<std::vector<int>> clauses = {
      {abc, bcd, cde},    {-abc, -bcd, -cde},  // Case I
      {abc, bce, -ade},   {-abc, -bce, ade},   // Case II
      {abd, bde, -ace},   {-abd, -bde, ace},   // Case III
      {abe, -acd, -cde},  {-abe, acd, cde},    // Case IV
  };
  for (const auto& cl : clauses) {
    out.push_back(cl);
    if (relax) out.back().push_back(relax);
  }
}

template <typename Fn>
void for_each_quadruple(int n, Fn&& fn) {
  for (int a = 1; a <= n - 3; ++a)
    for (int b = a + 1; b <= n - 2; ++b)
      for (int c = b + 1; c <= n - 1; ++c)
        for (int d = c + 1; d <= n; ++d) fn(a, b, c, d);
}

template <typename Fn>
void for_each_quintuple(int n, Fn&& fn) {
  std::array<int, 5> t{};
  for (t[0] = 1; t[0] <= n - 4; ++t[0])
    for (t[1] = t[0] + 1; t[1] <= n - 3; ++t[1])
      for (t[2] = t[1] + 1; t[2] <= n - 2; ++t[2])
        for (t[3] = t[2] + 1; t[3] <= n - 1; ++t[3])
          for (t[4] = t[3] + 1; t[4] <= n; ++t[4]) fn(t);
}

void write_clause(std::string& buf, long long weight, bool new_format_hard,
                  const std::vector<int>& lits) {
  if (new_format_hard)
    buf += 'h';
  else if (weight >= 0)
    buf += std::to_string(weight);
  bool first = weight < 0 && !new_format_hard;
  for (int l : lits) {
    if (!first) buf += ' ';
    first = false;
    buf += std::to_string(l);
  }
  buf += " 0\n";
}

}  // namespace

VarMap::VarMap(int n_) : n(n_) {
  if (n < 5) throw std::invalid_argument("VarMap: n >= 5 required");
  num_sigma = binomial64(n, 3);
  num_relax = binomial64(n, 5);
}

int VarMap::sigma_index(int a, int b, int c) const {
  return static_cast<int>(triple_rank(n, a, b, c));
}

int VarMap::relax_index(const std::array<int, 5>& t) const {
  return static_cast<int>(num_sigma + quint_rank(n, t));
}

std::array<int, 3> VarMap::triple_of(int var) const {
  return triple_of_rank(n, var);
}

std::array<int, 5> VarMap::quint_of(int var) const {
  return quint_of_rank(n, var - num_sigma);
}

CnfFormula encode_sat(int n, bool with_axioms) {
  const VarMap vm(n);
  CnfFormula f;
  f.num_vars = static_cast<int>(vm.num_sigma);
  if (with_axioms)
    for_each_quadruple(n, [&](int a, int b, int c, int d) {
      axiom_clauses(vm.sigma_index(a, b, c), vm.sigma_index(a, b, d),
                    vm.sigma_index(a, c, d), vm.sigma_index(b, c, d), f.clauses);
    });
  for_each_quintuple(n, [&](const std::array<int, 5>& t) {
    convexity_clauses(vm, t, 0, f.clauses);
  });
  return f;
}

WcnfFormula encode_maxsat(int n, bool symmetry) {
  const VarMap vm(n);
  WcnfFormula f;
  f.n = n;
  f.num_vars = static_cast<int>(vm.num_sigma + vm.num_relax);
  for_each_quadruple(n, [&](int a, int b, int c, int d) {
    axiom_clauses(vm.sigma_index(a, b, c), vm.sigma_index(a, b, d),
                  vm.sigma_index(a, c, d), vm.sigma_index(b, c, d), f.hard);
  });
  for_each_quintuple(n, [&](const std::array<int, 5>& t) {
    convexity_clauses(vm, t, vm.relax_index(t), f.hard);
  });
  if (symmetry) {
    for (const auto& unit : symmetry_units(n)) f.hard.push_back(unit);
    f.num_symmetry = binomial64(n - 1, 2);
  }
  f.soft_lits.reserve(vm.num_relax);
  for (long long r = 1; r <= vm.num_relax; ++r)
    f.soft_lits.push_back(static_cast<int>(-(vm.num_sigma + r)));
  f.top_weight = vm.num_relax + 1;
  return f;
}

std::vector<std::vector<int>> symmetry_units(int n) {
  if (n < 3) throw std::invalid_argument("symmetry_units: n >= 3 required");
  std::vector<std::vector<int>> out;
  for (int b = 2; b <= n - 1; ++b)
    for (int c = b + 1; c <= n; ++c)
      out.push_back({static_cast<int>(triple_rank(n, 1, b, c))});
  return out;
}

std::vector<Cube> make_cubes(int n) {
  if (n < 5) throw std::invalid_argument("make_cubes: n >= 5 required");
  std::vector<int> vars;
  for (int i = 1; 2 * i + 3 <= n; ++i)
    vars.push_back(static_cast<int>(triple_rank(n, 2 * i + 1, 2 * i + 2, 2 * i + 3)));
  return make_cubes_from_vars(vars);
}

std::vector<Cube> make_cubes_from_vars(const std::vector<int>& vars) {
  const int m = static_cast<int>(vars.size());
  if (m > 30) throw std::invalid_argument("make_cubes: too many splitting variables");
  std::vector<Cube> cubes;
  cubes.reserve(1u << m);
  for (unsigned pattern = 0; pattern < (1u << m); ++pattern) {
    Cube cube;
    cube.literals.reserve(m);
    // First variable is the most significant bit; cube 0 is all-positive.
    for (int i = 0; i < m; ++i) {
      const bool neg = (pattern >> (m - 1 - i)) & 1u;
      cube.literals.push_back(neg ? -vars[i] : vars[i]);
    }
    cubes.push_back(std::move(cube));
  }
  return cubes;
}

SignotopeAssignment decode_model(int n, const std::vector<int>& model) {
  const VarMap vm(n);
  std::vector<int8_t> seen(vm.num_sigma + 1, 0);
  for (int lit : model) {
    if (lit == 0) throw std::invalid_argument("decode_model: zero literal");
    const long long var = lit > 0 ? lit : -lit;
    if (var > vm.num_sigma + vm.num_relax)
      throw std::invalid_argument("decode_model: variable id out of range: " +
                                  std::to_string(var));
    if (var > vm.num_sigma) continue;  // relaxation variable, ignored
    const int8_t sign = lit > 0 ? 1 : -1;
    if (seen[var] != 0 && seen[var] != sign)
      throw std::invalid_argument("decode_model: conflicting literals for variable " +
                                  std::to_string(var));
    seen[var] = sign;
  }
  std::vector<uint8_t> values(vm.num_sigma);
  for (long long v = 1; v <= vm.num_sigma; ++v) {
    if (seen[v] == 0)
      throw std::invalid_argument("decode_model: sigma variable " +
                                  std::to_string(v) + " unassigned");
    values[v - 1] = seen[v] > 0 ? 1 : 0;
  }
  return SignotopeAssignment(n, std::move(values));
}

void write_dimacs(const CnfFormula& f, std::ostream& out) {
  std::string buf;
  buf += "p cnf " + std::to_string(f.num_vars) + " " +
         std::to_string(f.clauses.size()) + "\n";
  for (const auto& cl : f.clauses) write_clause(buf, -1, false, cl);
  out << buf;
}

namespace {

void write_wcnf_impl(const WcnfFormula& f, const std::vector<int>* cube,
                     std::ostream& out, bool new_format) {
  const size_t num_hard = f.hard.size() + (cube ? cube->size() : 0);
  std::string buf;
  if (!new_format)
    buf += "p wcnf " + std::to_string(f.num_vars) + " " +
           std::to_string(num_hard + f.soft_lits.size()) + " " +
           std::to_string(f.top_weight) + "\n";
  for (const auto& cl : f.hard)
    write_clause(buf, f.top_weight, new_format, cl);
  if (cube)
    for (int lit : *cube)
      write_clause(buf, f.top_weight, new_format, {lit});
  for (int lit : f.soft_lits) write_clause(buf, 1, false, {lit});
  out << buf;
}

}  // namespace

void write_wcnf(const WcnfFormula& f, std::ostream& out, bool new_format) {
  write_wcnf_impl(f, nullptr, out, new_format);
}

void write_wcnf_cube(const WcnfFormula& f, const Cube& cube, std::ostream& out,
                     bool new_format) {
  write_wcnf_impl(f, &cube.literals, out, new_format);
}

void write_cube_list(const std::vector<Cube>& cubes, std::ostream& out) {
  std::string buf;
  for (const Cube& c : cubes) {
    buf += 'a';
    for (int lit : c.literals) {
      buf += ' ';
      buf += std::to_string(lit);
    }
    buf += " 0\n";
  }
  out << buf;
}

std::vector<int> read_model_file(std::istream& in) {
  std::vector<int> model;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c" || tok == "s" || tok == "o") continue;
    if (tok != "v") ls.seekg(0), ls.clear();
    int lit = 0;
    while (ls >> lit)
      if (lit != 0) model.push_back(lit);
  }
  return model;
}

WcnfFormula read_wcnf(std::istream& in) {
  WcnfFormula f;
  bool have_header = false;
  long long declared_clauses = -1, parsed_clauses = 0;
  long long max_var = 0;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c") continue;
    if (tok == "p") {
      std::string fmt;
      long long vars = 0, clauses = 0, top = 0;
      if (!(ls >> fmt >> vars >> clauses >> top) || fmt != "wcnf")
        throw std::invalid_argument("read_wcnf: bad header");
      f.num_vars = static_cast<int>(vars);
      f.top_weight = top;
      declared_clauses = clauses;
      have_header = true;
      continue;
    }
    bool hard = false;
    long long weight = 0;
    if (tok == "h") {
      hard = true;
    } else {
      weight = std::stoll(tok);
      hard = have_header && weight >= f.top_weight;
    }
    std::vector<int> lits;
    bool terminated = false;
    int lit = 0;
    while (ls >> lit) {
      if (lit == 0) {
        terminated = true;
        break;
      }
      lits.push_back(lit);
      max_var = std::max<long long>(max_var, lit > 0 ? lit : -lit);
    }
    if (!terminated)
      throw std::invalid_argument(
          "read_wcnf: clause line missing the 0 terminator (truncated file?)");
    ++parsed_clauses;
    if (hard) {
      f.hard.push_back(std::move(lits));
    } else {
      if (weight != 1 || lits.size() != 1)
        throw std::invalid_argument(
            "read_wcnf: soft clauses must be weight-1 units");
      f.soft_lits.push_back(lits[0]);
    }
  }
  if (have_header) {
    if (parsed_clauses != declared_clauses)
      throw std::invalid_argument(
          "read_wcnf: header declares " + std::to_string(declared_clauses) +
          " clauses but the file has " + std::to_string(parsed_clauses));
    if (max_var > f.num_vars)
      throw std::invalid_argument(
          "read_wcnf: literal " + std::to_string(max_var) +
          " exceeds the declared variable count " +
          std::to_string(f.num_vars));
  } else {
    f.num_vars = static_cast<int>(max_var);
    f.top_weight = static_cast<long long>(f.soft_lits.size()) + 1;
  }
  // Recover n when the variable count matches an encode_maxsat formula.
  for (int n = 5; n <= 300; ++n)
    if (binomial64(n, 3) + binomial64(n, 5) == f.num_vars) {
      f.n = n;
      break;
    }
  return f;
}

WcnfEval evaluate_wcnf(const WcnfFormula& f, const std::vector<uint8_t>& values) {
  auto sat = [&](int lit) {
    const int var = lit > 0 ? lit : -lit;
    return (values[var] != 0) == (lit > 0);
  };
  WcnfEval ev;
  ev.hard_ok = true;
  for (const auto& cl : f.hard) {
    bool ok = false;
    for (int lit : cl)
      if (sat(lit)) {
        ok = true;
        break;
      }
    if (!ok) {
      ev.hard_ok = false;
      break;
    }
  }
  for (int lit : f.soft_lits)
    if (!sat(lit)) ++ev.soft_falsified;
  return ev;
}

std::vector<uint8_t> model_to_values(int num_vars, const std::vector<int>& model) {
  std::vector<uint8_t> values(num_vars + 1, 0);
  for (int lit : model) {
    const int var = lit > 0 ? lit : -lit;
    if (var >= 1 && var <= num_vars && lit > 0) values[var] = 1;
  }
  return values;
}

}  // namespace pent
