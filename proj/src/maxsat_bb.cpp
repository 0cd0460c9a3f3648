#include "pentamin/maxsat_bb.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <thread>

#include "pentamin/tuples.hpp"

namespace pent {

namespace {

constexpr uint8_t kUnassigned = 2;

// Counter-based DPLL over the hard clauses. Only non-soft (sigma)
// variables are branched; relaxation variables are assigned by unit
// propagation alone, and each one forced true raises the admissible
// lower bound (the current cost) by one.
class BbSolver {
 public:
  BbSolver(const WcnfFormula& f, const std::vector<int>& extra_units) : f_(f) {
    num_vars_ = f.num_vars;
    is_soft_.assign(num_vars_ + 1, 0);
    for (int lit : f.soft_lits) {
      if (lit >= 0)
        throw std::invalid_argument("solver: soft clauses must be negative units");
      is_soft_[-lit] = 1;
    }
    // The completion rule (unassigned relaxation variables count as
    // false) is only sound when soft variables occur positively in the
    // hard clauses; verify the shape instead of trusting it.
    begin_.push_back(0);
    auto add_clause = [&](const std::vector<int>& cl) {
      for (int lit : cl) {
        const int v = std::abs(lit);
        if (v < 1 || v > num_vars_)
          throw std::invalid_argument("solver: literal out of range");
        if (lit < 0 && is_soft_[v])
          throw std::invalid_argument(
              "solver: relaxation variable occurs negatively in a hard clause");
        lits_.push_back(lit);
      }
      begin_.push_back(static_cast<int>(lits_.size()));
    };
    for (const auto& cl : f.hard) add_clause(cl);
    for (int lit : extra_units) add_clause({lit});
    num_clauses_ = static_cast<int>(begin_.size()) - 1;

    occ_begin_.assign(2 * num_vars_ + 3, 0);
    for (int lit : lits_) ++occ_begin_[lit_index(lit) + 1];
    for (size_t i = 1; i < occ_begin_.size(); ++i) occ_begin_[i] += occ_begin_[i - 1];
    occ_.resize(lits_.size());
    {
      std::vector<int> fill(occ_begin_.begin(), occ_begin_.end() - 1);
      for (int c = 0; c < num_clauses_; ++c)
        for (int i = begin_[c]; i < begin_[c + 1]; ++i)
          occ_[fill[lit_index(lits_[i])]++] = c;
    }
    value_.assign(num_vars_ + 1, kUnassigned);
    num_true_.assign(num_clauses_, 0);
    num_false_.assign(num_clauses_, 0);
  }

  void set_branch_vars(std::vector<int> vars) { branch_vars_ = std::move(vars); }

  SolveResult run(long long ub_bound, uint64_t max_propagations) {
    const auto t0 = std::chrono::steady_clock::now();
    SolveResult res;
    best_ub_ = ub_bound;

    // Root level: input unit clauses, then propagate to fixpoint.
    bool root_ok = true;
    for (int c = 0; c < num_clauses_ && root_ok; ++c)
      if (begin_[c + 1] - begin_[c] == 1) root_ok = enqueue(lits_[begin_[c]]);
    if (root_ok) root_ok = propagate();
    if (!root_ok) {
      res.status = SolveStatus::HardUnsat;
      res.propagations = propagations_;
      res.time = seconds_since(t0);
      return res;
    }

    // Iterative DFS. A frame remembers its variable, the trail height
    // before its first phase, and where the branch-variable scan stood.
    struct Frame {
      int var;
      size_t mark;
      size_t cursor;
      bool tried_false;
    };
    std::vector<Frame> stack;
    bool found_model = false;
    bool budget_hit = false;
    size_t cursor = 0;

    while (true) {
      if (propagations_ > max_propagations) {
        budget_hit = true;
        break;
      }
      bool descend_ok = cost_ < best_ub_;
      if (descend_ok) {
        while (cursor < branch_vars_.size() &&
               value_[branch_vars_[cursor]] != kUnassigned)
          ++cursor;
        if (cursor == branch_vars_.size()) {
          // Complete: cost_ < best_ub_ makes this a new best model.
          best_ub_ = cost_;
          found_model = true;
          save_model(res.model);
          if (cost_ == 0) break;
          descend_ok = false;
        } else {
          stack.push_back({branch_vars_[cursor], trail_.size(), cursor, false});
          if (enqueue(stack.back().var) && propagate()) continue;
          descend_ok = false;
        }
      }
      // Backtrack to the deepest frame that still has its false phase.
      while (!descend_ok) {
        if (stack.empty()) goto finished;
        Frame& fr = stack.back();
        backtrack_to(fr.mark);
        if (!fr.tried_false && cost_ < best_ub_) {
          fr.tried_false = true;
          cursor = fr.cursor;
          if (enqueue(-fr.var) && propagate()) descend_ok = true;
        } else {
          stack.pop_back();
        }
      }
    }
  finished:
    backtrack_to(0);
    res.propagations = propagations_;
    res.time = seconds_since(t0);
    if (budget_hit) {
      res.status = SolveStatus::BudgetExceeded;
      res.lower = 0;
      res.upper = found_model ? best_ub_ : static_cast<long long>(f_.soft_lits.size());
      return res;
    }
    res.status = SolveStatus::Optimal;
    if (found_model) {
      res.lower = res.upper = best_ub_;
    } else {
      // Exhausted without ever beating the initial bound: the optimum
      // is at least ub_bound (callers decide whether that is an error).
      res.lower = ub_bound;
      res.upper = std::numeric_limits<long long>::max();
    }
    return res;
  }

 private:
  static int lit_index(int lit) { return lit > 0 ? 2 * lit : 2 * (-lit) + 1; }

  static double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  }

  bool enqueue(int lit) {
    const int v = std::abs(lit);
    const uint8_t val = lit > 0 ? 1 : 0;
    if (value_[v] != kUnassigned) return value_[v] == val;
    value_[v] = val;
    trail_.push_back(lit);
    if (is_soft_[v] && val) ++cost_;
    return true;
  }

  // Processes the queue. On conflict the remaining queued literals
  // still get their counter updates (without deducing anything) so that
  // backtracking can reverse the trail uniformly.
  bool propagate() {
    bool ok = true;
    while (qhead_ < trail_.size()) {
      const int lit = trail_[qhead_++];
      ++propagations_;
      for (int i = occ_begin_[lit_index(lit)]; i < occ_begin_[lit_index(lit) + 1]; ++i)
        ++num_true_[occ_[i]];
      const int f0 = occ_begin_[lit_index(-lit)];
      const int f1 = occ_begin_[lit_index(-lit) + 1];
      for (int i = f0; i < f1; ++i) {
        const int c = occ_[i];
        const int nf = ++num_false_[c];
        if (!ok || num_true_[c] > 0) continue;
        const int size = begin_[c + 1] - begin_[c];
        if (nf == size) {
          ok = false;
        } else if (nf == size - 1) {
          for (int j = begin_[c]; j < begin_[c + 1]; ++j) {
            const int l = lits_[j];
            if (value_[std::abs(l)] == kUnassigned) {
              if (!enqueue(l)) ok = false;
              break;
            }
          }
        }
      }
    }
    return ok;
  }

  void backtrack_to(size_t mark) {
    while (trail_.size() > mark) {
      const int lit = trail_.back();
      trail_.pop_back();
      const int v = std::abs(lit);
      if (is_soft_[v] && value_[v]) --cost_;
      value_[v] = kUnassigned;
      for (int i = occ_begin_[lit_index(lit)]; i < occ_begin_[lit_index(lit) + 1]; ++i)
        --num_true_[occ_[i]];
      for (int i = occ_begin_[lit_index(-lit)]; i < occ_begin_[lit_index(-lit) + 1];
           ++i)
        --num_false_[occ_[i]];
    }
    qhead_ = trail_.size();
  }

  void save_model(std::vector<int>& model) {
    model.clear();
    model.reserve(num_vars_);
    for (int v = 1; v <= num_vars_; ++v)
      model.push_back(value_[v] == 1 ? v : -v);  // unassigned soft -> false
  }

  const WcnfFormula& f_;
  int num_vars_ = 0;
  int num_clauses_ = 0;
  std::vector<uint8_t> is_soft_;
  std::vector<int> lits_, begin_;
  std::vector<int> occ_, occ_begin_;
  std::vector<uint8_t> value_;
  std::vector<int> num_true_, num_false_;
  std::vector<int> trail_;
  size_t qhead_ = 0;
  long long cost_ = 0;
  long long best_ub_ = 0;
  uint64_t propagations_ = 0;
  std::vector<int> branch_vars_;
};

std::vector<int> branch_vars_for(const WcnfFormula& f, BranchOrder order) {
  std::vector<uint8_t> soft(f.num_vars + 1, 0);
  for (int lit : f.soft_lits) soft[std::abs(lit)] = 1;
  std::vector<int> vars;
  if (order == BranchOrder::Layered && f.n >= 5) {
    for (int c = 3; c <= f.n; ++c)
      for (int a = 1; a <= c - 2; ++a)
        for (int b = a + 1; b <= c - 1; ++b)
          vars.push_back(static_cast<int>(triple_rank(f.n, a, b, c)));
    return vars;
  }
  for (int v = 1; v <= f.num_vars; ++v)
    if (!soft[v]) vars.push_back(v);
  return vars;
}

SolveResult solve_one(const WcnfFormula& f, const std::vector<int>& extra_units,
                      long long ub_bound, const SolveOptions& opts) {
  BbSolver solver(f, extra_units);
  solver.set_branch_vars(branch_vars_for(f, opts.branch_order));
  return solver.run(ub_bound, opts.max_propagations);
}

}  // namespace

long long optimum_of(const SolveResult& r) {
  if (r.status != SolveStatus::Optimal || r.lower != r.upper)
    throw std::logic_error("optimum_of: result is not optimal");
  return r.lower;
}

SolveResult solve_exact(const WcnfFormula& f, const SolveOptions& opts) {
  const long long no_better_than = static_cast<long long>(f.soft_lits.size()) + 1;
  const long long bound =
      opts.ub_hint ? std::min(no_better_than, *opts.ub_hint + 1) : no_better_than;
  SolveResult res = solve_one(f, {}, bound, opts);
  if (res.status == SolveStatus::Optimal && res.model.empty()) {
    // Exhausted the tree without beating the initial bound. Without a
    // hint the bound exceeds any feasible cost, so the hard clauses are
    // unsatisfiable; with a hint, the hint was simply wrong.
    if (!opts.ub_hint || bound >= no_better_than) {
      res.status = SolveStatus::HardUnsat;
      res.lower = res.upper = 0;
    } else {
      throw std::invalid_argument(
          "solve_exact: ub_hint was not a valid upper bound (optimum >= " +
          std::to_string(res.lower) + ")");
    }
  }
  return res;
}

SolveResult solve_exact_cubes(const WcnfFormula& f, const std::vector<Cube>& cubes,
                              const SolveOptions& opts, int jobs) {
  if (cubes.empty()) return solve_exact(f, opts);
  const long long no_better_than = static_cast<long long>(f.soft_lits.size()) + 1;
  std::atomic<long long> shared_ub{
      opts.ub_hint ? std::min(no_better_than, *opts.ub_hint + 1) : no_better_than};
  std::vector<SolveResult> results(cubes.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    while (true) {
      const size_t i = next.fetch_add(1);
      if (i >= cubes.size()) return;
      // Later cubes prune with the best model found anywhere so far;
      // that can only skip assignments no better than one already in
      // hand, so the final minimum is unchanged.
      results[i] = solve_one(f, cubes[i].literals, shared_ub.load(), opts);
      if (!results[i].model.empty()) {
        long long cur = shared_ub.load();
        while (results[i].upper < cur &&
               !shared_ub.compare_exchange_weak(cur, results[i].upper)) {
        }
      }
    }
  };
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(cubes.size())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  SolveResult out;
  out.upper = std::numeric_limits<long long>::max();
  bool any_budget = false;
  bool all_unsat = true;
  for (const auto& r : results) {
    out.propagations += r.propagations;
    out.time += r.time;
    if (r.status == SolveStatus::BudgetExceeded) any_budget = true;
    if (r.status != SolveStatus::HardUnsat) all_unsat = false;
    if (!r.model.empty() && r.upper < out.upper) {
      out.upper = r.upper;
      out.model = r.model;
    }
  }
  if (any_budget) {
    out.status = SolveStatus::BudgetExceeded;
    out.lower = 0;
    if (out.model.empty()) out.upper = static_cast<long long>(f.soft_lits.size());
    return out;
  }
  if (out.model.empty()) {
    // No cube produced a model. Without a hint every cube searched up
    // to cost = #softs, so the formula is hard-unsatisfiable under each
    // cube; with a hint a wrong hint and unsatisfiability look alike
    // unless every cube failed already at the root.
    if (!opts.ub_hint || all_unsat) {
      out.status = SolveStatus::HardUnsat;
      out.lower = out.upper = 0;
      return out;
    }
    throw std::invalid_argument(
        "solve_exact_cubes: ub_hint was not a valid upper bound");
  }
  out.status = SolveStatus::Optimal;
  out.lower = out.upper;
  return out;
}

}  // namespace pent
