#include "pentamin/sls.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <limits>
#include <random>
#include <thread>

namespace pent {

namespace {

// Occurrence entry: clause index and the polarity of the variable's
// literal in that clause, packed so the hot loop stays branch-light.
struct Occ {
  int clause;
  uint8_t positive;
};

class DdfwEngine {
 public:
  DdfwEngine(int n, const SlsConfig& cfg)
      : n_(n), cfg_(cfg), rng_(cfg.seed) {
    const CnfFormula f = encode_sat(n, cfg.include_axioms);
    num_vars_ = f.num_vars;
    num_clauses_ = static_cast<int>(f.clauses.size());
    begin_.reserve(num_clauses_ + 1);
    begin_.push_back(0);
    for (const auto& cl : f.clauses) {
      for (int lit : cl) lits_.push_back(lit);
      begin_.push_back(static_cast<int>(lits_.size()));
    }
    occ_begin_.assign(num_vars_ + 2, 0);
    for (int lit : lits_) ++occ_begin_[std::abs(lit) + 1];
    for (int v = 1; v <= num_vars_ + 1; ++v) occ_begin_[v] += occ_begin_[v - 1];
    occ_.resize(lits_.size());
    {
      std::vector<int> fill(occ_begin_.begin(), occ_begin_.end() - 1);
      for (int c = 0; c < num_clauses_; ++c)
        for (int i = begin_[c]; i < begin_[c + 1]; ++i) {
          const int lit = lits_[i];
          occ_[fill[std::abs(lit)]++] = {c, static_cast<uint8_t>(lit > 0)};
        }
    }
    value_.assign(num_vars_ + 1, 0);
    weight_.assign(num_clauses_, 0);
    num_true_.assign(num_clauses_, 0);
    crit_var_.assign(num_clauses_, 0);
    make_.assign(num_vars_ + 1, 0);
    break_.assign(num_vars_ + 1, 0);
    fals_pos_.assign(num_clauses_, -1);
    stamp_.assign(num_vars_ + 1, 0);
  }

  SlsResult run() {
    const auto t0 = std::chrono::steady_clock::now();
    long long flips = 0;
    long long restarts = -1;  // first init is not a restart
    long long next_restart = 0;
    long long best = num_clauses_ + 1;
    std::vector<uint8_t> best_values;

    while (flips < cfg_.max_flips) {
      if (flips == next_restart) {
        init_random_assignment();
        ++restarts;
        next_restart = flips + cfg_.restart_interval;
        if (record_best(best, best_values) && stop_reached(best)) break;
      }
      if (!falsified_.empty()) {
        const int v = choose_flip();
        if (v != 0) {
          flip(v);
          ++flips;
          if (cfg_.report_interval > 0 && flips % cfg_.report_interval == 0)
            std::printf("c flips=%lld best=%lld\n", flips,
                        std::min<long long>(best, falsified_.size()));
          if (record_best(best, best_values) && stop_reached(best)) break;
          continue;
        }
        redistribute_weights();
        continue;
      }
      break;  // everything satisfied: cannot improve
    }

    SignotopeAssignment assignment(
        n_, std::vector<uint8_t>(best_values.begin() + 1, best_values.end()));
    SlsResult res{best,
                  std::move(assignment),
                  flips,
                  std::max<long long>(restarts, 0),
                  std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                      .count(),
                  cfg_.seed,
                  false};
    res.axioms_clean = !cfg_.include_axioms || check_axioms(res.best_assignment).empty();
    return res;
  }

 private:
  bool stop_reached(long long best) const {
    return best == 0 || (cfg_.target >= 0 && best <= cfg_.target);
  }

  bool record_best(long long& best, std::vector<uint8_t>& best_values) {
    const long long cur = static_cast<long long>(falsified_.size());
    if (cur >= best) return false;
    best = cur;
    best_values = value_;
    return true;
  }

  void init_random_assignment() {
    for (int v = 1; v <= num_vars_; ++v) value_[v] = rng_() & 1u;
    std::fill(weight_.begin(), weight_.end(), cfg_.weight_init);
    std::fill(make_.begin() + 1, make_.end(), 0);
    std::fill(break_.begin() + 1, break_.end(), 0);
    falsified_.clear();
    std::fill(fals_pos_.begin(), fals_pos_.end(), -1);
    for (int c = 0; c < num_clauses_; ++c) {
      int nt = 0, crit = 0;
      for (int i = begin_[c]; i < begin_[c + 1]; ++i)
        if (lit_sat(lits_[i])) {
          ++nt;
          crit = std::abs(lits_[i]);
        }
      num_true_[c] = nt;
      crit_var_[c] = crit;
      if (nt == 0) {
        push_falsified(c);
        for (int i = begin_[c]; i < begin_[c + 1]; ++i)
          make_[std::abs(lits_[i])] += weight_[c];
      } else if (nt == 1) {
        break_[crit] += weight_[c];
      }
    }
  }

  bool lit_sat(int lit) const {
    return (value_[std::abs(lit)] != 0) == (lit > 0);
  }

  void push_falsified(int c) {
    fals_pos_[c] = static_cast<int>(falsified_.size());
    falsified_.push_back(c);
  }

  void pop_falsified(int c) {
    const int pos = fals_pos_[c];
    const int last = falsified_.back();
    falsified_[pos] = last;
    fals_pos_[last] = pos;
    falsified_.pop_back();
    fals_pos_[c] = -1;
  }

  // Best weighted-gain flip among variables of falsified clauses:
  // strictly improving always taken; zero-gain sideways moves with
  // probability ~15%; otherwise 0 (caller redistributes weights).
  int choose_flip() {
    ++stamp_counter_;
    candidates_.clear();
    for (int c : falsified_)
      for (int i = begin_[c]; i < begin_[c + 1]; ++i) {
        const int v = std::abs(lits_[i]);
        if (stamp_[v] != stamp_counter_) {
          stamp_[v] = stamp_counter_;
          candidates_.push_back(v);
        }
      }
    long long best_gain = std::numeric_limits<long long>::min();
    int ties = 0;
    int pick = 0;
    for (int v : candidates_) {
      const long long gain = make_[v] - break_[v];
      if (gain > best_gain) {
        best_gain = gain;
        ties = 1;
        pick = v;
      } else if (gain == best_gain && static_cast<int>(rng_() % ++ties) == 0) {
        pick = v;
      }
    }
    if (best_gain > 0) return pick;
    if (best_gain == 0 && rng_() % 100 < 15) return pick;
    return 0;
  }

  void flip(int v) {
    const uint8_t new_val = value_[v] ^ 1u;
    value_[v] = new_val;
    for (int i = occ_begin_[v]; i < occ_begin_[v + 1]; ++i) {
      const Occ o = occ_[i];
      const int c = o.clause;
      const long long w = weight_[c];
      if (o.positive == new_val) {
        // v's literal became true
        const int nt = ++num_true_[c];
        if (nt == 1) {
          pop_falsified(c);
          for (int j = begin_[c]; j < begin_[c + 1]; ++j)
            make_[std::abs(lits_[j])] -= w;
          crit_var_[c] = v;
          break_[v] += w;
        } else if (nt == 2) {
          break_[crit_var_[c]] -= w;
        }
      } else {
        // v's literal became false
        const int nt = --num_true_[c];
        if (nt == 0) {
          break_[v] -= w;
          push_falsified(c);
          for (int j = begin_[c]; j < begin_[c + 1]; ++j)
            make_[std::abs(lits_[j])] += w;
        } else if (nt == 1) {
          for (int j = begin_[c]; j < begin_[c + 1]; ++j)
            if (lit_sat(lits_[j])) {
              crit_var_[c] = std::abs(lits_[j]);
              break;
            }
          break_[crit_var_[c]] += w;
        }
      }
    }
  }

  // DDFW weight transfer: each falsified clause receives weight from its
  // maximally weighted satisfied neighbor (sharing a variable), falling
  // back to a random satisfied clause; donors above the initial weight
  // give the full quantum, others one unit.
  void redistribute_weights() {
    snapshot_ = falsified_;
    for (int c : snapshot_) {
      int src = -1;
      long long src_w = 1;  // donors must keep weight >= 1
      for (int i = begin_[c]; i < begin_[c + 1]; ++i) {
        const int v = std::abs(lits_[i]);
        for (int j = occ_begin_[v]; j < occ_begin_[v + 1]; ++j) {
          const int c2 = occ_[j].clause;
          if (num_true_[c2] > 0 && weight_[c2] > src_w) {
            src = c2;
            src_w = weight_[c2];
          }
        }
      }
      if (src < 0) {
        // No satisfied neighbor with spare weight: random satisfied clause.
        for (int tries = 0; tries < 64 && src < 0; ++tries) {
          const int c2 = static_cast<int>(rng_() % num_clauses_);
          if (num_true_[c2] > 0 && weight_[c2] > 1) src = c2;
        }
        if (src < 0) continue;
      }
      const long long amount =
          weight_[src] > cfg_.weight_init
              ? std::min(cfg_.transfer_quantum, weight_[src] - 1)
              : 1;
      weight_[src] -= amount;
      weight_[c] += amount;
      // Gain bookkeeping for both weight changes.
      for (int j = begin_[c]; j < begin_[c + 1]; ++j)
        make_[std::abs(lits_[j])] += amount;
      if (num_true_[src] == 1) break_[crit_var_[src]] -= amount;
    }
  }

  int n_;
  SlsConfig cfg_;
  std::mt19937_64 rng_;
  int num_vars_ = 0;
  int num_clauses_ = 0;
  std::vector<int> lits_, begin_;
  std::vector<Occ> occ_;
  std::vector<int> occ_begin_;
  std::vector<uint8_t> value_;
  std::vector<long long> weight_;
  std::vector<int> num_true_, crit_var_;
  std::vector<long long> make_, break_;
  std::vector<int> falsified_, fals_pos_;
  std::vector<long long> stamp_;
  long long stamp_counter_ = 0;
  std::vector<int> candidates_, snapshot_;
};

}  // namespace

SlsResult sls_minimize(int n, const SlsConfig& cfg) {
  if (n < 5) throw std::invalid_argument("sls_minimize: n >= 5 required");
  if (cfg.restart_interval < 1 || cfg.weight_init < cfg.transfer_quantum ||
      cfg.transfer_quantum < 1)
    throw std::invalid_argument("sls_minimize: invalid config");
  return DdfwEngine(n, cfg).run();
}

SlsResult sls_portfolio(int n, const SlsConfig& base, int num_seeds, int jobs) {
  if (num_seeds < 1) throw std::invalid_argument("sls_portfolio: num_seeds >= 1");
  std::vector<std::optional<SlsResult>> results(num_seeds);
  std::atomic<int> next{0};
  std::atomic<bool> stop{false};
  auto worker = [&]() {
    while (!stop.load()) {
      const int i = next.fetch_add(1);
      if (i >= num_seeds) return;
      SlsConfig cfg = base;
      cfg.seed = base.seed + static_cast<uint64_t>(i);
      results[i] = sls_minimize(n, cfg);
      if (base.target >= 0 && results[i]->best_falsified <= base.target)
        stop.store(true);  // target met: later seeds need not run
    }
  };
  const int workers = std::max(1, std::min(jobs, num_seeds));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  // Best completed result; ties go to the smallest seed, so the outcome
  // does not depend on scheduling.
  int best = -1;
  for (int i = 0; i < num_seeds; ++i)
    if (results[i] &&
        (best < 0 || results[i]->best_falsified < results[best]->best_falsified))
      best = i;
  return *results[best];
}

}  // namespace pent
