#pragma once

// Pruned exhaustive classification of all A with A+A = R or A +^ A = R,
// range verification, and machine-readable certificates.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "resform/diffsets.hpp"
#include "resform/field.hpp"
#include "resform/sumsets.hpp"

namespace resform {

inline constexpr const char* kCertificateSchema = "resform-cert/1";
inline constexpr const char* kSolverVersion = "1.0.0";

struct SearchConfig {
  SumMode mode = SumMode::restricted;
  u64 p_min = 3;
  u64 p_max = 100;
  u64 max_nodes = 1'000'000'000;
  bool parallel = false;
};

struct BudgetExceeded : std::runtime_error {
  u64 prime;
  explicit BudgetExceeded(u64 p)
      : std::runtime_error("search: node budget exceeded at p=" + std::to_string(p)),
        prime(p) {}
};

namespace detail {

class Classifier {
 public:
  Classifier(const PrimeField& F, SumMode mode, u64 max_nodes)
      : F_(F), p_(F.p()), t_(F.t()), mode_(mode), max_nodes_(max_nodes) {
    in_R_.assign(p_, false);
    for (u64 x : F.residues().members) in_R_[x] = true;
    // cardinality window from the counting inequalities:
    //   restricted: a(a-1) >= p-1 and a <= sqrt(p)+1
    //   standard:   a^2+a  >= p-1 and a^2 < p
    if (mode == SumMode::restricted) {
      a_max_ = isqrt(p_) + 1;
      a_min_ = 1;
      while (a_min_ * (a_min_ - 1) < p_ - 1) ++a_min_;
    } else {
      a_max_ = isqrt(p_ - 1);
      a_min_ = 1;
      while (a_min_ * a_min_ + a_min_ < p_ - 1) ++a_min_;
    }
  }

  std::vector<FSet> run() {
    hit_.assign(p_, 0);
    covered_ = 0;
    cur_.clear();
    // in standard mode 0+0 = 0 leaves R, so 0 never enters
    const u64 first = (mode_ == SumMode::standard) ? 1 : 0;
    dfs(first);
    return std::move(solutions_);
  }

  u64 nodes() const { return nodes_; }

 private:
  void add_sum(u64 s, int dir) {
    if (dir > 0) {
      if (hit_[s]++ == 0) ++covered_;
    } else {
      if (--hit_[s] == 0) --covered_;
    }
  }

  // new element e: every sum with current members (and 2e in standard
  // mode) must stay inside R
  bool sums_stay_in_R(u64 e) const {
    if (mode_ == SumMode::standard && !in_R_[(2 * e) % p_]) return false;
    for (u64 a : cur_)
      if (!in_R_[(a + e) % p_]) return false;
    return true;
  }

  void push(u64 e) {
    if (mode_ == SumMode::standard) add_sum((2 * e) % p_, +1);
    for (u64 a : cur_) add_sum((a + e) % p_, +1);
    cur_.push_back(e);
  }

  void pop() {
    u64 e = cur_.back();
    cur_.pop_back();
    for (u64 a : cur_) add_sum((a + e) % p_, -1);
    if (mode_ == SumMode::standard) add_sum((2 * e) % p_, -1);
  }

  // coverage prune: sums already achieved plus sums addable by the
  // remaining element budget must reach t
  bool coverage_possible() const {
    const u64 a = cur_.size();
    const u64 r = a_max_ - a;
    u64 addable = a * r + r * (r - 1) / 2;
    if (mode_ == SumMode::standard) addable += r;
    return covered_ + addable >= t_;
  }

  void dfs(u64 next) {
    if (++nodes_ > max_nodes_) throw BudgetExceeded(p_);
    const u64 a = cur_.size();
    if (a >= a_min_ && covered_ == t_) {
      // all achieved sums lie in R by construction, so coverage == t
      // means exact equality with R
      solutions_.emplace_back(p_, cur_);
    }
    if (a == a_max_) return;
    if (!coverage_possible()) return;
    for (u64 e = next; e < p_; ++e) {
      if (!sums_stay_in_R(e)) continue;
      push(e);
      dfs(e + 1);
      pop();
    }
  }

  const PrimeField& F_;
  u64 p_, t_;
  SumMode mode_;
  u64 max_nodes_;
  u64 a_min_ = 1, a_max_ = 1;
  std::vector<bool> in_R_;
  std::vector<u64> hit_;
  u64 covered_ = 0;
  std::vector<u64> cur_;
  std::vector<FSet> solutions_;
  u64 nodes_ = 0;
};

}  // namespace detail

struct ClassifyResult {
  std::vector<FSet> solutions;  // sorted lexicographically
  u64 nodes = 0;
};

inline ClassifyResult classify(const PrimeField& F, SumMode mode,
                               u64 max_nodes = 1'000'000'000) {
  detail::Classifier c(F, mode, max_nodes);
  ClassifyResult r;
  r.solutions = c.run();
  r.nodes = c.nodes();
  std::sort(r.solutions.begin(), r.solutions.end(),
            [](const FSet& x, const FSet& y) { return x.members < y.members; });
  return r;
}

struct PrimeResult {
  u64 p = 0;
  std::vector<FSet> solutions;
  u64 nodes = 0;
  double elapsed_seconds = 0;
  bool revalidated = false;  // every solution passed represents_R + structure checks
};

struct Certificate {
  std::string schema = kCertificateSchema;
  std::string solver_version = kSolverVersion;
  SumMode mode = SumMode::restricted;
  u64 p_min = 0, p_max = 0;
  std::vector<PrimeResult> per_prime;
  bool theorem_holds = false;   // solutions only at the classified primes
  bool invariants_ok = false;   // all per-solution re-validation passed
};

inline const char* mode_name(SumMode m) {
  return m == SumMode::standard ? "standard" : "restricted";
}

// Re-validation of one emitted solution through the sumsets/diffsets
// modules; independent of the search path.
inline bool revalidate_solution(const PrimeField& F, const FSet& A, SumMode mode) {
  if (!represents_R(F, A, mode)) return false;
  if (mode == SumMode::restricted) {
    PDSReport pds = pds_lambda(A);
    if (!pds.is_pds || pds.lambda != 1) return false;
    if (F.p() > 3) {
      SumsetDiagnostics d = diagnostics(F, A);
      if (d.a != d.n + 1) return false;
      if (!(3 <= d.delta && d.delta <= d.n + 1)) return false;
    }
  }
  return true;
}

inline Certificate verify_range(const SearchConfig& cfg) {
  if (cfg.p_min < 3 || cfg.p_max < cfg.p_min)
    throw std::invalid_argument("verify_range: need 3 <= p_min <= p_max");
  std::vector<u64> primes;
  for (u64 p = cfg.p_min; p <= cfg.p_max; ++p)
    if (is_prime(p)) primes.push_back(p);

  std::vector<PrimeResult> results(primes.size());
  auto work = [&](std::size_t i) {
    const u64 p = primes[i];
    PrimeField F(p);
    auto start = std::chrono::steady_clock::now();
    ClassifyResult c = classify(F, cfg.mode, cfg.max_nodes);
    auto stop = std::chrono::steady_clock::now();
    PrimeResult& r = results[i];
    r.p = p;
    r.solutions = std::move(c.solutions);
    r.nodes = c.nodes;
    r.elapsed_seconds = std::chrono::duration<double>(stop - start).count();
    r.revalidated = true;
    for (const FSet& A : r.solutions)
      if (!revalidate_solution(F, A, cfg.mode)) r.revalidated = false;
  };

  if (cfg.parallel) {
    const std::size_t nthreads =
        std::min<std::size_t>(primes.size(),
                              std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    std::atomic<std::size_t> idx{0};
    std::exception_ptr err;
    std::mutex err_mu;
    for (std::size_t k = 0; k < nthreads; ++k)
      pool.emplace_back([&] {
        for (std::size_t i = idx.fetch_add(1); i < primes.size();
             i = idx.fetch_add(1)) {
          try {
            work(i);
          } catch (...) {
            std::lock_guard<std::mutex> lk(err_mu);
            if (!err) err = std::current_exception();
          }
        }
      });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
  } else {
    for (std::size_t i = 0; i < primes.size(); ++i) work(i);
  }

  Certificate cert;
  cert.mode = cfg.mode;
  cert.p_min = cfg.p_min;
  cert.p_max = cfg.p_max;
  cert.per_prime = std::move(results);

  cert.theorem_holds = true;
  cert.invariants_ok = true;
  for (const PrimeResult& r : cert.per_prime) {
    if (!r.revalidated) cert.invariants_ok = false;
    if (cfg.mode == SumMode::standard) {
      if (r.p == 3) {
        if (r.solutions != std::vector<FSet>{FSet(3, {2})})
          cert.theorem_holds = false;
      } else if (!r.solutions.empty()) {
        cert.theorem_holds = false;
      }
    } else {
      std::vector<FSet> expect;
      if (r.p == 3) expect = {FSet(3, {0, 1})};
      else if (r.p == 7) expect = {FSet(7, {3, 5, 6})};
      else if (r.p == 13) expect = {FSet(13, {0, 1, 3, 9}), FSet(13, {0, 4, 10, 12})};
      if (r.solutions != expect) cert.theorem_holds = false;
    }
  }
  return cert;
}

inline nlohmann::ordered_json certificate_to_json(const Certificate& c) {
  nlohmann::ordered_json j;
  j["schema"] = c.schema;
  j["solver_version"] = c.solver_version;
  j["mode"] = mode_name(c.mode);
  j["p_min"] = c.p_min;
  j["p_max"] = c.p_max;
  j["theorem_holds"] = c.theorem_holds;
  j["invariants_ok"] = c.invariants_ok;
  j["per_prime"] = nlohmann::ordered_json::array();
  for (const PrimeResult& r : c.per_prime) {
    nlohmann::ordered_json e;
    e["p"] = r.p;
    e["solutions"] = nlohmann::ordered_json::array();
    for (const FSet& A : r.solutions) e["solutions"].push_back(A.members);
    e["nodes"] = r.nodes;
    e["elapsed_seconds"] = r.elapsed_seconds;
    e["revalidated"] = r.revalidated;
    j["per_prime"].push_back(std::move(e));
  }
  return j;
}

}  // namespace resform
