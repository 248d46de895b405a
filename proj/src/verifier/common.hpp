#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "balkan/constants.hpp"
#include "balkan/data_files.hpp"
#include "balkan/relation_finder.hpp"
#include "balkan/verifier.hpp"

namespace balkan::detail {

/// Runs tasks 0..n-1 on a small pool; fragment i lands in slot i, so the merged
/// report does not depend on scheduling.
inline std::vector<Report> run_grid(std::size_t n, unsigned threads, const std::function<Report(std::size_t)>& task) {
  std::vector<Report> out(n);
  unsigned t = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  t = static_cast<unsigned>(std::min<std::size_t>(t, n));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        out[i] = task(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (t <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < t; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

inline void merge_all(Report& into, std::vector<Report>&& parts) {
  for (auto& p : parts) into.merge(std::move(p));
}

inline std::string jkc(long j, long kappa, long c) {
  return "(" + std::to_string(j) + "," + std::to_string(kappa) + "," + std::to_string(c) + ")";
}

/// Check named `name` that records the exception text instead of aborting the grid.
inline Check error_check(const std::string& name, const std::exception& e) {
  return {name, "no error", e.what(), "exact", false};
}

/// Closed-form value against the CF: exact when the CF terminates, else to `digits` places.
inline void compare_with_cf(Report& r, const std::string& name, const QExact& q, const CFSpec& spec, long digits,
                            long depth_cap) {
  if (spec.termination) {
    const BigRational v = eval_cf_convergent(spec, *spec.termination);
    const std::string got = q.kind == ConstKind::Rational ? to_string(q.rational_value()) : q.to_string();
    r.add_exact(name, to_string(v), got);
    r.depths_used.push_back(*spec.termination - 1);
    return;
  }
  const CFDecimal d = eval_cf_decimal(spec, digits, depth_cap);
  r.depths_used.push_back(d.depth);
  r.add_digits(name, d.value, q.value(digits), digits);
}

inline std::string str(const AlphaBeta& ab) { return "(" + to_string(ab.alpha) + ", " + to_string(ab.beta) + ")"; }

inline std::string str(const Seeds4& s) {
  return "(" + to_string(s.alpha_a) + ", " + to_string(s.alpha_b) + ", " + to_string(s.beta_a) + ", " +
         to_string(s.beta_b) + ")";
}

inline std::string str(const std::vector<BigInt>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i].get_str();
  return s + "]";
}

inline std::string triple(const BigInt& a0, const BigInt& a1, const BigInt& a2) {
  return "(" + a0.get_str() + ", " + a1.get_str() + ", " + a2.get_str() + ")";
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace balkan::detail
