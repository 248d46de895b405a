// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "balkan/data_files.hpp"
#include "balkan/factorvec.hpp"
#include "balkan/relation_finder.hpp"
#include "balkan/verifier.hpp"

using namespace balkan;

namespace {

struct Outcome {
  bool pass = true;
  std::size_t checks = 0;
  std::string detail;
};

void absorb(Outcome& o, const Report& r) {
  o.checks += r.checks.size();
  if (!r.passed()) {
    o.pass = false;
    for (const auto& c : r.checks)
      if (!c.pass) {
        o.detail += " [" + r.command + ": " + c.name + " expected " + c.expected + " got " + c.actual + "]";
        break;
      }
  }
}

void expect(Outcome& o, bool ok, const std::string& what) {
  ++o.checks;
  if (!ok) {
    o.pass = false;
    o.detail += " [" + what + "]";
  }
}

BigInt dot(const IntVector& a, const IntVector& b) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

BigInt det3(const LatticeBasis& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Outcome properties() {
  Outcome o;
  std::mt19937_64 rng(14);

  std::uniform_int_distribution<long> term(-1000000, 1000000), count(0, 6);
  bool realize_ok = true;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<BigInt> ts;
    BigInt plain = 1;
    for (int k = count(rng); k > 0; --k) {
      long t = 0;
      while (t == 0) t = term(rng);
      ts.emplace_back(t);
      plain *= t;
    }
    realize_ok = realize_ok && realize(factored_product(ts)) == plain;
  }
  expect(o, realize_ok, "factor vector realization");

  std::uniform_int_distribution<long> entry(-40, 40);
  bool lll_ok = true;
  for (int done = 0; done < 100;) {
    LatticeBasis b(3, IntVector(3));
    for (auto& row : b)
      for (auto& x : row) x = entry(rng);
    if (det3(b) == 0) continue;
    const LatticeBasis r = lll_reduce(b);
    BigInt best = -1;
    for (long x = -6; x <= 6; ++x)
      for (long y = -6; y <= 6; ++y)
        for (long z = -6; z <= 6; ++z) {
          if (!x && !y && !z) continue;
          IntVector v(3);
          for (int t = 0; t < 3; ++t) v[t] = x * r[0][t] + y * r[1][t] + z * r[2][t];
          const BigInt n = dot(v, v);
          if (best < 0 || n < best) best = n;
        }
    lll_ok = lll_ok && abs(det3(r)) == abs(det3(b)) && dot(r[0], r[0]) <= 4 * best;
    ++done;
  }
  expect(o, lll_ok, "LLL shortest vector");

  std::uniform_int_distribution<long> draw(1, 200000);
  bool xi_ok = true;
  for (int done = 0; done < 500;) {
    const BigInt a = draw(rng), b = draw(rng);
    if (gcd(a, b) != 1) continue;
    xi_ok = xi_ok && brittleness(BigRational(a, b)) == brittleness(BigRational(a)) + brittleness(BigRational(b));
    ++done;
  }
  expect(o, xi_ok, "brittleness additivity");

  absorb(o, cmd_series("limits"));
  return o;
}

}  // namespace

int main() {
  const CommandOptions opt;
  struct Criterion {
    int id;
    double limit;  // seconds, 0 for none
    std::function<Outcome()> run;
  };
  auto reports = [&](std::vector<std::function<Report()>> fs) {
    return [fs]() {
      Outcome o;
      for (const auto& f : fs) absorb(o, f());
      return o;
    };
  };
  const std::vector<Criterion> criteria{
      {1, 10, reports({[&] { return cmd_verify("bosnia", opt); }})},
      {2, 600, reports({[&] { return cmd_verify("montenegro", opt); }})},
      {3, 1800, reports({[&] { return cmd_verify("northern", opt); }})},
      {4, 1800,
       [&] {
         Outcome o;
         absorb(o, cmd_verify("kosovo", opt));
         expect(o, q_exact(3, 2, 3).to_string() == "192/(13 + 18*G)", "anchor (3,2,3)");
         return o;
       }},
      {5, 1, reports({[&] { return cmd_table("13", opt); }})},
      {6, 60,
       reports({[&] { return cmd_verify("croatia", opt); }, [&] { return cmd_table("2", opt); },
                [&] { return cmd_table("3", opt); }})},
      {7, 0, reports({[&] { return cmd_verify("symmetry", opt); }})},
      {8, 0, reports({[&] { return cmd_verify("ratio", opt); }})},
      {9, 1200,
       reports({[&] { return cmd_table("8", opt); }, [&] { return cmd_table("9", opt); },
                [&] { return cmd_table("10", opt); }, [&] { return cmd_table("11", opt); }})},
      {10, 0, reports({[&] { return cmd_table("12", opt); }, [&] { return cmd_series("remark11", opt); }})},
      {11, 0, reports({[&] { return cmd_series("inostranstvo", opt); }})},
      {12, 0, reports({[&] { return cmd_series("table5", opt); }})},
      {13, 60,
       reports({[&] { return cmd_table("6", opt); }, [&] { return cmd_table("7", opt); },
                [&] { return cmd_decimate(load_data("table6.txt"), "table6", Family::Affine, cube(3, 4), opt); }})},
      {14, 0, properties},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string(" [exception: ") + e.what() + "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit > 0 && secs > c.limit) {
      o.pass = false;
      o.detail += " [over time limit]";
    }
    if (!o.pass) ++failed;
    std::printf("criterion %d: %s (%zu checks, %.2f s)%s\n", c.id, o.pass ? "PASS" : "FAIL", o.checks, secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
