#include <map>
#include <mutex>
#include <tuple>

#include "balkan/balkan_forms.hpp"
#include "memo.hpp"

namespace balkan {

namespace {

using BarKey = std::tuple<long, BigRational, BigRational, long>;

detail::SequenceMemo<BarKey, BigRational>& bar_memo() {
  static detail::SequenceMemo<BarKey, BigRational> m;
  return m;
}

}  // namespace

BigRational kosovo_ell(long n, long j, long kappa) {
  const long k = kappa;
  const BigInt s = product_range(0, (j - 3) / 2, [k](long i) -> BigInt {
    const BigInt t = 2 * k - 2 * i - 1;
    return BigInt(k - i) * t * t;
  });
  const BigInt f2k = factorial(2 * k);
  BigRational den = BigRational(factorial(k)) * pow2(3 * k - 2);
  den *= BigInt(2 * k - j) * (2 * k - 1);
  den *= BigInt(n * ((2 * k - j - 2) * (3 - 2 * k) - 1) + 1) * s;
  if (den == 0) throw DomainError("kappa-level normalizer vanishes");
  BigRational r = BigRational(f2k * f2k) / den;
  if ((k + 1) % 2 != 0) r = -r;
  return r;
}

BigRational kosovo_delta_bar(long n, const BigRational& a, const BigRational& b, long j, long k) {
  if (k < 0) throw DomainError("kappa-level index must be >= 0");
  return bar_memo().get({n, a, b, j}, k, [&](long kk, const std::vector<BigRational>& d) -> BigRational {
    if (kk < 2) return a + b * kk;
    const BigInt eta = BigInt(2 * kk + 2 * j - 9 - 2 * n) * (2 * kk + j - 8 - 2 * n) * (-2 * kk + 5 - j) * (2 * kk + j - 6);
    const BigInt phi = BigInt(8 * kk * kk) + kk * (10 * j - 48 - 8 * n) + 3 * j * j - (28 + 4 * n) * j + 68 + 18 * n;
    return BigRational(eta) * d[kk - 2] + BigRational(phi) * d[kk - 1];
  });
}

AlphaBeta kosovo_kappa_level(long j, const Seeds4& seeds, long kappa) {
  if (j < 3 || j % 2 == 0) throw DomainError("kappa-level formula needs odd j >= 3");
  if (kappa < j - 2) throw DomainError("kappa-level formula needs kappa >= j - 2");
  const long k = kappa - j + 2;
  AlphaBeta ab;
  ab.alpha = kosovo_delta_bar(0, seeds.alpha_a, seeds.alpha_b, j, k) / kosovo_ell(0, j, kappa);
  ab.beta = kosovo_delta_bar(1, seeds.beta_a, seeds.beta_b, j, k) / kosovo_ell(1, j, kappa) - ab.alpha;
  return ab;
}

Seeds4 kosovo_j_seeds(long j) {
  if (j < 3 || j % 2 == 0) throw DomainError("j-seeds need odd j >= 3");
  static std::mutex mutex;
  static std::map<long, Seeds4> chain = {
      {3, {make_rational(-1), make_rational(4), make_rational(-1, 3), make_rational(-14, 3)}},
      {5, {make_rational(19), make_rational(234), make_rational(-17), make_rational(-8)}},
  };
  std::lock_guard lock(mutex);
  auto it = chain.find(j);
  if (it != chain.end()) return it->second;
  long top = chain.rbegin()->first;
  Seeds4 cur = chain.rbegin()->second;
  while (top < j) {
    const long x = top;
    const BigRational rho = make_rational(ipow(2, x + 1) * factorial(x - 1), BigInt((x - 2) * (x - 4)));
    const BigInt b = BigInt((x - 6) * (x - 2)) * ((x - 1) * x) * ((2 * x - 7) * (2 * x - 5));
    const BigInt a = BigInt(4 * (x - 1) * x) * (2 * x - 5);
    const BigRational p = make_rational(BigInt((x - 6) * (x - 4)) * ((x - 1) * (x + 1)), BigInt(4));
    auto d = [](long y) -> BigInt {
      BigInt v = y;
      return 6 * ipow(v, 6) - 15 * ipow(v, 5) - 68 * ipow(v, 4) + 74 * ipow(v, 3) + 89 * v * v - 44 * v - 18;
    };
    auto e = [](long y) { return BigInt((3 * y + 1) * (y * y - 7) + 3); };
    Seeds4 next;
    next.alpha_a = (cur.alpha_a * a * (2 * x - 3) - rho * (3 * x - 2)) / ((x - 1) * (x + 1));
    next.alpha_b = (cur.alpha_b * a * (2 * x + 1) - rho * e(x - 2)) / ((x - 3) * (x + 1));
    next.beta_a = (cur.beta_a * b - rho * (3 * ((x - 3) * (x - 1) - 1))) / p;
    next.beta_b = (cur.beta_b * b * (x * (2 * x - 3) - 1) - rho * d(x - 2)) / (p * ((x - 2) * (2 * x - 7) - 1));
    top += 2;
    cur = next;
    chain[top] = cur;
  }
  return cur;
}

}  // namespace balkan
