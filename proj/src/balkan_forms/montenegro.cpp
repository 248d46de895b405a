#include <tuple>

#include "balkan/balkan_forms.hpp"
#include "memo.hpp"

namespace balkan {

namespace {

using DeltaKey = std::tuple<BigRational, BigRational, long>;

detail::SequenceMemo<DeltaKey, BigRational>& delta_memo() {
  static detail::SequenceMemo<DeltaKey, BigRational> m;
  return m;
}

detail::SequenceMemo<int, BigInt>& delta0_memo(int which) {
  static detail::SequenceMemo<int, BigInt> compact, longform;
  return which == 0 ? compact : longform;
}

}  // namespace

BigRational montenegro_delta(const BigRational& a, const BigRational& b, long kappa, long c) {
  if (c < 0) throw DomainError("Delta index must be >= 0");
  return delta_memo().get({a, b, kappa}, c, [&](long cc, const std::vector<BigRational>& d) -> BigRational {
    if (cc < 2) return a + b * cc;
    const long t = 2 * (cc - kappa) - 1;
    BigRational r = BigRational(BigInt(-2 * cc) * (2 * cc - 1) * t * t) * d[cc - 2];
    r += BigRational(BigInt(8 * cc * cc) + (2 - 8 * kappa) * cc - 2 * kappa + 1) * d[cc - 1];
    return r;
  });
}

BigInt montenegro_delta0_compact(long c) {
  if (c < 0) throw DomainError("Delta index must be >= 0");
  return delta0_memo(0).get(0, c, [](long cc, const std::vector<BigInt>& d) -> BigInt {
    if (cc == 0) return 1;
    return factorial(2 * cc) + BigInt(2 * cc + 1) * (2 * cc + 1) * d[cc - 1];
  });
}

BigInt montenegro_delta0_long(long c) {
  if (c < 0) throw DomainError("Delta index must be >= 0");
  return delta0_memo(1).get(1, c, [](long cc, const std::vector<BigInt>& d) -> BigInt {
    if (cc < 2) return 1 + 10 * cc;
    const BigInt t = 1 - 2 * cc;
    return BigInt(2 * cc) * t * t * t * d[cc - 2] + BigInt(8 * cc * cc + 2 * cc + 1) * d[cc - 1];
  });
}

QExact montenegro_q(long kappa, long c) {
  if (kappa < 0 || c < 1) throw DomainError("montenegro_q needs kappa >= 0, c >= 1");
  const BigInt sf = semifactorial(2 * c - 1);
  if (kappa == 0) {
    // Q = (2c)! / (2 (2c-1)!!^2 G - D_{c-1})
    return QExact::make(BigRational(factorial(2 * c)), BigRational(-montenegro_delta0_compact(c - 1)),
                        BigRational(2 * sf * sf), ConstKind::G);
  }
  const BigRational delta = make_rational(ipow(4, kappa - 1), BigInt(2 * kappa - 1) * catalan_number(kappa - 1));
  BigRational rho = delta * (1 - 2 * kappa) / BigRational(factorial(2 * kappa) * semifactorial(2 * kappa - 3));
  if (kappa % 2) rho = -rho;
  const BigRational alpha = rho * montenegro_delta(1, -2, 1, kappa - 1);
  const BigRational beta = -rho * (2 * kappa - 3) * (2 * kappa - 3) * montenegro_delta(1, 12, 2, kappa - 1) - alpha;
  const BigInt tail = product_range(0, kappa - 1, [c](long i) { return BigInt(2 * (c - i) - 1); });
  return QExact::make(delta * factorial(2 * c), montenegro_delta(alpha, beta, kappa, c - 1) * tail,
                      BigRational(sf * sf), ConstKind::G);
}

}  // namespace balkan
