#include "balkan/balkan_forms.hpp"
#include "memo.hpp"

namespace balkan {

BigInt inostranstvo_delta1(long i) {
  if (i < 0) throw DomainError("index must be >= 0");
  static detail::SequenceMemo<int, BigInt> memo;
  return memo.get(0, i, [](long ii, const std::vector<BigInt>& d) -> BigInt {
    if (ii < 2) return 2 + 15 * ii;
    const BigInt t = 2 * ii - 1;
    return 2 * t * t * t * (1 - ii) * d[ii - 2] + BigInt(8 * ii * ii - 2 * ii + 3) * d[ii - 1];
  });
}

QExact inostranstvo_q1(long i) {
  const BigInt sf = semifactorial(2 * i + 1);
  return QExact::make(BigRational(factorial(2 * i + 1)), BigRational(inostranstvo_delta1(i)),
                      BigRational(-2 * sf * sf), ConstKind::G);
}

CFSpec inostranstvo_spec(long tau, long eta, long mu, long i) {
  if ((tau - eta) % 2 != 0 || (tau - mu) % 2 != 0) throw DomainError("tau, eta, mu must share parity");
  if (i < 0) throw DomainError("index must be >= 0");
  const long x = (1 + eta) * (1 + mu) + tau * (1 + eta + mu);
  const long lead = x + 2 * (tau + eta + 1) * i;
  Polynomial P = Polynomial::from_roots(BigInt(-2), {BigInt(0), BigInt(-tau), BigInt(-eta), BigInt(-2 * i - mu)});
  Polynomial T(std::vector<BigInt>{BigInt(lead), BigInt(2 * (tau + eta + mu + 2 * i) + 3), BigInt(3)});
  CFSpec s = make_cf_spec(std::move(P), std::move(T),
                          "Q'(" + std::to_string(tau) + "," + std::to_string(eta) + "," + std::to_string(mu) + ";" +
                              std::to_string(i) + ")");
  s.kind_hint = ConstKind::G;
  return s;
}

BigRational inostranstvo_q2_ratio(long i) {
  if (i < 0) throw DomainError("index must be >= 0");
  const BigInt sf = semifactorial(2 * i + 5);
  return -make_rational(factorial(2 * i + 5), BigInt(2 * i + 4) * sf * sf);
}

CFSpec log2_family_spec(long c) {
  CFSpec s = make_cf_spec(Polynomial(std::vector<BigInt>{0, 0, -2}), Polynomial(std::vector<BigInt>{c, 3}),
                          "L(" + std::to_string(c) + ")");
  s.kind_hint = ConstKind::Log2;
  return s;
}

QExact log2_family_closed(long c) {
  BigRational sum(0);
  for (long j = 1; j <= c - 2; ++j) sum += pow2(c - j - 2) / j;
  return QExact::make(BigRational(1), -sum, pow2(c - 2), ConstKind::Log2);
}

CFSpec rc_spec(long c) {
  CFSpec s = make_cf_spec(Polynomial(std::vector<BigInt>{0, -2, -2}), Polynomial(std::vector<BigInt>{c, 3}),
                          "R(" + std::to_string(c) + ")");
  s.kind_hint = ConstKind::Log2;
  return s;
}

}  // namespace balkan
