#include <tuple>

#include "balkan/balkan_forms.hpp"
#include "memo.hpp"

namespace balkan {

namespace {

using MasterKey = std::tuple<BigRational, BigRational, long, long>;

detail::SequenceMemo<MasterKey, BigRational>& master_memo() {
  static detail::SequenceMemo<MasterKey, BigRational> m;
  return m;
}

detail::SequenceMemo<long, BigRational>& bosnia_memo() {
  static detail::SequenceMemo<long, BigRational> m;
  return m;
}

void add_factorial(FactorVec& v, long n, long power = 1) {
  for (long k = 2; k <= n; ++k) v.multiply(BigInt(k), power);
}

void add_semifactorial(FactorVec& v, long n, long power = 1) {
  for (long k = n; k > 1; k -= 2) v.multiply(BigInt(k), power);
}

// C_n, extended with C_{-1} = -1; returns false when the factor is zero (n <= -2)
bool add_catalan(FactorVec& v, long n) {
  if (n <= -2) return false;
  if (n == -1) {
    v.sign = -v.sign;
    return true;
  }
  add_factorial(v, 2 * n);
  add_factorial(v, n, -1);
  add_factorial(v, n + 1, -1);
  return true;
}

}  // namespace

BigRational bosnia_value(long j, long c) {
  if (j < 3 || j % 2 == 0) throw DomainError("bosnia_value needs odd j >= 3");
  return BigRational(2 + 2 * c - j);
}

BigRational bosnia_delta(long j, long c) {
  if (c < 0) throw DomainError("Delta index must be >= 0");
  return bosnia_memo().get(j, c, [j](long cc, const std::vector<BigRational>& d) -> BigRational {
    if (cc < 2) return BigRational(1 + (15 - 4 * j) * cc);
    BigRational r = BigRational(BigInt(-2 * cc) * (2 * cc - j) * (2 * cc + 1) * (2 * cc - j + 2)) * d[cc - 2];
    r += BigRational(BigInt(8 * cc * cc) + (14 - 4 * j) * cc - 3 * (j - 2)) * d[cc - 1];
    return r;
  });
}

BigRational bosnia_q_via_delta(long j, long c) {
  if (j < 5 || j % 2 == 0 || c < 1) throw DomainError("bosnia_q_via_delta needs odd j >= 5, c >= 1");
  BigRational g = make_rational(factorial(2 * c), BigInt(2));
  g *= product_range(1, (j - 1) / 2, [j](long i) { return BigInt(2 + 2 * i - j); });
  const BigInt h = product_range(0, (j - 5) / 2, [c](long i) { return BigInt(2 * c - 2 * i - 1); });
  const BigRational den = bosnia_delta(j, c - 1) * h;
  if (den == 0) throw DomainError("bosnia_q_via_delta: vanishing denominator");
  return g / den;
}

BigRational master_delta(const AlphaBeta& ab, long j, long kappa, long c) {
  if (c < 0) throw DomainError("Delta index must be >= 0");
  return master_memo().get({ab.alpha, ab.beta, j, kappa}, c,
                           [&](long cc, const std::vector<BigRational>& d) -> BigRational {
    if (cc < 2) return ab.alpha + ab.beta * cc;
    BigRational r = BigRational(BigInt(-2 * cc) * (2 * cc - j) * (2 * cc - 2 * kappa + j - 2) *
                                (2 * cc - 2 * kappa - 1)) * d[cc - 2];
    r += BigRational(BigInt(8 * cc * cc) + (2 - 8 * kappa) * cc + (j - 2) * (2 * kappa - j)) * d[cc - 1];
    return r;
  });
}

MasterFactors master_factors(long j, long kappa, long c) {
  if (j % 2 == 0) throw DomainError("master formula needs odd j");
  MasterFactors m;
  const long half = (j - 1) / 2;

  // f = C_{(j-3)/2} C_{kappa-1} (j-2)(2kappa-1) (2c-1)!!^2 prod (2c-2kappa+2i-1)(kappa-i+1)
  bool nonzero = add_catalan(m.f, (j - 3) / 2) && add_catalan(m.f, kappa - 1);
  for (long i = 1; nonzero && i <= half; ++i) {
    if (kappa - i + 1 == 0) nonzero = false;
    else {
      m.f.multiply(BigInt(2 * c - 2 * kappa + 2 * i - 1));
      m.f.multiply(BigInt(kappa - i + 1));
    }
  }
  if (nonzero) {
    m.f.multiply(BigInt(j - 2));
    m.f.multiply(BigInt(2 * kappa - 1));
    add_semifactorial(m.f, 2 * c - 1, 2);
  } else {
    m.f = FactorVec{};
    m.f_zero = true;
  }

  // g = (2c)! 2^((j+4kappa-7)/2) prod (2c-2i+1)(2kappa-2i+1)
  add_factorial(m.g, 2 * c);
  m.g.multiply_power_of_two((j + 4 * kappa - 7) / 2);
  for (long i = 1; i <= half; ++i) {
    m.g.multiply(BigInt(2 * c - 2 * i + 1));
    m.g.multiply(BigInt(2 * kappa - 2 * i + 1));
  }

  // h = prod_{i=0}^{(j-3)/2} (2c-2i-1) * prod_{i=0}^{kappa-1} (2c-2i-1)
  for (long i = 0; i <= (j - 3) / 2; ++i) m.h.multiply(BigInt(2 * c - 2 * i - 1));
  for (long i = 0; i <= kappa - 1; ++i) m.h.multiply(BigInt(2 * c - 2 * i - 1));
  return m;
}

void master_fgh(long j, long kappa, long c, BigRational& f, BigRational& g, BigRational& h) {
  MasterFactors m = master_factors(j, kappa, c);
  f = m.f_zero ? BigRational(0) : realize(m.f);
  g = realize(m.g);
  h = realize(m.h);
}

QExact master_c_level(long j, long kappa, const AlphaBeta& ab, long c) {
  if (c < 1) throw DomainError("master_c_level needs c >= 1");
  if (j == 1) throw DomainError("the c-level master formula does not cover j = 1");
  MasterFactors m = master_factors(j, kappa, c);
  std::vector<FactorVec> vs = m.f_zero ? std::vector<FactorVec>{m.g, m.h} : std::vector<FactorVec>{m.g, m.h, m.f};
  vs = reduce_common(vs);
  const BigRational g = realize(vs[0]);
  const BigRational h = realize(vs[1]);
  const BigRational f = m.f_zero ? BigRational(0) : realize(vs[2]);
  return QExact::make(g, master_delta(ab, j, kappa, c - 1) * h, f, m.f_zero ? ConstKind::Rational : ConstKind::G);
}

}  // namespace balkan
