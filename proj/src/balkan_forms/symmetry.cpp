#include "balkan/balkan_forms.hpp"

namespace balkan {

BigRational zeta_ratio(long j, long u) {
  if (u < 0) throw DomainError("zeta_ratio needs u >= 0");
  return BigRational(product_range(0, u - 1, [j](long i) { return BigInt(2 + 2 * i - j); })) / pow2(u);
}

BigRational tau_ratio(long j, long u) {
  const BigRational z = zeta_ratio(j, u);
  BigRational m4 = BigRational(ipow(4, u));
  if (u % 2) m4 = -m4;
  if (2 * u <= j - 1) return z * m4;
  BigRational t = semifactorial_extended(2 * j - 2 * u - 3) * semifactorial_extended(2 * u - j) * pow2(u);
  if (u % 2) t = -t;
  return sign(z) * t;
}

BigRational ratio_a0_a2(long j, long kappa, long c) {
  if (j % 2 == 0) throw DomainError("ratio_a0_a2 needs odd j");
  const long eps = 2 * kappa + (j - 7) / 2 + (j == 1 ? 1 : 0);
  BigRational rho(1);
  if (j != 1)
    for (long i = 1; i <= (j - 1) / 2; ++i)
      rho *= make_rational(BigInt(2 * c - 2 * kappa + 2 * i - 1) * (kappa - i + 1),
                           BigInt(2 * c - 2 * i + 1) * (2 * kappa - 2 * i + 1));
  const BigInt sf = semifactorial(2 * c - 1);
  const BigRational den = BigRational(sf * sf * catalan_extended(kappa - 1) * catalan_extended((j - 3) / 2) *
                                      BigInt(2 * kappa - 1) * (j - 2)) * rho;
  if (den == 0) throw DomainError("ratio_a0_a2: the G coefficient vanishes");
  return BigRational(factorial(2 * c)) * pow2(eps) / den;
}

BigRational finite_value(long j, long kappa, long c) {
  const CFSpec spec = balkan_cf_spec(j, kappa, c);
  if (!spec.termination) throw DomainError("the CF for " + spec.label + " does not terminate");
  return eval_cf_convergent(spec, *spec.termination);
}

AlphaBeta alphabeta_from_triples(long j, long kappa, const QExact& q1, const QExact& q2) {
  BigRational d[2];
  const QExact* qs[2] = {&q1, &q2};
  for (long c = 1; c <= 2; ++c) {
    const QExact& q = *qs[c - 1];
    if (q.a0 == 0) throw DomainError("alphabeta_from_triples: zero numerator");
    BigRational f, g, h;
    master_fgh(j, kappa, c, f, g, h);
    const BigRational s = g / BigRational(q.a0);
    if (s * q.a2 != f)
      throw DomainError("triple for c = " + std::to_string(c) + " does not match the master f, g");
    d[c - 1] = s * q.a1 / h;
  }
  return {d[0], d[1] - d[0]};
}

AlphaBeta alphabeta_exact(long j, long kappa) {
  if (j % 2 == 0 || j == 1) throw DomainError("alphabeta_exact needs odd j != 1");
  if (j <= 0 || j >= 2 * kappa + 3)
    return alphabeta_from_triples(j, kappa, QExact::rational(finite_value(j, kappa, 1)),
                                  QExact::rational(finite_value(j, kappa, 2)));
  if (j <= kappa + 2) return kosovo_kappa_level(j, kosovo_j_seeds(j), kappa);
  return alphabeta_from_triples(j, kappa, q_exact(j, kappa, 1), q_exact(j, kappa, 2));
}

QExact q_exact(long j, long kappa, long c) {
  if (c < 1) throw DomainError("q_exact needs c >= 1");
  if (j < 1) return QExact::rational(finite_value(j, kappa, c));
  switch (classify(j, kappa)) {
    case Area::Montenegro: return montenegro_q(kappa, c);
    case Area::Kosovo: return master_c_level(j, kappa, kosovo_kappa_level(j, kosovo_j_seeds(j), kappa), c);
    case Area::Serbia: return q_exact(serbia_reflect(j, kappa), kappa, c);
    case Area::BosniaHerzegovina:
      if (j >= 5) {
        try {
          return QExact::rational(bosnia_q_via_delta(j, c));
        } catch (const DomainError&) {
        }
      }
      return QExact::rational(finite_value(j, kappa, c));
    case Area::Croatia:
      if (kappa >= 1) {
        try {
          return master_c_level(j, kappa, croatia_alphabeta((j - 2 * kappa - 3) / 2, j), c);
        } catch (const DomainError&) {
        }
      }
      return QExact::rational(finite_value(j, kappa, c));
    case Area::OffGrid: break;
  }
  throw DomainError("q_exact: (" + std::to_string(j) + "," + std::to_string(kappa) + ") is off the grid");
}

}  // namespace balkan
