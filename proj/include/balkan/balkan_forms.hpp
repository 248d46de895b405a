#pragma once

// Closed forms for Q(j, kappa, c) over the regions of the (j, kappa) plane, the
// dispatcher that picks one, and the related side families.

#include <string>
#include <vector>

#include "balkan/cf_engine.hpp"
#include "balkan/exactnum.hpp"
#include "balkan/factorvec.hpp"
#include "balkan/hpreal.hpp"

namespace balkan {

enum class Area { Montenegro, Kosovo, Serbia, BosniaHerzegovina, Croatia, OffGrid };
std::string area_name(Area a);

/// Region of (j, kappa) for odd j >= 1, kappa >= 0.
Area classify(long j, long kappa);

/// Mirror j' = 2(kappa+1) - j of a Serbia point.
long serbia_reflect(long j, long kappa);

/// a0 / (a1 + a2 K), reduced, with a2 > 0, else a1 > 0, else a0 >= 0.
struct QExact {
  BigInt a0, a1, a2;
  ConstKind kind = ConstKind::Rational;

  static QExact make(const BigRational& a0, const BigRational& a1, const BigRational& a2, ConstKind kind);
  static QExact rational(const BigRational& v);

  bool is_canonical() const;
  /// value for kind Rational (throws otherwise)
  BigRational rational_value() const;
  HPReal value(long digits) const;
  bool same_up_to_sign(const BigInt& b0, const BigInt& b1, const BigInt& b2) const;
  std::string to_string() const;
  bool operator==(const QExact& o) const {
    return a0 == o.a0 && a1 == o.a1 && a2 == o.a2 && kind == o.kind;
  }
};

struct AlphaBeta {
  BigRational alpha, beta;
  bool operator==(const AlphaBeta& o) const { return alpha == o.alpha && beta == o.beta; }
};

/// Seeds of the kappa-level recurrence: (alpha_a, alpha_b) feed the alpha stream,
/// (beta_a, beta_b) the beta stream.
struct Seeds4 {
  BigRational alpha_a, alpha_b, beta_a, beta_b;
  bool operator==(const Seeds4& o) const {
    return alpha_a == o.alpha_a && alpha_b == o.alpha_b && beta_a == o.beta_a && beta_b == o.beta_b;
  }
};

struct PsiPoly {
  long i = 0;
  std::vector<BigInt> coeffs1, coeffs2;  // constant term first
};

// ---- Montenegro (j = 1)

/// Delta_{kappa,c}(a, b): a + b c for c < 2, then the two-term recurrence.
BigRational montenegro_delta(const BigRational& a, const BigRational& b, long kappa, long c);
/// kappa = 0 compact form: D_0 = 1, D_c = (2c)! + (2c+1)^2 D_{c-1}.
BigInt montenegro_delta0_compact(long c);
/// kappa = 0 long form: 1 + 10c for c < 2, then 2c(1-2c)^3 D_{c-2} + (8c^2+2c+1) D_{c-1}.
BigInt montenegro_delta0_long(long c);
QExact montenegro_q(long kappa, long c);

// ---- Bosnia & Herzegovina (j = 2 kappa + 3)

BigRational bosnia_value(long j, long c);
BigRational bosnia_delta(long j, long c);
BigRational bosnia_q_via_delta(long j, long c);

// ---- c-level master formula

BigRational master_delta(const AlphaBeta& ab, long j, long kappa, long c);

struct MasterFactors {
  FactorVec g, h, f;
  bool f_zero = false;
};
/// f, g, h as factor vectors (f may vanish).
MasterFactors master_factors(long j, long kappa, long c);
/// Realized f, g, h (plain products, no cancellation).
void master_fgh(long j, long kappa, long c, BigRational& f, BigRational& g, BigRational& h);

QExact master_c_level(long j, long kappa, const AlphaBeta& ab, long c);

// ---- Kosovo

BigRational kosovo_ell(long n, long j, long kappa);
BigRational kosovo_delta_bar(long n, const BigRational& a, const BigRational& b, long j, long k);
AlphaBeta kosovo_kappa_level(long j, const Seeds4& seeds, long kappa);
Seeds4 kosovo_j_seeds(long j);

// ---- Croatia

const PsiPoly& croatia_psi_table(long i);  // built-in, 0 <= i <= 5
BigRational croatia_mu(long i, long j);
AlphaBeta croatia_alphabeta(long i, long j);
PsiPoly croatia_psi_interpolate(long i);
BigRational eval_poly(const std::vector<BigInt>& coeffs, const BigRational& x);

// ---- symmetries and ratio

BigRational zeta_ratio(long j, long u);
BigRational tau_ratio(long j, long u);
BigRational ratio_a0_a2(long j, long kappa, long c);

/// Exact (alpha, beta) for any odd j != 1 (kappa < 0 allowed): finite summation when the CF
/// terminates, otherwise read off the closed-form triples at c = 1, 2.
AlphaBeta alphabeta_exact(long j, long kappa);
/// (alpha, beta) from the triples at c = 1 and c = 2; throws DomainError if the
/// triples are inconsistent with the f, g, h of (j, kappa).
AlphaBeta alphabeta_from_triples(long j, long kappa, const QExact& q1, const QExact& q2);

/// Dispatcher: closed-form value of Q(j, kappa, c) for odd j >= 1, kappa >= 0, c >= 1.
QExact q_exact(long j, long kappa, long c);
/// Finite CF value for any (j, kappa, c) whose CF terminates.
BigRational finite_value(long j, long kappa, long c);

// ---- side families

/// Q'_i = (2i+1)! / (D'_i - 2G (2i+1)!!^2)
BigInt inostranstvo_delta1(long i);
QExact inostranstvo_q1(long i);
/// Q'_{tau,eta,mu} at index i; the three shifts must share parity.
CFSpec inostranstvo_spec(long tau, long eta, long mu, long i);
/// a0/a2 of Q''_i in value-consistent form: -(2i+5)! / ((2i+4) (2i+5)!!^2).
BigRational inostranstvo_q2_ratio(long i);

/// c + K(-2n^2, 3n + c)
CFSpec log2_family_spec(long c);
/// 1 / (2^(c-2) log 2 - sum_{j=1}^{c-2} 2^(c-j-2)/j), as a triple in log 2.
QExact log2_family_closed(long c);
/// R_c = c + K(-2n^2 - 2n, 3n + c)
CFSpec rc_spec(long c);

}  // namespace balkan
