#pragma once

// Polynomial continued fractions T(0) + K_{n>=1} P(n)/T(n): exact convergents
// and precision-driven decimal evaluation.

#include <optional>
#include <string>
#include <vector>

#include "balkan/exactnum.hpp"
#include "balkan/hpreal.hpp"

namespace balkan {

struct Polynomial {
  std::vector<BigInt> coeffs;  // coeffs[k] multiplies n^k

  Polynomial() = default;
  explicit Polynomial(std::vector<BigInt> c);
  static Polynomial from_roots(const BigInt& lead, const std::vector<BigInt>& roots);

  BigInt operator()(long n) const;
  BigInt operator()(const BigInt& n) const;
  long degree() const;
  std::string to_string(const std::string& var = "n") const;

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  bool operator==(const Polynomial& o) const;
};

enum class ConstKind { G, Log2, Rational };
std::string kind_name(ConstKind k);

struct CFSpec {
  Polynomial P;
  Polynomial T;
  BigInt lead;                     // T(0)
  std::optional<long> termination;  // smallest n >= 1 with P(n) = 0
  ConstKind kind_hint = ConstKind::G;
  std::string label;
};

CFSpec make_cf_spec(Polynomial P, Polynomial T, std::string label = {});

/// lead j(2-j+2k), P(n) = -2n(c+n)(j+n-1)(1-j+2k+n), T(n) = 3n^2 + (3+4k)n + lead.
/// Even j is accepted and tagged as a log 2 family.
CFSpec balkan_cf_spec(long j, long kappa, long c);

/// Smallest n >= 1 with P(n) = 0; terms from that depth on do not change the value.
std::optional<long> termination_index(const Polynomial& P);
std::optional<long> termination_index(long j, long kappa, long c);

/// Exact value of the CF truncated after `depth` partial quotients
/// (the full finite value when the spec terminates earlier).
BigRational eval_cf_convergent(const CFSpec& spec, long depth);

constexpr long kDefaultDepthCap = 1L << 21;

struct CFDecimal {
  HPReal value;
  long depth = 0;  // depth at which agreement was reached (or the termination depth)
  bool exact = false;
  BigRational exact_value;  // set when exact
};

/// Value to `digits` places: depth doubling until two successive convergents agree to
/// digits + 5 places.  Throws NonConvergence past `depth_cap`.
CFDecimal eval_cf_decimal(const CFSpec& spec, long digits, long depth_cap = kDefaultDepthCap);

}  // namespace balkan
