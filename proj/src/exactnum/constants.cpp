#include "balkan/constants.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>

namespace balkan {

namespace {

// Fixed-point scratch value: x ~ value * 10^W, |error| <= err ulps.
struct Fixed {
  BigInt x;
  BigInt err;
};

constexpr long kExtra = 20;

// sum_{k>=0} s^k / ((2k+1) q^(2k+1)), s = -1 for atan and +1 for atanh.
Fixed arc_series(unsigned long q, int s, const BigInt& one) {
  Fixed r;
  BigInt power = one / q;
  const unsigned long q2 = q * q;
  long terms = 0;
  for (unsigned long k = 0; power != 0; ++k, ++terms) {
    BigInt term = power / (2 * k + 1);
    if (s < 0 && (k & 1)) r.x -= term;
    else r.x += term;
    // floor(floor(a/b)/c) == floor(a/(bc)), so power carries no accumulated error
    mpz_tdiv_q_ui(power.get_mpz_t(), power.get_mpz_t(), q2);
  }
  r.err = 2 * terms + 2;
  return r;
}

Fixed compute_pi(const BigInt& one) {
  Fixed a = arc_series(5, -1, one);
  Fixed b = arc_series(239, -1, one);
  return {16 * a.x - 4 * b.x, 16 * a.err + 4 * b.err};
}

Fixed compute_log2(const BigInt& one) {
  Fixed a = arc_series(3, +1, one);
  return {2 * a.x, 2 * a.err};
}

// G = (pi*sqrt(3)/12) * sum 3^-k/(2k+1) + (3/8) * sum 1/((2n+1)^2 binom(2n,n))
Fixed compute_catalan(const BigInt& one) {
  Fixed pi = compute_pi(one);

  BigInt root3;
  BigInt sq = 3 * one * one;
  mpz_sqrt(root3.get_mpz_t(), sq.get_mpz_t());

  BigInt s1 = 0;
  long terms1 = 0;
  for (BigInt p = one; p != 0; p /= 3, ++terms1) s1 += p / (2 * terms1 + 1);

  BigInt s2 = 0;
  long terms2 = 0;
  BigInt t = one;  // ~ one / binom(2n, n)
  for (unsigned long n = 0; t != 0; ++n, ++terms2) {
    if (n > 0) {
      t *= n;
      mpz_tdiv_q_ui(t.get_mpz_t(), t.get_mpz_t(), 2 * (2 * n - 1));
    }
    BigInt term = t / ((2 * n + 1) * (2 * n + 1));
    s2 += term;
  }

  BigInt first = pi.x * root3 / one;
  first = first * s1 / one;
  first /= 12;
  BigInt second = 3 * s2 / 8;
  Fixed r;
  r.x = first + second;
  r.err = pi.err + 2 * terms1 + 3 * terms2 + 16;
  return r;
}

HPReal compute(ConstantName name, long digits) {
  const long guard = HPReal::kDefaultGuard;
  const long W = digits + guard + kExtra;
  const BigInt one = pow10(W);
  Fixed f;
  switch (name) {
    case ConstantName::Pi: f = compute_pi(one); break;
    case ConstantName::Log2: f = compute_log2(one); break;
    case ConstantName::CatalanG: f = compute_catalan(one); break;
  }
  const BigInt drop = pow10(kExtra);
  BigInt m;
  mpz_fdiv_q(m.get_mpz_t(), f.x.get_mpz_t(), drop.get_mpz_t());
  BigInt e;
  mpz_cdiv_q(e.get_mpz_t(), f.err.get_mpz_t(), drop.get_mpz_t());
  return HPReal(m, digits, e + 1, guard);
}

std::shared_mutex cache_mutex;
std::map<std::pair<int, long>, HPReal>& cache() {
  static std::map<std::pair<int, long>, HPReal> c;
  return c;
}

}  // namespace

ConstantName parse_constant_name(const std::string& name) {
  if (name == "catalan_G" || name == "G" || name == "catalan") return ConstantName::CatalanG;
  if (name == "log2") return ConstantName::Log2;
  if (name == "pi") return ConstantName::Pi;
  throw DomainError("unknown constant '" + name + "'");
}

std::string constant_name_string(ConstantName name) {
  switch (name) {
    case ConstantName::CatalanG: return "catalan_G";
    case ConstantName::Log2: return "log2";
    case ConstantName::Pi: return "pi";
  }
  return "?";
}

HPReal constant_value(ConstantName name, long digits) {
  if (digits < 1) throw DomainError("digits must be positive");
  if (digits > kConstantDigitsCap)
    throw DomainError("requested " + std::to_string(digits) + " digits, cap is " +
                      std::to_string(kConstantDigitsCap));
  const int key = static_cast<int>(name);
  {
    std::shared_lock lock(cache_mutex);
    auto& c = cache();
    auto it = c.lower_bound({key, digits});
    if (it != c.end() && it->first.first == key) return it->second.truncated(digits);
  }
  // computed outside the lock; a concurrent duplicate fill stores an identical value
  HPReal v = compute(name, digits);
  std::unique_lock lock(cache_mutex);
  cache().emplace(std::make_pair(key, digits), v);
  return v;
}

HPReal constant_value(const std::string& name, long digits) {
  return constant_value(parse_constant_name(name), digits);
}

}  // namespace balkan
