#include "balkan/exactnum.hpp"

#include <numeric>

namespace balkan {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

BigRational make_rational(long num, long den) { return make_rational(BigInt(num), BigInt(den)); }

BigInt factorial(long n) {
  if (n < 0) throw DomainError("factorial of negative integer " + std::to_string(n));
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt semifactorial(long n) {
  if (n < -1) throw DomainError("semifactorial undefined for n = " + std::to_string(n));
  if (n <= 1) return 1;
  BigInt r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigRational semifactorial_extended(long n) {
  if (n >= -1) return BigRational(semifactorial(n));
  if (n % 2 == 0) throw DomainError("semifactorial of negative even integer " + std::to_string(n));
  // (n)!! = (n+2)!!/(n+2) unrolled: (-2k-1)!! = (-1)^k / (2k-1)!!
  const long k = (-n - 1) / 2;
  BigRational r = make_rational(BigInt(1), semifactorial(2 * k - 1));
  if (k % 2 == 1) r = -r;
  return r;
}

BigInt catalan_number(long n) {
  if (n < 0) throw DomainError("Catalan number of negative index " + std::to_string(n));
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), 2 * static_cast<unsigned long>(n), static_cast<unsigned long>(n));
  return b / (n + 1);
}

BigInt catalan_extended(long n) {
  if (n >= 0) return catalan_number(n);
  if (n == -1) return -1;
  return 0;
}

BigRational pow2(long e) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? make_rational(BigInt(1), p) : BigRational(p);
}

BigInt ipow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

int sign(const BigInt& x) { return sgn(x); }
int sign(const BigRational& x) { return sgn(x); }

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

std::string to_string(const BigInt& x) { return x.get_str(); }

std::string to_string(const BigRational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

BigRational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return BigRational(BigInt(text));
    return make_rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw DomainError("not a rational number: '" + text + "'");
  }
}

std::size_t decimal_length(const BigInt& x) {
  if (x == 0) return 1;
  BigInt a = abs(x);
  return a.get_str().size();
}

}  // namespace balkan
