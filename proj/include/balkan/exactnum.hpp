#pragma once

// Exact integer/rational arithmetic and the combinatorial primitives used by
// the closed forms (factorials, semifactorials, Catalan numbers).

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "balkan/errors.hpp"

namespace balkan {

using BigInt = mpz_class;
// gmpxx keeps results of arithmetic in canonical form; every constructor path
// in this library goes through make_rational() so the invariant
// gcd(|num|, den) = 1, den > 0 always holds.
using BigRational = mpq_class;

BigRational make_rational(const BigInt& num, const BigInt& den);
BigRational make_rational(long num, long den = 1);

BigInt factorial(long n);

/// n!! = n(n-2)(n-4)...; the empty product is 1 for n in {-1, 0, 1}.
/// Throws DomainError for n < -1.
BigInt semifactorial(long n);

/// Semifactorial extended to negative odd arguments through
/// (n)!! = (n+2)!!/(n+2), i.e. (-2k-1)!! = (-1)^k / (2k-1)!!.
/// Negative even arguments are rejected.
BigRational semifactorial_extended(long n);

/// C_n = (2n)!/((n+1)! n!). Throws DomainError for n < 0.
BigInt catalan_number(long n);

/// Catalan numbers extended to negative indices: C_{-1} = -1, C_{n<=-2} = 0.
/// This is the extension under which the closed forms stay valid at j = 1
/// and for negative j.
BigInt catalan_extended(long n);

/// 2^e as an exact rational, e may be negative.
BigRational pow2(long e);
BigInt ipow(const BigInt& base, unsigned long e);

/// Product of lo..hi of f(i), 1 when hi < lo.
template <class Fn>
BigInt product_range(long lo, long hi, Fn&& f) {
  BigInt acc = 1;
  for (long i = lo; i <= hi; ++i) acc *= f(i);
  return acc;
}

int sign(const BigInt& x);
int sign(const BigRational& x);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

std::string to_string(const BigInt& x);
std::string to_string(const BigRational& x);
BigRational parse_rational(const std::string& text);

/// Number of decimal digits of |x| (0 -> 1).
std::size_t decimal_length(const BigInt& x);

}  // namespace balkan
