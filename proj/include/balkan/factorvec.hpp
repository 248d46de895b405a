#pragma once

// Sparse prime-exponent vectors for lazy evaluation of long products and
// quotients: multiply by adding exponents, cancel before realizing.

#include <map>
#include <vector>

#include "balkan/exactnum.hpp"

namespace balkan {

struct FactorVec {
  std::map<BigInt, long> exponents;  // prime -> nonzero exponent
  int sign = 1;

  void multiply(const BigInt& term, long power = 1);
  void multiply(const FactorVec& other, long power = 1);
  void multiply_power_of_two(long e);
  bool empty() const { return exponents.empty(); }
  long exponent(const BigInt& p) const;
  bool operator==(const FactorVec& o) const { return sign == o.sign && exponents == o.exponents; }
};

/// Largest integer whose factorization is tabulated.
constexpr long kFactorTableLimit = 2998;

/// Prime factorization of |n| (n != 0): table lookup up to kFactorTableLimit,
/// trial division beyond.
std::vector<std::pair<BigInt, long>> factorize(const BigInt& n);

FactorVec factored_product(const std::vector<BigInt>& terms);

/// For each prime subtract the minimum exponent over all vectors (missing = 0).
std::vector<FactorVec> reduce_common(const std::vector<FactorVec>& vectors);

BigRational realize(const FactorVec& v);

}  // namespace balkan
