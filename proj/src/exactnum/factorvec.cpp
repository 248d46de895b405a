#include "balkan/factorvec.hpp"

#include <algorithm>
#include <array>

namespace balkan {

namespace {

// smallest prime factor for 0..kFactorTableLimit
const std::array<int, kFactorTableLimit + 1>& spf_table() {
  static const auto table = [] {
    std::array<int, kFactorTableLimit + 1> t{};
    for (int i = 2; i <= kFactorTableLimit; ++i) {
      if (t[i] != 0) continue;
      for (int k = i; k <= kFactorTableLimit; k += i)
        if (t[k] == 0) t[k] = i;
    }
    return t;
  }();
  return table;
}

}  // namespace

std::vector<std::pair<BigInt, long>> factorize(const BigInt& n) {
  if (n == 0) throw DomainError("cannot factor zero");
  BigInt m = abs(n);
  std::vector<std::pair<BigInt, long>> out;
  auto push = [&out](const BigInt& p) {
    if (!out.empty() && out.back().first == p) ++out.back().second;
    else out.emplace_back(p, 1);
  };
  if (m <= kFactorTableLimit) {
    long v = m.get_si();
    const auto& t = spf_table();
    while (v > 1) {
      push(BigInt(t[v]));
      v /= t[v];
    }
    return out;
  }
  BigInt p = 2;
  while (p * p <= m) {
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
      push(p);
      m /= p;
    }
    p += (p == 2) ? 1 : 2;
  }
  if (m > 1) push(m);
  return out;
}

void FactorVec::multiply(const BigInt& term, long power) {
  if (term == 0) throw DomainError("zero factor in a factored product");
  if (term < 0 && (power % 2 != 0)) sign = -sign;
  for (const auto& [p, e] : factorize(term)) {
    long& slot = exponents[p];
    slot += e * power;
    if (slot == 0) exponents.erase(p);
  }
}

void FactorVec::multiply(const FactorVec& other, long power) {
  if (other.sign < 0 && (power % 2 != 0)) sign = -sign;
  for (const auto& [p, e] : other.exponents) {
    long& slot = exponents[p];
    slot += e * power;
    if (slot == 0) exponents.erase(p);
  }
}

void FactorVec::multiply_power_of_two(long e) {
  if (e == 0) return;
  long& slot = exponents[BigInt(2)];
  slot += e;
  if (slot == 0) exponents.erase(BigInt(2));
}

long FactorVec::exponent(const BigInt& p) const {
  auto it = exponents.find(p);
  return it == exponents.end() ? 0 : it->second;
}

FactorVec factored_product(const std::vector<BigInt>& terms) {
  FactorVec v;
  for (const auto& t : terms) v.multiply(t);
  return v;
}

std::vector<FactorVec> reduce_common(const std::vector<FactorVec>& vectors) {
  if (vectors.empty()) throw DomainError("reduce_common needs at least one vector");
  std::map<BigInt, long> mins;
  for (const auto& v : vectors)
    for (const auto& [p, e] : v.exponents) mins.emplace(p, 0);
  for (auto& [p, m] : mins) {
    bool first = true;
    for (const auto& v : vectors) {
      const long e = v.exponent(p);
      m = first ? e : std::min(m, e);
      first = false;
    }
  }
  std::vector<FactorVec> out = vectors;
  for (auto& v : out)
    for (const auto& [p, m] : mins) {
      if (m == 0) continue;
      long& slot = v.exponents[p];
      slot -= m;
      if (slot == 0) v.exponents.erase(p);
    }
  return out;
}

BigRational realize(const FactorVec& v) {
  BigInt num = 1, den = 1;
  for (const auto& [p, e] : v.exponents) {
    if (e > 0) num *= ipow(p, static_cast<unsigned long>(e));
    else den *= ipow(p, static_cast<unsigned long>(-e));
  }
  return make_rational(v.sign < 0 ? BigInt(-num) : num, den);
}

}  // namespace balkan
