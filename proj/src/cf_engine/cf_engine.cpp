#include "balkan/cf_engine.hpp"

#include <algorithm>
#include <sstream>

namespace balkan {

Polynomial::Polynomial(std::vector<BigInt> c) : coeffs(std::move(c)) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

Polynomial Polynomial::from_roots(const BigInt& lead, const std::vector<BigInt>& roots) {
  Polynomial p(std::vector<BigInt>{lead});
  for (const auto& r : roots) p = p * Polynomial(std::vector<BigInt>{-r, 1});
  return p;
}

BigInt Polynomial::operator()(long n) const { return (*this)(BigInt(n)); }

BigInt Polynomial::operator()(const BigInt& n) const {
  BigInt acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * n + *it;
  return acc;
}

long Polynomial::degree() const { return static_cast<long>(coeffs.size()) - 1; }

std::string Polynomial::to_string(const std::string& var) const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long k = degree(); k >= 0; --k) {
    const BigInt& c = coeffs[k];
    if (c == 0) continue;
    BigInt a = abs(c);
    if (first) os << (c < 0 ? "-" : "");
    else os << (c < 0 ? " - " : " + ");
    first = false;
    if (k == 0 || a != 1) os << a.get_str();
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.coeffs.empty() || b.coeffs.empty()) return Polynomial();
  std::vector<BigInt> c(a.coeffs.size() + b.coeffs.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.coeffs.size(); ++i)
    for (size_t k = 0; k < b.coeffs.size(); ++k) c[i + k] += a.coeffs[i] * b.coeffs[k];
  return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs.size(), b.coeffs.size()), BigInt(0));
  for (size_t i = 0; i < a.coeffs.size(); ++i) c[i] += a.coeffs[i];
  for (size_t i = 0; i < b.coeffs.size(); ++i) c[i] += b.coeffs[i];
  return Polynomial(std::move(c));
}

bool Polynomial::operator==(const Polynomial& o) const { return coeffs == o.coeffs; }

std::string kind_name(ConstKind k) {
  switch (k) {
    case ConstKind::G: return "G";
    case ConstKind::Log2: return "log2";
    case ConstKind::Rational: return "rational";
  }
  return "?";
}

std::optional<long> termination_index(const Polynomial& P) {
  if (P.coeffs.empty()) return 1;
  size_t m = 0;
  while (P.coeffs[m] == 0) ++m;
  const BigInt a = abs(P.coeffs[m]);
  // a positive integer root divides the lowest nonzero coefficient
  std::vector<long> candidates;
  if (a <= BigInt("1000000000000")) {
    const long v = a.get_si();
    for (long d = 1; d * d <= v; ++d)
      if (v % d == 0) {
        candidates.push_back(d);
        candidates.push_back(v / d);
      }
  } else {
    BigInt bound = 0;
    const BigInt lc = abs(P.coeffs.back());
    for (const auto& c : P.coeffs) bound = std::max(bound, BigInt(abs(c) / lc));
    const long cap = bound < 1000000 ? bound.get_si() + 1 : 1000000;
    for (long d = 1; d <= cap; ++d) candidates.push_back(d);
  }
  std::sort(candidates.begin(), candidates.end());
  for (long d : candidates)
    if (P(d) == 0) return d;
  return std::nullopt;
}

std::optional<long> termination_index(long j, long kappa, long c) {
  std::optional<long> best;
  for (long root : {-c, 1 - j, j - 1 - 2 * kappa})
    if (root >= 1 && (!best || root < *best)) best = root;
  return best;
}

CFSpec make_cf_spec(Polynomial P, Polynomial T, std::string label) {
  CFSpec s;
  s.lead = T(0L);
  s.termination = termination_index(P);
  s.P = std::move(P);
  s.T = std::move(T);
  s.label = std::move(label);
  return s;
}

CFSpec balkan_cf_spec(long j, long kappa, long c) {
  const long lead = j * (2 - j + 2 * kappa);
  Polynomial P = Polynomial::from_roots(BigInt(-2), {BigInt(0), BigInt(-c), BigInt(1 - j), BigInt(j - 1 - 2 * kappa)});
  Polynomial T(std::vector<BigInt>{BigInt(lead), BigInt(3 + 4 * kappa), BigInt(3)});
  CFSpec s;
  s.P = std::move(P);
  s.T = std::move(T);
  s.lead = lead;
  s.termination = termination_index(j, kappa, c);
  s.kind_hint = (j % 2 == 0) ? ConstKind::Log2 : ConstKind::G;
  s.label = "Q(" + std::to_string(j) + "," + std::to_string(kappa) + "," + std::to_string(c) + ")";
  return s;
}

namespace {

struct Recurrence {
  const CFSpec& spec;
  BigInt p_prev = 1, q_prev = 0;
  BigInt p, q = 1;
  long n = 0;

  explicit Recurrence(const CFSpec& s) : spec(s), p(s.lead) {}

  void advance_to(long depth) {
    BigInt t, a, tmp;
    while (n < depth) {
      ++n;
      t = spec.T(n);
      a = spec.P(n);
      tmp = t * p + a * p_prev;
      p_prev.swap(p);
      p.swap(tmp);
      tmp = t * q + a * q_prev;
      q_prev.swap(q);
      q.swap(tmp);
      if ((n & 63) == 0) reduce();
    }
  }

  // dividing all four state values by a common factor leaves every later ratio unchanged
  void reduce() {
    BigInt g = gcd(gcd(p, q), gcd(p_prev, q_prev));
    if (g > 1) {
      p /= g;
      q /= g;
      p_prev /= g;
      q_prev /= g;
    }
  }
};

}  // namespace

BigRational eval_cf_convergent(const CFSpec& spec, long depth) {
  if (depth < 0) throw DomainError("negative depth");
  long limit = depth;
  if (spec.termination) limit = std::min(limit, *spec.termination - 1);
  Recurrence r(spec);
  r.advance_to(limit);
  if (r.q == 0) throw ZeroConvergentDenominator(limit);
  return make_rational(r.p, r.q);
}

CFDecimal eval_cf_decimal(const CFSpec& spec, long digits, long depth_cap) {
  if (digits < 1) throw DomainError("digits must be positive");
  CFDecimal out;
  if (spec.termination) {
    out.exact = true;
    out.exact_value = eval_cf_convergent(spec, *spec.termination);
    out.depth = *spec.termination - 1;
    out.value = HPReal::from_rational(out.exact_value, digits);
    return out;
  }
  const long guard = HPReal::kDefaultGuard;
  const long scale = digits + guard;
  const BigInt one = pow10(scale);
  const BigInt tolerance = pow10(guard - 5);  // 10^-(digits+5) in ulps

  auto value_at = [&](const Recurrence& r) {
    if (r.q == 0) throw ZeroConvergentDenominator(r.n);
    BigInt num = r.p * one;
    BigInt m;
    mpz_fdiv_q(m.get_mpz_t(), num.get_mpz_t(), r.q.get_mpz_t());
    return m;
  };

  Recurrence r(spec);
  long depth = std::min<long>(std::max<long>(32, digits), depth_cap);
  r.advance_to(depth);
  BigInt prev = value_at(r);
  while (true) {
    if (depth >= depth_cap) throw NonConvergence(depth_cap);
    depth = std::min(2 * depth, depth_cap);
    r.advance_to(depth);
    BigInt cur = value_at(r);
    BigInt diff = abs(cur - prev);
    if (diff < tolerance) {
      out.value = HPReal(cur, digits, diff + 1, guard);
      out.depth = depth;
      return out;
    }
    prev = std::move(cur);
  }
}

}  // namespace balkan
