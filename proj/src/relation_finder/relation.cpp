#include <map>

#include "balkan/constants.hpp"
#include "balkan/relation_finder.hpp"

namespace balkan {

namespace {

HPReal dot(const IntVector& v, const std::vector<HPReal>& xs) {
  HPReal s = HPReal::from_integer(0, xs.front().digits());
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) s = s + xs[i] * v[i];
  return s;
}

IntVector normalized(IntVector v) {
  for (auto it = v.rbegin(); it != v.rend(); ++it) {
    if (*it == 0) continue;
    if (*it < 0)
      for (auto& x : v) x = -x;
    break;
  }
  return v;
}

std::vector<HPReal> at_digits(const std::vector<HPReal>& xs, long digits) {
  std::vector<HPReal> out;
  for (const auto& x : xs) out.push_back(x.digits() > digits ? x.truncated(digits) : x);
  return out;
}

// reduced candidates, shortest first, that pass the residual test at `digits`
std::vector<IntVector> candidates(const std::vector<HPReal>& xs, long digits, const BigInt& bound) {
  const size_t n = xs.size();
  const long scale = std::max(10L, digits - 10);
  LatticeBasis basis(n, IntVector(n + 1, 0));
  const BigInt p = pow10(xs.front().scale() - scale);
  for (size_t i = 0; i < n; ++i) {
    basis[i][i] = 1;
    basis[i][n] = round_div(xs[i].mantissa(), p);
  }
  basis = lll_reduce(std::move(basis));
  std::vector<IntVector> out;
  for (const auto& row : basis) {
    IntVector v(row.begin(), row.begin() + n);
    bool zero = true, big = false;
    for (const auto& x : v) {
      if (x != 0) zero = false;
      if (abs(x) > bound) big = true;
    }
    if (zero || big) continue;
    if (dot(v, xs).is_below(digits / 2)) out.push_back(normalized(v));
  }
  return out;
}

}  // namespace

const BigInt& default_coefficient_bound() {
  static const BigInt b = pow10(80);
  return b;
}

IntVector find_integer_relation(const std::vector<HPReal>& xs, long digits, const BigInt& bound) {
  if (xs.size() < 2) throw DomainError("find_integer_relation needs at least two values");
  for (const auto& x : xs)
    if (x.digits() < digits) throw DomainError("inputs are known to fewer places than requested");
  const auto xd = at_digits(xs, digits);
  auto cs = candidates(xd, digits, bound);
  if (cs.empty()) throw NoRelation("no relation with coefficients below the bound at " + std::to_string(digits) + " digits");
  return cs.front();
}

IntVector find_integer_relation(const RelationInputs& inputs, long digits, const BigInt& bound) {
  const auto xs = inputs(digits);
  auto cs = candidates(at_digits(xs, digits), digits, bound);
  if (cs.empty()) throw NoRelation("no relation with coefficients below the bound at " + std::to_string(digits) + " digits");
  const auto hi = inputs(2 * digits);
  for (const auto& v : cs)
    if (dot(v, hi).is_below(digits)) return v;
  throw NoRelation("candidate relation failed validation at " + std::to_string(2 * digits) + " digits");
}

QExact recover_qexact(const CFSpec& spec, ConstKind kind, long digits, long depth_cap) {
  if (spec.termination) return QExact::rational(eval_cf_convergent(spec, *spec.termination));
  if (kind == ConstKind::Rational) throw DomainError("recover_qexact needs a constant (G or log2)");
  const ConstantName cname = kind == ConstKind::G ? ConstantName::CatalanG : ConstantName::Log2;
  std::map<long, HPReal> values;
  auto value_at = [&](long d) -> const HPReal& {
    auto it = values.find(d);
    if (it == values.end()) it = values.emplace(d, eval_cf_decimal(spec, d + 5, depth_cap).value).first;
    return it->second;
  };
  auto inputs = [&](long d) {
    const HPReal r = value_at(d);
    const HPReal k = constant_value(cname, d + 5);
    return std::vector<HPReal>{HPReal::from_integer(1, d + 5), r, k * r};
  };
  const IntVector v = find_integer_relation(inputs, digits);
  if (v[1] == 0 && v[2] == 0) throw NoRelation("relation does not involve the CF value");
  const QExact q = QExact::make(BigRational(-v[0]), BigRational(v[1]), BigRational(v[2]), kind);
  if (!agree_to_places(q.value(digits), value_at(digits), digits - 20))
    throw NoRelation("recovered triple disagrees with the CF value");
  return q;
}

AlphaBeta derive_alphabeta_numeric(long j, long kappa, long digits) {
  if (j % 2 == 0 || j == 1) throw DomainError("derive_alphabeta_numeric needs odd j != 1");
  if (kappa < 0) throw DomainError("derive_alphabeta_numeric needs kappa >= 0");
  const QExact q1 = recover_qexact(balkan_cf_spec(j, kappa, 1), ConstKind::G, digits);
  const QExact q2 = recover_qexact(balkan_cf_spec(j, kappa, 2), ConstKind::G, digits);
  return alphabeta_from_triples(j, kappa, q1, q2);
}

Seeds4 derive_seeds_numeric(long j, long digits) {
  if (j < 3 || j % 2 == 0) throw DomainError("derive_seeds_numeric needs odd j >= 3");
  BigRational ea[2], eb[2];
  for (long u = 1; u <= 2; ++u) {
    const long kappa = j - 3 + u;
    const AlphaBeta ab = derive_alphabeta_numeric(j, kappa, digits);
    ea[u - 1] = ab.alpha * kosovo_ell(0, j, kappa);
    eb[u - 1] = (ab.alpha + ab.beta) * kosovo_ell(1, j, kappa);
  }
  return {ea[0], ea[1] - ea[0], eb[0], eb[1] - eb[0]};
}

}  // namespace balkan
