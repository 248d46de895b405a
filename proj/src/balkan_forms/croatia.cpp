#include <mutex>

#include "balkan/balkan_forms.hpp"
#include "balkan/data_files.hpp"

namespace balkan {

namespace {

using Coeffs = std::vector<BigRational>;

Coeffs poly_mul_linear(const Coeffs& p, const BigRational& root) {
  // p(x) * (x - root)
  Coeffs out(p.size() + 1, BigRational(0));
  for (size_t k = 0; k < p.size(); ++k) {
    out[k + 1] += p[k];
    out[k] -= p[k] * root;
  }
  return out;
}

std::vector<BigInt> to_integers(const Coeffs& p, const std::string& what) {
  std::vector<BigInt> out;
  for (const auto& c : p) {
    if (c.get_den() != 1) throw DomainError(what + ": non-integer coefficient " + to_string(c));
    out.push_back(c.get_num());
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

// nested record: outer + sign * (c0 (j-x_m) + c1)(j-x_{m-1}) ... ) (j - x_1)
std::vector<BigInt> expand_nested(const std::vector<std::string>& rec) {
  std::vector<std::vector<std::string>> g(1);
  for (const auto& t : rec) {
    if (t == "|") g.emplace_back();
    else g.back().push_back(t);
  }
  if (g.size() != 4 || g[1].size() != 2 || g[3].size() != g[2].size())
    throw DomainError("malformed nested psi record");
  const BigInt outer(g[1][0]);
  const BigInt sgn_(g[1][1]);
  std::vector<BigInt> nodes;
  for (const auto& s : g[2]) nodes.emplace_back(s);
  std::vector<BigInt> cs;
  for (const auto& s : g[3]) cs.emplace_back(s);
  Coeffs v{BigRational(cs[0])};
  for (size_t k = 1; k < cs.size(); ++k) {
    v = poly_mul_linear(v, BigRational(nodes[nodes.size() - k]));
    v[0] += cs[k];
  }
  v = poly_mul_linear(v, BigRational(nodes[0]));
  for (auto& c : v) c *= sgn_;
  v[0] += outer;
  return to_integers(v, "nested psi");
}

std::vector<PsiPoly> load_psi_tables() {
  std::vector<PsiPoly> out;
  for (const auto& row : parse_psi_table(std::string(embedded_data("psi.txt")))) {
    if (row.i < 0) throw DomainError("psi table: negative index");
    if (static_cast<long>(out.size()) <= row.i) out.resize(row.i + 1);
    out[row.i].i = row.i;
    (row.which == "psi1" ? out[row.i].coeffs1 : out[row.i].coeffs2) = row.coeffs;
  }
  PsiPoly six;
  six.i = static_cast<long>(out.size());
  for (const auto& rec : data_records(std::string(embedded_data("psi_nested.txt")))) {
    (rec[0] == "psi1" ? six.coeffs1 : six.coeffs2) = expand_nested(rec);
  }
  out.push_back(std::move(six));
  return out;
}

}  // namespace

const PsiPoly& croatia_psi_table(long i) {
  static const std::vector<PsiPoly> tables = load_psi_tables();
  if (i < 0 || i >= static_cast<long>(tables.size()))
    throw DomainError("built-in psi table covers i = 0.." + std::to_string(tables.size() - 1));
  return tables[i];
}

BigRational croatia_mu(long i, long j) {
  if (i < 0) throw DomainError("croatia_mu needs i >= 0");
  const BigInt num = product_range(1, i, [j](long q) { return BigInt(j - 2 * q - 2); });
  const long e = (3 * j - 11 - 4 * i) / 2;
  BigRational den = pow2(e);
  if (e % 2 != 0) den = -den;
  return -BigRational(num) / den;
}

BigRational eval_poly(const std::vector<BigInt>& coeffs, const BigRational& x) {
  BigRational v(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * x + *it;
  return v;
}

AlphaBeta croatia_alphabeta(long i, long j) {
  if (j % 2 == 0 || i < 0 || j < 2 * i + 5) throw DomainError("croatia_alphabeta needs odd j >= 2i + 5");
  const BigRational mu = croatia_mu(i, j);
  if (mu == 0) throw DomainError("croatia_alphabeta: mu vanishes");
  const PsiPoly p = i <= 6 ? croatia_psi_table(i) : croatia_psi_interpolate(i);
  return {eval_poly(p.coeffs1, j) / mu, eval_poly(p.coeffs2, j) / mu};
}

PsiPoly croatia_psi_interpolate(long i) {
  if (i < 0) throw DomainError("croatia_psi_interpolate needs i >= 0");
  // psi2 has degree i + 1; one extra node checks the fit
  const long npts = i + 3;
  std::vector<BigRational> xs, y1, y2;
  for (long m = 0; m < npts; ++m) {
    const long j = 2 * i + 5 + 2 * m;
    const long kappa = (j - 2 * i - 3) / 2;
    const AlphaBeta ab = alphabeta_exact(j, kappa);
    const BigRational mu = croatia_mu(i, j);
    xs.emplace_back(j);
    y1.push_back(ab.alpha * mu);
    y2.push_back(ab.beta * mu);
  }
  auto fit = [&xs](std::vector<BigRational> y) {
    // Newton divided differences, then expand to monomial form
    const size_t n = xs.size();
    for (size_t lvl = 1; lvl < n; ++lvl)
      for (size_t k = n - 1; k >= lvl; --k) y[k] = (y[k] - y[k - 1]) / (xs[k] - xs[k - lvl]);
    Coeffs p{y[n - 1]};
    for (size_t k = n - 1; k-- > 0;) {
      p = poly_mul_linear(p, xs[k]);
      p[0] += y[k];
    }
    return to_integers(p, "psi interpolation");
  };
  PsiPoly out;
  out.i = i;
  out.coeffs1 = fit(y1);
  out.coeffs2 = fit(y2);
  if (static_cast<long>(out.coeffs1.size()) > i + 1 || static_cast<long>(out.coeffs2.size()) > i + 2)
    throw DomainError("psi interpolation: degree too high");
  return out;
}

}  // namespace balkan
