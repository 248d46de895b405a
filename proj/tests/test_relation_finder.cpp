#include <doctest.h>

#include <random>

#include "balkan/constants.hpp"
#include "balkan/errors.hpp"
#include "balkan/relation_finder.hpp"

using namespace balkan;

namespace {

BigInt dot(const IntVector& a, const IntVector& b) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

BigInt det3(const LatticeBasis& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// size reduction and the Lovasz condition, from a rational Gram-Schmidt
bool is_lll_reduced(const LatticeBasis& b, const BigRational& delta) {
  const std::size_t n = b.size();
  std::vector<std::vector<BigRational>> star(n);
  std::vector<BigRational> norm(n);
  std::vector<std::vector<BigRational>> mu(n, std::vector<BigRational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    star[i].assign(b[i].begin(), b[i].end());
    for (std::size_t k = 0; k < i; ++k) {
      BigRational d = 0;
      for (std::size_t t = 0; t < b[i].size(); ++t) d += BigRational(b[i][t]) * star[k][t];
      mu[i][k] = d / norm[k];
      for (std::size_t t = 0; t < b[i].size(); ++t) star[i][t] -= mu[i][k] * star[k][t];
    }
    norm[i] = 0;
    for (const auto& x : star[i]) norm[i] += x * x;
    for (std::size_t k = 0; k < i; ++k)
      if (abs(mu[i][k]) > make_rational(1, 2)) return false;
    if (i > 0 && norm[i] < (delta - mu[i][i - 1] * mu[i][i - 1]) * norm[i - 1]) return false;
  }
  return true;
}

HPReal G(long d) { return constant_value(ConstantName::CatalanG, d); }

}  // namespace

TEST_CASE("LLL on small bases") {
  const LatticeBasis id{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK(lll_reduce(id) == id);
  const LatticeBasis two = lll_reduce({{1, 0}, {4, 1}});
  CHECK(dot(two[0], two[0]) <= 1);
  CHECK(is_lll_reduced(two, make_rational(3, 4)));
  CHECK_THROWS_AS(lll_reduce({{1, 2}, {2, 4}}), DomainError);
  CHECK_THROWS_AS(lll_reduce(id, make_rational(1, 4)), DomainError);
  CHECK_THROWS_AS(lll_reduce(id, 1), DomainError);
}

TEST_CASE("LLL against brute force on 100 random 3D lattices") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> entry(-40, 40);
  int done = 0;
  while (done < 100) {
    LatticeBasis b(3, IntVector(3));
    for (auto& row : b)
      for (auto& x : row) x = entry(rng);
    if (det3(b) == 0) continue;
    const LatticeBasis r = lll_reduce(b);
    REQUIRE(is_lll_reduced(r, make_rational(3, 4)));
    REQUIRE(abs(det3(r)) == abs(det3(b)));
    // shortest nonzero vector over a coefficient box of the reduced basis
    BigInt best = -1;
    for (long x = -6; x <= 6; ++x)
      for (long y = -6; y <= 6; ++y)
        for (long z = -6; z <= 6; ++z) {
          if (!x && !y && !z) continue;
          IntVector v(3);
          for (int t = 0; t < 3; ++t) v[t] = x * r[0][t] + y * r[1][t] + z * r[2][t];
          const BigInt n = dot(v, v);
          if (best < 0 || n < best) best = n;
        }
    // |b1|^2 <= 2^(n-1) lambda1^2 with n = 3
    REQUIRE(dot(r[0], r[0]) <= 4 * best);
    ++done;
  }
}

TEST_CASE("integer relations among fixed values") {
  const long d = 80;
  const HPReal one = HPReal::from_integer(1, d), g = G(d);
  CHECK(find_integer_relation({one, HPReal::from_integer(3, d), g * BigInt(3)}, d) == IntVector{-3, 1, 0});
  CHECK(find_integer_relation({one, g, g}, d) == IntVector{0, -1, 1});
  const HPReal r = HPReal::from_integer(-288, d) / (HPReal::from_integer(31, d) - g * BigInt(90));
  const IntVector v = find_integer_relation({one, r, g * r}, d);
  CHECK(v == IntVector{-288, -31, 90});
}

TEST_CASE("no relation") {
  const RelationInputs inputs = [](long d) {
    return std::vector<HPReal>{HPReal::from_integer(1, d), constant_value(ConstantName::Pi, d),
                               constant_value(ConstantName::CatalanG, d)};
  };
  CHECK_THROWS_AS(find_integer_relation(inputs, 60), NoRelation);
}

TEST_CASE("triple recovery") {
  CHECK(recover_qexact(balkan_cf_spec(1, 1, 3), ConstKind::G, 300) == QExact::make(-288, 31, -90, ConstKind::G));
  CHECK(recover_qexact(rc_spec(6), ConstKind::Log2, 200) == QExact::make(-2, -17, 24, ConstKind::Log2));
  CHECK(recover_qexact(balkan_cf_spec(3, 2, 3), ConstKind::G, 300).to_string() == "192/(13 + 18*G)");
  CHECK(recover_qexact(balkan_cf_spec(5, 1, 3), ConstKind::G, 100) == QExact::rational(3));
}

TEST_CASE("recovery round trip over a grid") {
  for (long j = 1; j <= 9; j += 2)
    for (long k = 0; k <= 5; ++k)
      for (long c = 1; c <= 3; ++c) {
        if (j >= 2 * k + 3) continue;
        CHECK(recover_qexact(balkan_cf_spec(j, k, c), ConstKind::G, 300) == q_exact(j, k, c));
      }
}

TEST_CASE("parity rule") {
  // odd j: relation in G; even j: relation in log 2 (c = 1 here; larger c gave rationals)
  for (long k = 3; k <= 5; ++k) {
    const QExact odd = recover_qexact(balkan_cf_spec(3, k, 1), ConstKind::G, 300);
    CHECK(odd.a2 != 0);
    const CFSpec s = balkan_cf_spec(4, k, 1);
    const QExact even = recover_qexact(s, ConstKind::Log2, 300);
    CHECK(even.kind == ConstKind::Log2);
    CHECK(agree_to_places(even.value(100), eval_cf_decimal(s, 100).value, 100));
    CHECK_THROWS_AS(recover_qexact(s, ConstKind::G, 300), NoRelation);
  }
}

TEST_CASE("alpha and beta from numeric values") {
  CHECK(derive_alphabeta_numeric(5, 1, 400) == AlphaBeta{4, -20});
  CHECK(derive_alphabeta_numeric(3, 2, 600) == kosovo_kappa_level(3, kosovo_j_seeds(3), 2));
  CHECK(derive_alphabeta_numeric(3, 1, 600) == kosovo_kappa_level(3, kosovo_j_seeds(3), 1));
  CHECK(derive_alphabeta_numeric(7, 2, 400) == alphabeta_exact(7, 2));
  CHECK(derive_alphabeta_numeric(9, 2, 400) == croatia_alphabeta(1, 9));
  CHECK(derive_alphabeta_numeric(7, 4, 800) == alphabeta_exact(7, 4));
}

TEST_CASE("seeds from numeric values") {
  CHECK(derive_seeds_numeric(3, 1200) == kosovo_j_seeds(3));
  CHECK(derive_seeds_numeric(5, 1200) == Seeds4{19, 234, -17, -8});
  const Seeds4 s9 = derive_seeds_numeric(9, 1500);
  CHECK(s9.alpha_a == 667115);
  CHECK(s9.alpha_b == 60003486);
  CHECK(s9 == kosovo_j_seeds(9));
}
