#include <doctest.h>

#include <algorithm>
#include <random>

#include "balkan/constants.hpp"
#include "balkan/data_files.hpp"
#include "balkan/errors.hpp"
#include "balkan/factorvec.hpp"
#include "balkan/hpreal.hpp"

#ifdef BALKAN_HAVE_MPFR
#include <mpfr.h>
#endif

using namespace balkan;

TEST_CASE("semifactorial") {
  CHECK(semifactorial(1) == 1);
  CHECK(semifactorial(-1) == 1);
  CHECK(semifactorial(0) == 1);
  CHECK(semifactorial(5) == 15);
  CHECK_THROWS_AS(semifactorial(-2), DomainError);
  for (long k = 1; k <= 50; ++k) {
    BigInt even = 1;
    for (long m = 2; m <= 2 * k; m += 2) even *= m;
    CHECK(semifactorial(2 * k - 1) * even == factorial(2 * k));
  }
}

TEST_CASE("semifactorial continued to negative odd arguments") {
  CHECK(semifactorial_extended(-1) == 1);
  CHECK(semifactorial_extended(-3) == -1);
  CHECK(semifactorial_extended(-5) == make_rational(1, 3));
  CHECK(semifactorial_extended(7) == 105);
}

TEST_CASE("Catalan numbers") {
  const long listed[] = {1, 1, 2, 5, 14, 42};
  for (long n = 0; n < 6; ++n) CHECK(catalan_number(n) == listed[n]);
  CHECK(catalan_number(10) == 16796);
  for (long n = 0; n <= 40; ++n) CHECK(catalan_number(n) * factorial(n + 1) * factorial(n) == factorial(2 * n));
  CHECK_THROWS_AS(catalan_number(-1), DomainError);
  CHECK(catalan_extended(-1) == -1);
  CHECK(catalan_extended(-2) == 0);
  CHECK(catalan_extended(4) == 14);
}

TEST_CASE("rationals") {
  CHECK(make_rational(6, -4) == make_rational(-3, 2));
  CHECK_THROWS_AS(make_rational(1, 0), DomainError);
  CHECK(parse_rational("-254456/3") == make_rational(-254456, 3));
  CHECK(parse_rational("12") == 12);
  CHECK_THROWS_AS(parse_rational("1/x"), DomainError);
  CHECK(to_string(make_rational(-5, 4)) == "-5/4");
  CHECK(decimal_length(BigInt("208349607563697600")) == 18);
}

TEST_CASE("HPReal arithmetic") {
  const HPReal third = HPReal::from_rational(make_rational(1, 3), 20);
  CHECK(third.to_string(5) == "0.33333");
  CHECK((third * BigInt(3)).to_string(10) == "1.0000000000");
  const HPReal two = HPReal::from_integer(2, 30);
  CHECK((HPReal::from_integer(1, 30) / two).to_string(3) == "0.500");
  CHECK((-two).to_string(2) == "-2.00");
  CHECK(agree_to_places(third + third, HPReal::from_rational(make_rational(2, 3), 20), 18));
  CHECK_FALSE(agree_to_places(third, HPReal::from_rational(make_rational(333, 1000), 20), 5));
  CHECK(HPReal::from_rational(make_rational(1, 1000000), 30).is_below(5));
  CHECK_FALSE(HPReal::from_rational(make_rational(1, 1000), 30).is_below(5));
  CHECK(third.truncated(8).digits() == 8);
  CHECK(round_div(BigInt(7), BigInt(2)) == 4);
  CHECK(round_div(BigInt(-7), BigInt(2)) == -4);
}

TEST_CASE("constants to a few places") {
  CHECK(constant_value(ConstantName::CatalanG, 8).to_string(8) == "0.91596559");
  CHECK(constant_value(ConstantName::Log2, 10).to_string(10) == "0.6931471806");
  CHECK(constant_value(ConstantName::Pi, 9).to_string(8) == "3.14159265");
  CHECK(parse_constant_name("catalan_G") == ConstantName::CatalanG);
  CHECK(parse_constant_name("G") == ConstantName::CatalanG);
  CHECK_THROWS_AS(parse_constant_name("e"), DomainError);
  CHECK_THROWS_AS(constant_value(ConstantName::Pi, 20001), DomainError);
}

TEST_CASE("constants agree across precisions") {
  for (auto name : {ConstantName::CatalanG, ConstantName::Log2, ConstantName::Pi}) {
    const HPReal a = constant_value(name, 300), b = constant_value(name, 1200);
    CHECK(agree_to_places(a, b, 298));
  }
}

TEST_CASE("G from the slow alternating series") {
  // sum (-1)^n/(2n+1)^2 with the remainder bounded by the first omitted term
  const long digits = 12, terms = 1000000;
  HPReal acc = HPReal::from_integer(0, digits + 4);
  for (long n = 0; n < terms; ++n) {
    const BigInt d = BigInt(2 * n + 1) * (2 * n + 1);
    acc = acc + HPReal::from_rational(make_rational(BigInt(n % 2 ? -1 : 1), d), digits + 4);
  }
  // remainder < 1/(2*terms+1)^2 < 2.5e-13
  CHECK(agree_to_places(acc, constant_value(ConstantName::CatalanG, 40), 12));
}

#ifdef BALKAN_HAVE_MPFR
namespace {
HPReal mpfr_reference(int which, long digits) {
  mpfr_t x;
  mpfr_init2(x, static_cast<mpfr_prec_t>((digits + 40) * 3.33));
  if (which == 0) mpfr_const_catalan(x, MPFR_RNDN);
  else if (which == 1) mpfr_const_log2(x, MPFR_RNDN);
  else mpfr_const_pi(x, MPFR_RNDN);
  const BigInt scale = pow10(digits + HPReal::kDefaultGuard);
  mpfr_mul_z(x, x, scale.get_mpz_t(), MPFR_RNDN);
  BigInt m;
  mpfr_get_z(m.get_mpz_t(), x, MPFR_RNDN);
  mpfr_clear(x);
  return HPReal(m, digits, 1);
}
}  // namespace

TEST_CASE("constants against MPFR") {
  const long digits = 3000;
  CHECK(agree_to_places(constant_value(ConstantName::CatalanG, digits), mpfr_reference(0, digits), digits));
  CHECK(agree_to_places(constant_value(ConstantName::Log2, digits), mpfr_reference(1, digits), digits));
  CHECK(agree_to_places(constant_value(ConstantName::Pi, digits), mpfr_reference(2, digits), digits));
}
#endif

TEST_CASE("factored products") {
  const FactorVec v = factored_product({6, 10});
  CHECK(v.sign == 1);
  CHECK(v.exponent(2) == 2);
  CHECK(v.exponent(3) == 1);
  CHECK(v.exponent(5) == 1);
  CHECK(realize(v) == 60);
  const FactorVec m = factored_product({-4});
  CHECK(m.sign == -1);
  CHECK(m.exponent(2) == 2);
  CHECK(realize(m) == -4);
  const FactorVec e = factored_product({});
  CHECK(e.empty());
  CHECK(realize(e) == 1);
  CHECK_THROWS_AS(factored_product({3, 0}), DomainError);
  // beyond the table: trial division
  CHECK(realize(factored_product({BigInt(1000003) * 2999})) == BigInt(1000003) * 2999);
}

TEST_CASE("reduce_common") {
  auto pow2 = [](long e) {
    FactorVec v;
    v.multiply_power_of_two(e);
    return v;
  };
  auto out = reduce_common({pow2(3), pow2(1), pow2(2)});
  CHECK(out[0].exponent(2) == 2);
  CHECK(out[1].empty());
  CHECK(out[2].exponent(2) == 1);
  CHECK(reduce_common({factored_product({360})})[0].empty());
  out = reduce_common({factored_product({18}), factored_product({3})});
  CHECK(out[0].exponent(2) == 1);
  CHECK(out[0].exponent(3) == 1);
  CHECK(out[1].empty());
}

TEST_CASE("factor vectors realize the plain product (1000 random cases)") {
  std::mt19937_64 rng(20240917);
  std::uniform_int_distribution<long> term(-1000000, 1000000), count(0, 6);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<BigInt> ts;
    BigInt plain = 1;
    for (int k = count(rng); k > 0; --k) {
      long t = 0;
      while (t == 0) t = term(rng);
      ts.emplace_back(t);
      plain *= t;
    }
    REQUIRE(realize(factored_product(ts)) == plain);
  }
}

TEST_CASE("reduce_common keeps pairwise ratios") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> term(1, 5000);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<FactorVec> vs;
    for (int k = 0; k < 3; ++k) {
      FactorVec v = factored_product({term(rng), term(rng)});
      v.multiply(BigInt(term(rng)), -1);
      vs.push_back(v);
    }
    const auto red = reduce_common(vs);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) REQUIRE(realize(red[a]) / realize(red[b]) == realize(vs[a]) / realize(vs[b]));
  }
}

TEST_CASE("embedded data") {
  const auto names = embedded_data_names();
  CHECK(std::find(names.begin(), names.end(), "table6.txt") != names.end());
  CHECK_THROWS_AS(embedded_data("nope.txt"), DomainError);
  const auto rows = parse_seed_table(load_data("table13.txt"));
  REQUIRE(!rows.empty());
  CHECK(rows.front().j == 3);
  CHECK(rows.front().alpha_a == -1);
  const auto recs = data_records("a b # comment\n\n c | d\n");
  REQUIRE(recs.size() == 2);
  CHECK(recs[1].size() == 3);
}
