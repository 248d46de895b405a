#include <doctest.h>

#include <algorithm>
#include <random>

#include "balkan/data_files.hpp"
#include "balkan/errors.hpp"
#include "balkan/miner_tools.hpp"

using namespace balkan;

namespace {

MiningDB table6() { return parse_mining_db(load_data("table6.txt")); }

}  // namespace

TEST_CASE("brittleness") {
  CHECK(brittleness(1) == 0);
  CHECK(brittleness(12) == 3);
  CHECK(brittleness(make_rational(3, 4)) == 3);
  CHECK(brittleness(make_rational(-50, 9)) == 5);
  CHECK_THROWS_AS(brittleness(0), DomainError);
}

TEST_CASE("brittleness is additive over coprime factors") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> draw(1, 200000);
  int done = 0;
  while (done < 500) {
    const BigInt a = draw(rng), b = draw(rng);
    if (gcd(a, b) != 1) continue;
    REQUIRE(brittleness(BigRational(a * b)) == brittleness(BigRational(a)) + brittleness(BigRational(b)));
    REQUIRE(brittleness(BigRational(a, b)) == brittleness(BigRational(a)) + brittleness(BigRational(b)));
    ++done;
  }
}

TEST_CASE("target function") {
  CHECK(n_omega_target(11, 6, 40) == BigInt("86562004597992000"));
  CHECK(n_omega_target(11, 6, 47) == BigInt("208349607563697600"));
  CHECK(n_omega_target(3, 1, 1) == 1);
  for (const auto& e : table6().entries) CHECK(n_omega_target(e.j, e.kappa, e.c) == e.t);
  CHECK_THROWS_AS(n_omega_target(4, 1, 1), DomainError);
}

TEST_CASE("mining db text") {
  const MiningDB db = table6();
  CHECK(db.entries.size() == 8);
  const MiningDB again = parse_mining_db(serialize_mining_db(db));
  CHECK(again.entries == db.entries);
  CHECK(parse_mining_db("# nothing\n\n").entries.empty());
  CHECK_THROWS_AS(parse_mining_db("11 6 40"), DomainError);
  CHECK_THROWS_AS(parse_mining_db("11 6 40 0"), DomainError);
  CHECK_THROWS_AS(parse_mining_db("11 6 x 12"), DomainError);
  CHECK(target_db(11, 6, 40, 47).entries == db.entries);
}

TEST_CASE("candidates") {
  CHECK(*evaluate_candidate(Family::Affine, {1, 2, 3, 4}, 11, 6, 40) == 11 + 12 + 120 + 4);
  CHECK(*evaluate_candidate(Family::Catalan, {0, 1, 0, -1}, 11, 6, 40) == catalan_number(5));
  CHECK(*evaluate_candidate(Family::Catalan, {0, 0, 0, -2}, 11, 6, 40) == 0);
  CHECK_FALSE(evaluate_candidate(Family::Catalan, {0, 0, 0, -2}, 11, 6, 40, CatalanPolicy::NegativeEliminates));
  // product over i = 1..(j-1)/2 of (u0 j + u1 kappa + u2 c + u3 + u4 i)
  BigInt want = 1;
  for (long i = 1; i <= 5; ++i) want *= 2 * 40 + 1 - 2 * 6 + 2 * i;
  CHECK(*evaluate_candidate(Family::Product, {0, -2, 2, 1, 2}, 11, 6, 40) == want);
  CHECK(family_arity(Family::Product) == 5);
  CHECK_THROWS_AS(evaluate_candidate(Family::Affine, {1, 2, 3}, 11, 6, 40), DomainError);
  CHECK(parse_family("catalan") == Family::Catalan);
  CHECK(parse_zero_policy("zero-skips") == ZeroPolicy::Skips);
  CHECK_THROWS_AS(parse_catalan_policy("lenient"), DomainError);
}

TEST_CASE("decimation of the recorded database") {
  const MiningDB db = table6();
  const DecimateResult big = decimate(Family::Affine, cube(8, 4), db);
  CHECK(big.box_size == 83521);
  CHECK(big.survivors.size() == 4954);
  const std::vector<unsigned long long> per{51721, 54371, 55635, 56161, 52771, 51203, 51609, 46383};
  CHECK(big.eliminated_per_entry == per);
  // the known factor 2 kappa - 1 is never eliminated
  const UVec known{0, 2, 0, -1};
  CHECK(std::find(big.survivors.begin(), big.survivors.end(), known) != big.survivors.end());

  const DecimateResult small = decimate(Family::Affine, cube(3, 4), db);
  CHECK(small.box_size == 2401);
  CHECK(small.survivors.size() == 332);

  CHECK(decimate(Family::Affine, cube(8, 4), db, {ZeroPolicy::Skips}).survivors.size() == 5689);
}

TEST_CASE("decimation brute force on a small box") {
  const MiningDB db = table6();
  const Box box{{-2, 2}, {-1, 1}, {0, 2}, {-3, 3}};
  const DecimateResult r = decimate(Family::Affine, box, db);
  std::vector<UVec> want;
  for (long a = -2; a <= 2; ++a)
    for (long b = -1; b <= 1; ++b)
      for (long c = 0; c <= 2; ++c)
        for (long d = -3; d <= 3; ++d) {
          bool ok = true;
          for (const auto& e : db.entries) {
            const BigInt y = a * e.j + b * e.kappa + c * e.c + d;
            if (y == 0 || e.t % y != 0) ok = false;
          }
          if (ok) want.push_back({a, b, c, d});
        }
  auto got = r.survivors;
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  CHECK(got == want);
}

TEST_CASE("empty database keeps the whole box") {
  for (Family f : {Family::Affine, Family::Catalan, Family::Product}) {
    const DecimateResult r = decimate(f, cube(1, family_arity(f)), MiningDB{});
    CHECK(r.survivors.size() == r.box_size);
  }
  CHECK_THROWS_AS(decimate(Family::Affine, cube(1, 5), MiningDB{}), DomainError);
  CHECK_THROWS_AS(decimate(Family::Affine, Box{{1, 0}, {0, 0}, {0, 0}, {0, 0}}, MiningDB{}), DomainError);
}
