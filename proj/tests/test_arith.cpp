#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "supchar/arith.hpp"
#include "supchar/error.hpp"

using namespace supchar;

namespace {

// Numerical value of an element, used as an oracle for the ring operations.
std::complex<double> numeric(const Cyclotomic& z) {
  const double pi = std::acos(-1.0);
  std::complex<double> sum = 0;
  const auto& c = z.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k)
    sum += static_cast<double>(c[k]) * std::polar(1.0, 2 * pi * static_cast<double>(k) / z.prime());
  return sum;
}

Cyclotomic random_element(int p, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-5, 5);
  Cyclotomic z(p);
  for (int k = 0; k < p; ++k) z += Cyclotomic::zeta_power(p, k).scaled(d(rng));
  return z;
}

}  // namespace

TEST_CASE("primes") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK_THROWS_AS(PrimeField(4), InvalidArgument);
}

TEST_CASE("prime field inverses") {
  for (int p : {2, 3, 5, 7}) {
    PrimeField f(p);
    for (int a = 1; a < p; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.norm(-1) == p - 1);
  }
}

TEST_CASE("theta values") {
  for (int p : {2, 3, 5}) CHECK(theta(0, p) == Cyclotomic::integer(p, 1));
  CHECK(theta(1, 2) == Cyclotomic::integer(2, -1));
  CHECK(theta(1, 3) + theta(2, 3) == Cyclotomic::integer(3, -1));
  CHECK_THROWS_AS(theta(0, 4), InvalidArgument);
  CHECK_THROWS_AS(theta(3, 3), InvalidArgument);
}

TEST_CASE("cyclotomic products") {
  auto z = Cyclotomic::zeta_power(3, 1);
  auto z2 = Cyclotomic::zeta_power(3, 2);
  auto one = Cyclotomic::integer(3, 1);
  CHECK(z * z2 == one);
  CHECK((one + z) * (one + z2) == one);
  CHECK(Cyclotomic::integer(2, -1).conj() == Cyclotomic::integer(2, -1));
  CHECK(z.conj() == z2);
  CHECK(Cyclotomic::zeta_power(5, -1) == Cyclotomic::zeta_power(5, 4));
  CHECK(Cyclotomic::zeta_power(5, 7) == Cyclotomic::zeta_power(5, 2));
}

TEST_CASE("sum of all p-th roots vanishes") {
  for (int p : {2, 3, 5, 7}) {
    std::vector<std::int64_t> counts(static_cast<std::size_t>(p), 1);
    CHECK(Cyclotomic::from_power_counts(p, counts).is_zero());
  }
}

TEST_CASE("ring operations agree with complex evaluation") {
  std::mt19937 rng(7);
  for (int p : {2, 3, 5, 7}) {
    for (int trial = 0; trial < 40; ++trial) {
      auto a = random_element(p, rng);
      auto b = random_element(p, rng);
      CHECK(std::abs(numeric(a * b) - numeric(a) * numeric(b)) < 1e-6);
      CHECK(std::abs(numeric(a + b) - (numeric(a) + numeric(b))) < 1e-9);
      CHECK(std::abs(numeric(a.conj()) - std::conj(numeric(a))) < 1e-9);
      CHECK((a - b) + b == a);
    }
  }
}

TEST_CASE("integer detection and exact division") {
  auto v = Cyclotomic::integer(5, 12);
  CHECK(v.is_integer());
  CHECK(v.integer_value() == 12);
  CHECK(v.divided(4) == Cyclotomic::integer(5, 3));
  CHECK_THROWS_AS(v.divided(5), CheckFailed);
  CHECK_FALSE(Cyclotomic::zeta_power(3, 1).is_integer());
  CHECK_THROWS_AS(Cyclotomic::zeta_power(3, 1).integer_value(), CheckFailed);
  CHECK(Cyclotomic::integer(3, 2).to_string() == "2");
}

TEST_CASE("mixing primes is rejected") {
  CHECK_THROWS(Cyclotomic::integer(2, 1) + Cyclotomic::integer(3, 1));
}

TEST_CASE("binomials and powers") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(3, 4) == 0);
  CHECK(power(BigInt(3), 40) == BigInt("12157665459056928801"));
  CHECK_THROWS_AS(CountingParameter(1), InvalidArgument);
  CHECK(CountingParameter(4).value() == 4);
}

TEST_CASE("checked arithmetic") {
  CHECK(checked_add(1, 2) == 3);
  CHECK_THROWS_AS(checked_mul(INT64_MAX, 2), std::overflow_error);
  CHECK_THROWS_AS(to_int64(power(BigInt(2), 70)), std::overflow_error);
  CHECK(to_string(Rational(3, 6)) == "1/2");
}
