#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace supchar {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

bool is_prime(long long n);

/// Residues mod a small prime. Elements are plain ints in [0, p).
class PrimeField {
 public:
  explicit PrimeField(int p);

  int p() const { return p_; }
  int norm(long long x) const {
    long long r = x % p_;
    return static_cast<int>(r < 0 ? r + p_ : r);
  }
  int add(int a, int b) const { return (a + b) % p_; }
  int sub(int a, int b) const { return (a - b + p_) % p_; }
  int neg(int a) const { return a == 0 ? 0 : p_ - a; }
  int mul(int a, int b) const { return (a * b) % p_; }
  int inv(int a) const;

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  int p_;
};

/// Element of Z[zeta_p] in the basis 1, zeta, ..., zeta^(p-2).
class Cyclotomic {
 public:
  explicit Cyclotomic(int p);
  static Cyclotomic integer(int p, std::int64_t v);
  /// zeta_p^k for any integer k.
  static Cyclotomic zeta_power(int p, long long k);
  /// Build from counts c[k] of zeta^k, k = 0..p-1.
  static Cyclotomic from_power_counts(int p, const std::vector<std::int64_t>& counts);

  int prime() const { return p_; }
  const std::vector<std::int64_t>& coeffs() const { return c_; }

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic scaled(std::int64_t k) const;
  /// Exact division by an integer; throws CheckFailed when not exact.
  Cyclotomic divided(std::int64_t k) const;
  Cyclotomic conj() const;
  Cyclotomic& operator+=(const Cyclotomic& o);

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  bool is_zero() const;
  bool is_integer() const;
  /// The integer value; throws CheckFailed unless is_integer().
  std::int64_t integer_value() const;

  /// "a" for integers, otherwise "a+b*z+c*z^2" style.
  std::string to_string() const;

 private:
  void require_same(const Cyclotomic& o) const;
  int p_;
  std::vector<std::int64_t> c_;
};

/// The additive character x -> zeta_p^x.
Cyclotomic theta(int x, int p);

/// Formal counting parameter q >= 2; need not be prime.
class CountingParameter {
 public:
  explicit CountingParameter(long long q);
  long long value() const { return q_; }
  BigInt big() const { return BigInt(q_); }

 private:
  long long q_;
};

BigInt binomial(long long n, long long k);
BigInt power(const BigInt& base, unsigned exp);

/// Checked 64-bit helpers; throw std::overflow_error.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

std::string to_string(const Rational& r);
/// Convert a BigInt to int64, throwing std::overflow_error if it does not fit.
std::int64_t to_int64(const BigInt& v);

}  // namespace supchar
