#include "supchar/arith.hpp"

#include <atomic>
#include <sstream>

#include "supchar/error.hpp"

namespace supchar {

namespace {
std::atomic<std::uint64_t> g_element_bound{1ull << 20};
std::atomic<int> g_max_prime{13};
}  // namespace

std::uint64_t element_bound() { return g_element_bound.load(); }

void set_element_bound(std::uint64_t bound) {
  // codes are 32-bit
  if (bound == 0 || bound > (1ull << 31)) throw InvalidArgument("element bound must be in [1, 2^31]");
  g_element_bound.store(bound);
}

void require_within_bound(std::uint64_t count, const std::string& what) {
  if (count > element_bound()) {
    throw BoundExceeded(what + ": " + std::to_string(count) + " elements exceeds bound " +
                        std::to_string(element_bound()));
  }
}

int max_prime() { return g_max_prime.load(); }

void set_max_prime(int p) {
  if (p < 2) throw InvalidArgument("prime bound must be at least 2");
  g_max_prime.store(p);
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(int p) : p_(p) {
  if (!is_prime(p)) throw InvalidArgument("modulus " + std::to_string(p) + " is not prime");
  if (p > max_prime())
    throw InvalidArgument("prime " + std::to_string(p) + " exceeds supported bound " +
                          std::to_string(max_prime()));
}

int PrimeField::inv(int a) const {
  a = norm(a);
  if (a == 0) throw InvalidArgument("inverse of zero");
  for (int b = 1; b < p_; ++b)
    if (mul(a, b) == 1) return b;
  throw CheckFailed("no inverse found");
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in multiplication");
  return r;
}

Cyclotomic::Cyclotomic(int p) : p_(p), c_(static_cast<std::size_t>(p - 1), 0) {
  if (!is_prime(p)) throw InvalidArgument("cyclotomic modulus " + std::to_string(p) + " is not prime");
}

Cyclotomic Cyclotomic::integer(int p, std::int64_t v) {
  Cyclotomic r(p);
  r.c_[0] = v;
  return r;
}

Cyclotomic Cyclotomic::from_power_counts(int p, const std::vector<std::int64_t>& counts) {
  if (counts.size() != static_cast<std::size_t>(p)) throw InvalidArgument("need p power counts");
  Cyclotomic r(p);
  // zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2))
  for (int k = 0; k + 1 < p; ++k) r.c_[k] = counts[k] - counts[p - 1];
  return r;
}

Cyclotomic Cyclotomic::zeta_power(int p, long long k) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(p), 0);
  long long e = k % p;
  if (e < 0) e += p;
  counts[static_cast<std::size_t>(e)] = 1;
  return from_power_counts(p, counts);
}

void Cyclotomic::require_same(const Cyclotomic& o) const {
  if (p_ != o.p_) throw InvalidArgument("mixed primes in cyclotomic arithmetic");
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  Cyclotomic r = *this;
  r += o;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  require_same(o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] = checked_add(c_[k], o.c_[k]);
  return *this;
}

Cyclotomic Cyclotomic::operator-() const { return scaled(-1); }

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  require_same(o);
  std::vector<std::int64_t> counts(static_cast<std::size_t>(p_), 0);
  for (int i = 0; i + 1 < p_; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j + 1 < p_; ++j) {
      if (o.c_[j] == 0) continue;
      auto& slot = counts[static_cast<std::size_t>((i + j) % p_)];
      slot = checked_add(slot, checked_mul(c_[i], o.c_[j]));
    }
  }
  return from_power_counts(p_, counts);
}

Cyclotomic Cyclotomic::scaled(std::int64_t k) const {
  Cyclotomic r = *this;
  for (auto& v : r.c_) v = checked_mul(v, k);
  return r;
}

Cyclotomic Cyclotomic::divided(std::int64_t k) const {
  if (k == 0) throw InvalidArgument("division by zero");
  Cyclotomic r = *this;
  for (auto& v : r.c_) {
    if (v % k != 0) throw CheckFailed("inexact division of cyclotomic " + to_string() + " by " + std::to_string(k));
    v /= k;
  }
  return r;
}

Cyclotomic Cyclotomic::conj() const {
  // zeta^k -> zeta^(p-k)
  std::vector<std::int64_t> counts(static_cast<std::size_t>(p_), 0);
  for (int k = 0; k + 1 < p_; ++k) counts[static_cast<std::size_t>((p_ - k) % p_)] = c_[k];
  return from_power_counts(p_, counts);
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  require_same(o);
  return c_ == o.c_;
}

bool Cyclotomic::is_zero() const {
  for (auto v : c_)
    if (v != 0) return false;
  return true;
}

bool Cyclotomic::is_integer() const {
  for (std::size_t k = 1; k < c_.size(); ++k)
    if (c_[k] != 0) return false;
  return true;
}

std::int64_t Cyclotomic::integer_value() const {
  if (!is_integer()) throw CheckFailed("cyclotomic value " + to_string() + " is not rational");
  return c_[0];
}

std::string Cyclotomic::to_string() const {
  if (is_integer()) return std::to_string(c_[0]);
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    std::int64_t v = c_[k];
    if (v == 0) continue;
    if (!first) os << (v < 0 ? "-" : "+");
    else if (v < 0) os << "-";
    first = false;
    std::int64_t a = v < 0 ? -v : v;
    if (k == 0) {
      os << a;
      continue;
    }
    if (a != 1) os << a << "*";
    os << "z";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

Cyclotomic theta(int x, int p) {
  if (!is_prime(p)) throw InvalidArgument("theta: modulus " + std::to_string(p) + " is not prime");
  if (x < 0 || x >= p) throw InvalidArgument("theta: argument out of range");
  return Cyclotomic::zeta_power(p, x);
}

CountingParameter::CountingParameter(long long q) : q_(q) {
  if (q < 2) throw InvalidArgument("counting parameter q must be at least 2");
}

BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

BigInt power(const BigInt& base, unsigned exp) { return boost::multiprecision::pow(base, exp); }

std::string to_string(const Rational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

std::int64_t to_int64(const BigInt& v) {
  if (v > BigInt(INT64_MAX) || v < BigInt(INT64_MIN)) throw std::overflow_error("integer does not fit in 64 bits");
  return v.convert_to<std::int64_t>();
}

}  // namespace supchar
