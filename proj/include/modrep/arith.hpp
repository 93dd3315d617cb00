#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <string>

#include "modrep/errors.hpp"

namespace modrep {

using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Value in N ∪ {∞}. Infinity is a distinct state, not a large integer.
class ExtNat {
 public:
  constexpr ExtNat() = default;
  constexpr ExtNat(unsigned value) : value_(value) {}  // NOLINT(google-explicit-constructor)

  static constexpr ExtNat infinity() {
    ExtNat e;
    e.finite_ = false;
    return e;
  }

  constexpr bool is_finite() const { return finite_; }
  constexpr bool is_infinite() const { return !finite_; }

  unsigned value() const {
    if (!finite_) throw InternalError("ExtNat::value() on infinity");
    return value_;
  }

  constexpr bool operator==(const ExtNat& o) const {
    return finite_ == o.finite_ && (!finite_ || value_ == o.value_);
  }
  constexpr std::strong_ordering operator<=>(const ExtNat& o) const {
    if (finite_ != o.finite_) return finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
    if (!finite_) return std::strong_ordering::equal;
    return value_ <=> o.value_;
  }

  std::string to_string() const { return finite_ ? std::to_string(value_) : "inf"; }

  static ExtNat parse(const std::string& s) {
    if (s == "inf" || s == "∞") return infinity();
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("not an exponent (expected integer >= 0 or 'inf'): '" + s + "'");
    return ExtNat(static_cast<unsigned>(std::stoul(s)));
  }

 private:
  unsigned value_ = 0;
  bool finite_ = true;
};

inline ExtNat min(const ExtNat& a, const ExtNat& b) { return a < b ? a : b; }

inline std::ostream& operator<<(std::ostream& os, const ExtNat& e) { return os << e.to_string(); }

inline bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline void require_prime(long long p) {
  if (!is_prime(p)) throw InputError("p = " + std::to_string(p) + " is not prime");
}

/// p-adic valuation with nu_p(0) = ∞. Sign is ignored.
inline ExtNat nu_p(const Int& m, long long p) {
  require_prime(p);
  if (m == 0) return ExtNat::infinity();
  Int x = abs(m);
  unsigned v = 0;
  const Int pp = p;
  while (x % pp == 0) {
    x /= pp;
    ++v;
  }
  return v;
}

inline ExtNat nu_p(long long m, long long p) { return nu_p(Int(m), p); }

/// Exact binomial C(m, n) for integer m and n >= 0 (generalized to negative m).
inline Int binomial(const Int& m, long long n) {
  if (n < 0) return 0;
  Int num = 1, den = 1;
  for (long long j = 0; j < n; ++j) {
    num *= (m - j);
    den *= (j + 1);
  }
  return num / den;
}

inline Int binomial(long long m, long long n) { return binomial(Int(m), n); }

inline Int factorial(long long n) {
  Int f = 1;
  for (long long j = 2; j <= n; ++j) f *= j;
  return f;
}

inline Int ipow(long long base, unsigned e) {
  Int r = 1;
  for (unsigned j = 0; j < e; ++j) r *= base;
  return r;
}

/// nu_p(C(m, n)) by counting carries when adding n and m - n in base p.
inline ExtNat binom_valuation(long long m, long long n, long long p) {
  require_prime(p);
  if (n < 0) throw InputError("binom_valuation: n must be >= 0");
  if (m < 0) {
    // C(m, n) = (-1)^n C(n - m - 1, n)
    m = n - m - 1;
  }
  if (n > m) return ExtNat::infinity();
  long long a = n, b = m - n;
  unsigned carries = 0;
  long long carry = 0;
  while (a > 0 || b > 0 || carry > 0) {
    const long long digit = a % p + b % p + carry;
    carry = digit >= p ? 1 : 0;
    carries += static_cast<unsigned>(carry);
    a /= p;
    b /= p;
  }
  return carries;
}

inline long long to_ll(const Int& x) {
  if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min())
    throw InternalError("integer overflow converting to 64 bits");
  return x.convert_to<long long>();
}

}  // namespace modrep
