#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace meshsum {

/// Arbitrary-precision signed integer. Immutable value type.
class BigInt {
 public:
  BigInt() = default;
  BigInt(std::int64_t v);  // NOLINT(google-explicit-constructor)
  explicit BigInt(mpz_class v) : v_(std::move(v)) {}

  /// Parses an optional '-' followed by decimal digits. Throws DomainError.
  static BigInt from_string(std::string_view text);
  std::string to_string() const;

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  bool fits_int64() const;
  std::int64_t to_int64() const;  // throws DomainError if out of range

  const mpz_class& raw() const { return v_; }

  BigInt operator-() const { return BigInt(mpz_class(-v_)); }
  BigInt& operator+=(const BigInt& o);
  BigInt& operator-=(const BigInt& o);
  BigInt& operator*=(const BigInt& o);

  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }

  friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Exact division; returns false (and leaves quotient untouched) if b does
  /// not divide a or b is zero.
  static bool divide_exact(const BigInt& a, const BigInt& b, BigInt& quotient);
  static BigInt abs(const BigInt& a) { return BigInt(mpz_class(::abs(a.v_))); }
  static BigInt pow(const BigInt& base, unsigned long exp);

 private:
  mpz_class v_;
};

std::ostream& operator<<(std::ostream& os, const BigInt& v);

}  // namespace meshsum
