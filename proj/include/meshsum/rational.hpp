#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include "meshsum/bigint.hpp"

namespace meshsum {

/// Exact rational, always in lowest terms with a positive denominator.
class BigRational {
 public:
  BigRational() = default;
  BigRational(std::int64_t v);  // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& v);  // NOLINT(google-explicit-constructor)
  /// Throws DivisionByZero when den == 0.
  BigRational(const BigInt& num, const BigInt& den);

  BigInt num() const;
  BigInt den() const;
  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }
  bool is_integer() const;

  /// "n" for integers, "n/d" otherwise.
  std::string to_string() const;

  BigRational operator-() const;
  friend BigRational operator+(const BigRational& a, const BigRational& b);
  friend BigRational operator-(const BigRational& a, const BigRational& b);
  friend BigRational operator*(const BigRational& a, const BigRational& b);
  /// Throws DivisionByZero when b == 0.
  friend BigRational operator/(const BigRational& a, const BigRational& b);

  friend bool operator==(const BigRational& a, const BigRational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  static BigRational abs(const BigRational& x);
  static BigRational pow(const BigRational& base, unsigned long exp);

 private:
  explicit BigRational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

inline BigRational rational_add(const BigRational& x, const BigRational& y) { return x + y; }
inline BigRational rational_mul(const BigRational& x, const BigRational& y) { return x * y; }
inline BigRational rational_div(const BigRational& x, const BigRational& y) { return x / y; }

std::ostream& operator<<(std::ostream& os, const BigRational& v);

}  // namespace meshsum
