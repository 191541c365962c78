#include "meshsum/bigint.hpp"

#include <limits>
#include <ostream>

#include "meshsum/error.hpp"

namespace meshsum {

BigInt::BigInt(std::int64_t v) {
  // mpz_class has no portable int64 constructor; go through the string form
  // only when long is narrower than 64 bits.
  if constexpr (sizeof(long) >= sizeof(std::int64_t)) {
    v_ = static_cast<long>(v);
  } else {
    v_.set_str(std::to_string(v), 10);
  }
}

BigInt BigInt::from_string(std::string_view text) {
  std::size_t i = 0;
  if (!text.empty() && text[0] == '-') i = 1;
  if (i == text.size()) throw DomainError("empty integer literal");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (text[k] < '0' || text[k] > '9')
      throw DomainError("malformed integer literal: '" + std::string(text) + "'");
  }
  mpz_class v;
  v.set_str(std::string(text), 10);
  return BigInt(std::move(v));
}

std::string BigInt::to_string() const { return v_.get_str(10); }

bool BigInt::fits_int64() const {
  static const BigInt lo(std::numeric_limits<std::int64_t>::min());
  static const BigInt hi(std::numeric_limits<std::int64_t>::max());
  return *this >= lo && *this <= hi;
}

std::int64_t BigInt::to_int64() const {
  if (!fits_int64()) throw DomainError("integer does not fit in 64 bits: " + to_string());
  if constexpr (sizeof(long) >= sizeof(std::int64_t)) {
    return static_cast<std::int64_t>(v_.get_si());
  } else {
    return std::stoll(to_string());
  }
}

BigInt& BigInt::operator+=(const BigInt& o) {
  v_ += o.v_;
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) {
  v_ -= o.v_;
  return *this;
}

BigInt& BigInt::operator*=(const BigInt& o) {
  v_ *= o.v_;
  return *this;
}

bool BigInt::divide_exact(const BigInt& a, const BigInt& b, BigInt& quotient) {
  if (b.is_zero()) return false;
  if (mpz_divisible_p(a.v_.get_mpz_t(), b.v_.get_mpz_t()) == 0) return false;
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
  quotient = BigInt(std::move(q));
  return true;
}

BigInt BigInt::pow(const BigInt& base, unsigned long exp) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.v_.get_mpz_t(), exp);
  return BigInt(std::move(r));
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

}  // namespace meshsum
