#include "meshsum/rational.hpp"

#include <ostream>

#include "meshsum/error.hpp"

namespace meshsum {

BigRational::BigRational(std::int64_t v) : BigRational(BigInt(v)) {}

BigRational::BigRational(const BigInt& v) : q_(v.raw()) {}

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (den.is_zero()) throw DivisionByZero();
  q_ = mpq_class(num.raw(), den.raw());
  q_.canonicalize();
}

BigInt BigRational::num() const { return BigInt(mpz_class(q_.get_num())); }
BigInt BigRational::den() const { return BigInt(mpz_class(q_.get_den())); }

bool BigRational::is_integer() const { return cmp(q_.get_den(), 1) == 0; }

std::string BigRational::to_string() const {
  if (is_integer()) return q_.get_num().get_str(10);
  return q_.get_num().get_str(10) + "/" + q_.get_den().get_str(10);
}

BigRational BigRational::operator-() const { return BigRational(mpq_class(-q_)); }

BigRational operator+(const BigRational& a, const BigRational& b) { return BigRational(mpq_class(a.q_ + b.q_)); }
BigRational operator-(const BigRational& a, const BigRational& b) { return BigRational(mpq_class(a.q_ - b.q_)); }
BigRational operator*(const BigRational& a, const BigRational& b) { return BigRational(mpq_class(a.q_ * b.q_)); }

BigRational operator/(const BigRational& a, const BigRational& b) {
  if (b.is_zero()) throw DivisionByZero();
  return BigRational(mpq_class(a.q_ / b.q_));
}

BigRational BigRational::abs(const BigRational& x) { return BigRational(mpq_class(::abs(x.q_))); }

BigRational BigRational::pow(const BigRational& base, unsigned long exp) {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.q_.get_num_mpz_t(), exp);
  mpz_pow_ui(d.get_mpz_t(), base.q_.get_den_mpz_t(), exp);
  return BigRational(BigInt(std::move(n)), BigInt(std::move(d)));
}

std::ostream& operator<<(std::ostream& os, const BigRational& v) { return os << v.to_string(); }

}  // namespace meshsum
