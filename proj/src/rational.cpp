#include "stringy/rational.hpp"

#include <cctype>
#include <ostream>

#include "stringy/errors.hpp"

namespace stringy {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat::Rat(std::int64_t value) : value_(0) {
  mpz_class z;
  z = static_cast<long>(value);
  value_ = mpq_class(z);
}

Rat::Rat(const Integer& value) : value_(value) {}

Rat::Rat(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rat::Rat(std::int64_t numerator, std::int64_t denominator)
    : Rat(Integer(static_cast<long>(numerator)),
          Integer(static_cast<long>(denominator))) {}

Rat::Rat(mpq_class value) : value_(std::move(value)) {}

Rat Rat::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed rational literal '" + std::string(text) + "'");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) {
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  if (negative) n = -n;
  return Rat(n, d);
}

Rat Rat::normalized() const {
  mpq_class copy = value_;
  copy.canonicalize();
  return Rat(std::move(copy));
}

Rat Rat::pow(long exponent) const {
  if (exponent < 0) {
    if (is_zero()) throw DomainError("zero raised to a negative power");
    return Rat(1) / pow(-exponent);
  }
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rat(n, d);
}

Rat Rat::abs() const { return sign() < 0 ? -*this : *this; }

Rat Rat::operator-() const { return Rat(mpq_class(-value_)); }

Rat& Rat::operator+=(const Rat& other) {
  value_ += other.value_;
  return *this;
}

Rat& Rat::operator-=(const Rat& other) {
  value_ -= other.value_;
  return *this;
}

Rat& Rat::operator*=(const Rat& other) {
  value_ *= other.value_;
  return *this;
}

Rat& Rat::operator/=(const Rat& other) {
  if (other.is_zero()) throw DomainError("division by zero");
  value_ /= other.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

bool exact_root(const Rat& value, unsigned long k, Rat& root) {
  if (k == 0) throw DomainError("zeroth root");
  if (k == 1) {
    root = value;
    return true;
  }
  if (value.sign() < 0 && k % 2 == 0) return false;
  Integer n = value.numerator();
  Integer d = value.denominator();
  Integer rn, rd;
  if (mpz_root(rn.get_mpz_t(), n.get_mpz_t(), k) == 0) return false;
  if (mpz_root(rd.get_mpz_t(), d.get_mpz_t(), k) == 0) return false;
  root = Rat(rn, rd);
  return true;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

}  // namespace stringy
