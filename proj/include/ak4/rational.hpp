#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>
#include <compare>
#include <concepts>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "ak4/errors.hpp"

namespace ak4 {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar: arbitrary-precision numerator/denominator kept in
/// lowest terms with positive denominator. Every verdict downstream (rank,
/// signature, positivity) is a discrete decision, so no floating point.
///
/// boost::multiprecision::cpp_rational cannot be used as an Eigen scalar with
/// this Boost release (its converting constructor probes Eigen expression
/// types and hits a hard error in is_byte_container), hence this thin wrapper
/// over cpp_int with constrained constructors.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  template <std::integral T>
  Rational(T value) : num_(value), den_(1) {}
  Rational(BigInt numerator) : num_(std::move(numerator)), den_(1) {}
  Rational(BigInt numerator, BigInt denominator)
      : num_(std::move(numerator)), den_(std::move(denominator)) {
    normalize();
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational operator-() const {
    Rational r(*this);
    r.num_ = -r.num_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const BigInt lhs = a.num_ * b.den_;
    const BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend Rational abs(const Rational& a) { return a.num_ < 0 ? -a : a; }

  /// Serialized as "p" or "p/q", the exact wire format of reports.
  friend std::ostream& operator<<(std::ostream& os, const Rational& q) {
    os << q.num_;
    if (q.den_ != 1) os << '/' << q.den_;
    return os;
  }

  std::string str() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
  }

  /// Parses "p" or "p/q" with optional sign; throws ParseError otherwise.
  static Rational from_string(const std::string& text) {
    const auto slash = text.find('/');
    try {
      if (slash == std::string::npos) return Rational(BigInt(check_integer(text)));
      return Rational(BigInt(check_integer(text.substr(0, slash))),
                      BigInt(check_integer(text.substr(slash + 1))));
    } catch (const std::domain_error&) {
      throw ParseError("zero denominator in rational '" + text + "'");
    }
  }

private:
  static std::string check_integer(const std::string& s) {
    bool ok = !s.empty();
    for (std::size_t i = 0; ok && i < s.size(); ++i) {
      const char c = s[i];
      ok = (i == 0 && (c == '+' || c == '-') && s.size() > 1) || (c >= '0' && c <= '9');
    }
    if (!ok) throw ParseError("malformed rational '" + s + "'");
    return s[0] == '+' ? s.substr(1) : s;  // cpp_int rejects a leading '+'
  }

  void normalize() {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  BigInt num_;
  BigInt den_;
};

/// Exact square root, when the argument is a perfect square of a rational.
inline std::optional<Rational> exact_sqrt(const Rational& q) {
  if (q.sign() < 0) return std::nullopt;
  const BigInt rn = boost::multiprecision::sqrt(q.num());
  const BigInt rd = boost::multiprecision::sqrt(q.den());
  if (rn * rn != q.num() || rd * rd != q.den()) return std::nullopt;
  return Rational(rn, rd);
}

}  // namespace ak4

namespace Eigen {

template <>
struct NumTraits<ak4::Rational> : GenericNumTraits<ak4::Rational> {
  typedef ak4::Rational Real;
  typedef ak4::Rational NonInteger;
  typedef ak4::Rational Nested;
  typedef ak4::Rational Literal;
  static inline Real epsilon() { return ak4::Rational(0); }
  static inline Real dummy_precision() { return ak4::Rational(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen
