#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace bergman {

/// Exact rational number, always reduced with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class so that the rest of the library
/// never touches GMP directly.
class Rational {
public:
  Rational() = default;
  Rational(long v) : q_(v) {}          // NOLINT(google-explicit-constructor)
  Rational(int v) : q_(v) {}           // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Accepts "a", "a/b", "-a/b" and finite decimals such as "1.25" or "-0.5",
  /// converted exactly. Throws ParseError otherwise.
  static Rational parse(std::string_view text);

  std::string num_str() const { return q_.get_num().get_str(); }
  std::string den_str() const { return q_.get_den().get_str(); }
  bool is_integer() const { return q_.get_den() == 1; }
  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }

  /// "n" for integers, otherwise "n/d".
  std::string str() const;
  double to_double() const { return q_.get_d(); }
  /// Integer value; throws InvalidParams if not an integer or out of range.
  long to_long() const;

  const mpq_class& raw() const { return q_; }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  mpq_class q_{0};
};

Rational factorial(unsigned n);
Rational binomial(long n, long k);
Rational pow(const Rational& base, unsigned e);

} // namespace bergman
