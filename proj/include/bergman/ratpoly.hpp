#pragma once

#include "bergman/rational.hpp"

#include <string>
#include <vector>

namespace bergman {

/// Dense univariate polynomial over Q. Coefficients are stored lowest degree
/// first with trailing zeros trimmed, so the zero polynomial is empty.
class RatPoly {
public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  static RatPoly constant(const Rational& c);
  /// a*x + b
  static RatPoly linear(const Rational& a, const Rational& b);

  /// Degree of the polynomial; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  /// Coefficient of x^i, zero beyond the degree.
  Rational coeff(int i) const;

  Rational operator()(const Rational& x) const;
  double eval(double x) const;

  /// p(a*x + b).
  RatPoly compose_linear(const Rational& a, const Rational& b) const;

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const RatPoly& o);
  RatPoly& operator*=(const Rational& s);

  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(RatPoly a, const RatPoly& b) { return a *= b; }
  friend RatPoly operator*(RatPoly a, const Rational& s) { return a *= s; }
  friend bool operator==(const RatPoly&, const RatPoly&) = default;

  /// Human-readable form in the variable `var`, highest degree first.
  std::string str(const std::string& var = "s") const;

private:
  void trim();
  std::vector<Rational> c_;
};

/// Exact Horner evaluation.
inline Rational poly_eval(const RatPoly& p, const Rational& x) { return p(x); }

} // namespace bergman
