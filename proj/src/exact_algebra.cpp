#include "bergman/exact_algebra.hpp"

#include "bergman/errors.hpp"

#include <cmath>
#include <sstream>

namespace bergman {

RatPoly pochhammer(const Rational& shift, int k) {
  if (k < 0) throw InvalidParams("pochhammer length must be non-negative");
  RatPoly out = RatPoly::constant(Rational(1));
  for (int i = 0; i < k; ++i) out *= RatPoly::linear(Rational(1), shift + Rational(i));
  return out;
}

RatPoly PochhammerForm::expand() const {
  RatPoly out = RatPoly::constant(constant);
  for (const auto& f : factors) out *= pochhammer(f.shift, f.length);
  return out;
}

int PochhammerForm::degree() const {
  int d = 0;
  for (const auto& f : factors) d += f.length;
  return d;
}

std::string PochhammerForm::str() const {
  std::ostringstream os;
  bool first = true;
  if (constant != Rational(1)) {
    os << constant.str();
    first = false;
  }
  for (const auto& f : factors) {
    if (f.length == 0) continue;
    if (!first) os << " * ";
    first = false;
    os << "(s";
    if (f.shift.sign() > 0) os << "+" << f.shift.str();
    else if (f.shift.sign() < 0) os << f.shift.str();
    os << ")";
    if (f.length != 1) os << "_" << f.length;
  }
  if (first) os << "1";
  return os.str();
}

std::string PochhammerForm::json() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) os << ", ";
    os << "{\"shift\": \"" << factors[i].shift.str() << "\", \"length\": " << factors[i].length << "}";
  }
  os << "]";
  return os.str();
}

PochhammerForm chi_poly(const JordanInvariants& inv) {
  PochhammerForm form;
  for (int j = 1; j <= inv.r; ++j) {
    // 1 + (j-1)a/2
    Rational shift = Rational(1) + Rational((j - 1) * inv.a, 2);
    form.factors.push_back({shift, 1 + inv.b + (inv.r - j) * inv.a});
  }
  return form;
}

double selberg_F(const JordanInvariants& inv, double s) {
  if (!(s > -1.0)) throw DomainError("selberg_F requires s > -1");
  const double a2 = inv.a / 2.0;
  const int r = inv.r;
  double log_f = -r * std::log(2.0) - std::lgamma(r + 1.0);
  for (int j = 1; j <= r; ++j) {
    log_f += std::lgamma(inv.b + 1 + (j - 1) * a2) + std::lgamma(s + 1 + (j - 1) * a2) +
             std::lgamma(j * a2 + 1) - std::lgamma(s + inv.b + 2 + (r + j - 2) * a2) -
             std::lgamma(a2 + 1);
  }
  return std::exp(log_f);
}

double selberg_ratio(const JordanInvariants& inv, double s) {
  if (!(s > -1.0)) throw DomainError("selberg_ratio requires s > -1");
  const double a2 = inv.a / 2.0;
  const int r = inv.r;
  double log_ratio = 0.0;
  for (int j = 1; j <= r; ++j) {
    log_ratio += std::lgamma(s + 1 + (j - 1) * a2) + std::lgamma(inv.b + 2 + (r + j - 2) * a2) -
                 std::lgamma(1 + (j - 1) * a2) - std::lgamma(s + inv.b + 2 + (r + j - 2) * a2);
  }
  return std::exp(log_ratio);
}

std::vector<Rational> to_binom_basis(const RatPoly& p) {
  const int deg = p.degree();
  if (deg < 0) return {};
  std::vector<Rational> c(static_cast<std::size_t>(deg + 1));
  RatPoly rest = p;
  for (int d = deg; d >= 0; --d) {
    // C(j+d, d) = (j+1)_d / d!, leading coefficient 1/d!.
    Rational cd = rest.coeff(d) * factorial(static_cast<unsigned>(d));
    c[static_cast<std::size_t>(d)] = cd;
    if (!cd.is_zero()) rest -= pochhammer(Rational(1), d) * (cd / factorial(static_cast<unsigned>(d)));
  }
  return c;
}

std::vector<Rational> to_shifted_pochhammer_basis(const RatPoly& p) {
  if (!p(Rational(-1)).is_zero())
    throw BasisError("polynomial does not vanish at -1: " + p.str("h"));
  const int deg = p.degree();
  if (deg < 1) return {};
  std::vector<Rational> b(static_cast<std::size_t>(deg));
  RatPoly rest = p;
  for (int j = deg; j >= 1; --j) {
    Rational bj = rest.coeff(j);
    b[static_cast<std::size_t>(j - 1)] = bj;
    if (!bj.is_zero()) rest -= pochhammer(Rational(1), j) * bj;
  }
  if (!rest.is_zero()) throw BasisError("shifted Pochhammer expansion left a remainder");
  return b;
}

} // namespace bergman
