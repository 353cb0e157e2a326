#pragma once

#include "bergman/invariants.hpp"
#include "bergman/rational.hpp"
#include "bergman/ratpoly.hpp"

#include <string>
#include <vector>

namespace bergman {

/// (s + shift)_k = (s+shift)(s+shift+1)...(s+shift+k-1) as a polynomial in s.
RatPoly pochhammer(const Rational& shift, int k);

/// Product of rising factorials c * prod (s + shift_i)_{length_i}.
struct PochhammerForm {
  struct Factor {
    Rational shift;
    int length = 0;
    friend bool operator==(const Factor&, const Factor&) = default;
  };

  Rational constant{1};
  std::vector<Factor> factors;

  RatPoly expand() const;
  int degree() const;
  /// e.g. "(s+1)_11 * (s+4)_5"; length-one factors drop the subscript.
  std::string str() const;
  /// JSON text: [{"shift": "1", "length": 11}, ...]
  std::string json() const;
};

/// The chi polynomial prod_{j=1}^{r} (s + 1 + (j-1)a/2)_{1 + b + (r-j)a}.
PochhammerForm chi_poly(const JordanInvariants& inv);

/// Selberg's closed form F(s) evaluated through log-gamma sums. Requires s > -1.
double selberg_F(const JordanInvariants& inv, double s);

/// F(s)/F(0) from the gamma-ratio product directly.
double selberg_ratio(const JordanInvariants& inv, double s);

/// Coefficients c_d with p(j) = sum_d c_d * C(j+d, d).
std::vector<Rational> to_binom_basis(const RatPoly& p);

/// Coefficients b_1..b_D (returned at indices 0..D-1) with
/// p(h) = sum_j b_j (h+1)_j. Throws BasisError unless p(-1) == 0.
std::vector<Rational> to_shifted_pochhammer_basis(const RatPoly& p);

} // namespace bergman
