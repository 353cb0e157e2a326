#pragma once

#include <array>
#include <complex>
#include <random>

namespace bergman {

using cplx = std::complex<double>;

/// Complexified octonion: eight complex coordinates on the basis
/// 1, e1, ..., e7 with e_i e_{i+1} = e_{i+3} (indices mod 7 on 1..7).
///
/// Cayley conjugation is complex linear (it negates e1..e7); complex
/// conjugation acts on the coordinates. The norm form n(a) = a * conj(a) is
/// the complex bilinear sum of squares.
class OctonionC {
public:
  static constexpr int dim = 8;

  OctonionC() { c_.fill(cplx{}); }
  explicit OctonionC(const std::array<cplx, dim>& c) : c_(c) {}
  static OctonionC unit(int i, cplx value = 1.0);

  cplx& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  const cplx& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  const std::array<cplx, dim>& coords() const { return c_; }

  /// Cayley conjugate: a0 - a1 e1 - ... - a7 e7.
  OctonionC cayley_conj() const;
  /// Coordinatewise complex conjugate.
  OctonionC bar() const;
  /// n(a) = sum a_i^2.
  cplx norm() const;
  /// t(a) = a + conj(a) = 2 a0.
  cplx trace() const { return 2.0 * c_[0]; }
  /// Bilinear polarisation of the norm: n(a+b) - n(a) - n(b) = 2 <a,b>.
  friend cplx bilinear(const OctonionC& a, const OctonionC& b);
  /// Hermitian pairing sum a_i conj(b_i).
  friend cplx hermitian(const OctonionC& a, const OctonionC& b);

  OctonionC& operator+=(const OctonionC& o);
  OctonionC& operator-=(const OctonionC& o);
  OctonionC& operator*=(cplx s);
  friend OctonionC operator+(OctonionC a, const OctonionC& b) { return a += b; }
  friend OctonionC operator-(OctonionC a, const OctonionC& b) { return a -= b; }
  friend OctonionC operator*(OctonionC a, cplx s) { return a *= s; }
  friend OctonionC operator*(cplx s, OctonionC a) { return a *= s; }
  friend OctonionC operator*(const OctonionC& a, const OctonionC& b);

  /// Applies the automorphism e_i -> e_{i+shift} (mod 7) of the multiplication table.
  OctonionC cycle_units(int shift) const;

  /// Sum of squared moduli of the coordinates.
  double coord_norm2() const;

  template <class Rng>
  static OctonionC random(Rng& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    OctonionC o;
    for (auto& c : o.c_) c = cplx(u(rng), u(rng));
    return o;
  }

private:
  std::array<cplx, dim> c_;
};

} // namespace bergman
