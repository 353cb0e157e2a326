#pragma once

#include "bergman/octonion.hpp"

#include <array>

namespace bergman {

/// Element of the complexified Albert algebra H_3(O_C), stored as
///
///   [ alpha1     a3        ~a2   ]
///   [ ~a3        alpha2    a1    ]
///   [ a2         ~a1       alpha3]
///
/// where ~ is Cayley conjugation. This parametrisation is Hermitian with
/// respect to Cayley conjugation by construction.
struct AlbertElement {
  std::array<cplx, 3> alpha{};
  std::array<OctonionC, 3> off{};

  using OctMatrix = std::array<std::array<OctonionC, 3>, 3>;

  /// Builds from a full 3x3 octonion matrix; throws InvalidParams unless the
  /// matrix is Hermitian under Cayley conjugation with scalar diagonal.
  static AlbertElement from_matrix(const OctMatrix& m, double tol = 1e-12);
  OctMatrix to_matrix() const;

  /// Complex conjugation of every coordinate.
  AlbertElement bar() const;
  /// Adjoint x# (quadratic, holomorphic in x).
  AlbertElement sharp() const;
  /// Freudenthal determinant (cubic, holomorphic in x).
  cplx det() const;

  AlbertElement& operator*=(cplx s);
};

/// Hermitian pairing: sum alpha_i conj(beta_i) + 2 sum <a_i, b_i>.
cplx albert_inner(const AlbertElement& x, const AlbertElement& y);

} // namespace bergman
