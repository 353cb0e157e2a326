#include "bergman/albert.hpp"

#include "bergman/errors.hpp"

#include <cmath>

namespace bergman {

namespace {

double oct_dist(const OctonionC& a, const OctonionC& b) { return std::sqrt((a - b).coord_norm2()); }

} // namespace

AlbertElement AlbertElement::from_matrix(const OctMatrix& m, double tol) {
  for (int i = 0; i < 3; ++i) {
    const OctonionC& d = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    for (int k = 1; k < OctonionC::dim; ++k)
      if (std::abs(d[k]) > tol) throw InvalidParams("Albert element diagonal must be scalar");
    for (int j = i + 1; j < 3; ++j) {
      const auto& upper = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      const auto& lower = m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      if (oct_dist(lower, upper.cayley_conj()) > tol)
        throw InvalidParams("Albert element is not Hermitian under Cayley conjugation");
    }
  }
  AlbertElement x;
  for (std::size_t i = 0; i < 3; ++i) x.alpha[i] = m[i][i][0];
  x.off[0] = m[1][2];
  x.off[1] = m[2][0];
  x.off[2] = m[0][1];
  return x;
}

AlbertElement::OctMatrix AlbertElement::to_matrix() const {
  OctMatrix m{};
  for (std::size_t i = 0; i < 3; ++i) m[i][i] = OctonionC::unit(0, alpha[i]);
  m[1][2] = off[0];
  m[2][1] = off[0].cayley_conj();
  m[2][0] = off[1];
  m[0][2] = off[1].cayley_conj();
  m[0][1] = off[2];
  m[1][0] = off[2].cayley_conj();
  return m;
}

AlbertElement AlbertElement::bar() const {
  AlbertElement x;
  for (std::size_t i = 0; i < 3; ++i) {
    x.alpha[i] = std::conj(alpha[i]);
    x.off[i] = off[i].bar();
  }
  return x;
}

AlbertElement AlbertElement::sharp() const {
  const auto& [a1, a2, a3] = off;
  const auto& [x1, x2, x3] = alpha;
  AlbertElement s;
  s.alpha[0] = x2 * x3 - a1.norm();
  s.alpha[1] = x3 * x1 - a2.norm();
  s.alpha[2] = x1 * x2 - a3.norm();
  s.off[0] = (a2 * a3).cayley_conj() - x1 * a1;
  s.off[1] = (a3 * a1).cayley_conj() - x2 * a2;
  s.off[2] = (a1 * a2).cayley_conj() - x3 * a3;
  return s;
}

cplx AlbertElement::det() const {
  const auto& [a1, a2, a3] = off;
  const auto& [x1, x2, x3] = alpha;
  return x1 * x2 * x3 - x1 * a1.norm() - x2 * a2.norm() - x3 * a3.norm() + ((a1 * a2) * a3).trace();
}

AlbertElement& AlbertElement::operator*=(cplx s) {
  for (auto& a : alpha) a *= s;
  for (auto& o : off) o *= s;
  return *this;
}

cplx albert_inner(const AlbertElement& x, const AlbertElement& y) {
  cplx s{};
  for (std::size_t i = 0; i < 3; ++i) s += x.alpha[i] * std::conj(y.alpha[i]);
  for (std::size_t i = 0; i < 3; ++i) s += 2.0 * hermitian(x.off[i], y.off[i]);
  return s;
}

} // namespace bergman
