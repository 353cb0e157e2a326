#include "bergman/albert.hpp"
#include "bergman/errors.hpp"
#include "bergman/octonion.hpp"

#include <Eigen/Dense>
#include <doctest.h>

#include <random>

using namespace bergman;

namespace {

double oct_dist(const OctonionC& a, const OctonionC& b) { return (a - b).coord_norm2(); }

double scale2(const OctonionC& a, const OctonionC& b) {
  return std::max({a.coord_norm2(), b.coord_norm2(), 1e-300});
}

bool close(const OctonionC& a, const OctonionC& b, double tol = 1e-12) {
  return std::sqrt(oct_dist(a, b) / scale2(a, b)) < tol;
}

bool close(cplx a, cplx b, double tol = 1e-12) {
  const double s = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / s < tol;
}

OctonionC from_complex(cplx z) {
  OctonionC o;
  o[0] = z.real();
  o[1] = z.imag();
  return o;
}

// Hermitian complex 3x3 matrix viewed inside H_3(O) through C = R + R e1.
AlbertElement embed(const Eigen::Matrix3cd& h) {
  AlbertElement x;
  for (int i = 0; i < 3; ++i) x.alpha[static_cast<std::size_t>(i)] = h(i, i).real();
  x.off[0] = from_complex(h(1, 2));
  x.off[1] = from_complex(h(2, 0));
  x.off[2] = from_complex(h(0, 1));
  return x;
}

AlbertElement random_albert(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  AlbertElement x;
  for (auto& a : x.alpha) a = cplx(u(rng), u(rng));
  for (auto& o : x.off) o = OctonionC::random(rng);
  return x;
}

} // namespace

TEST_CASE("octonion unit table") {
  // e1 e2 = e4 and its cyclic shifts
  for (int i = 1; i <= 7; ++i) {
    const int j = i % 7 + 1;
    const int k = (i + 2) % 7 + 1;
    CHECK(close(OctonionC::unit(i) * OctonionC::unit(j), OctonionC::unit(k)));
    CHECK(close(OctonionC::unit(j) * OctonionC::unit(i), OctonionC::unit(k, -1.0)));
    CHECK(close(OctonionC::unit(i) * OctonionC::unit(i), OctonionC::unit(0, -1.0)));
  }
  CHECK(OctonionC::unit(3).trace() == cplx(0.0));
  CHECK(OctonionC::unit(0, 2.0).trace() == cplx(4.0));
}

TEST_CASE("octonion laws on random pairs") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 1000; ++t) {
    const OctonionC x = OctonionC::random(rng);
    const OctonionC y = OctonionC::random(rng);
    CHECK(close(x * (x * y), (x * x) * y));
    CHECK(close((y * x) * x, y * (x * x)));
    CHECK(close((x * y).cayley_conj(), y.cayley_conj() * x.cayley_conj()));
    CHECK(close((x * y).norm(), x.norm() * y.norm()));
    CHECK(close(x * x.cayley_conj(), OctonionC::unit(0, x.norm())));
    CHECK(close(bilinear(x, x), x.norm()));
    for (int s = 1; s < 7; ++s) CHECK(close((x * y).cycle_units(s), x.cycle_units(s) * y.cycle_units(s)));
  }
}

TEST_CASE("albert element matrix round trip and validation") {
  std::mt19937_64 rng(5);
  const AlbertElement x = random_albert(rng);
  const AlbertElement y = AlbertElement::from_matrix(x.to_matrix());
  for (int i = 0; i < 3; ++i) {
    CHECK(x.alpha[static_cast<std::size_t>(i)] == y.alpha[static_cast<std::size_t>(i)]);
    CHECK(close(x.off[static_cast<std::size_t>(i)], y.off[static_cast<std::size_t>(i)]));
  }
  auto m = x.to_matrix();
  m[0][1] = m[0][1] + OctonionC::unit(2);
  CHECK_THROWS_AS(AlbertElement::from_matrix(m), InvalidParams);
  auto d = x.to_matrix();
  d[1][1] = d[1][1] + OctonionC::unit(5);
  CHECK_THROWS_AS(AlbertElement::from_matrix(d), InvalidParams);
}

TEST_CASE("albert cubic identities") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 200; ++t) {
    const AlbertElement x = random_albert(rng);
    const cplx det = x.det();
    CHECK(close(x.sharp().det(), det * det, 1e-10));
    const AlbertElement ss = x.sharp().sharp();
    for (int i = 0; i < 3; ++i) {
      CHECK(close(ss.alpha[static_cast<std::size_t>(i)], det * x.alpha[static_cast<std::size_t>(i)], 1e-10));
      CHECK(close(ss.off[static_cast<std::size_t>(i)], x.off[static_cast<std::size_t>(i)] * det, 1e-10));
    }
    // det is cubic and sharp quadratic
    AlbertElement y = x;
    y *= cplx(0.0, 2.0);
    CHECK(close(y.det(), cplx(0.0, 2.0) * cplx(0.0, 2.0) * cplx(0.0, 2.0) * det, 1e-12));
  }
}

TEST_CASE("albert determinant matches complex Hermitian embedding") {
  std::mt19937_64 rng(21);
  std::normal_distribution<double> g;
  for (int t = 0; t < 200; ++t) {
    Eigen::Matrix3cd a;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) a(i, j) = cplx(g(rng), g(rng));
    const Eigen::Matrix3cd h = (a + a.adjoint()) / 2.0;
    const AlbertElement x = embed(h);
    CHECK(close(x.det(), h.determinant(), 1e-10));

    const Eigen::Vector3d ev = Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd>(h).eigenvalues();
    const double e2 = ev(0) * ev(1) + ev(0) * ev(2) + ev(1) * ev(2);
    const AlbertElement s = x.sharp();
    CHECK(close(s.alpha[0] + s.alpha[1] + s.alpha[2], e2, 1e-10));
    // (x|x) on this embedding is the Frobenius norm
    CHECK(close(albert_inner(x, x), h.squaredNorm(), 1e-12));
  }
}

TEST_CASE("albert diagonal elements") {
  AlbertElement x;
  x.alpha = {0.9, 0.5, 0.1};
  CHECK(close(x.det(), 0.045));
  const AlbertElement s = x.sharp();
  CHECK(close(s.alpha[0], 0.05));
  CHECK(close(s.alpha[1], 0.09));
  CHECK(close(s.alpha[2], 0.45));
}
