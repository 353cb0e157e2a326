#pragma once

#include <Eigen/Dense>

#include <complex>
#include <span>
#include <vector>

namespace bergman {

/// Coefficients (lowest degree first) of Det(T I - A) via Faddeev-LeVerrier.
std::vector<std::complex<double>> faddeev_leverrier(const Eigen::MatrixXcd& a);

/// Monic square root of a monic polynomial of even degree 2r (coefficients
/// lowest first). Solves the top r coefficients by the triangular recurrence
/// and checks the remaining ones; throws NumericalDegeneracy when the
/// input is not a square within `rel_tol`.
std::vector<std::complex<double>> monic_poly_sqrt(std::span<const std::complex<double>> q,
                                                  double rel_tol = 1e-8);

/// e_0 = 1, e_1, ..., e_k of the given values.
std::vector<double> elementary_symmetric(std::span<const double> values);

} // namespace bergman
