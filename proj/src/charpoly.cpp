#include "bergman/charpoly.hpp"

#include "bergman/errors.hpp"

#include <algorithm>
#include <cmath>

namespace bergman {

using cplx = std::complex<double>;

std::vector<cplx> faddeev_leverrier(const Eigen::MatrixXcd& a) {
  const Eigen::Index n = a.rows();
  std::vector<cplx> c(static_cast<std::size_t>(n + 1));
  c[static_cast<std::size_t>(n)] = 1.0;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    m = a * m + c[static_cast<std::size_t>(n - k + 1)] * id;
    c[static_cast<std::size_t>(n - k)] = -(a * m).trace() / static_cast<double>(k);
  }
  return c;
}

std::vector<cplx> monic_poly_sqrt(std::span<const cplx> q, double rel_tol) {
  const int deg = static_cast<int>(q.size()) - 1;
  if (deg < 0 || deg % 2 != 0) throw NumericalDegeneracy("square root needs an even-degree polynomial");
  const int r = deg / 2;
  // hi[k] = coefficient of T^{deg-k} in q, s[k] = coefficient of T^{r-k} in the root.
  auto hi = [&](int k) { return q[static_cast<std::size_t>(deg - k)]; };
  std::vector<cplx> s(static_cast<std::size_t>(r + 1));
  s[0] = 1.0;
  for (int k = 1; k <= r; ++k) {
    cplx acc = hi(k);
    for (int i = 1; i < k; ++i) acc -= s[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(k - i)];
    s[static_cast<std::size_t>(k)] = acc / 2.0;
  }
  double scale = 1.0;
  for (const auto& v : q) scale = std::max(scale, std::abs(v));
  for (int k = r + 1; k <= deg; ++k) {
    cplx acc{};
    for (int i = k - r; i <= r; ++i) acc += s[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(k - i)];
    if (std::abs(acc - hi(k)) > rel_tol * scale)
      throw NumericalDegeneracy("characteristic polynomial is not a perfect square");
  }
  std::vector<cplx> out(static_cast<std::size_t>(r + 1));
  for (int k = 0; k <= r; ++k) out[static_cast<std::size_t>(r - k)] = s[static_cast<std::size_t>(k)];
  return out;
}

std::vector<double> elementary_symmetric(std::span<const double> values) {
  std::vector<double> e(values.size() + 1, 0.0);
  e[0] = 1.0;
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t k = i + 1; k >= 1; --k) e[k] += e[k - 1] * values[i];
  return e;
}

} // namespace bergman
