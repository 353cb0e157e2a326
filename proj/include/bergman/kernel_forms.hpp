#pragma once

#include "bergman/domain.hpp"
#include "bergman/kernel_expr.hpp"

#include <optional>
#include <span>
#include <vector>

namespace bergman {

/// Closed form of sum_{j>=0} P(j) X^j as sum_d c_d (1-X)^(-(d+1)).
UniExpr sum_poly_series(const RatPoly& poly, const Rational& k = Rational(1));

/// The polynomial j -> ((j+1)/k) chi((j+1)/k).
RatPoly y_series_poly(const DomainSpec& spec, const Rational& k);

/// F(X) = sum_j ((j+1)/k) chi((j+1)/k) X^j in closed form.
UniExpr y_kernel_core(const DomainSpec& spec, const Rational& k);

/// (1/m!) d^{m-1}/dX^{m-1} of a univariate kernel in the squared modulus.
UniExpr inflate(const UniExpr& expr, int m);

/// H_{jm}(lambda) = sum_p ((p+1)/k + 2 + m)_{j-m} lambda^p.
UniExpr h_jm(int j, int m, const Rational& k);

/// b_1..b_{n+2} with h(h-1) chi(h) = sum_j b_j (h+1)_j.
std::vector<Rational> e_kernel_bj(const DomainSpec& spec);

/// The two-variable function Lambda(t1, t2) (without the 1/vol factor); its
/// scale() is k/chi(0).
KernelExpr e_kernel_core(const DomainSpec& spec, const Rational& k);

/// d^{p-1}/dt1^{p-1} d^{q-1}/dt2^{q-1}.
KernelExpr mixed_partial(const KernelExpr& expr, int p, int q);

/// (1/(p! q!)) * mixed_partial(expr, p, q).
KernelExpr inflate(const KernelExpr& expr, int p, int q);

/// Exact normalised volume where it is known in closed form: rank-one
/// domains are the unit ball of m1, of volume 1.
std::optional<double> exact_volume(const DomainSpec& spec);

/// Bergman kernel of Y(q, Omega; k) on the diagonal, built once and
/// evaluated at many points.
class YKernel {
public:
  YKernel(const DomainSpec& spec, const Rational& k, int q);

  const UniExpr& core() const { return core_; }
  /// (1/q!) F^{(q-1)}.
  const UniExpr& inflated() const { return inflated_; }
  /// k / chi(0).
  const Rational& prefactor() const { return prefactor_; }

  /// Kernel from the two invariants ||W||^2 and N(Z,Z). Throws OutsideDomain.
  double from_invariants(double w_norm2, double n_zz, double vol) const;
  double operator()(std::span<const cplx> w, const ElementZ& z, double vol) const;

private:
  DomainSpec spec_;
  Rational k_;
  int q_;
  int genus_;
  Rational prefactor_;
  UniExpr core_;
  UniExpr inflated_;
};

/// Bergman kernel of E(p, q, Omega; k) on the diagonal.
class EKernel {
public:
  EKernel(const DomainSpec& spec, const Rational& k, int p, int q);

  const KernelExpr& core() const { return core_; }
  /// (1/(p! q!)) Lambda^{(p-1, q-1)}.
  const KernelExpr& inflated() const { return inflated_; }

  double from_invariants(double w1_norm2, double w2_norm2, double n_zz, double vol) const;
  double operator()(std::span<const cplx> w1, std::span<const cplx> w2, const ElementZ& z, double vol) const;

private:
  DomainSpec spec_;
  Rational k_;
  int p_, q_;
  int genus_;
  KernelExpr core_;
  KernelExpr inflated_;
};

double eval_y(const DomainSpec& spec, const Rational& k, int q, std::span<const cplx> w, const ElementZ& z,
              std::optional<double> vol);
double eval_e(const DomainSpec& spec, const Rational& k, int p, int q, std::span<const cplx> w1,
              std::span<const cplx> w2, const ElementZ& z, std::optional<double> vol);

} // namespace bergman
