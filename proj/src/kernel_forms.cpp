#include "bergman/kernel_forms.hpp"

#include "bergman/errors.hpp"

#include <cmath>

namespace bergman {

namespace {

// (x)_m as a number.
Rational rising(const Rational& x, int m) {
  Rational out(1);
  for (int i = 0; i < m; ++i) out *= x + Rational(i);
  return out;
}

double norm2(std::span<const cplx> v) {
  double s = 0.0;
  for (const auto& c : v) s += std::norm(c);
  return s;
}

double resolve_volume(const DomainSpec& spec, std::optional<double> vol) {
  if (vol) {
    if (!(*vol > 0.0)) throw InvalidParams("volume must be positive");
    return *vol;
  }
  if (auto v = exact_volume(spec)) return *v;
  throw VolumeUnknown("no volume for " + spec.str() + "; supply one or run a volume estimate");
}

} // namespace

UniExpr sum_poly_series(const RatPoly& poly, const Rational& k) {
  std::vector<KernelTerm> terms;
  const std::vector<Rational> c = to_binom_basis(poly);
  for (std::size_t d = 0; d < c.size(); ++d)
    if (!c[d].is_zero()) terms.push_back({c[d], 0, 0, 0, static_cast<int>(d) + 1});
  return {k, Rational(1), std::move(terms)};
}

RatPoly y_series_poly(const DomainSpec& spec, const Rational& k) {
  if (k.sign() <= 0) throw InvalidParams("k must be positive");
  // s chi(s) at s = (j+1)/k
  RatPoly s_chi = chi_poly(invariants(spec)).expand() * RatPoly::linear(Rational(1), Rational(0));
  const Rational inv_k = Rational(1) / k;
  return s_chi.compose_linear(inv_k, inv_k);
}

UniExpr y_kernel_core(const DomainSpec& spec, const Rational& k) {
  return sum_poly_series(y_series_poly(spec, k), k);
}

UniExpr inflate(const UniExpr& expr, int m) {
  if (m < 1) throw InvalidParams("inflation dimension must be positive");
  UniExpr out = expr;
  for (int i = 1; i < m; ++i) out = out.derivative();
  return out.scaled(Rational(1) / factorial(static_cast<unsigned>(m)));
}

UniExpr h_jm(int j, int m, const Rational& k) {
  if (m < 0 || m > j) throw InvalidParams("h_jm requires 0 <= m <= j");
  const Rational inv_k = Rational(1) / k;
  // ((p+1)/k + 2 + m)_{j-m} as a polynomial in p
  RatPoly poly = pochhammer(Rational(0), j - m).compose_linear(inv_k, inv_k + Rational(2 + m));
  return sum_poly_series(poly, k);
}

std::vector<Rational> e_kernel_bj(const DomainSpec& spec) {
  RatPoly h = RatPoly::linear(Rational(1), Rational(0));
  RatPoly target = h * RatPoly::linear(Rational(1), Rational(-1)) * chi_poly(invariants(spec)).expand();
  return to_shifted_pochhammer_basis(target);
}

KernelExpr e_kernel_core(const DomainSpec& spec, const Rational& k) {
  if (k.sign() <= 0) throw InvalidParams("k must be positive");
  const JordanInvariants inv = invariants(spec);
  const Rational chi0 = chi_poly(inv).expand()(Rational(0));
  const std::vector<Rational> b = e_kernel_bj(spec);

  std::vector<KernelTerm> terms;
  for (int j = 1; j <= static_cast<int>(b.size()); ++j) {
    const Rational& bj = b[static_cast<std::size_t>(j - 1)];
    if (bj.is_zero()) continue;
    for (int m = 0; m <= j; ++m) {
      Rational coef = bj * rising(Rational(-j), m) * rising(Rational(2), m) / factorial(static_cast<unsigned>(m));
      if (coef.is_zero()) continue;
      const UniExpr h = h_jm(j, m, k);
      // t1^m = (1-u)^m
      for (int i = 0; i <= m; ++i) {
        Rational ci = coef * binomial(m, i) * Rational(i % 2 == 0 ? 1 : -1);
        for (const auto& ht : h.terms())
          terms.push_back({ci * ht.c, Rational(i - j), Rational(-1), ht.p, ht.d});
      }
    }
  }
  return {k, k / chi0, std::move(terms)};
}

KernelExpr mixed_partial(const KernelExpr& expr, int p, int q) {
  if (p < 1 || q < 1) throw InvalidParams("mixed_partial requires p, q >= 1");
  KernelExpr out = expr;
  for (int i = 1; i < p; ++i) out = out.d_t1();
  for (int i = 1; i < q; ++i) out = out.d_t2();
  return out;
}

KernelExpr inflate(const KernelExpr& expr, int p, int q) {
  return mixed_partial(expr, p, q)
      .scaled(Rational(1) / (factorial(static_cast<unsigned>(p)) * factorial(static_cast<unsigned>(q))));
}

std::optional<double> exact_volume(const DomainSpec& spec) {
  if (invariants(spec).r == 1) return 1.0;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

YKernel::YKernel(const DomainSpec& spec, const Rational& k, int q)
    : spec_(spec), k_(k), q_(q), genus_(invariants(spec).g) {
  if (q < 1) throw InvalidParams("q must be positive");
  core_ = y_kernel_core(spec, k);
  inflated_ = inflate(core_, q);
  prefactor_ = k / chi_poly(invariants(spec)).expand()(Rational(0));
}

double YKernel::from_invariants(double w_norm2, double n_zz, double vol) const {
  const double k = k_.to_double();
  if (!(n_zz > 0.0) || !(std::pow(w_norm2, k) < n_zz)) throw OutsideDomain("point lies outside Y(q, Omega; k)");
  const double x = w_norm2 / std::pow(n_zz, 1.0 / k);
  return prefactor_.to_double() / vol * inflated_(x) * std::pow(n_zz, -q_ / k - genus_);
}

double YKernel::operator()(std::span<const cplx> w, const ElementZ& z, double vol) const {
  if (static_cast<int>(w.size()) != q_) throw WrongArity("W must have q components");
  if (!(z.spec() == spec_)) throw InvalidParams("Z belongs to a different domain");
  if (!membership(z)) throw OutsideDomain("Z lies outside Omega");
  return from_invariants(norm2(w), norm_diag(z), vol);
}

EKernel::EKernel(const DomainSpec& spec, const Rational& k, int p, int q)
    : spec_(spec), k_(k), p_(p), q_(q), genus_(invariants(spec).g) {
  core_ = e_kernel_core(spec, k);
  inflated_ = inflate(core_, p, q);
}

double EKernel::from_invariants(double w1_norm2, double w2_norm2, double n_zz, double vol) const {
  const double k = k_.to_double();
  if (!(n_zz > 0.0) || !(w1_norm2 + std::pow(w2_norm2, k) < n_zz))
    throw OutsideDomain("point lies outside E(p, q, Omega; k)");
  const double t1 = w1_norm2 / n_zz;
  const double t2 = w2_norm2 / std::pow(n_zz, 1.0 / k);
  return inflated_(t1, t2) / vol * std::pow(n_zz, -p_ - q_ / k - genus_);
}

double EKernel::operator()(std::span<const cplx> w1, std::span<const cplx> w2, const ElementZ& z,
                           double vol) const {
  if (static_cast<int>(w1.size()) != p_ || static_cast<int>(w2.size()) != q_)
    throw WrongArity("W1 must have p components and W2 q components");
  if (!(z.spec() == spec_)) throw InvalidParams("Z belongs to a different domain");
  if (!membership(z)) throw OutsideDomain("Z lies outside Omega");
  return from_invariants(norm2(w1), norm2(w2), norm_diag(z), vol);
}

double eval_y(const DomainSpec& spec, const Rational& k, int q, std::span<const cplx> w, const ElementZ& z,
              std::optional<double> vol) {
  const double v = resolve_volume(spec, vol);
  return YKernel(spec, k, q)(w, z, v);
}

double eval_e(const DomainSpec& spec, const Rational& k, int p, int q, std::span<const cplx> w1,
              std::span<const cplx> w2, const ElementZ& z, std::optional<double> vol) {
  const double v = resolve_volume(spec, vol);
  return EKernel(spec, k, p, q)(w1, w2, z, v);
}

} // namespace bergman
