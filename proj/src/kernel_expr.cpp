#include "bergman/kernel_expr.hpp"

#include "bergman/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

namespace bergman {

namespace {

struct TermKey {
  Rational e1, e0;
  int p, d;
  friend auto operator<=>(const TermKey& a, const TermKey& b) {
    if (auto c = a.e1 <=> b.e1; c != 0) return c;
    if (auto c = a.e0 <=> b.e0; c != 0) return c;
    if (auto c = a.p <=> b.p; c != 0) return c;
    return a.d <=> b.d;
  }
  friend bool operator==(const TermKey&, const TermKey&) = default;
};

TermKey key_of(const KernelTerm& t) { return {t.e1, t.e0, t.p, t.d}; }

double lambda_part(const KernelTerm& t, double lam) {
  double v = t.p == 0 ? 1.0 : std::pow(lam, t.p);
  if (t.d != 0) v *= std::pow(1.0 - lam, -t.d);
  return v;
}

// Sums whose terms cancel beyond this factor are redone in multiprecision.
constexpr double kCancellationLimit = 64.0;
constexpr mp_bitcnt_t kPrecisionBits = 384;

mpf_class mp(double x) { return mpf_class(x, kPrecisionBits); }

mpf_class mp(const Rational& r) {
  mpf_class v(0, kPrecisionBits);
  v = r.raw();
  return v;
}

mpf_class mp_pow_int(const mpf_class& x, long e) {
  mpf_class r(0, kPrecisionBits);
  mpf_pow_ui(r.get_mpf_t(), x.get_mpf_t(), static_cast<unsigned long>(e < 0 ? -e : e));
  if (e < 0) r = mp(1.0) / r;
  return r;
}

// x^e for x > 0 and rational e: Newton on y^den = x^|num| from the double guess.
mpf_class mp_pow(const mpf_class& x, const Rational& e) {
  const mpq_class& q = e.raw();
  const long num = q.get_num().get_si();
  const long den = q.get_den().get_si();
  if (den == 1) return mp_pow_int(x, num);
  const mpf_class target = mp_pow_int(x, num < 0 ? -num : num);
  mpf_class y = mp(std::pow(x.get_d(), static_cast<double>(num < 0 ? -num : num) / static_cast<double>(den)));
  for (int it = 0; it < 5; ++it) {
    const mpf_class ym1 = mp_pow_int(y, den - 1);
    y -= (ym1 * y - target) / (mp(static_cast<double>(den)) * ym1);
  }
  return num < 0 ? mpf_class(mp(1.0) / y) : y;
}

// scale * sum_t c_t u^(e0 + e1/k) lambda^p (1-lambda)^-d with lambda = t2 u^(-1/k).
double mp_sum(const std::vector<KernelTerm>& terms, const Rational& scale, const Rational& k, double t1, double t2) {
  const mpf_class u = mp(1.0) - mp(t1);
  const Rational inv_k = Rational(1) / k;
  const mpf_class lam = t2 == 0.0 ? mp(0.0) : mpf_class(mp(t2) * mp_pow(u, -inv_k));
  const mpf_class one_minus = mp(1.0) - lam;
  std::map<Rational, mpf_class> u_pow;
  mpf_class s = mp(0.0);
  for (const auto& t : terms) {
    const Rational e = t.e0 + t.e1 * inv_k;
    auto it = u_pow.find(e);
    if (it == u_pow.end()) it = u_pow.emplace(e, e.is_zero() ? mp(1.0) : mp_pow(u, e)).first;
    mpf_class v = mp(t.c) * it->second;
    if (t.p != 0) v *= mp_pow_int(lam, t.p);
    if (t.d != 0) v /= mp_pow_int(one_minus, t.d);
    s += v;
  }
  s *= mp(scale);
  return s.get_d();
}

} // namespace

std::vector<KernelTerm> canonicalize(std::vector<KernelTerm> terms) {
  std::map<TermKey, Rational> merged;
  for (auto& t : terms) {
    if (t.p < 0 || t.d < 0) throw InvalidParams("kernel term with negative power");
    merged[key_of(t)] += t.c;
  }
  std::vector<KernelTerm> out;
  out.reserve(merged.size());
  for (auto& [key, c] : merged) {
    if (c.is_zero()) continue;
    out.push_back({c, key.e0, key.e1, key.p, key.d});
  }
  return out;
}

bool is_canonical(const std::vector<KernelTerm>& terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].c.is_zero() || terms[i].p < 0 || terms[i].d < 0) return false;
    if (i > 0 && !(key_of(terms[i - 1]) < key_of(terms[i]))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

UniExpr::UniExpr(Rational k, Rational scale, std::vector<KernelTerm> terms)
    : k_(std::move(k)), scale_(std::move(scale)), terms_(canonicalize(std::move(terms))) {
  for (const auto& t : terms_)
    if (!t.e0.is_zero() || !t.e1.is_zero()) throw InvalidParams("univariate expression with u-exponent");
}

double UniExpr::operator()(double x) const {
  double s = 0.0, s_abs = 0.0;
  for (const auto& t : terms_) {
    const double v = t.c.to_double() * lambda_part(t, x);
    s += v;
    s_abs += std::abs(v);
  }
  if (s_abs > kCancellationLimit * std::abs(s)) return mp_sum(terms_, scale_, k_, 0.0, x);
  return scale_.to_double() * s;
}

UniExpr UniExpr::derivative() const {
  std::vector<KernelTerm> out;
  for (const auto& t : terms_) {
    if (t.p > 0) out.push_back({t.c * Rational(t.p), 0, 0, t.p - 1, t.d});
    if (t.d > 0) out.push_back({t.c * Rational(t.d), 0, 0, t.p, t.d + 1});
  }
  return {k_, scale_, std::move(out)};
}

UniExpr UniExpr::scaled(const Rational& s) const {
  std::vector<KernelTerm> out = terms_;
  for (auto& t : out) t.c *= s;
  return {k_, scale_, std::move(out)};
}

// ---------------------------------------------------------------------------

KernelExpr::KernelExpr(Rational k, Rational scale, std::vector<KernelTerm> terms)
    : k_(std::move(k)), scale_(std::move(scale)), terms_(canonicalize(std::move(terms))) {
  if (k_.sign() <= 0) throw InvalidParams("k must be positive");
}

double KernelExpr::operator()(double t1, double t2) const {
  const double u = 1.0 - t1;
  const double inv_k = 1.0 / k_.to_double();
  const double lam = t2 * std::pow(u, -inv_k);
  const double log_u = std::log(u);
  double s = 0.0, s_abs = 0.0;
  for (const auto& t : terms_) {
    double e = t.e0.to_double() + t.e1.to_double() * inv_k;
    const double v = t.c.to_double() * std::exp(e * log_u) * lambda_part(t, lam);
    s += v;
    s_abs += std::abs(v);
  }
  if (s_abs > kCancellationLimit * std::abs(s)) return mp_sum(terms_, scale_, k_, t1, t2);
  return scale_.to_double() * s;
}

KernelExpr KernelExpr::d_t1() const {
  // du/dt1 = -1, dlambda/dt1 = (lambda/k) u^-1
  const Rational inv_k = Rational(1) / k_;
  std::vector<KernelTerm> out;
  for (const auto& t : terms_) {
    Rational e = t.e0 + t.e1 * inv_k;
    Rational c_same = t.c * (Rational(t.p) * inv_k - e);
    out.push_back({c_same, t.e0 - Rational(1), t.e1, t.p, t.d});
    if (t.d > 0) out.push_back({t.c * Rational(t.d) * inv_k, t.e0 - Rational(1), t.e1, t.p + 1, t.d + 1});
  }
  return {k_, scale_, std::move(out)};
}

KernelExpr KernelExpr::d_t2() const {
  // dlambda/dt2 = u^(-1/k)
  std::vector<KernelTerm> out;
  for (const auto& t : terms_) {
    if (t.p > 0) out.push_back({t.c * Rational(t.p), t.e0, t.e1 - Rational(1), t.p - 1, t.d});
    if (t.d > 0) out.push_back({t.c * Rational(t.d), t.e0, t.e1 - Rational(1), t.p, t.d + 1});
  }
  return {k_, scale_, std::move(out)};
}

KernelExpr KernelExpr::scaled(const Rational& s) const {
  std::vector<KernelTerm> out = terms_;
  for (auto& t : out) t.c *= s;
  return {k_, scale_, std::move(out)};
}

} // namespace bergman
