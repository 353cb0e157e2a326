#include "bergman/verify.hpp"

#include "bergman/errors.hpp"
#include "bergman/kernel_forms.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace bergman {

namespace {

using cd = std::complex<double>;

// Product of rising factorials at s, factor by factor.
Rational eval_form(const PochhammerForm& f, const Rational& s) {
  Rational out = f.constant;
  for (const auto& fac : f.factors)
    for (int i = 0; i < fac.length; ++i) out *= s + fac.shift + Rational(i);
  return out;
}

double log_eval_form(const PochhammerForm& f, double s) {
  double out = std::log(f.constant.to_double());
  for (const auto& fac : f.factors) {
    const double base = s + fac.shift.to_double();
    for (int i = 0; i < fac.length; ++i) out += std::log(base + i);
  }
  return out;
}

// (n!/pi^n) * product of coordinate weights: alpha^n in free coordinates.
double z_measure(const DomainSpec& spec) {
  const int n = invariants(spec).n;
  return std::exp(std::lgamma(n + 1.0) - n * std::log(std::numbers::pi)) * m1_jacobian(spec);
}

// Measure of one W block of q complex coordinates: (q!/pi^q) Lebesgue.
double w_measure(int q) { return std::exp(std::lgamma(q + 1.0) - q * std::log(std::numbers::pi)); }

double box_area(int complex_dim) { return std::pow(4.0, complex_dim); }

cd sample_unit_square(Rng& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double re = u(rng);
  const double im = u(rng);
  return {re, im};
}

double resolve_vol(const DomainSpec& spec, std::optional<double> vol) {
  if (vol) {
    if (!(*vol > 0.0)) throw InvalidParams("volume must be positive");
    return *vol;
  }
  if (auto v = exact_volume(spec)) return *v;
  throw VolumeUnknown("no volume for " + spec.str() + "; supply one or run a volume estimate");
}

VerifyReport stochastic_report(std::string quantity, const MeanAndError& m, double scale, double reference,
                               const McSums& sums, const McRun& run, double tol) {
  VerifyReport r;
  r.quantity = std::move(quantity);
  r.stochastic = true;
  r.estimate = m.mean.real() * scale;
  r.std_error = m.std_error * scale;
  r.reference = reference;
  r.tolerance = tol;
  r.samples = sums.total;
  r.seed = run.seed;
  r.acceptance_ratio = sums.total ? static_cast<double>(sums.accepted) / static_cast<double>(sums.total) : 0.0;
  if (r.acceptance_ratio < kLowAcceptance) r.warnings.emplace_back("LowAcceptance");
  if (std::abs(m.mean.imag()) * scale > 3.0 * r.std_error + 1e-12) r.warnings.emplace_back("imaginary part above noise");
  r.finalize();
  return r;
}

std::string index_str(const std::vector<int>& idx) {
  std::string s = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
  return s + ")";
}

cd ipow(cd x, int e) {
  cd out = 1.0;
  for (int i = 0; i < e; ++i) out *= x;
  return out;
}

void check_k(const Rational& k) {
  if (k.sign() <= 0) throw InvalidParams("k must be positive");
}

} // namespace

Rational chi_value(const DomainSpec& spec, const Rational& s) { return eval_form(chi_poly(invariants(spec)), s); }

// ---------------------------------------------------------------------------

McEstimate mc_volume(const DomainSpec& spec, const McRun& run) {
  if (run.samples < 1000) throw InvalidParams("mc_volume needs at least 1000 samples");
  const McSums sums = run_mc(run, [&](Rng& rng) -> std::optional<cd> {
    ElementZ z = sample_box(spec, rng);
    if (!membership(z)) return std::nullopt;
    return cd(1.0);
  });
  const MeanAndError m = mean_over_all(sums);
  const double scale = z_measure(spec) * box_area(invariants(spec).n);
  McEstimate e;
  e.value = m.mean.real() * scale;
  e.std_error = m.std_error * scale;
  e.samples = sums.total;
  e.acceptance_ratio = static_cast<double>(sums.accepted) / static_cast<double>(sums.total);
  e.seed = run.seed;
  return e;
}

VerifyReport mc_norm_moment(const DomainSpec& spec, const Rational& s, const McRun& run, double tol) {
  if (s <= Rational(-1)) throw InvalidParams("moment exponent must exceed -1");
  const double sd = s.to_double();
  const McSums sums = run_mc(run, [&](Rng& rng) -> std::optional<cd> {
    ElementZ z = sample_box(spec, rng);
    if (!membership(z)) return std::nullopt;
    return cd(std::pow(norm_diag(z), sd));
  });
  const Rational ref = chi_value(spec, Rational(0)) / chi_value(spec, s);
  return stochastic_report("moment " + spec.str() + " s=" + s.str(), mean_over_accepted(sums), 1.0,
                           ref.to_double(), sums, run, tol);
}

Rational coeff_y_exact(const DomainSpec& spec, const Rational& k, int j) {
  check_k(k);
  if (j < 0) throw InvalidParams("coefficient index must be non-negative");
  const Rational h = Rational(j + 1) / k;
  return Rational(j + 1) * chi_value(spec, h) / chi_value(spec, Rational(0));
}

double log_coeff_e_exact(const DomainSpec& spec, const Rational& k, int j1, int j2) {
  check_k(k);
  if (j1 < 0 || j2 < 0) throw InvalidParams("coefficient indices must be non-negative");
  const PochhammerForm chi = chi_poly(invariants(spec));
  const Rational s = Rational(j2 + 1) / k;
  const Rational h = Rational(j1 + 1) + s;
  const double log_chi_h = std::log(eval_form(chi, h).to_double());
  const double log_chi0 = std::log(eval_form(chi, Rational(0)).to_double());
  const double hd = h.to_double();
  return std::log(k.to_double()) - log_chi0 + std::lgamma(hd + 1.0) + log_chi_h - std::lgamma(j1 + 1.0) -
         std::lgamma(s.to_double());
}

double coeff_e_exact(const DomainSpec& spec, const Rational& k, int j1, int j2) {
  return std::exp(log_coeff_e_exact(spec, k, j1, j2));
}

VerifyReport coeff_mc(const DomainSpec& spec, const Rational& k, Family family, const std::vector<int>& index,
                      const McRun& run, std::optional<double> vol, double tol) {
  check_k(k);
  const double v = resolve_vol(spec, vol);
  const double kd = k.to_double();
  const int n = invariants(spec).n;
  for (int j : index)
    if (j < 0) throw InvalidParams("coefficient indices must be non-negative");

  if (family == Family::Y) {
    if (index.size() != 1) throw WrongArity("Y coefficients take one index");
    const int j = index[0];
    const McSums sums = run_mc(run, [&](Rng& rng) -> std::optional<cd> {
      const cd w = sample_unit_square(rng);
      ElementZ z = sample_box(spec, rng);
      if (!membership(z)) return std::nullopt;
      const double nz = norm_diag(z);
      const double w2 = std::norm(w);
      if (!(std::pow(w2, kd) < nz)) return std::nullopt;
      return cd(std::pow(w2, j));
    });
    const double scale = w_measure(1) * box_area(1) * z_measure(spec) * box_area(n);
    const double ref = v / coeff_y_exact(spec, k, j).to_double();
    return stochastic_report("coeff Y " + spec.str() + " k=" + k.str() + " j=" + index_str(index), mean_over_all(sums),
                             scale, ref, sums, run, tol);
  }

  if (index.size() != 2) throw WrongArity("E coefficients take two indices");
  const int j1 = index[0];
  const int j2 = index[1];
  const McSums sums = run_mc(run, [&](Rng& rng) -> std::optional<cd> {
    const cd w1 = sample_unit_square(rng);
    const cd w2 = sample_unit_square(rng);
    ElementZ z = sample_box(spec, rng);
    if (!membership(z)) return std::nullopt;
    const double nz = norm_diag(z);
    const double a = std::norm(w1);
    const double b = std::norm(w2);
    if (!(a + std::pow(b, kd) < nz)) return std::nullopt;
    return cd(std::pow(a, j1) * std::pow(b, j2));
  });
  const double scale = w_measure(1) * w_measure(1) * box_area(2) * z_measure(spec) * box_area(n);
  const double ref = v / coeff_e_exact(spec, k, j1, j2);
  return stochastic_report("coeff E " + spec.str() + " k=" + k.str() + " j=" + index_str(index), mean_over_all(sums),
                           scale, ref, sums, run, tol);
}

// ---------------------------------------------------------------------------

SeriesValue series_kernel_y(const DomainSpec& spec, const Rational& k, std::complex<double> w, int truncate,
                            double vol) {
  check_k(k);
  if (truncate < 0) throw InvalidParams("truncation must be non-negative");
  const double x = std::norm(w);
  if (!(std::pow(x, k.to_double()) < 1.0)) throw OutsideDomain("|W|^(2k) must be below 1");
  SeriesValue out;
  double prev = 0.0;
  double last = 0.0;
  double xp = 1.0;
  for (int j = 0; j <= truncate; ++j) {
    const double term = coeff_y_exact(spec, k, j).to_double() * xp;
    out.value += term;
    prev = last;
    last = term;
    xp *= x;
  }
  out.terms = truncate + 1;
  if (prev > 0.0) {
    const double rho = last / prev;
    out.tail = rho < 1.0 ? last * rho / (1.0 - rho) : std::numeric_limits<double>::infinity();
  }
  out.value /= vol;
  out.tail /= vol;
  return out;
}

SeriesValue series_kernel_e(const DomainSpec& spec, const Rational& k, std::complex<double> w1,
                            std::complex<double> w2, int truncate, double vol) {
  check_k(k);
  if (truncate < 1) throw InvalidParams("truncation must be positive");
  const double t1 = std::norm(w1);
  const double t2 = std::norm(w2);
  if (!(t1 + std::pow(t2, k.to_double()) < 1.0)) throw OutsideDomain("|W1|^2 + |W2|^(2k) must be below 1");

  const JordanInvariants inv = invariants(spec);
  const PochhammerForm chi = chi_poly(inv);
  const double kd = k.to_double();
  const double log_pref = std::log(kd) - log_eval_form(chi, 0.0);
  const double lt1 = t1 > 0.0 ? std::log(t1) : -INFINITY;
  const double lt2 = t2 > 0.0 ? std::log(t2) : -INFINITY;

  auto term = [&](int j1, int j2) {
    if ((j1 > 0 && t1 == 0.0) || (j2 > 0 && t2 == 0.0)) return 0.0;
    const double s = (j2 + 1) / kd;
    const double h = j1 + 1 + s;
    double lg = log_pref + std::lgamma(h + 1.0) + log_eval_form(chi, h) - std::lgamma(j1 + 1.0) - std::lgamma(s);
    if (j1 > 0) lg += j1 * lt1;
    if (j2 > 0) lg += j2 * lt2;
    return std::exp(lg);
  };

  const int J = truncate;
  std::vector<double> rows(static_cast<std::size_t>(J + 1), 0.0);
  double edge1 = 0.0, before1 = 0.0, edge2 = 0.0, before2 = 0.0;
  for (int j1 = 0; j1 <= J; ++j1) {
    for (int j2 = 0; j2 <= J; ++j2) {
      const double t = term(j1, j2);
      rows[static_cast<std::size_t>(j1)] += t;
      if (j1 == J) edge1 += t;
      if (j1 == J - 1) before1 += t;
      if (j2 == J) edge2 += t;
      if (j2 == J - 1) before2 += t;
    }
  }
  SeriesValue out;
  for (double r : rows) out.value += r; // smallest rows last would be nicer, but terms are positive
  out.terms = (J + 1) * (J + 1);
  auto tail_of = [](double edge, double before) {
    if (edge == 0.0) return 0.0;
    const double rho = before > 0.0 ? edge / before : 1.0;
    return rho < 1.0 ? edge * rho / (1.0 - rho) : std::numeric_limits<double>::infinity();
  };
  out.tail = tail_of(edge1, before1) + tail_of(edge2, before2);
  out.value /= vol;
  out.tail /= vol;
  return out;
}

std::vector<VerifyReport> compare_series(const DomainSpec& spec, const Rational& k, Family family, int points,
                                         std::uint64_t seed, int truncate, double tol) {
  check_k(k);
  if (points < 1) throw InvalidParams("need at least one point");
  Rng rng(seed);
  std::uniform_real_distribution<double> level(0.05, 0.5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const double kd = k.to_double();
  std::vector<VerifyReport> out;

  if (family == Family::Y) {
    const YKernel ker(spec, k, 1);
    for (int i = 0; i < points; ++i) {
      const double s = level(rng); // |W|^(2k)
      const double w2 = std::pow(s, 1.0 / kd);
      const cd w = std::polar(std::sqrt(w2), angle(rng));
      const double closed = ker.from_invariants(w2, 1.0, 1.0);
      const SeriesValue ser = series_kernel_y(spec, k, w, truncate);
      VerifyReport r = deterministic_report("series Y " + spec.str() + " k=" + k.str() + " |W|^2=" + std::to_string(w2),
                                            closed, ser.value, tol);
      if (ser.tail > tol * ser.value) r.warnings.emplace_back("series tail above tolerance");
      out.push_back(std::move(r));
    }
    return out;
  }

  const EKernel ker(spec, k, 1, 1);
  for (int i = 0; i < points; ++i) {
    const double s = level(rng); // t1 + t2^k
    const double f = unit(rng);
    const double t1 = f * s;
    const double t2 = std::pow((1.0 - f) * s, 1.0 / kd);
    const cd w1 = std::polar(std::sqrt(t1), angle(rng));
    const cd w2 = std::polar(std::sqrt(t2), angle(rng));
    const double closed = ker.from_invariants(t1, t2, 1.0, 1.0);
    const SeriesValue ser = series_kernel_e(spec, k, w1, w2, truncate);
    VerifyReport r = deterministic_report("series E " + spec.str() + " k=" + k.str() + " t=(" + std::to_string(t1) +
                                              "," + std::to_string(t2) + ")",
                                          closed, ser.value, tol);
    if (ser.tail > tol * ser.value) r.warnings.emplace_back("series tail above tolerance");
    out.push_back(std::move(r));
  }
  return out;
}

// ---------------------------------------------------------------------------

VerifyReport reproducing_check(const DomainSpec& spec, const Rational& k, Family family,
                               const std::vector<int>& exponents, const McRun& run,
                               std::vector<std::complex<double>> center, std::optional<double> vol, double tol) {
  check_k(k);
  const double v = resolve_vol(spec, vol);
  const double kd = k.to_double();
  const int n = invariants(spec).n;
  const int w_count = family == Family::Y ? 1 : 2;
  if (static_cast<int>(exponents.size()) != w_count + 1)
    throw WrongArity(family == Family::Y ? "Y monomials take two exponents (W, z1)"
                                         : "E monomials take three exponents (W1, W2, z1)");
  for (int e : exponents)
    if (e < 0) throw InvalidParams("monomial exponents must be non-negative");
  if (center.empty()) center.assign(static_cast<std::size_t>(w_count), cd(0.0));
  if (static_cast<int>(center.size()) != w_count) throw WrongArity("centre needs one value per W variable");

  // Kernel coefficients |a_j|^2 up to a truncation that is exact at the origin.
  const bool at_origin = std::all_of(center.begin(), center.end(), [](cd c) { return c == cd(0.0); });
  const int J = at_origin ? 0 : 200;
  std::vector<double> ay;
  std::vector<std::vector<double>> ae;
  if (family == Family::Y) {
    for (int j = 0; j <= J; ++j) ay.push_back(coeff_y_exact(spec, k, j).to_double() / v);
  } else {
    ae.assign(static_cast<std::size_t>(J + 1), std::vector<double>(static_cast<std::size_t>(J + 1)));
    for (int a = 0; a <= J; ++a)
      for (int b = 0; b <= J; ++b) ae[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = coeff_e_exact(spec, k, a, b) / v;
  }

  // sum_j c_j x^j with x = centre * conj(W).
  auto power_sum = [](const std::vector<double>& c, cd x) {
    cd acc = 0.0;
    for (std::size_t j = c.size(); j-- > 0;) acc = acc * x + c[j];
    return acc;
  };

  const McSums sums = run_mc(run, [&](Rng& rng) -> std::optional<cd> {
    std::array<cd, 2> w{};
    for (int i = 0; i < w_count; ++i) w[static_cast<std::size_t>(i)] = sample_unit_square(rng);
    ElementZ z = sample_box(spec, rng);
    if (!membership(z)) return std::nullopt;
    const double nz = norm_diag(z);
    const cd z1 = z.coordinates().front();
    cd kernel;
    cd f;
    if (family == Family::Y) {
      if (!(std::pow(std::norm(w[0]), kd) < nz)) return std::nullopt;
      kernel = power_sum(ay, center[0] * std::conj(w[0]));
      f = ipow(w[0], exponents[0]) * ipow(z1, exponents[1]);
    } else {
      if (!(std::norm(w[0]) + std::pow(std::norm(w[1]), kd) < nz)) return std::nullopt;
      const cd x1 = center[0] * std::conj(w[0]);
      const cd x2 = center[1] * std::conj(w[1]);
      cd acc = 0.0;
      for (std::size_t a = ae.size(); a-- > 0;) acc = acc * x1 + power_sum(ae[a], x2);
      kernel = acc;
      f = ipow(w[0], exponents[0]) * ipow(w[1], exponents[1]) * ipow(z1, exponents[2]);
    }
    return kernel * f;
  });

  const double scale = std::pow(w_measure(1) * box_area(1), w_count) * z_measure(spec) * box_area(n);
  cd ref = exponents.back() == 0 ? cd(1.0) : cd(0.0);
  for (int i = 0; i < w_count; ++i) ref *= ipow(center[static_cast<std::size_t>(i)], exponents[static_cast<std::size_t>(i)]);
  if (std::abs(ref.imag()) > 0.0) throw InvalidParams("centre must give a real monomial value");

  std::string name = std::string("reproduce ") + (family == Family::Y ? "Y " : "E ") + spec.str() + " k=" + k.str() +
                     " f=" + index_str(exponents);
  return stochastic_report(std::move(name), mean_over_all(sums), scale, ref.real(), sums, run, tol);
}

} // namespace bergman
