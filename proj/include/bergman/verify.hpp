#pragma once

#include "bergman/domain.hpp"
#include "bergman/monte_carlo.hpp"
#include "bergman/rational.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bergman {

/// Acceptance ratios below this make box rejection unreliable.
inline constexpr double kLowAcceptance = 1e-4;

struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  double acceptance_ratio = 0.0;
  std::uint64_t seed = 0;

  bool low_acceptance() const { return acceptance_ratio < kLowAcceptance; }
};

/// One oracle-versus-reference comparison.
struct VerifyReport {
  std::string quantity;
  double estimate = 0.0;
  double std_error = 0.0;
  double reference = 0.0;
  /// |estimate - reference| / |reference|, or the absolute gap when reference == 0.
  double deviation = 0.0;
  double tolerance = 0.0;
  bool stochastic = false;
  bool pass = false;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double acceptance_ratio = 1.0;
  std::vector<std::string> warnings;

  /// Fills deviation and pass from estimate, std_error, reference and tolerance.
  void finalize();
  /// One line of JSON, no trailing newline.
  std::string jsonl() const;
};

VerifyReport deterministic_report(std::string quantity, double estimate, double reference, double tol);

enum class Family { Y, E };

/// Box-rejection estimate of the alpha^n-volume of Omega.
McEstimate mc_volume(const DomainSpec& spec, const McRun& run);

/// Conditional mean of N(x,x)^s over Omega against chi(0)/chi(s).
VerifyReport mc_norm_moment(const DomainSpec& spec, const Rational& s, const McRun& run, double tol = 0.0);

/// chi(s) from the product of rising factorials, exactly.
Rational chi_value(const DomainSpec& spec, const Rational& s);

/// (j+1) chi((j+1)/k) / chi(0); the squared norm coefficient times volOmega.
Rational coeff_y_exact(const DomainSpec& spec, const Rational& k, int j);

/// (k/chi(0)) Gamma(h+1) chi(h) / (Gamma(j1+1) Gamma((j2+1)/k)), h = j1+1+(j2+1)/k,
/// times volOmega.
double coeff_e_exact(const DomainSpec& spec, const Rational& k, int j1, int j2);
/// Natural log of coeff_e_exact.
double log_coeff_e_exact(const DomainSpec& spec, const Rational& k, int j1, int j2);

/// Monte-Carlo integral of |W^j|^2 over Y(1,Omega;k) (index {j}) or of
/// |W1^j1 W2^j2|^2 over E(1,1,Omega;k) (index {j1,j2}) against the exact
/// reciprocal coefficient. vol defaults to the exact volume of Omega.
VerifyReport coeff_mc(const DomainSpec& spec, const Rational& k, Family family, const std::vector<int>& index,
                      const McRun& run, std::optional<double> vol = std::nullopt, double tol = 0.0);

struct SeriesValue {
  double value = 0.0;
  /// Ratio-test estimate of the omitted tail.
  double tail = 0.0;
  int terms = 0;
};

/// sum_{j<=J} coeff_y_exact(j) |W|^{2j} / vol.
SeriesValue series_kernel_y(const DomainSpec& spec, const Rational& k, std::complex<double> w, int truncate = 200,
                            double vol = 1.0);
/// sum_{j1,j2<=J} coeff_e_exact(j1,j2) |W1|^{2 j1} |W2|^{2 j2} / vol.
SeriesValue series_kernel_e(const DomainSpec& spec, const Rational& k, std::complex<double> w1,
                            std::complex<double> w2, int truncate = 200, double vol = 1.0);

/// Closed-form kernel at Z = 0 against the truncated series, at `points`
/// random interior points (vol = 1 on both sides).
std::vector<VerifyReport> compare_series(const DomainSpec& spec, const Rational& k, Family family, int points,
                                         std::uint64_t seed, int truncate = 400, double tol = 1e-8);

/// Reproducing property at the centre point (w, 0): Monte-Carlo estimate of
/// the integral of K((w,0), zeta) f(zeta) against f(w, 0). The monomial f is
/// W^e0 z_1^e1 for Y(1,Omega;k) and W1^e0 W2^e1 z_1^e2 for E(1,1,Omega;k),
/// z_1 being the first free coordinate of Z.
VerifyReport reproducing_check(const DomainSpec& spec, const Rational& k, Family family,
                               const std::vector<int>& exponents, const McRun& run,
                               std::vector<std::complex<double>> center = {}, std::optional<double> vol = std::nullopt,
                               double tol = 0.0);

} // namespace bergman
