// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.
#include "bergman/domain.hpp"
#include "bergman/errors.hpp"
#include "bergman/exact_algebra.hpp"
#include "bergman/kernel_forms.hpp"
#include "bergman/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace bergman;

namespace {

constexpr std::uint64_t kSamples = 1'000'000;
const DomainSpec kDisc = DomainSpec::type_I(1, 1);

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) note << "first failure: " << what;
      pass = false;
    }
  }
};

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

McRun mc(std::uint64_t seed) {
  McRun run;
  run.samples = kSamples;
  run.seed = seed;
  return run;
}

RatPoly product(std::initializer_list<std::pair<int, int>> factors) {
  RatPoly p = RatPoly::constant(Rational(1));
  for (const auto& [shift, len] : factors) p *= pochhammer(Rational(shift), len);
  return p;
}

RatPoly chi_of(const DomainSpec& spec) { return chi_poly(invariants(spec)).expand(); }

void chi_golden(Outcome& o) {
  const RatPoly v = chi_of(DomainSpec::type_V());
  o.require(v == product({{1, 11}, {4, 5}}) && v == product({{1, 8}, {4, 8}}), "type V factorisations");
  const RatPoly vi = chi_of(DomainSpec::type_VI());
  o.require(vi == product({{1, 17}, {5, 9}, {9, 1}}) && vi == product({{1, 9}, {5, 9}, {9, 9}}),
            "type VI factorisations");
  for (int m = 1; m <= 4; ++m)
    for (int n = m; n <= 4; ++n) {
      RatPoly want = RatPoly::constant(Rational(1));
      for (int j = 1; j <= m; ++j) want *= pochhammer(Rational(j), n);
      o.require(chi_of(DomainSpec::type_I(m, n)) == want, "I(" + std::to_string(m) + "," + std::to_string(n) + ")");
    }
  for (int p = 1; p <= 3; ++p) {
    RatPoly even = RatPoly::constant(Rational(1)), odd = RatPoly::constant(Rational(1));
    for (int j = 1; j <= p; ++j) {
      even *= pochhammer(Rational(2 * j - 1), 2 * p - 1);
      odd *= pochhammer(Rational(2 * j - 1), 2 * p + 1);
    }
    o.require(chi_of(DomainSpec::type_II(2 * p)) == even, "II(" + std::to_string(2 * p) + ")");
    o.require(chi_of(DomainSpec::type_II(2 * p + 1)) == odd, "II(" + std::to_string(2 * p + 1) + ")");
  }
  int count = 0;
  for (const auto& spec : catalog_sweep()) {
    o.require(chi_of(spec).degree() == invariants(spec).n, "degree of chi for " + spec.str());
    ++count;
  }
  if (o.pass) o.note << count << " catalog specs";
}

void selberg(Outcome& o) {
  double worst = 0.0;
  std::uint64_t seed = 100;
  for (const auto& spec : {kDisc, DomainSpec::type_I(1, 2), DomainSpec::type_I(2, 2), DomainSpec::type_III(2),
                           DomainSpec::type_IV(3)}) {
    for (const Rational s : {Rational(1, 2), Rational(1), Rational(2)}) {
      const VerifyReport r = mc_norm_moment(spec, s, mc(seed++));
      const double sigma = r.std_error / std::abs(r.reference);
      const std::string tag = spec.str() + " s=" + s.str();
      o.require(r.deviation <= 3 * sigma, tag + " outside 3 sigma");
      o.require(r.deviation <= 0.02, tag + " above 2%");
      worst = std::max(worst, r.deviation);
    }
  }
  o.require(chi_value(kDisc, Rational(0)) / chi_value(kDisc, Rational(1, 2)) == Rational(2, 3), "disc reference at s=1/2");
  o.require(chi_value(kDisc, Rational(0)) / chi_value(kDisc, Rational(1)) == Rational(1, 2), "disc reference at s=1");
  o.require(chi_value(kDisc, Rational(0)) / chi_value(kDisc, Rational(2)) == Rational(1, 3), "disc reference at s=2");
  if (o.pass) o.note << "15 moments, worst relative deviation " << worst;
}

double factorial(int n) { return std::tgamma(n + 1.0); }

void ball_reductions(Outcome& o) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto disc_point = [](double x) { const std::vector<cplx> c{x}; return ElementZ::from_coordinates(kDisc, c); };
  double worst = 0.0;
  for (int q = 1; q <= 3; ++q) {
    for (int t = 0; t < 20; ++t) {
      // random interior point: |z|^2 + ||W||^2 < 1
      const double z2 = 0.9 * u(rng);
      const double w2 = (1 - z2) * 0.95 * u(rng);
      std::vector<cplx> w(static_cast<std::size_t>(q));
      double left = w2;
      for (int i = 0; i < q; ++i) {
        const double part = i + 1 == q ? left : left * u(rng);
        left -= part;
        w[static_cast<std::size_t>(i)] = std::polar(std::sqrt(part), 6.28 * u(rng));
      }
      const double got = eval_y(kDisc, Rational(1), q, w, disc_point(std::sqrt(z2)), 1.0);
      const double want = (q + 1) * std::pow(1 - z2 - w2, -(q + 2));
      worst = std::max(worst, rel(got, want));
    }
  }
  for (const auto& [p, q] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 2}}) {
    for (int t = 0; t < 20; ++t) {
      const double z2 = 0.9 * u(rng);
      const double budget = (1 - z2) * 0.95 * u(rng);
      const double f = u(rng);
      std::vector<cplx> w1(static_cast<std::size_t>(p), 0.0), w2(static_cast<std::size_t>(q), 0.0);
      w1.back() = std::sqrt(f * budget);
      w2.front() = std::polar(std::sqrt((1 - f) * budget), 1.0);
      const double got = eval_e(kDisc, Rational(1), p, q, w1, w2, disc_point(std::sqrt(z2)), 1.0);
      const double want = factorial(p + q + 1) / (factorial(p) * factorial(q)) * std::pow(1 - z2 - budget, -(p + q + 2));
      worst = std::max(worst, rel(got, want));
    }
  }
  o.require(worst <= 1e-10, "worst relative error " + std::to_string(worst));
  if (o.pass) o.note << "120 points, worst relative error " << worst;
}

void inflation(Outcome& o) {
  const UniExpr base(Rational(1), Rational(1), {{Rational(1), Rational(0), Rational(0), 0, 2}});
  for (int m = 1; m <= 5; ++m) {
    const UniExpr want(Rational(1), Rational(1), {{Rational(1), Rational(0), Rational(0), 0, m + 1}});
    o.require(inflate(base, m) == want, "m=" + std::to_string(m));
  }
  if (o.pass) o.note << "(1-r)^-2 -> (1-r)^-(m+1), m = 1..5";
}

void cross_pipeline(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<std::pair<DomainSpec, Rational>> cases;
  for (const Rational k : {Rational(1), Rational(3, 2), Rational(2), Rational(1, 3)}) cases.emplace_back(kDisc, k);
  for (const Rational k : {Rational(1), Rational(2)}) {
    cases.emplace_back(DomainSpec::type_IV(3), k);
    cases.emplace_back(DomainSpec::type_I(2, 2), k);
  }
  double worst = 0.0;
  int n = 0;
  for (const auto& [spec, k] : cases)
    for (const Family f : {Family::Y, Family::E})
      for (const auto& r : compare_series(spec, k, f, 10, 7, 400, 1e-8)) {
        o.require(r.pass, r.quantity);
        worst = std::max(worst, r.deviation);
        ++n;
      }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.require(secs < 60.0, "runtime " + std::to_string(secs) + " s");
  if (o.pass) o.note << n << " points, worst relative deviation " << worst << ", " << secs << " s";
}

void bj_expansion(Outcome& o) {
  o.require(e_kernel_bj(kDisc) == std::vector<Rational>{Rational(6), Rational(-6), Rational(1)}, "disc b_j");
  int count = 0;
  for (const auto& spec : catalog_sweep()) {
    const auto inv = invariants(spec);
    if (inv.n > 8 && spec.kind() != DomainKind::V && spec.kind() != DomainKind::VI) continue;
    const auto b = e_kernel_bj(spec);
    const RatPoly chi = chi_of(spec);
    for (int h = 1; h <= inv.n + 3; ++h) {
      Rational sum(0);
      for (std::size_t j = 0; j < b.size(); ++j)
        sum += b[j] * pochhammer(Rational(1), static_cast<int>(j + 1))(Rational(h));
      o.require(sum == Rational(h) * Rational(h - 1) * chi(Rational(h)), spec.str() + " h=" + std::to_string(h));
    }
    ++count;
  }
  if (o.pass) o.note << count << " specs";
}

void coefficients(Outcome& o) {
  std::uint64_t seed = 200;
  int n = 0;
  double worst = 0.0;
  for (const Rational k : {Rational(1), Rational(2)}) {
    for (int j = 0; j <= 2; ++j) {
      const auto r = coeff_mc(kDisc, k, Family::Y, {j}, mc(seed++));
      o.require(r.pass, r.quantity);
      worst = std::max(worst, r.deviation / (r.std_error / std::abs(r.reference)));
      ++n;
    }
    for (int j1 = 0; j1 <= 2; ++j1)
      for (int j2 = 0; j1 + j2 <= 2; ++j2) {
        const auto r = coeff_mc(kDisc, k, Family::E, {j1, j2}, mc(seed++));
        o.require(r.pass, r.quantity);
        worst = std::max(worst, r.deviation / (r.std_error / std::abs(r.reference)));
        ++n;
      }
  }
  if (o.pass) o.note << n << " coefficients, worst deviation " << worst << " sigma";
}

void derivatives(Outcome& o) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> num(1, 9), den(1, 4), e0(-3, 0), e1(-2, 0), pw(0, 3), d(0, 4), count(1, 6),
      kk(0, 3);
  std::uniform_real_distribution<double> a(0.05, 0.4), b(0.05, 0.5);
  const Rational ks[] = {Rational(1), Rational(2), Rational(3, 2), Rational(1, 3)};
  const double h = 1e-5;
  double worst = 0.0;
  for (int set = 0; set < 50; ++set) {
    const Rational k = ks[kk(rng)];
    std::vector<KernelTerm> terms;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) terms.push_back({Rational(num(rng), den(rng)), Rational(e0(rng)), Rational(e1(rng)), pw(rng), d(rng)});
    const KernelExpr e(k, Rational(1), terms);
    const KernelExpr d1 = e.d_t1(), d2 = e.d_t2();
    for (int i = 0; i < 3; ++i) {
      const double t1 = a(rng);
      const double t2 = b(rng) * std::pow(1 - t1, 1 / k.to_double());
      const double fd1 = (e(t1 + h, t2) - e(t1 - h, t2)) / (2 * h);
      const double fd2 = (e(t1, t2 + h) - e(t1, t2 - h)) / (2 * h);
      const double r1 = d1.terms().empty() ? std::abs(fd1) : rel(d1(t1, t2), fd1);
      const double r2 = d2.terms().empty() ? std::abs(fd2) : rel(d2(t1, t2), fd2);
      worst = std::max({worst, r1, r2});
    }
  }
  o.require(worst <= 1e-6, "worst relative error " + std::to_string(worst));
  if (o.pass) o.note << "50 term sets, worst relative error " << worst;
}

int expected_dim(const DomainSpec& s) {
  switch (s.kind()) {
  case DomainKind::I: return s.rows() * s.cols();
  case DomainKind::II: return s.cols() * (s.cols() - 1) / 2;
  case DomainKind::III: return s.cols() * (s.cols() + 1) / 2;
  case DomainKind::IV: return s.cols();
  case DomainKind::V: return 16;
  case DomainKind::VI: return 27;
  }
  return -1;
}

int expected_genus(const DomainSpec& s) {
  switch (s.kind()) {
  case DomainKind::I: return s.rows() + s.cols();
  case DomainKind::II: return 2 * s.cols() - 2;
  case DomainKind::III: return s.cols() + 1;
  case DomainKind::IV: return s.cols();
  case DomainKind::V: return 12;
  case DomainKind::VI: return 18;
  }
  return -1;
}

void structure(Outcome& o) {
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int disagree = 0, samples = 0, kinds = 0;
  bool seen[6] = {};
  for (const auto& spec : catalog_sweep()) {
    const auto inv = invariants(spec);
    o.require(inv.n == expected_dim(spec), "dimension of " + spec.str());
    o.require(inv.g == expected_genus(spec), "genus of " + spec.str());
    o.require(static_cast<int>(ElementZ::zero(spec).coordinates().size()) == inv.n, "coordinates of " + spec.str());
    for (int t = 0; t < 500; ++t, ++samples) {
      const ElementZ x = sample_box(spec, rng);
      disagree += member_by_min_poly(x) != member_by_type_rule(x);
    }
    for (int t = 0; t < 20; ++t) {
      std::vector<double> l(static_cast<std::size_t>(inv.r));
      double want = 1.0;
      for (auto& v : l) {
        v = 0.99 * u(rng);
        want *= 1 - v * v;
      }
      const ElementZ x = frame_element(spec, l);
      o.require(rel(norm_diag(x), want) <= 1e-12, "frame identity for " + spec.str());
      o.require(rel(generic_norm(x, x).real(), want) <= 1e-12, "generic norm on the frame for " + spec.str());
      o.require(member_by_type_rule(x) && member_by_min_poly(x), "frame point membership for " + spec.str());
    }
    const int idx = static_cast<int>(spec.kind());
    if (!seen[idx]) ++kinds;
    seen[idx] = true;
  }
  o.require(disagree == 0, std::to_string(disagree) + " membership disagreements");
  o.require(kinds == 6, "not all six types covered");
  if (o.pass) o.note << samples << " membership samples over six types, no disagreement";
}

void volumes(Outcome& o) {
  std::uint64_t seed = 300;
  for (const auto& spec : {kDisc, DomainSpec::type_I(1, 2)}) {
    const McEstimate e = mc_volume(spec, mc(seed++));
    o.require(std::abs(e.value - 1.0) <= 3 * e.std_error, spec.str() + " volume " + std::to_string(e.value));
    if (o.pass) o.note << spec.str() << " " << e.value << " +- " << e.std_error << "; ";
  }
}

} // namespace

int main() {
  const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
      {"chi golden suite", chi_golden},
      {"Selberg moments", selberg},
      {"ball reductions", ball_reductions},
      {"principle of inflation", inflation},
      {"closed forms against series", cross_pipeline},
      {"b_j expansion", bj_expansion},
      {"coefficient integrals", coefficients},
      {"symbolic partials against finite differences", derivatives},
      {"membership and structure invariants", structure},
      {"volume sanity", volumes},
  };
  int failed = 0, i = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.note << "exception: " << e.what();
    }
    std::printf("%s [%d] %s: %s\n", o.pass ? "PASS" : "FAIL", ++i, name, o.note.str().c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
