#include "bergman/domain.hpp"

#include "bergman/charpoly.hpp"
#include "bergman/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

namespace bergman {

// ---------------------------------------------------------------------------
// DomainSpec

DomainSpec DomainSpec::type_I(int m, int n) {
  if (m < 1 || m > n) throw InvalidParams("type I requires 1 <= m <= n");
  return {DomainKind::I, m, n};
}

DomainSpec DomainSpec::type_II(int n) {
  if (n < 2) throw InvalidParams("type II requires n >= 2");
  return {DomainKind::II, 0, n};
}

DomainSpec DomainSpec::type_III(int n) {
  if (n < 1) throw InvalidParams("type III requires n >= 1");
  return {DomainKind::III, 0, n};
}

DomainSpec DomainSpec::type_IV(int n) {
  // IV_1 would need a = -1 and has no two-element frame; it is the disc I(1,1).
  if (n < 3) throw InvalidParams("type IV requires n >= 3 (n = 2 is excluded, n = 1 is the disc)");
  return {DomainKind::IV, 0, n};
}

DomainSpec DomainSpec::type_V() { return {DomainKind::V, 0, 0}; }
DomainSpec DomainSpec::type_VI() { return {DomainKind::VI, 0, 0}; }

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("malformed domain spec '" + std::string(whole) + "'");
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

} // namespace

DomainSpec DomainSpec::parse(std::string_view text) {
  std::string_view s = trim(text);
  auto colon = s.find(':');
  std::string_view head = s.substr(0, colon);
  std::string_view args = colon == std::string_view::npos ? std::string_view{} : s.substr(colon + 1);
  bool has_args = colon != std::string_view::npos;
  if (head == "V" || head == "VI") {
    if (has_args) throw ParseError("type " + std::string(head) + " takes no parameters");
    return head == "V" ? type_V() : type_VI();
  }
  if (!has_args) throw ParseError("malformed domain spec '" + std::string(text) + "'");
  if (head == "I") {
    auto comma = args.find(',');
    if (comma == std::string_view::npos) throw ParseError("type I expects I:m,n");
    return type_I(parse_int(args.substr(0, comma), text), parse_int(args.substr(comma + 1), text));
  }
  int n = parse_int(args, text);
  if (head == "II") return type_II(n);
  if (head == "III") return type_III(n);
  if (head == "IV") return type_IV(n);
  throw ParseError("unknown domain type '" + std::string(head) + "'");
}

std::string DomainSpec::str() const {
  switch (kind_) {
  case DomainKind::I: return "I:" + std::to_string(m_) + "," + std::to_string(n_);
  case DomainKind::II: return "II:" + std::to_string(n_);
  case DomainKind::III: return "III:" + std::to_string(n_);
  case DomainKind::IV: return "IV:" + std::to_string(n_);
  case DomainKind::V: return "V";
  case DomainKind::VI: return "VI";
  }
  return {};
}

JordanInvariants invariants(const DomainSpec& spec) {
  const int n = spec.cols();
  switch (spec.kind()) {
  case DomainKind::I: return JordanInvariants::from_rab(spec.rows(), 2, n - spec.rows());
  case DomainKind::II: return JordanInvariants::from_rab(n / 2, 4, n % 2 == 0 ? 0 : 2);
  case DomainKind::III: return JordanInvariants::from_rab(n, 1, 0);
  case DomainKind::IV: return JordanInvariants::from_rab(2, n - 2, 0);
  case DomainKind::V: return JordanInvariants::from_rab(2, 6, 4);
  case DomainKind::VI: return JordanInvariants::from_rab(3, 8, 0);
  }
  throw InvalidParams("unknown domain kind");
}

std::vector<DomainSpec> catalog_sweep() {
  std::vector<DomainSpec> out;
  for (int m = 1; m <= 4; ++m)
    for (int n = m; n <= 4; ++n) out.push_back(DomainSpec::type_I(m, n));
  for (int n = 2; n <= 6; ++n) out.push_back(DomainSpec::type_II(n));
  for (int n = 1; n <= 4; ++n) out.push_back(DomainSpec::type_III(n));
  for (int n = 3; n <= 8; ++n) out.push_back(DomainSpec::type_IV(n));
  out.push_back(DomainSpec::type_V());
  out.push_back(DomainSpec::type_VI());
  return out;
}

// ---------------------------------------------------------------------------
// ElementZ

namespace {

constexpr double kShapeTol = 1e-12;

bool is_v_shaped(const AlbertElement& x) {
  for (const auto& a : x.alpha)
    if (std::abs(a) > kShapeTol) return false;
  return x.off[0].coord_norm2() <= kShapeTol * kShapeTol;
}

} // namespace

ElementZ::ElementZ(const DomainSpec& spec, Rep rep) : spec_(spec), rep_(std::move(rep)) {
  switch (spec.kind()) {
  case DomainKind::I: {
    const auto* m = std::get_if<Eigen::MatrixXcd>(&rep_);
    if (!m || m->rows() != spec.rows() || m->cols() != spec.cols())
      throw InvalidParams("type I element must be an m x n matrix");
    break;
  }
  case DomainKind::II:
  case DomainKind::III: {
    const auto* m = std::get_if<Eigen::MatrixXcd>(&rep_);
    if (!m || m->rows() != spec.cols() || m->cols() != spec.cols())
      throw InvalidParams("element must be an n x n matrix");
    double sign = spec.kind() == DomainKind::II ? -1.0 : 1.0;
    if (((*m).transpose() - sign * (*m)).norm() > kShapeTol * (1.0 + m->norm()))
      throw InvalidParams(spec.kind() == DomainKind::II ? "type II element must be alternating"
                                                        : "type III element must be symmetric");
    break;
  }
  case DomainKind::IV: {
    const auto* v = std::get_if<Eigen::VectorXcd>(&rep_);
    if (!v || v->size() != spec.cols()) throw InvalidParams("type IV element must be an n-vector");
    break;
  }
  case DomainKind::V: {
    const auto* a = std::get_if<AlbertElement>(&rep_);
    if (!a || !is_v_shaped(*a))
      throw InvalidParams("type V element must only occupy the a2/a3 octonion slots");
    break;
  }
  case DomainKind::VI:
    if (!std::holds_alternative<AlbertElement>(rep_)) throw InvalidParams("type VI element must be an Albert element");
    break;
  }
}

ElementZ ElementZ::zero(const DomainSpec& spec) {
  std::vector<cplx> c(static_cast<std::size_t>(invariants(spec).n));
  return from_coordinates(spec, c);
}

ElementZ ElementZ::from_coordinates(const DomainSpec& spec, std::span<const cplx> c) {
  const auto want = static_cast<std::size_t>(invariants(spec).n);
  if (c.size() != want) throw WrongArity("expected " + std::to_string(want) + " coordinates");
  std::size_t k = 0;
  const int n = spec.cols();
  switch (spec.kind()) {
  case DomainKind::I: {
    Eigen::MatrixXcd m(spec.rows(), n);
    for (int i = 0; i < spec.rows(); ++i)
      for (int j = 0; j < n; ++j) m(i, j) = c[k++];
    return {spec, m};
  }
  case DomainKind::II: {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        m(i, j) = c[k];
        m(j, i) = -c[k++];
      }
    return {spec, m};
  }
  case DomainKind::III: {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        m(i, j) = c[k];
        m(j, i) = c[k++];
      }
    return {spec, m};
  }
  case DomainKind::IV: {
    Eigen::VectorXcd v(n);
    for (int i = 0; i < n; ++i) v(i) = c[k++];
    return {spec, v};
  }
  case DomainKind::V: {
    AlbertElement a;
    for (int i = 0; i < 8; ++i) a.off[1][i] = c[k++];
    for (int i = 0; i < 8; ++i) a.off[2][i] = c[k++];
    return {spec, a};
  }
  case DomainKind::VI: {
    AlbertElement a;
    for (auto& al : a.alpha) al = c[k++];
    for (auto& o : a.off)
      for (int i = 0; i < 8; ++i) o[i] = c[k++];
    return {spec, a};
  }
  }
  throw InvalidParams("unknown domain kind");
}

std::vector<cplx> ElementZ::coordinates() const {
  std::vector<cplx> c;
  const int n = spec_.cols();
  switch (spec_.kind()) {
  case DomainKind::I:
    for (int i = 0; i < spec_.rows(); ++i)
      for (int j = 0; j < n; ++j) c.push_back(matrix()(i, j));
    break;
  case DomainKind::II:
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) c.push_back(matrix()(i, j));
    break;
  case DomainKind::III:
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) c.push_back(matrix()(i, j));
    break;
  case DomainKind::IV:
    for (int i = 0; i < n; ++i) c.push_back(vector()(i));
    break;
  case DomainKind::V:
    for (int s : {1, 2})
      for (int i = 0; i < 8; ++i) c.push_back(albert().off[static_cast<std::size_t>(s)][i]);
    break;
  case DomainKind::VI:
    for (const auto& a : albert().alpha) c.push_back(a);
    for (const auto& o : albert().off)
      for (int i = 0; i < 8; ++i) c.push_back(o[i]);
    break;
  }
  return c;
}

std::vector<double> coordinate_weights(const DomainSpec& spec) {
  const auto n = static_cast<std::size_t>(invariants(spec).n);
  std::vector<double> w(n, 1.0);
  switch (spec.kind()) {
  case DomainKind::I:
  case DomainKind::II: break;
  case DomainKind::III: {
    std::size_t k = 0;
    for (int i = 0; i < spec.cols(); ++i)
      for (int j = i; j < spec.cols(); ++j) w[k++] = i == j ? 1.0 : 2.0;
    break;
  }
  case DomainKind::IV:
  case DomainKind::V: std::fill(w.begin(), w.end(), 2.0); break;
  case DomainKind::VI: std::fill(w.begin() + 3, w.end(), 2.0); break;
  }
  return w;
}

double m1_jacobian(const DomainSpec& spec) {
  double j = 1.0;
  for (double w : coordinate_weights(spec)) j *= w;
  return j;
}

// ---------------------------------------------------------------------------
// Generic minimal polynomial

namespace {

std::vector<cplx> coeffs_from_charpoly(const std::vector<cplx>& det_coeffs, int r) {
  // det = T^r - m1 T^{r-1} + ... ; det_coeffs lowest first, degree r.
  std::vector<cplx> m(static_cast<std::size_t>(r));
  for (int k = 1; k <= r; ++k) {
    double sign = (k % 2 == 0) ? 1.0 : -1.0;
    m[static_cast<std::size_t>(k - 1)] = sign * det_coeffs[static_cast<std::size_t>(r - k)];
  }
  return m;
}

cplx q_bilinear(const Eigen::VectorXcd& x, const Eigen::VectorXcd& y) {
  return 2.0 * (x.array() * y.array()).sum();
}

cplx q_quad(const Eigen::VectorXcd& x) { return (x.array() * x.array()).sum(); }

Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

} // namespace

std::vector<cplx> min_poly(const ElementZ& x, const ElementZ& y) {
  if (!(x.spec() == y.spec())) throw InvalidParams("generic norm arguments belong to different domains");
  const DomainSpec& spec = x.spec();
  const int r = invariants(spec).r;
  switch (spec.kind()) {
  case DomainKind::I:
    return coeffs_from_charpoly(faddeev_leverrier(x.matrix() * y.matrix().adjoint()), r);
  case DomainKind::III:
    return coeffs_from_charpoly(faddeev_leverrier(x.matrix() * y.matrix().conjugate()), r);
  case DomainKind::II: {
    // Det(T I + x ybar) = m^2 (n even) or T m^2 (n odd).
    Eigen::MatrixXcd a = -(x.matrix() * y.matrix().conjugate());
    std::vector<cplx> det = faddeev_leverrier(a);
    if (spec.cols() % 2 == 1) det.erase(det.begin());
    return coeffs_from_charpoly(monic_poly_sqrt(det), r);
  }
  case DomainKind::IV: {
    const auto& xv = x.vector();
    const auto& yv = y.vector();
    return {q_bilinear(xv, yv.conjugate()), q_quad(xv) * std::conj(q_quad(yv))};
  }
  case DomainKind::V: {
    const auto& xa = x.albert();
    const auto& ya = y.albert();
    return {albert_inner(xa, ya), albert_inner(xa.sharp(), ya.sharp())};
  }
  case DomainKind::VI: {
    const auto& xa = x.albert();
    const auto& ya = y.albert();
    return {albert_inner(xa, ya), albert_inner(xa.sharp(), ya.sharp()), xa.det() * std::conj(ya.det())};
  }
  }
  throw InvalidParams("unknown domain kind");
}

cplx generic_norm(const ElementZ& x, const ElementZ& y) {
  cplx n = 1.0;
  double sign = -1.0;
  for (const auto& m : min_poly(x, y)) {
    n += sign * m;
    sign = -sign;
  }
  return n;
}

std::vector<double> generic_min_poly_coeffs(const ElementZ& x) {
  const DomainSpec& spec = x.spec();
  const int r = invariants(spec).r;
  std::vector<double> lam2;
  switch (spec.kind()) {
  case DomainKind::I:
  case DomainKind::III: {
    Eigen::VectorXd ev = hermitian_eigenvalues(x.matrix() * x.matrix().adjoint());
    lam2.assign(ev.data(), ev.data() + ev.size());
    break;
  }
  case DomainKind::II: {
    Eigen::VectorXd ev = hermitian_eigenvalues(x.matrix() * x.matrix().adjoint());
    std::vector<double> sorted(ev.data(), ev.data() + ev.size());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    // Eigenvalues of x x* come in equal pairs.
    for (int j = 0; j < r; ++j)
      lam2.push_back(0.5 * (sorted[static_cast<std::size_t>(2 * j)] + sorted[static_cast<std::size_t>(2 * j + 1)]));
    break;
  }
  case DomainKind::IV:
  case DomainKind::V:
  case DomainKind::VI: {
    std::vector<double> out;
    for (const auto& m : min_poly(x, x)) out.push_back(m.real());
    return out;
  }
  }
  std::vector<double> e = elementary_symmetric(lam2);
  return {e.begin() + 1, e.end()};
}

double norm_diag(const ElementZ& x) {
  double n = 1.0;
  double sign = -1.0;
  for (double m : generic_min_poly_coeffs(x)) {
    n += sign * m;
    sign = -sign;
  }
  return n;
}

bool member_by_min_poly(const ElementZ& x) {
  const std::vector<double> m = generic_min_poly_coeffs(x);
  const int r = static_cast<int>(m.size());
  // p(T) = sum_k (-1)^k m_k T^{r-k}, coefficients stored by power.
  std::vector<double> p(static_cast<std::size_t>(r + 1));
  p[static_cast<std::size_t>(r)] = 1.0;
  for (int k = 1; k <= r; ++k) p[static_cast<std::size_t>(r - k)] = (k % 2 == 0 ? 1.0 : -1.0) * m[static_cast<std::size_t>(k - 1)];
  for (int j = 0; j < r; ++j) {
    double v = 0.0; // p at T = 1
    for (double c : p) v += c;
    if (!(v > 0.0)) return false;
    std::vector<double> d(p.size() > 1 ? p.size() - 1 : 1, 0.0);
    for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = static_cast<double>(i) * p[i];
    p = std::move(d);
  }
  return true;
}

bool member_by_type_rule(const ElementZ& x) {
  const DomainSpec& spec = x.spec();
  switch (spec.kind()) {
  case DomainKind::I: {
    const auto& m = x.matrix();
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Identity(m.rows(), m.rows()) - m * m.adjoint();
    return hermitian_eigenvalues(h).minCoeff() > 0.0;
  }
  case DomainKind::II: {
    const auto& m = x.matrix();
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Identity(m.rows(), m.rows()) + m * m.conjugate();
    return hermitian_eigenvalues(h).minCoeff() > 0.0;
  }
  case DomainKind::III: {
    const auto& m = x.matrix();
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Identity(m.rows(), m.rows()) - m * m.conjugate();
    return hermitian_eigenvalues(h).minCoeff() > 0.0;
  }
  case DomainKind::IV: {
    const auto& v = x.vector();
    double qxx = q_bilinear(v, v.conjugate()).real();
    return 1.0 - qxx + std::norm(q_quad(v)) > 0.0 && 2.0 - qxx > 0.0;
  }
  case DomainKind::V: {
    const auto& a = x.albert();
    double xx = albert_inner(a, a).real();
    AlbertElement s = a.sharp();
    double ss = albert_inner(s, s).real();
    return 1.0 - xx + ss > 0.0 && 2.0 - xx > 0.0;
  }
  case DomainKind::VI: {
    const auto& a = x.albert();
    double xx = albert_inner(a, a).real();
    AlbertElement s = a.sharp();
    double ss = albert_inner(s, s).real();
    double dd = std::norm(a.det());
    return 1.0 - xx + ss - dd > 0.0 && 3.0 - 2.0 * xx + ss > 0.0 && 3.0 - xx > 0.0;
  }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Frames, sampling, isometries

ElementZ frame_element(const DomainSpec& spec, std::span<const double> lam) {
  const int r = invariants(spec).r;
  if (static_cast<int>(lam.size()) != r)
    throw WrongArity("frame_element expects " + std::to_string(r) + " values, got " + std::to_string(lam.size()));
  const int n = spec.cols();
  const cplx i_unit(0.0, 1.0);
  switch (spec.kind()) {
  case DomainKind::I: {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(spec.rows(), n);
    for (int j = 0; j < r; ++j) m(j, j) = lam[static_cast<std::size_t>(j)];
    return {spec, m};
  }
  case DomainKind::II: {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (int j = 0; j < r; ++j) {
      m(2 * j, 2 * j + 1) = lam[static_cast<std::size_t>(j)];
      m(2 * j + 1, 2 * j) = -lam[static_cast<std::size_t>(j)];
    }
    return {spec, m};
  }
  case DomainKind::III: {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (int j = 0; j < r; ++j) m(j, j) = lam[static_cast<std::size_t>(j)];
    return {spec, m};
  }
  case DomainKind::IV: {
    // c+- = (e1 +- i e2)/2
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n);
    v(0) = 0.5 * (lam[0] + lam[1]);
    v(1) = 0.5 * i_unit * (lam[0] - lam[1]);
    return {spec, v};
  }
  case DomainKind::V: {
    // idempotents e+- = (1 +- i e1)/2 in the a3 slot
    AlbertElement a;
    a.off[2][0] = 0.5 * (lam[0] + lam[1]);
    a.off[2][1] = 0.5 * i_unit * (lam[0] - lam[1]);
    return {spec, a};
  }
  case DomainKind::VI: {
    AlbertElement a;
    for (std::size_t j = 0; j < 3; ++j) a.alpha[j] = lam[j];
    return {spec, a};
  }
  }
  throw InvalidParams("unknown domain kind");
}

ElementZ sample_box(const DomainSpec& spec, Rng& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cplx> c(static_cast<std::size_t>(invariants(spec).n));
  for (auto& v : c) {
    double re = u(rng);
    double im = u(rng);
    v = cplx(re, im);
  }
  return ElementZ::from_coordinates(spec, c);
}

namespace {

Eigen::MatrixXcd random_unitary(int n, Rng& rng) {
  std::normal_distribution<double> g;
  Eigen::MatrixXcd z(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) z(i, j) = cplx(g(rng), g(rng));
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  return qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
}

Eigen::MatrixXd random_orthogonal(int n, Rng& rng) {
  std::normal_distribution<double> g;
  Eigen::MatrixXd z(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) z(i, j) = g(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(z);
  return qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
}

cplx random_phase(Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
  return std::polar(1.0, u(rng));
}

} // namespace

LinearMap linear_isometry(const DomainSpec& spec, Rng& rng) {
  switch (spec.kind()) {
  case DomainKind::I: {
    Eigen::MatrixXcd u = random_unitary(spec.rows(), rng);
    Eigen::MatrixXcd v = random_unitary(spec.cols(), rng);
    return [spec, u, v](const ElementZ& x) { return ElementZ(spec, Eigen::MatrixXcd(u * x.matrix() * v)); };
  }
  case DomainKind::II:
  case DomainKind::III: {
    Eigen::MatrixXcd u = random_unitary(spec.cols(), rng);
    return [spec, u](const ElementZ& x) {
      Eigen::MatrixXcd y = u * x.matrix() * u.transpose();
      // Restore exact (anti)symmetry lost to rounding.
      if (spec.kind() == DomainKind::II) y = 0.5 * (y - y.transpose()).eval();
      else y = 0.5 * (y + y.transpose()).eval();
      return ElementZ(spec, y);
    };
  }
  case DomainKind::IV: {
    Eigen::MatrixXd o = random_orthogonal(spec.cols(), rng);
    cplx phase = random_phase(rng);
    return [spec, o, phase](const ElementZ& x) {
      return ElementZ(spec, Eigen::VectorXcd(phase * (o.cast<cplx>() * x.vector())));
    };
  }
  case DomainKind::V: {
    cplx p2 = random_phase(rng);
    cplx p3 = random_phase(rng);
    int shift = std::uniform_int_distribution<int>(0, 6)(rng);
    return [spec, p2, p3, shift](const ElementZ& x) {
      AlbertElement a = x.albert();
      a.off[1] = a.off[1].cycle_units(shift) * p2;
      a.off[2] = a.off[2].cycle_units(shift) * p3;
      return ElementZ(spec, a);
    };
  }
  case DomainKind::VI: {
    cplx p = random_phase(rng);
    int shift = std::uniform_int_distribution<int>(0, 6)(rng);
    return [spec, p, shift](const ElementZ& x) {
      AlbertElement a = x.albert();
      for (auto& o : a.off) o = o.cycle_units(shift);
      a *= p;
      return ElementZ(spec, a);
    };
  }
  }
  throw InvalidParams("unknown domain kind");
}

std::string norm_formula_name(const DomainSpec& spec) {
  switch (spec.kind()) {
  case DomainKind::I: return "N(x,y) = Det(I_m - x y*)";
  case DomainKind::II: return "N(x,y)^2 = Det(I_n + x ybar) (times T for odd n), square root of the characteristic polynomial";
  case DomainKind::III: return "N(x,y) = Det(I_n - x ybar)";
  case DomainKind::IV: return "N(x,y) = 1 - q(x,ybar) + q(x) q(ybar)";
  case DomainKind::V: return "N(x,y) = 1 - (x|y) + (x#|y#)";
  case DomainKind::VI: return "N(x,y) = 1 - (x|y) + (x#|y#) - det x det ybar";
  }
  return {};
}

std::string membership_rule_name(const DomainSpec& spec) {
  switch (spec.kind()) {
  case DomainKind::I: return "I_m - x x* positive definite";
  case DomainKind::II: return "I_n + x xbar positive definite";
  case DomainKind::III: return "I_n - x xbar positive definite";
  case DomainKind::IV: return "1 - q(x,xbar) + |q(x)|^2 > 0 and 2 - q(x,xbar) > 0";
  case DomainKind::V: return "1 - (x|x) + (x#|x#) > 0 and 2 - (x|x) > 0";
  case DomainKind::VI: return "1 - (x|x) + (x#|x#) - |det x|^2 > 0, 3 - 2(x|x) + (x#|x#) > 0, 3 - (x|x) > 0";
  }
  return {};
}

PochhammerForm chi_table_form(const DomainSpec& spec) {
  PochhammerForm f;
  const int n = spec.cols();
  switch (spec.kind()) {
  case DomainKind::I:
    for (int j = 1; j <= spec.rows(); ++j) f.factors.push_back({Rational(j), n});
    break;
  case DomainKind::II: {
    const int p = n / 2;
    const int len = n % 2 == 0 ? 2 * p - 1 : 2 * p + 1;
    for (int j = 1; j <= p; ++j) f.factors.push_back({Rational(2 * j - 1), len});
    break;
  }
  case DomainKind::III:
    for (int j = 1; j <= n; ++j) f.factors.push_back({Rational(j + 1, 2), 1 + n - j});
    break;
  case DomainKind::IV:
    f.factors.push_back({Rational(1), n - 1});
    f.factors.push_back({Rational(n, 2), 1});
    break;
  case DomainKind::V:
    f.factors = {{Rational(1), 11}, {Rational(4), 5}};
    break;
  case DomainKind::VI:
    f.factors = {{Rational(1), 17}, {Rational(5), 9}, {Rational(9), 1}};
    break;
  }
  return f;
}

} // namespace bergman
