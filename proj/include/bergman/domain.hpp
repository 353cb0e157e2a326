#pragma once

#include "bergman/albert.hpp"
#include "bergman/exact_algebra.hpp"
#include "bergman/invariants.hpp"

#include <Eigen/Dense>

#include <functional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace bergman {

using Rng = std::mt19937_64;

enum class DomainKind { I, II, III, IV, V, VI };

/// One irreducible bounded symmetric domain: type plus size parameters.
/// Only constructible through make/parse, which validate the parameters.
class DomainSpec {
public:
  static DomainSpec type_I(int m, int n);
  static DomainSpec type_II(int n);
  static DomainSpec type_III(int n);
  static DomainSpec type_IV(int n);
  static DomainSpec type_V();
  static DomainSpec type_VI();

  /// Grammar: `I:m,n` | `II:n` | `III:n` | `IV:n` | `V` | `VI`.
  static DomainSpec parse(std::string_view text);

  DomainKind kind() const { return kind_; }
  int rows() const { return m_; }
  int cols() const { return n_; }
  std::string str() const;

  friend bool operator==(const DomainSpec&, const DomainSpec&) = default;

private:
  DomainSpec(DomainKind k, int m, int n) : kind_(k), m_(m), n_(n) {}
  DomainKind kind_;
  int m_ = 0; // I: rows
  int n_ = 0; // I: cols; II/III: matrix size; IV: dimension
};

JordanInvariants invariants(const DomainSpec& spec);

/// Catalog of all specs within the sizes used by sweeps (I up to 4x4, II up
/// to 6, III up to 4, IV up to 8, V, VI).
std::vector<DomainSpec> catalog_sweep();

/// A point of the ambient space V. Matrix types keep an Eigen matrix, type IV
/// a vector, types V and VI an Albert element (type V lives in the a2/a3 slots).
class ElementZ {
public:
  using Rep = std::variant<Eigen::MatrixXcd, Eigen::VectorXcd, AlbertElement>;

  /// Validates shape and symmetry for the spec; throws InvalidParams.
  ElementZ(const DomainSpec& spec, Rep rep);

  static ElementZ zero(const DomainSpec& spec);
  /// Builds from the free complex coordinates (see coordinates()).
  static ElementZ from_coordinates(const DomainSpec& spec, std::span<const cplx> coords);

  const DomainSpec& spec() const { return spec_; }
  const Rep& rep() const { return rep_; }
  const Eigen::MatrixXcd& matrix() const { return std::get<Eigen::MatrixXcd>(rep_); }
  const Eigen::VectorXcd& vector() const { return std::get<Eigen::VectorXcd>(rep_); }
  const AlbertElement& albert() const { return std::get<AlbertElement>(rep_); }

  /// Free complex coordinates, n of them for a spec of dimension n.
  std::vector<cplx> coordinates() const;

private:
  DomainSpec spec_;
  Rep rep_;
};

/// Weights w_i with m1(x,x) = sum w_i |coord_i|^2; their product converts
/// Lebesgue measure in free coordinates to the m1-normalised measure.
std::vector<double> coordinate_weights(const DomainSpec& spec);
double m1_jacobian(const DomainSpec& spec);

/// Coefficients m_1(x,y), ..., m_r(x,y) of the generic minimal polynomial
/// T^r - m_1 T^{r-1} + ... + (-1)^r m_r, for arbitrary x and y.
std::vector<cplx> min_poly(const ElementZ& x, const ElementZ& y);

/// Generic norm N(x,y) = m(1,x,y).
cplx generic_norm(const ElementZ& x, const ElementZ& y);

/// Diagonal coefficients m_k(x,x), computed from Hermitian eigenvalues for
/// the matrix types.
std::vector<double> generic_min_poly_coeffs(const ElementZ& x);

/// N(x,x) through the diagonal route.
double norm_diag(const ElementZ& x);

/// Membership through the derivative inequalities of m(T,x,x) at T = 1.
bool member_by_min_poly(const ElementZ& x);
/// Membership through the per-type definiteness conditions.
bool member_by_type_rule(const ElementZ& x);
inline bool membership(const ElementZ& x) { return member_by_type_rule(x); }

/// x = sum lambda_j c_j over a fixed frame of the spec. Throws WrongArity.
ElementZ frame_element(const DomainSpec& spec, std::span<const double> lambdas);

/// Uniform sample of the bounding box: each free complex coordinate uniform
/// in [-1,1]^2.
ElementZ sample_box(const DomainSpec& spec, Rng& rng);

using LinearMap = std::function<ElementZ(const ElementZ&)>;

/// A random linear isometry of the domain fixing 0 (see README for the
/// generators used per type).
LinearMap linear_isometry(const DomainSpec& spec, Rng& rng);

/// Short description of the generic-norm formula and membership rule.
std::string norm_formula_name(const DomainSpec& spec);
std::string membership_rule_name(const DomainSpec& spec);

/// The factorisation printed in the per-type tables (e.g. prod (s+j)_n for
/// type I), which may differ from chi_poly's product but expands identically.
PochhammerForm chi_table_form(const DomainSpec& spec);

} // namespace bergman
