#pragma once

#include "bergman/rational.hpp"

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace bergman {

/// c * u^(e0 + e1/k) * lambda^p * (1 - lambda)^(-d), with u = 1 - t1 and
/// lambda = t2 * u^(-1/k). In a UniExpr only the lambda part is used and the
/// variable is called X.
struct KernelTerm {
  Rational c{0};
  Rational e0{0};
  Rational e1{0};
  int p = 0;
  int d = 0;

  friend bool operator==(const KernelTerm&, const KernelTerm&) = default;
};

/// Sorts by (e1, e0, p, d), merges equal keys and drops zero coefficients.
std::vector<KernelTerm> canonicalize(std::vector<KernelTerm> terms);

/// True when `terms` is already in canonical form and every p, d >= 0.
bool is_canonical(const std::vector<KernelTerm>& terms);

/// Univariate rational function sum scale * c X^p (1-X)^(-d).
class UniExpr {
public:
  UniExpr() = default;
  UniExpr(Rational k, Rational scale, std::vector<KernelTerm> terms);

  const Rational& k() const { return k_; }
  const Rational& scale() const { return scale_; }
  const std::vector<KernelTerm>& terms() const { return terms_; }

  /// scale * sum of terms at X; requires X < 1.
  double operator()(double x) const;
  /// d/dX.
  UniExpr derivative() const;
  UniExpr scaled(const Rational& s) const;

  friend bool operator==(const UniExpr&, const UniExpr&) = default;

private:
  Rational k_{1};
  Rational scale_{1};
  std::vector<KernelTerm> terms_;
};

/// Two-variable expression in (t1, t2), stored over the canonical variables
/// (u, lambda). The parameter k is fixed; exponents keep the 1/k symbol.
class KernelExpr {
public:
  KernelExpr() = default;
  KernelExpr(Rational k, Rational scale, std::vector<KernelTerm> terms);

  const Rational& k() const { return k_; }
  const Rational& scale() const { return scale_; }
  const std::vector<KernelTerm>& terms() const { return terms_; }

  /// scale * sum of terms at (t1, t2); requires t1 < 1 and t2^k < 1 - t1.
  double operator()(double t1, double t2) const;
  KernelExpr d_t1() const;
  KernelExpr d_t2() const;
  KernelExpr scaled(const Rational& s) const;

  friend bool operator==(const KernelExpr&, const KernelExpr&) = default;

private:
  Rational k_{1};
  Rational scale_{1};
  std::vector<KernelTerm> terms_;
};

enum class EmitFormat { text, latex, json };

EmitFormat parse_emit_format(std::string_view s);

std::string emit(const UniExpr& e, EmitFormat fmt);
std::string emit(const KernelExpr& e, EmitFormat fmt);

/// Parses the JSON encoding produced by emit(..., json). Throws ParseError.
std::variant<UniExpr, KernelExpr> parse_expr_json(std::string_view text);

} // namespace bergman
