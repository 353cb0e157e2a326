#pragma once

namespace bergman {

/// Numerical invariants of an irreducible Hermitian positive Jordan triple:
/// rank r, multiplicities a and b, genus g and complex dimension n.
struct JordanInvariants {
  int r = 0;
  int a = 0;
  int b = 0;
  int g = 0;
  int n = 0;

  bool tube_type() const { return b == 0; }

  /// Builds the invariants from (r, a, b); g and n are derived.
  static constexpr JordanInvariants from_rab(int r, int a, int b) {
    return JordanInvariants{r, a, b, 2 + a * (r - 1) + b, r * (1 + b) + r * (r - 1) * a / 2};
  }

  friend bool operator==(const JordanInvariants&, const JordanInvariants&) = default;
};

} // namespace bergman
