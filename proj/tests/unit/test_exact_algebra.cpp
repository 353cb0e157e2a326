#include "bergman/domain.hpp"
#include "bergman/errors.hpp"
#include "bergman/exact_algebra.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <random>

using namespace bergman;

namespace {

RatPoly product_form(std::initializer_list<std::pair<Rational, int>> factors) {
  RatPoly p = RatPoly::constant(Rational(1));
  for (const auto& [shift, len] : factors) p *= pochhammer(shift, len);
  return p;
}

RatPoly chi_of(const DomainSpec& spec) { return chi_poly(invariants(spec)).expand(); }

} // namespace

TEST_CASE("rational parsing is exact") {
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-1.25") == Rational(-5, 4));
  CHECK(Rational::parse(" 7 ") == Rational(7));
  CHECK(Rational::parse(".5") == Rational(1, 2));
  CHECK(Rational::parse("3/2").str() == "3/2");
  CHECK(Rational::parse("-4/2").str() == "-2");
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1.2.3"), ParseError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
}

TEST_CASE("rational helpers") {
  CHECK(factorial(0) == Rational(1));
  CHECK(factorial(11) == Rational(39916800));
  CHECK(binomial(5, 2) == Rational(10));
  CHECK(binomial(3, 5) == Rational(0));
  CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(Rational(7, 2).to_double() == doctest::Approx(3.5));
  CHECK_THROWS_AS(Rational(1, 2).to_long(), InvalidParams);
}

TEST_CASE("ratpoly trims and evaluates") {
  RatPoly p({Rational(1), Rational(0), Rational(0)});
  CHECK(p.degree() == 0);
  CHECK(RatPoly().degree() == -1);
  CHECK(RatPoly().is_zero());
  RatPoly q = RatPoly::linear(Rational(2), Rational(-1)); // 2x - 1
  CHECK((q * q)(Rational(1, 2)) == Rational(0));
  CHECK(q.compose_linear(Rational(1, 2), Rational(1)) == RatPoly::linear(Rational(1), Rational(1)));
  CHECK(poly_eval(q, Rational(3)) == Rational(5));
  CHECK((q - q).is_zero());
}

TEST_CASE("pochhammer polynomials") {
  CHECK(pochhammer(Rational(0), 0) == RatPoly::constant(Rational(1)));
  CHECK(pochhammer(Rational(1), 2) == RatPoly({Rational(2), Rational(3), Rational(1)}));
  CHECK(pochhammer(Rational(3, 2), 1) == RatPoly::linear(Rational(1), Rational(3, 2)));
  CHECK(pochhammer(Rational(1), 2)(Rational(1, 2)) == Rational(15, 4));
}

TEST_CASE("chi product form for the disc and the exceptional types") {
  PochhammerForm disc = chi_poly(invariants(DomainSpec::type_I(1, 1)));
  CHECK(disc.str() == "(s+1)");
  CHECK(disc.expand() == RatPoly::linear(Rational(1), Rational(1)));
  CHECK(disc.expand()(Rational(0)) == Rational(1));

  PochhammerForm v = chi_poly(invariants(DomainSpec::type_V()));
  CHECK(v.str() == "(s+1)_11 * (s+4)_5");
  CHECK(v.json() == R"([{"shift": "1", "length": 11}, {"shift": "4", "length": 5}])");
  CHECK(v.expand()(Rational(0)) == Rational(268240896000L));

  PochhammerForm vi = chi_poly(invariants(DomainSpec::type_VI()));
  CHECK(vi.str() == "(s+1)_17 * (s+5)_9 * (s+9)");
}

TEST_CASE("chi factorisation identities") {
  CHECK(chi_of(DomainSpec::type_V()) == product_form({{Rational(1), 8}, {Rational(4), 8}}));
  CHECK(chi_of(DomainSpec::type_V()) == product_form({{Rational(1), 11}, {Rational(4), 5}}));
  CHECK(chi_of(DomainSpec::type_VI()) == product_form({{Rational(1), 9}, {Rational(5), 9}, {Rational(9), 9}}));
  CHECK(chi_of(DomainSpec::type_VI()) == product_form({{Rational(1), 17}, {Rational(5), 9}, {Rational(9), 1}}));

  for (int m = 1; m <= 4; ++m)
    for (int n = m; n <= 4; ++n) {
      RatPoly want = RatPoly::constant(Rational(1));
      for (int j = 1; j <= m; ++j) want *= pochhammer(Rational(j), n);
      CHECK(chi_of(DomainSpec::type_I(m, n)) == want);
    }
  for (int p = 1; p <= 3; ++p) {
    RatPoly even = RatPoly::constant(Rational(1));
    RatPoly odd = RatPoly::constant(Rational(1));
    for (int j = 1; j <= p; ++j) {
      even *= pochhammer(Rational(2 * j - 1), 2 * p - 1);
      odd *= pochhammer(Rational(2 * j - 1), 2 * p + 1);
    }
    CHECK(chi_of(DomainSpec::type_II(2 * p)) == even);
    CHECK(chi_of(DomainSpec::type_II(2 * p + 1)) == odd);
  }
}

TEST_CASE("chi degree, table forms and root structure over the catalog") {
  for (const auto& spec : catalog_sweep()) {
    CAPTURE(spec.str());
    const PochhammerForm f = chi_poly(invariants(spec));
    CHECK(f.expand().degree() == invariants(spec).n);
    CHECK(f.degree() == invariants(spec).n);
    CHECK(chi_table_form(spec).expand() == f.expand());
    for (const auto& fac : f.factors) {
      // roots -shift - i are negative integers or half integers
      CHECK(fac.shift.sign() > 0);
      CHECK((fac.shift * Rational(2)).is_integer());
    }
  }
}

TEST_CASE("chi values for I(2,2)") {
  const RatPoly chi = chi_of(DomainSpec::type_I(2, 2));
  CHECK(chi(Rational(0)) == Rational(12));
  CHECK(chi(Rational(1)) == Rational(72));
  CHECK(chi(Rational(2)) == Rational(240));
  CHECK(chi(Rational(0)) / chi(Rational(2)) == Rational(1, 20));
}

TEST_CASE("selberg F and its ratio law") {
  const auto disc = invariants(DomainSpec::type_I(1, 1));
  CHECK(selberg_F(disc, 0.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(selberg_F(disc, 1.0) / selberg_F(disc, 0.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK_THROWS_AS(selberg_F(disc, -1.0), DomainError);
  CHECK_THROWS_AS(selberg_ratio(disc, -2.0), DomainError);

  const auto i22 = invariants(DomainSpec::type_I(2, 2));
  CHECK(rel_err(selberg_F(i22, 2.0) / selberg_F(i22, 0.0), 1.0 / 20.0) < 1e-12);

  for (const auto& spec : catalog_sweep()) {
    const auto inv = invariants(spec);
    if (inv.n > 8 || spec.kind() == DomainKind::V || spec.kind() == DomainKind::VI) continue;
    const RatPoly chi = chi_poly(inv).expand();
    for (const Rational s : {Rational(1, 2), Rational(1), Rational(2), Rational(7, 3)}) {
      CAPTURE(spec.str());
      CAPTURE(s.str());
      const double want = (chi(Rational(0)) / chi(s)).to_double();
      CHECK(rel_err(selberg_F(inv, s.to_double()) / selberg_F(inv, 0.0), want) < 1e-10);
      CHECK(rel_err(selberg_ratio(inv, s.to_double()), want) < 1e-10);
    }
  }
}

TEST_CASE("binomial basis") {
  CHECK(to_binom_basis(RatPoly::constant(Rational(1))) == std::vector<Rational>{Rational(1)});
  CHECK(to_binom_basis(pochhammer(Rational(1), 2)) == std::vector<Rational>{Rational(0), Rational(0), Rational(2)});
  CHECK(to_binom_basis(RatPoly::linear(Rational(1), Rational(0))) == std::vector<Rational>{Rational(-1), Rational(1)});
  CHECK(to_binom_basis(RatPoly()).empty());
}

TEST_CASE("shifted pochhammer basis") {
  CHECK(to_shifted_pochhammer_basis(RatPoly::linear(Rational(1), Rational(1))) == std::vector<Rational>{Rational(1)});
  const RatPoly h = RatPoly::linear(Rational(1), Rational(0));
  const RatPoly disc = h * RatPoly::linear(Rational(1), Rational(-1)) * RatPoly::linear(Rational(1), Rational(1));
  CHECK(to_shifted_pochhammer_basis(disc) == std::vector<Rational>{Rational(6), Rational(-6), Rational(1)});
  CHECK(to_shifted_pochhammer_basis(pochhammer(Rational(1), 2)) == std::vector<Rational>{Rational(0), Rational(1)});
  CHECK_THROWS_AS(to_shifted_pochhammer_basis(RatPoly::constant(Rational(1))), BasisError);
}

TEST_CASE("basis round trips on random polynomials") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coef(-20, 20);
  std::uniform_int_distribution<int> deg(0, 12);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> c;
    const int d = deg(rng);
    for (int i = 0; i <= d; ++i) c.emplace_back(coef(rng), 1 + (i % 3));
    const RatPoly p(c);

    const auto cb = to_binom_basis(p);
    RatPoly back;
    for (std::size_t dd = 0; dd < cb.size(); ++dd) {
      // C(j+d, d) = (j+1)_d / d!
      back += pochhammer(Rational(1), static_cast<int>(dd)) * (cb[dd] / factorial(static_cast<unsigned>(dd)));
    }
    CHECK(back == p);

    const RatPoly vanishing = p * RatPoly::linear(Rational(1), Rational(1));
    const auto b = to_shifted_pochhammer_basis(vanishing);
    RatPoly back2;
    for (std::size_t j = 0; j < b.size(); ++j) back2 += pochhammer(Rational(1), static_cast<int>(j + 1)) * b[j];
    CHECK(back2 == vanishing);
  }
}
