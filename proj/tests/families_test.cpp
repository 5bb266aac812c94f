#include "qortho/families.hpp"

#include <gtest/gtest.h>

#include <random>

namespace qortho {
namespace {

ParityPoly poly(std::vector<Rational> c) { return ParityPoly::from_coeffs(std::move(c)); }

TEST(Rodrigues, LowOrders) {
  // any a, c, n = 0 -> 1
  EXPECT_EQ(rodrigues_poly(Rational(5, 7), Rational(-3), 0), ParityPoly::one());

  // a = -N, c = 1/N, n = 1 -> -2X for every N
  for (const Rational& N : {Rational(1), Rational(3), Rational(7, 2)}) {
    EXPECT_EQ(rodrigues_poly(-N, Rational(1) / N, 1), ParityPoly::monomial(1, Rational(-2)));
  }
}

TEST(Rodrigues, RelativisticHermiteExamples) {
  // H_1^N = 2X; H_2^N = 2(-1 + X^2 (2 + 1/N)); H_3^N = 4(1+1/N)(X^3(2+1/N) - 3X)
  for (const Rational& N : {Rational(1), Rational(3), Rational(7, 2), Rational(41, 4)}) {
    auto h1 = family_poly({Family::RHP, 1, N});
    EXPECT_EQ(h1, ParityPoly::monomial(1, Rational(2)));

    auto h2 = family_poly({Family::RHP, 2, N});
    EXPECT_EQ(h2, poly({Rational(-2), Rational(0), 2 * (Rational(2) + 1 / N)}));

    auto h3 = family_poly({Family::RHP, 3, N});
    Rational a = 4 * (1 + 1 / N);
    EXPECT_EQ(h3, poly({Rational(0), -3 * a, Rational(0), a * (Rational(2) + 1 / N)}));
  }
  // H_2^3 = -2 + (14/3) X^2
  EXPECT_EQ(family_poly({Family::RHP, 2, Rational(3)}),
            poly({Rational(-2), Rational(0), Rational(14, 3)}));
}

TEST(Families, GegenbauerExplicitExamples) {
  // C_1^nu = 2 nu X, C_2^nu = 2 nu(nu+1) X^2 - nu, C_3^nu = 2 nu(nu+1)((2(nu+2)/3)X^3 - X)
  for (const Rational& nu : {Rational(1), Rational(2), Rational(5, 2), Rational(1, 2)}) {
    EXPECT_EQ(family_poly({Family::Gegenbauer, 0, nu}), ParityPoly::one());
    EXPECT_EQ(family_poly({Family::Gegenbauer, 1, nu}), ParityPoly::monomial(1, 2 * nu));
    EXPECT_EQ(family_poly({Family::Gegenbauer, 2, nu}),
              poly({-nu, Rational(0), 2 * nu * (nu + 1)}));
    Rational b = 2 * nu * (nu + 1);
    EXPECT_EQ(family_poly({Family::Gegenbauer, 3, nu}),
              poly({Rational(0), -b, Rational(0), b * 2 * (nu + 2) / 3}));
  }
  // C_3^1 = 8X^3 - 4X
  EXPECT_EQ(family_poly({Family::Gegenbauer, 3, Rational(1)}),
            poly({Rational(0), Rational(-4), Rational(0), Rational(8)}));
}

TEST(Families, ClassicalHermiteFirstFour) {
  EXPECT_EQ(family_poly({Family::ClassicalHermite, 0, Rational(0)}), ParityPoly::one());
  EXPECT_EQ(family_poly({Family::ClassicalHermite, 1, Rational(0)}),
            ParityPoly::monomial(1, Rational(2)));
  EXPECT_EQ(family_poly({Family::ClassicalHermite, 2, Rational(0)}),
            poly({Rational(-2), Rational(0), Rational(4)}));
  EXPECT_EQ(family_poly({Family::ClassicalHermite, 3, Rational(0)}),
            poly({Rational(0), Rational(-12), Rational(0), Rational(8)}));
}

TEST(Families, CarinenaPositiveFirstOrder) {
  // one direct differentiation: coefficient 2(Ncal - 1/2)/Ncal
  EXPECT_EQ(family_poly({Family::CarinenaPos, 1, Rational(2)}),
            ParityPoly::monomial(1, Rational(3, 2)));
  for (const Rational& Ncal : {Rational(3), Rational(21, 2)}) {
    EXPECT_EQ(family_poly({Family::CarinenaPos, 1, Ncal}),
              ParityPoly::monomial(1, 2 * (Ncal - Rational(1, 2)) / Ncal));
  }
}

TEST(Families, CarinenaNegativeMatchesDirectDifferentiation) {
  // C_1 at nu = 1: -(1-X^2)^{-1/2} d/dX (1-X^2)^{3/2} = 3X
  EXPECT_EQ(family_poly({Family::CarinenaNeg, 1, Rational(1)}),
            ParityPoly::monomial(1, Rational(3)));
}

TEST(Families, ParameterValidation) {
  EXPECT_THROW(family_poly({Family::Gegenbauer, 2, Rational(0)}), std::domain_error);
  EXPECT_THROW(family_poly({Family::CarinenaPos, 2, Rational(-1)}), std::domain_error);
  EXPECT_THROW(family_poly({Family::CarinenaNeg, 2, Rational(0)}), std::domain_error);
  EXPECT_THROW(family_poly({Family::RHP, 2, Rational(0)}), std::domain_error);
  // alpha_{n,nu} denominator (nu+1/2)_n vanishes at nu = -1/2
  EXPECT_THROW(family_poly({Family::Gegenbauer, 1, Rational(-1, 2)}), std::domain_error);
  EXPECT_THROW(gegenbauer_recurrence(3, Rational(0)), std::domain_error);
}

TEST(Families, DegreeAndParityAcrossFamilies) {
  for (unsigned n = 0; n <= 20; ++n) {
    const Parity expect = n % 2 ? Parity::Odd : Parity::Even;
    const FamilyParam specs[] = {
        {Family::RHP, n, Rational(3)},
        {Family::ClassicalHermite, n, Rational(0)},
        {Family::Gegenbauer, n, Rational(3, 2)},
        {Family::CarinenaPos, n, Rational(41, 2)},
        {Family::CarinenaNeg, n, Rational(7, 2)},
    };
    for (const auto& s : specs) {
      auto p = family_poly(s);
      EXPECT_EQ(p.degree(), static_cast<int>(n)) << family_name(s.family) << " n=" << n;
      EXPECT_EQ(p.parity(), expect) << family_name(s.family) << " n=" << n;
    }
  }
}

// The recurrence is an independent construction path; both must agree
// coefficient-for-coefficient.
TEST(Families, RodriguesAgreesWithRecurrence) {
  const Rational grid[] = {Rational(1, 2), Rational(1),    Rational(3, 2),
                           Rational(2),    Rational(7, 2), Rational(5)};
  for (const Rational& nu : grid) {
    for (unsigned n = 0; n <= 15; ++n) {
      EXPECT_EQ(family_poly({Family::Gegenbauer, n, nu}), gegenbauer_recurrence(n, nu))
          << "nu = " << to_string(nu) << ", n = " << n;
    }
  }
}

// d/dX[(1+cX^2)^(a-k) P_k] = (1+cX^2)^(a-k-1) P_{k+1}: after clearing the
// weight this is P_{k+1} = (1+cX^2) P_k' + 2c(a-k) X P_k, rebuilt here from
// generic polynomial operations.
TEST(Families, RodriguesDerivativeSelfConsistency) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-8, 8);
  std::uniform_int_distribution<int> den(1, 4);
  for (int trial = 0; trial < 25; ++trial) {
    Rational a(num(rng), den(rng));
    Rational c(num(rng), den(rng));
    if (c == 0) c = Rational(1, 2);
    const ParityPoly weight = ParityPoly::from_coeffs({Rational(1), Rational(0), c});
    for (unsigned k = 0; k <= 10; ++k) {
      auto pk = rodrigues_poly(a, c, k);
      auto lhs = rodrigues_poly(a, c, k + 1);
      auto rhs = weight * pk.derivative() +
                 ParityPoly::monomial(1, 2 * c * (a - Rational(k))) * pk;
      EXPECT_EQ(lhs, rhs) << "a=" << to_string(a) << " c=" << to_string(c) << " k=" << k;
    }
  }
}

TEST(OrthoFunction, TableValues) {
  // c_0^1(0) = (1-0)^{1/4} * 1 = 1
  EXPECT_DOUBLE_EQ(ortho_function_eval({Family::Gegenbauer, 0, Rational(1)}, 0.0), 1.0);
  // h_0^N at N = 1, X = 1: (1+1)^{-1} = 0.5
  EXPECT_DOUBLE_EQ(ortho_function_eval({Family::RHP, 0, Rational(1)}, 1.0), 0.5);
  // odd polynomial at the origin
  EXPECT_DOUBLE_EQ(ortho_function_eval({Family::CarinenaPos, 1, Rational(2)}, 0.0), 0.0);
  // classical Hermite function h_1(1) = e^{-1/2} * 2
  EXPECT_NEAR(ortho_function_eval({Family::ClassicalHermite, 1, Rational(0)}, 1.0),
              2 * std::exp(-0.5), 1e-15);
  EXPECT_THROW(ortho_function_eval({Family::Gegenbauer, 0, Rational(1)}, 1.5),
               std::domain_error);
}

TEST(Families, NameRoundTrip) {
  for (Family f : {Family::RHP, Family::ClassicalHermite, Family::Gegenbauer,
                   Family::CarinenaPos, Family::CarinenaNeg}) {
    EXPECT_EQ(family_from_name(family_name(f)), f);
  }
  EXPECT_THROW(family_from_name("legendre"), std::invalid_argument);
}

}  // namespace
}  // namespace qortho
