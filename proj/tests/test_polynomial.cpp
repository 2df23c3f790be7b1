/*
   Copyright 2026 The dunford authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "dunford/polynomial.hpp"
#include "golden.hpp"
#include "test_support.hpp"

namespace dunford {
namespace {

using testing_support::linear_factor;
using testing_support::poly;
using testing_support::q;
using Poly = RationalPolynomial;

Poly random_poly(std::mt19937_64& rng, long max_degree, long max_num, long max_den) {
  const long degree = testing_support::uniform(rng, -1, max_degree);
  std::vector<Rational> c;
  for (long i = 0; i <= degree; ++i) c.push_back(testing_support::random_rational(rng, max_num, max_den));
  return Poly(std::move(c));
}

// F(G) by full expansion, no intermediate reduction.
Poly naive_compose(const Poly& f, const Poly& g) {
  Poly out;
  Poly power = Poly::constant(Rational(1));
  for (const auto& c : f.coefficients()) {
    out += power * c;
    power *= g;
  }
  return out;
}

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rational(BigInt(6), BigInt(-4)).to_string(), "-3/2");
  EXPECT_EQ(Rational::parse("0/5").to_string(), "0");
  EXPECT_EQ(Rational::parse("+7").to_string(), "7");
  EXPECT_EQ(Rational::parse("-10/4"), q("-5/2"));
  EXPECT_TRUE(Rational::parse("-10/4").denominator() > 0);
}

TEST(Rational, RejectsMalformedAndZeroDivision) {
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1.5"), std::invalid_argument);
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
  EXPECT_THROW(Rational::parse("2/-3"), std::invalid_argument);
  EXPECT_THROW(Rational(1) / Rational(0), PreconditionError);
}

TEST(Degree, ZeroPolynomialIsMinusInfinity) {
  EXPECT_TRUE(Poly().degree().is_minus_infinity());
  EXPECT_LT(Poly().degree(), Poly::constant(Rational(3)).degree());
  EXPECT_EQ(poly({"1", "0", "2"}).degree(), Degree(2));
  EXPECT_EQ(poly({"1", "2", "0", "0"}).degree(), Degree(1));
  EXPECT_THROW((void)Poly().degree().value(), std::bad_optional_access);
}

TEST(Derivative, Examples) {
  EXPECT_EQ(derivative(poly({"0", "-2", "0", "1"})), poly({"-2", "0", "3"}));
  EXPECT_TRUE(derivative(Poly::constant(Rational(5))).is_zero());
  // Coefficient-wise power rule applied to the golden 6x6 characteristic polynomial.
  EXPECT_EQ(derivative(golden::chi6()), poly({"-15872", "16896", "-7104", "1472", "-150", "6"}));
}

TEST(DivRem, Examples) {
  {
    auto [quot, rem] = divrem(poly({"-1", "0", "1"}), poly({"-1", "1"}));
    EXPECT_EQ(quot, poly({"1", "1"}));
    EXPECT_TRUE(rem.is_zero());
  }
  {
    auto [quot, rem] = divrem(poly({"0", "1"}), poly({"0", "0", "1"}));
    EXPECT_TRUE(quot.is_zero());
    EXPECT_EQ(rem, poly({"0", "1"}));
  }
  {
    const Poly a = poly({"1", "1", "0", "1"});
    const Poly b = poly({"1", "2"});
    auto [quot, rem] = divrem(a, b);
    EXPECT_EQ(quot, poly({"5/8", "-1/4", "1/2"}));
    EXPECT_EQ(rem, poly({"3/8"}));
    EXPECT_EQ(b * quot + rem, a);
  }
}

TEST(DivRem, ByZeroThrows) {
  try {
    divrem(poly({"1"}), Poly());
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DivisionByZeroPolynomial);
  }
}

TEST(DivRem, PropertyRandom) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Poly a = random_poly(rng, 6, 9, 4);
    Poly b = random_poly(rng, 4, 9, 4);
    if (b.is_zero()) b = Poly::constant(Rational(3));
    auto [quot, rem] = divrem(a, b);
    EXPECT_EQ(b * quot + rem, a);
    EXPECT_LT(rem.degree(), b.degree());
  }
}

TEST(Gcd, Examples) {
  const Poly x1 = linear_factor(Rational(1));
  const Poly a = x1 * x1 * linear_factor(Rational(2));
  const Poly b = x1 * linear_factor(Rational(3));
  EXPECT_EQ(gcd(a, b), x1);
  EXPECT_EQ(gcd(poly({"2", "4"}), Poly()), poly({"1/2", "1"}));
  // chi6 = (x-8)(x-6)(x-4)^4, so gcd(chi6, chi6') = (x-4)^3.
  EXPECT_EQ(gcd(golden::chi6(), derivative(golden::chi6())), pow(linear_factor(Rational(4)), 3));
}

TEST(Gcd, BothZeroThrows) {
  EXPECT_THROW(gcd(Poly(), Poly()), PreconditionError);
  EXPECT_THROW(extended_gcd(Poly(), Poly()), PreconditionError);
}

TEST(Gcd, PropertyDividesBothAndMonic) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const Poly common = random_poly(rng, 2, 5, 3);
    const Poly a = random_poly(rng, 3, 5, 3) * common;
    const Poly b = random_poly(rng, 3, 5, 3) * common;
    if (a.is_zero() && b.is_zero()) continue;
    const Poly g = gcd(a, b);
    EXPECT_EQ(g.leading(), Rational(1));
    EXPECT_TRUE(mod(a, g).is_zero());
    EXPECT_TRUE(mod(b, g).is_zero());
    if (!common.is_zero()) {
      EXPECT_TRUE(mod(g, common.monic()).is_zero());
    }
  }
}

TEST(ExtendedGcd, Examples) {
  {
    const auto r = extended_gcd(linear_factor(Rational(1)), linear_factor(Rational(2)));
    EXPECT_EQ(r.gcd, poly({"1"}));
    EXPECT_EQ(r.u, poly({"1"}));
    EXPECT_EQ(r.v, poly({"-1"}));
  }
  {
    const auto r = extended_gcd(poly({"0", "0", "1"}), poly({"0", "1"}));
    EXPECT_EQ(r.gcd, poly({"0", "1"}));
    EXPECT_TRUE(r.u.is_zero());
    EXPECT_EQ(r.v, poly({"1"}));
  }
  {
    const Poly p = linear_factor(Rational(8)) * linear_factor(Rational(6)) * linear_factor(Rational(4));
    const auto r = extended_gcd(p, derivative(p));
    EXPECT_EQ(r.gcd, poly({"1"}));
    EXPECT_EQ(r.u * p + r.v * derivative(p), poly({"1"}));
  }
}

TEST(ExtendedGcd, PropertyBezoutIdentity) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const Poly a = random_poly(rng, 5, 7, 3);
    const Poly b = random_poly(rng, 5, 7, 3);
    if (a.is_zero() && b.is_zero()) continue;
    const auto r = extended_gcd(a, b);
    EXPECT_TRUE((r.u * a + r.v * b - r.gcd).is_zero());
    EXPECT_EQ(r.gcd, gcd(a, b));
  }
}

TEST(SquarefreePart, Examples) {
  EXPECT_EQ(squarefree_part(pow(linear_factor(Rational(1)), 3)), linear_factor(Rational(1)));
  const Poly sf = poly({"6", "-10", "4"});  // 4x^2 - 10x + 6 = 4(x-1)(x-3/2)
  EXPECT_EQ(squarefree_part(sf), sf.monic());
  EXPECT_EQ(squarefree_part(golden::chi6()), poly({"-192", "104", "-18", "1"}));
  EXPECT_THROW(squarefree_part(Poly()), PreconditionError);
}

TEST(SquarefreePart, PropertyCoprimeToDerivative) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    Poly p = Poly::constant(Rational(testing_support::uniform(rng, 1, 5)));
    const long factors = testing_support::uniform(rng, 1, 4);
    for (long k = 0; k < factors; ++k) {
      p *= pow(linear_factor(Rational(testing_support::uniform(rng, -4, 4))),
               static_cast<std::size_t>(testing_support::uniform(rng, 1, 3)));
    }
    const Poly s = squarefree_part(p);
    EXPECT_EQ(gcd(s, derivative(s)), poly({"1"}));
    EXPECT_TRUE(mod(p, s).is_zero());
  }
}

TEST(ComposeMod, Examples) {
  EXPECT_EQ(compose_mod(poly({"0", "0", "1"}), poly({"1", "1"}), poly({"0", "0", "0", "1"})), poly({"1", "2", "1"}));
  const Poly m = poly({"1", "2", "0", "1"});
  const Poly g = poly({"3", "-1", "5", "2", "7"});
  EXPECT_EQ(compose_mod(Poly::x(), g, m), mod(g, m));
  EXPECT_EQ(compose_mod(poly({"1", "0", "1"}), poly({"0", "0", "1"}), poly({"-1", "0", "0", "1"})), poly({"1", "1"}));
}

TEST(ComposeMod, ConstantModulusThrows) {
  EXPECT_THROW(compose_mod(Poly::x(), Poly::x(), Poly()), PreconditionError);
  EXPECT_THROW(compose_mod(Poly::x(), Poly::x(), poly({"2"})), PreconditionError);
}

TEST(ComposeMod, PropertyMatchesNaiveComposition) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 150; ++trial) {
    const Poly f = random_poly(rng, 6, 6, 3);
    const Poly g = random_poly(rng, 6, 6, 3);
    Poly m = random_poly(rng, 6, 6, 3);
    if (m.is_constant()) m = poly({"1", "0", "1"});
    EXPECT_EQ(compose_mod(f, g, m), mod(naive_compose(f, g), m));
  }
}

TEST(Crt, Examples) {
  EXPECT_EQ(crt_solve(std::vector<Poly>{poly({"1"})}, std::vector<Poly>{linear_factor(Rational(1))}), poly({"1"}));
  EXPECT_EQ(crt_solve(std::vector<Poly>{Poly(), poly({"1"})},
                      std::vector<Poly>{Poly::x(), linear_factor(Rational(1))}),
            Poly::x());
}

TEST(Crt, GoldenGeneratorReproducesD) {
  const std::vector<Poly> moduli{linear_factor(Rational(8)), linear_factor(Rational(6)),
                                 pow(linear_factor(Rational(4)), 4)};
  const std::vector<Poly> residues{poly({"8"}), poly({"6"}), poly({"4"})};
  const Poly generator = crt_solve(residues, moduli);
  EXPECT_EQ(generator.degree(), Degree(5));
  EXPECT_TRUE(exactly_equal(evaluate(generator, golden::a6()), golden::d6()));
}

TEST(Crt, IdempotentsMatchPartialFractionProjectors) {
  const std::vector<Poly> moduli{linear_factor(Rational(8)), linear_factor(Rational(6)),
                                 pow(linear_factor(Rational(4)), 4)};
  const auto e = crt_idempotents(std::span<const Poly>(moduli));
  const auto reference = golden::projector_polys6();
  ASSERT_EQ(e.size(), 3U);
  EXPECT_EQ(e[0], reference[0]);
  EXPECT_EQ(e[1], reference[1]);
  EXPECT_EQ(e[2], poly({"1"}) - reference[0] - reference[1]);
  EXPECT_NE(e[2], reference[2]);
  EXPECT_TRUE(exactly_equal(evaluate(e[2], golden::a6()), evaluate(reference[2], golden::a6())));
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_TRUE(mod(e[i] - poly({"1"}), moduli[i]).is_zero());
    for (std::size_t j = 0; j < 3; ++j) {
      if (j == i) continue;
      EXPECT_TRUE(mod(e[i], moduli[j]).is_zero());
    }
  }
}

TEST(Crt, Errors) {
  try {
    crt_solve(std::vector<Poly>{poly({"1"}), poly({"2"}), poly({"3"})},
              std::vector<Poly>{Poly::x(), linear_factor(Rational(1)), poly({"0", "-1", "1"})});
    FAIL();
  } catch (const NotCoprimeError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotCoprime);
    EXPECT_EQ(e.first(), 0U);
    EXPECT_EQ(e.second(), 2U);
  }
  try {
    crt_solve(std::vector<Poly>{poly({"1"})}, std::vector<Poly>{Poly::x(), linear_factor(Rational(1))});
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::LengthMismatch);
  }
}

// Brute force over the quotient ring: every polynomial of degree < 4 with coefficients
// in [-2, 2] is tested against the congruences. Exactly one candidate must match.
TEST(Crt, PropertyMatchesExhaustiveSearch) {
  std::mt19937_64 rng(16);
  const std::vector<std::vector<Poly>> modulus_sets{
      {Poly::x(), linear_factor(Rational(1)), poly({"1", "0", "1"})},
      {poly({"0", "0", "1"}), poly({"-2", "0", "1"})},
      {linear_factor(Rational(-1)), poly({"-1", "1", "1"}), linear_factor(Rational(2))},
      {pow(linear_factor(Rational(1)), 3), linear_factor(Rational(-2))},
  };
  for (const auto& moduli : modulus_sets) {
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<Rational> c;
      for (int i = 0; i < 4; ++i) c.push_back(Rational(testing_support::uniform(rng, -2, 2)));
      const Poly planted(c);
      std::vector<Poly> residues;
      for (const auto& m : moduli) residues.push_back(mod(planted, m));

      std::vector<Poly> hits;
      for (int c0 = -2; c0 <= 2; ++c0)
        for (int c1 = -2; c1 <= 2; ++c1)
          for (int c2 = -2; c2 <= 2; ++c2)
            for (int c3 = -2; c3 <= 2; ++c3) {
              const Poly candidate{Rational(c0), Rational(c1), Rational(c2), Rational(c3)};
              bool ok = true;
              for (std::size_t i = 0; i < moduli.size() && ok; ++i) ok = mod(candidate - residues[i], moduli[i]).is_zero();
              if (ok) hits.push_back(candidate);
            }
      ASSERT_EQ(hits.size(), 1U);
      const Poly solved = crt_solve(residues, moduli);
      EXPECT_EQ(solved, hits.front());
      EXPECT_LT(solved.degree(), Degree(4));
    }
  }
}

}  // namespace
}  // namespace dunford
