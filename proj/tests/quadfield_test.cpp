#include <random>

#include <gtest/gtest.h>

#include "isogeny/errors.hpp"
#include "isogeny/quadfield.hpp"
#include "oracles.hpp"

using namespace isogeny;

TEST(QuadField, Construction) {
  const QuadField F5 = QuadField::make(5);
  EXPECT_EQ(F5.disc(), 5);
  EXPECT_EQ(F5.unit_rank(), 1);
  EXPECT_EQ(F5.omega_trace(), 1);
  EXPECT_EQ(F5.omega_norm(), -1);  // omega = (1 + sqrt 5)/2

  const QuadField Fm10 = QuadField::make(-10);
  EXPECT_EQ(Fm10.disc(), -40);
  EXPECT_EQ(Fm10.unit_rank(), 0);
  EXPECT_EQ(Fm10.omega_trace(), 0);
  EXPECT_EQ(Fm10.omega_norm(), 10);  // omega = sqrt(-10)

  EXPECT_THROW(QuadField::make(12), NotSquarefree);
  EXPECT_THROW(QuadField::make(0), InvalidD);
  EXPECT_THROW(QuadField::make(1), InvalidD);
  EXPECT_THROW(QuadField::make(-4), NotSquarefree);
}

TEST(QuadField, DiscriminantAndRankInvariants) {
  for (std::int64_t D = -300; D <= 300; ++D) {
    if (D == 0 || D == 1 || !oracle::squarefree(D)) continue;
    const QuadField F = QuadField::make(D);
    EXPECT_EQ(F.disc(), oracle::fundamental_disc(D));
    EXPECT_EQ(F.unit_rank(), D > 0 ? 1 : 0);
  }
}

TEST(QuadField, NormExamples) {
  const QuadField F5 = QuadField::make(5);
  EXPECT_EQ(F5.norm(QuadInt(3, 1)), 11);
  const QuadField Fm10 = QuadField::make(-10);
  EXPECT_EQ(Fm10.norm(QuadInt(1, 1)), 11);
  for (std::int64_t D : {5, -10, 7, -3}) {
    const QuadField F = QuadField::make(D);
    EXPECT_EQ(F.norm(QuadInt(1, 0)), 1);
    EXPECT_EQ(F.conj(QuadInt(1, 0)), QuadInt(1, 0));
  }
}

// Ring axioms, multiplicativity of the norm, conjugation as an involution
// and x * conj(x) = norm(x), on random elements of many fields.
TEST(QuadField, RingProperties) {
  std::mt19937_64 rng(0xF1E1D);
  std::uniform_int_distribution<long> coord(-10'000, 10'000);
  for (std::int64_t D : std::initializer_list<std::int64_t>{-1, -2, -3, -5, -10, -31159, 2, 3, 5, 7, 13, 2885, 39816211853}) {
    const QuadField F = QuadField::make(D);
    for (int i = 0; i < 500; ++i) {
      const QuadInt x(coord(rng), coord(rng)), y(coord(rng), coord(rng)), z(coord(rng), coord(rng));
      ASSERT_EQ(F.norm(F.mul(x, y)), F.norm(x) * F.norm(y));
      ASSERT_EQ(F.conj(F.conj(x)), x);
      ASSERT_EQ(F.mul(x, F.conj(x)), QuadInt(F.norm(x)));
      ASSERT_EQ(F.add(x, F.conj(x)), QuadInt(F.trace(x)));
      ASSERT_EQ(F.mul(F.mul(x, y), z), F.mul(x, F.mul(y, z)));
      ASSERT_EQ(F.mul(x, F.add(y, z)), F.add(F.mul(x, y), F.mul(x, z)));
      ASSERT_EQ(F.sub(F.add(x, y), y), x);
      ASSERT_EQ(F.conj(F.mul(x, y)), F.mul(F.conj(x), F.conj(y)));
      ASSERT_EQ(F.pow(x, 3), F.mul(x, F.mul(x, x)));
    }
  }
}

TEST(QuadField, HalfSqrtDiscEmbedding) {
  // sqrt(disc) = 2*omega - T, so (u + v sqrt(disc))/2 has norm (u^2 - v^2 disc)/4.
  for (std::int64_t D : {5, 13, 2, 3, -10, -3, -7}) {
    const QuadField F = QuadField::make(D);
    for (long u = -7; u <= 7; ++u) {
      for (long v = -7; v <= 7; ++v) {
        if ((u * u - v * v * F.disc()) % 4 != 0) continue;
        const QuadInt x = F.from_half_sqrt_disc(u, v);
        EXPECT_EQ(F.norm(x), (BigInt(u * u) - BigInt(v * v) * F.disc_big()) / 4);
        EXPECT_EQ(F.trace(x), u);
      }
    }
  }
}

TEST(SplittingType, Examples) {
  const QuadField F = QuadField::make(5);
  EXPECT_EQ(splitting_type(F, 11), SplitType::Split);
  EXPECT_EQ(splitting_type(F, 5), SplitType::Ramified);
  EXPECT_EQ(splitting_type(F, 2), SplitType::Inert);
}

TEST(SplittingType, DeterminedByKronecker) {
  for (std::int64_t D : {-10, -6, -5, -1, 2, 3, 5, 6, 7, 10, -31159}) {
    const QuadField F = QuadField::make(D);
    for (std::uint64_t q : oracle::primes_up_to(500)) {
      const int k = oracle::kronecker(F.disc(), static_cast<std::int64_t>(q));
      const SplitType expected = k == 1 ? SplitType::Split : k == 0 ? SplitType::Ramified : SplitType::Inert;
      EXPECT_EQ(splitting_type(F, q), expected) << D << " " << q;
    }
  }
}

TEST(FundamentalUnit, Examples) {
  const QuadField F5 = QuadField::make(5);
  const FundamentalUnit& u5 = F5.fundamental_unit();
  EXPECT_EQ(u5.unit, QuadInt(0, 1));  // omega
  EXPECT_EQ(u5.norm, -1);
  EXPECT_NEAR(u5.regulator.convert_to<double>(), 0.481212, 5e-7);

  const QuadField F2 = QuadField::make(2);
  EXPECT_EQ(F2.fundamental_unit().unit, QuadInt(1, 1));
  EXPECT_NEAR(F2.regulator().convert_to<double>(), 0.881374, 5e-7);

  const QuadField F3 = QuadField::make(3);
  EXPECT_EQ(F3.fundamental_unit().unit, QuadInt(2, 1));
  EXPECT_EQ(F3.fundamental_unit().norm, 1);

  EXPECT_THROW(QuadField::make(-5).fundamental_unit(), CalledOnImaginary);
}

// Pell brute force: the least y > 0 with x^2 - D y^2 = +-1 (D = 2, 3 mod 4),
// or x^2 - D y^2 = +-4 (D = 1 mod 4) gives the fundamental unit.
TEST(FundamentalUnit, MatchesPellBruteForce) {
  for (std::int64_t D = 2; D <= 150; ++D) {
    if (!oracle::squarefree(D)) continue;
    const bool half = D % 4 == 1;
    const long k = half ? 4 : 1;
    long x = 0, y = 0;
    for (long yy = 1; yy < 2'000'000 && x == 0; ++yy) {
      for (long sgn : {-1L, 1L}) {
        const long x2 = D * yy * yy + sgn * k;
        const auto xr = static_cast<long>(std::llround(std::sqrt(static_cast<double>(x2))));
        if (xr > 0 && xr * xr == x2) {
          x = xr;
          y = yy;
          break;
        }
      }
    }
    if (x == 0) continue;  // outside the brute-force range
    const QuadField F = QuadField::make(D);
    const FundamentalUnit& u = F.fundamental_unit();
    // (x + y sqrt D)/sqrt(k) in the omega basis.
    const QuadInt expected = half ? F.from_half_sqrt_disc(x, y) : QuadInt(x, y);
    EXPECT_EQ(u.unit, expected) << "D = " << D;
    EXPECT_EQ(F.norm(u.unit), u.norm);
    const double eps = (static_cast<double>(x) + static_cast<double>(y) * std::sqrt(static_cast<double>(D))) /
                       (half ? 2.0 : 1.0);
    EXPECT_NEAR(u.regulator.convert_to<double>(), std::log(eps), 1e-9 * std::log(eps));
  }
}

TEST(FundamentalUnit, LargeFieldsAreUnitsAboveOne) {
  for (std::int64_t D : std::initializer_list<std::int64_t>{2885, 2036079533, 94, 421, 39816211853}) {
    const QuadField F = QuadField::make(D);
    const FundamentalUnit& u = F.fundamental_unit();
    EXPECT_EQ(abs(F.norm(u.unit)), 1);
    EXPECT_GT(F.embed(u.unit), 1);
    EXPECT_GT(u.regulator, 0);
    const BigReal rel = abs(log(F.embed(u.unit)) - u.regulator) / u.regulator;
    EXPECT_LT(rel.convert_to<double>(), 1e-40);
  }
}
