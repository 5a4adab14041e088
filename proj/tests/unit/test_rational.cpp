#include <doctest.h>

#include "ospd/exactlin/gaussian_rational.hpp"

#include <random>

using ospd::exactlin::GaussianRational;
using ospd::exactlin::Rational;

namespace {

// Mixes tiny values with values near the int64 boundary so both the inline
// path and the GMP spill path get exercised.
Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<long long> small(-12, 12);
  std::uniform_int_distribution<long long> huge(INT64_MAX / 4, INT64_MAX);
  long long num = 0;
  long long den = 1;
  switch (kind(rng)) {
    case 0:
      num = small(rng);
      break;
    case 1:
      num = small(rng);
      den = std::max<long long>(1, std::abs(small(rng)));
      break;
    case 2:
      num = huge(rng) * (small(rng) < 0 ? -1 : 1);
      den = std::max<long long>(1, std::abs(small(rng)));
      break;
    default:
      num = small(rng);
      den = huge(rng);
      break;
  }
  return Rational(num, den);
}

}  // namespace

TEST_CASE("rational arithmetic agrees with GMP") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 4000; ++trial) {
    Rational a = random_rational(rng);
    Rational b = random_rational(rng);
    mpq_class qa = a.to_mpq();
    mpq_class qb = b.to_mpq();
    CHECK((a + b).to_mpq() == qa + qb);
    CHECK((a - b).to_mpq() == qa - qb);
    CHECK((a * b).to_mpq() == qa * qb);
    if (!b.is_zero()) CHECK((a / b).to_mpq() == qa / qb);
    CHECK((a + b).is_canonical());
    CHECK((a * b).is_canonical());
    CHECK(((a * b) * b).is_canonical());
    CHECK(((a < b) == (qa < qb)));
  }
}

TEST_CASE("rational normalization and text form") {
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational(0, 5).str() == "0/1");
  CHECK(Rational(7).str() == "7/1");
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational::parse("3") == Rational(3));
  CHECK_THROWS(Rational(1, 0));
  CHECK_THROWS(Rational(1) / Rational(0));
  CHECK_THROWS(Rational::parse("x/2"));

  // Overflow spills to GMP, and shrinks back when the value becomes small again.
  Rational big(INT64_MAX);
  Rational sq = big * big;
  CHECK_FALSE(sq.is_small());
  CHECK(sq.is_canonical());
  Rational back = sq / big;
  CHECK(back.is_small());
  CHECK(back == big);
}

TEST_CASE("gaussian rational field operations") {
  const GaussianRational i = GaussianRational::i();
  CHECK(i * i == GaussianRational(-1));
  GaussianRational z(Rational(1, 2), Rational(-3));
  CHECK(z * z.inverse() == GaussianRational(1));
  CHECK((z / z).is_one());
  CHECK(z.conj() == GaussianRational(Rational(1, 2), Rational(3)));
  CHECK(z.norm() == Rational(37, 4));
  CHECK(z.str() == "1/2-3i");
  CHECK(i.str() == "i");
  CHECK_THROWS(GaussianRational().inverse());

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    GaussianRational a(random_rational(rng), random_rational(rng));
    GaussianRational b(random_rational(rng), random_rational(rng));
    GaussianRational c(random_rational(rng), random_rational(rng));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK((a * b).is_canonical());
  }
}
