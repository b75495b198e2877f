#include <doctest.h>

#include <random>
#include <stdexcept>

#include "hecke/error.hpp"
#include "hecke/scalar.hpp"

using hecke::Scalar;

namespace {
Scalar gauss(long a, long b, long c, long d) { return Scalar(mpq_class(a, b), mpq_class(c, d)); }
}  // namespace

TEST_CASE("scalar parsing accepts every documented form") {
  CHECK(Scalar::parse("3") == Scalar(3));
  CHECK(Scalar::parse("-7") == Scalar(-7));
  CHECK(Scalar::parse("6/4") == Scalar(3, 2));
  CHECK(Scalar::parse("i") == Scalar::imaginary_unit());
  CHECK(Scalar::parse("-i") == -Scalar::imaginary_unit());
  CHECK(Scalar::parse("i/2") == gauss(0, 1, 1, 2));
  CHECK(Scalar::parse("1/2i") == gauss(0, 1, 1, 2));
  CHECK(Scalar::parse("-3/2-i") == gauss(-3, 2, -1, 1));
  CHECK(Scalar::parse("1/3+2/5i") == gauss(1, 3, 2, 5));
  CHECK(Scalar::parse(" 2 ") == Scalar(2));
}

TEST_CASE("scalar parsing rejects malformed text") {
  for (const char* bad : {"", "--1", "1/0", "abc", "1/2/3", "+", "1+", "i i"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Scalar::parse(bad), hecke::ParseError);
  }
}

TEST_CASE("canonical text round-trips") {
  CHECK(Scalar(3).str() == "3");
  CHECK(Scalar(-3, 6).str() == "-1/2");
  CHECK(Scalar::imaginary_unit().str() == "0+1i");
  CHECK(gauss(1, 2, -3, 4).str() == "1/2-3/4i");
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-9, 9), q(1, 9);
  for (int k = 0; k < 200; ++k) {
    const Scalar x = gauss(d(rng), q(rng), d(rng), q(rng));
    CHECK(Scalar::parse(x.str()) == x);
  }
}

TEST_CASE("field arithmetic") {
  const Scalar i = Scalar::imaginary_unit();
  CHECK(i * i == Scalar(-1));
  CHECK((Scalar(1) + i) * (Scalar(1) - i) == Scalar(2));
  CHECK(Scalar(1) / i == -i);
  CHECK((gauss(1, 2, 1, 3) - gauss(1, 2, 1, 3)).is_zero());
  CHECK(gauss(2, 3, 5, 7).conj() == gauss(2, 3, -5, 7));
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), std::domain_error);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-5, 5), q(1, 5);
  for (int k = 0; k < 100; ++k) {
    const Scalar a = gauss(d(rng), q(rng), d(rng), q(rng));
    const Scalar b = gauss(d(rng), q(rng), d(rng), q(rng));
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK(a + b == b + a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("integrality and ordering") {
  CHECK(Scalar(4).is_integer());
  CHECK_FALSE(Scalar(1, 2).is_integer());
  CHECK_FALSE(Scalar::imaginary_unit().is_integer());
  CHECK(Scalar(-4).to_integer() == -4);
  CHECK_FALSE(Scalar(1, 2).to_integer().has_value());
  CHECK(Scalar(1) < Scalar(2));
  CHECK(Scalar(1) < Scalar(1) + Scalar::imaginary_unit());
  CHECK(Scalar(1) + Scalar::imaginary_unit() < Scalar(2) - Scalar::imaginary_unit());
}
