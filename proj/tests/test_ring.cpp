#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <random>

#include "tanglegcd/ring.hpp"

using namespace tanglegcd;

TEST_CASE("cyclotomic integer addition", "[ring]") {
  CHECK(CycInt(0, 0, 1, 0) + CycInt(0, 0, -1, 0) == CycInt{});
  CHECK(CycInt(1, 1, 0, 0) + CycInt(1, 0, 0, 1) == CycInt(2, 1, 0, 1));

  // The loop factor -A^2 - A^{-2} vanishes: A^{-2} = -A^2.
  CHECK((-unit_pow(2) - unit_pow(-2)).is_zero());
  CHECK(unit_pow(-2) == -unit_pow(2));
}

TEST_CASE("cyclotomic integer multiplication", "[ring]") {
  CHECK(unit_pow(1) * unit_pow(3) == CycInt::integer(-1));  // A^4 = -1
  CHECK(unit_pow(2) * unit_pow(2) == CycInt::integer(-1));  // i*i = -1
  CHECK(unit_pow(1) * unit_pow(7) == CycInt::integer(1));
  CHECK(CycInt(1, 2, 0, -1) * CycInt::integer(1) == CycInt(1, 2, 0, -1));
}

TEST_CASE("unit powers wrap mod 8 with sign", "[ring]") {
  CHECK(unit_pow(0) == CycInt::integer(1));
  CHECK(unit_pow(4) == CycInt::integer(-1));
  CHECK(unit_pow(-1) == CycInt(0, 0, 0, -1));  // A^{-1} = -A^3
  CHECK(unit_pow(1) * unit_pow(-1) == CycInt::integer(1));

  SECTION("the eight units form a group") {
    for (int j = 0; j < 8; ++j)
      for (int k = 0; k < 8; ++k) CHECK(unit_pow(j) * unit_pow(k) == unit_pow(j + k));
  }
}

TEST_CASE("conjugation is the A -> A^{-1} automorphism", "[ring]") {
  CHECK(conj(unit_pow(1)) == CycInt(0, 0, 0, -1));
  CHECK(unit_pow(1) * conj(unit_pow(1)) == CycInt::integer(1));
  CHECK(conj(CycInt::integer(1)) == CycInt::integer(1));
  CHECK(conj(unit_pow(2)) == -unit_pow(2));  // i -> -i

  std::mt19937 rng(7);
  auto rand_elt = [&] {
    auto c = [&] { return static_cast<std::int64_t>(rng() % 21) - 10; };
    return CycInt(c(), c(), c(), c());
  };
  for (int trial = 0; trial < 200; ++trial) {
    CycInt a = rand_elt(), b = rand_elt();
    CHECK(conj(conj(a)) == a);
    CHECK(conj(a * b) == conj(a) * conj(b));
    CHECK(conj(a + b) == conj(a) + conj(b));
  }
}

TEST_CASE("unit-multiple decomposition", "[ring]") {
  CHECK(as_unit_multiple(CycInt(0, -3, 0, 0)) == UnitMultiple{3, 5});  // 3A^5 = -3A
  CHECK(as_unit_multiple(CycInt{}) == UnitMultiple{0, 0});
  CHECK_FALSE(as_unit_multiple(CycInt(1, 1, 0, 0)).has_value());

  SECTION("round trip over all magnitudes up to 100") {
    for (std::int64_t p = -100; p <= 100; ++p) {
      for (int k = 0; k < 8; ++k) {
        CycInt v = CycInt::integer(p) * unit_pow(k);
        auto um = as_unit_multiple(v);
        REQUIRE(um.has_value());
        CHECK(um->magnitude >= 0);
        CHECK(CycInt::integer(um->magnitude) * unit_pow(um->power) == v);
      }
    }
  }
}

TEST_CASE("integer detection", "[ring]") {
  CHECK(as_integer(CycInt::integer(5)) == 5);
  CHECK(as_integer(CycInt{}) == 0);
  CHECK_FALSE(as_integer(unit_pow(1)).has_value());
}

TEST_CASE("overflow is reported, not wrapped", "[ring]") {
  const std::int64_t big = INT64_MAX / 2 + 1;
  CHECK_THROWS_AS(CycInt::integer(big) + CycInt::integer(big), std::overflow_error);
  CHECK_THROWS_AS(CycInt::integer(big) * CycInt::integer(2), std::overflow_error);
}

TEST_CASE("textual rendering uses powers of A", "[ring]") {
  CHECK(to_string(CycInt{}) == "0");
  CHECK(to_string(unit_pow(1)) == "A");
  CHECK(to_string(CycInt(0, 0, 0, -3)) == "-3A^3");
  CHECK(to_string(CycInt(1, 0, -1, 0)) == "1 - A^2");
  CHECK(to_string(CycInt(-2, 1, 0, 4)) == "-2 + A + 4A^3");
}
