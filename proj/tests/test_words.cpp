#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "bclab/words.hpp"
#include "doctest.h"

using namespace bclab;

static BigRat R(long n, long d) { return BigRat(n, d); }

TEST_CASE("binary expansions of the landmark rationals") {
  BitSeq b13 = BitSeq::from_rational(R(1, 3));
  CHECK(b13.purely_periodic());
  CHECK(word_to_string(b13.period()) == "01");
  CHECK(b13.value() == R(1, 3));

  BitSeq b815 = BitSeq::from_rational(R(8, 15));
  CHECK(b815.purely_periodic());
  CHECK(word_to_string(b815.period()) == "1000");

  BitSeq chi = BitSeq::from_rational(R(11, 24));
  CHECK(word_to_string(chi.preperiod()) == "011");
  CHECK(word_to_string(chi.period()) == "10");
  CHECK(chi.to_string() == ".011overline{10}");

  CHECK_THROWS_WITH_AS(BitSeq::from_rational(R(3, 8)), doctest::Contains("dyadic"),
                       std::invalid_argument);
  CHECK_THROWS_AS(BitSeq::from_rational(R(1, 2)), std::invalid_argument);
}

TEST_CASE("round trip from_rational . value is the identity") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    long den = 3 + 2 * long(rng() % 300);  // odd denominators
    long num = 1 + long(rng() % (den - 1));
    BigRat q(num, den);
    BitSeq b = BitSeq::from_rational(q);
    CHECK(b.value() == q);
    CHECK(BitSeq::from_rational(b.value()) == b);
  }
}

TEST_CASE("parse accepts both text forms") {
  CHECK(BitSeq::parse("11/24") == BitSeq::parse(".011overline{10}"));
  CHECK(BitSeq::parse(".overline{01}").value() == R(1, 3));
  CHECK(BitSeq::parse("overline{0111}").value() == R(7, 15));
  CHECK_THROWS_AS(BitSeq::parse("xyz"), std::invalid_argument);
}

TEST_CASE("doubling orbits in visit order") {
  auto orb = doubling_orbit(BitSeq::from_rational(R(1, 3)));
  REQUIRE(orb.size() == 2);
  CHECK(orb[0].value() == R(1, 3));
  CHECK(orb[1].value() == R(2, 3));

  auto o5 = doubling_orbit(BitSeq::from_rational(R(1, 5)));
  REQUIRE(o5.size() == 4);
  CHECK(o5[1].value() == R(2, 5));
  CHECK(o5[2].value() == R(4, 5));
  CHECK(o5[3].value() == R(3, 5));

  auto o = doubling_orbit(BitSeq::from_rational(R(11, 24)));
  REQUIRE(o.size() == 5);
  CHECK(o[1].value() == R(11, 12));
  CHECK(o[2].value() == R(5, 6));
  CHECK(o[3].value() == R(2, 3));
  CHECK(o[4].value() == R(1, 3));
}

TEST_CASE("orbit length equals preperiod plus period") {
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    long den = 3 + 2 * long(rng() % 200);
    long num = 1 + long(rng() % (den - 1));
    BitSeq b = BitSeq::from_rational(BigRat(num, den));
    CHECK(doubling_orbit(b).size() == b.preperiod().size() + b.period().size());
  }
}

TEST_CASE("itinerary and kneading predicates") {
  CHECK(is_itinerary(BitSeq::from_rational(R(1, 3))));
  CHECK_FALSE(is_itinerary(BitSeq::periodic(word_from_string("1"))));
  CHECK_FALSE(is_itinerary(BitSeq::periodic(word_from_string("0"))));

  CHECK(is_kneading(BitSeq::from_rational(R(3, 7))));
  CHECK_FALSE(is_kneading(BitSeq::from_rational(R(22, 60))));
  CHECK(is_kneading(BitSeq::from_rational(R(1, 3))));
  CHECK(is_kneading(BitSeq::from_rational(R(11, 24))));
}

TEST_CASE("kneading sequence of an itinerary") {
  CHECK(kneading_of(BitSeq::from_rational(R(22, 60))).value() == R(7, 15));
  CHECK(kneading_of(BitSeq::from_rational(R(3, 7))).value() == R(3, 7));
  CHECK(kneading_of(BitSeq::from_rational(R(11, 24))).value() == R(11, 24));
}

TEST_CASE("kneading symmetry b <-> 1-b") {
  for (const auto& b : periodic_kneading_sequences(10)) {
    CHECK(is_kneading(b.complemented()));
    CHECK(b.complemented().value() == 1 - b.value());
  }
}

TEST_CASE("period doubling values (k+1)/(2^p+1)") {
  CHECK(period_double(BitSeq::from_rational(R(1, 3))).value() == R(2, 5));
  CHECK(period_double(BitSeq::from_rational(R(3, 7))).value() == R(4, 9));
  CHECK(period_double(BitSeq::from_rational(R(7, 15))).value() == R(8, 17));
  CHECK(word_to_string(period_double(BitSeq::from_rational(R(1, 3))).period()) == "0110");
  CHECK_THROWS_AS(period_double(BitSeq::from_rational(R(11, 24))), std::invalid_argument);
}

TEST_CASE("period doubling maps kneading to kneading and leaves no kneading between") {
  auto catalog = periodic_kneading_sequences(12);
  for (const auto& b : catalog) {
    if (b.period().size() > 6) continue;
    BitSeq d = period_double(b);
    CHECK(is_kneading(d));
    CHECK(d.value() > b.value());
    for (const auto& other : catalog) {
      bool strictly_between = other.value() > b.value() && other.value() < d.value();
      CHECK_FALSE(strictly_between);
    }
  }
}

TEST_CASE("Thue-Morse prefix") {
  CHECK(word_to_string(morse_thue_prefix(4)) == "0110");
  CHECK(word_to_string(morse_thue_prefix(8)) == "01101001");
  CHECK(word_to_string(morse_thue_prefix(1)) == "0");
  CHECK(word_to_string(morse_thue_prefix(16)) == "0110100110010110");
}

TEST_CASE("periodic approximants of the Thue-Morse kneading sequence") {
  BitWord prefix = morse_thue_prefix(64);
  auto approx = periodic_approximants(prefix, 2);
  REQUIRE(approx.size() == 2);
  CHECK(approx[0].value() == R(1, 3));  // .overline{01}
  CHECK(approx[1].value() == R(2, 5));  // .overline{0110}
  CHECK_THROWS_AS(periodic_approximants(word_from_string("01010101"), 1), std::invalid_argument);
  CHECK_THROWS_AS(periodic_approximants(morse_thue_prefix(6), 5), std::invalid_argument);
}

TEST_CASE("approximant orbits avoid the kneading interval") {
  BitWord prefix = morse_thue_prefix(64);
  BigRat blo = 0;
  for (uint8_t bit : prefix) blo = blo * 2 + int(bit);
  blo /= pow2(unsigned(prefix.size()));
  for (const auto& s : periodic_approximants(prefix, 4)) {
    for (const auto& shift : doubling_orbit(s)) {
      BigRat v = shift.value();
      CHECK((v <= blo || v >= 1 - blo));
    }
  }
}

TEST_CASE("complement and shift behave as value maps") {
  std::mt19937 rng(23);
  for (int i = 0; i < 60; ++i) {
    long den = 3 + 2 * long(rng() % 120);
    long num = 1 + long(rng() % (den - 1));
    BitSeq b = BitSeq::from_rational(BigRat(num, den));
    CHECK(b.complemented().value() == 1 - b.value());
    BigRat two_b = 2 * b.value();
    if (two_b >= 1) two_b -= 1;
    if (two_b != 0) CHECK(b.shifted().value() == two_b);
  }
}
