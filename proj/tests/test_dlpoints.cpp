#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <vector>

#include "dltk/braid.hpp"
#include "dltk/dlpoints.hpp"
#include "dltk/errors.hpp"
#include "dltk/weyl.hpp"

using namespace dltk;
using dlpoints::Field;
using dlpoints::FieldElement;
using dlpoints::Flag;

namespace {

FieldElement fe(int x) { return static_cast<FieldElement>(x); }

braid::EnrichedWord gallery(int n, std::string_view text) {
  return braid::EnrichedWord::parse(n, text);
}

}  // namespace

TEST_CASE("field constructor accepts exactly the supported sizes") {
  CHECK(Field(2, 1).size() == 2);
  CHECK(Field(5, 2).size() == 25);
  CHECK(Field(2, 6).size() == 64);
  CHECK_THROWS_AS(Field(2, 7), std::invalid_argument);
  CHECK_THROWS_AS(Field(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(Field(7, 1), std::invalid_argument);
  CHECK_THROWS_AS(Field(2, 0), std::invalid_argument);
}

TEST_CASE("moduli are the first irreducibles in constant-term-first order") {
  // t^2 + 1 factors over F_5 (2^2 = -1), so F_25 falls through to t^2+t+1.
  CHECK(Field(5, 2).modulus() == std::vector<int>{1, 1, 1});
  CHECK(Field(2, 2).modulus() == std::vector<int>{1, 1, 1});
  CHECK(Field(3, 2).modulus() == std::vector<int>{1, 0, 1});
  CHECK(Field(2, 1).modulus() == std::vector<int>{0, 1});
}

TEST_CASE("field tables define a field") {
  for (const Field& f : {Field(5, 1), Field(5, 2), Field(2, 6)}) {
    const int q = f.size();
    for (int a = 1; a < q; ++a) {
      CHECK(f.mul(fe(a), f.inv(fe(a))) == fe(1));
    }
    CHECK_THROWS_AS(f.inv(fe(0)), std::invalid_argument);
    for (int a = 0; a < q; ++a) {
      CHECK(f.add(fe(a), f.neg(fe(a))) == fe(0));
      for (int b = 0; b < q; ++b) {
        CHECK(f.add(f.sub(fe(a), fe(b)), fe(b)) == fe(a));
        if (f.mul(fe(a), fe(b)) == fe(0)) CHECK((a == 0 || b == 0));
      }
    }
    // Distributivity, sampled.
    std::mt19937_64 rng(6701);
    for (int trial = 0; trial < 400; ++trial) {
      const auto a = fe(static_cast<int>(rng() % q));
      const auto b = fe(static_cast<int>(rng() % q));
      const auto c = fe(static_cast<int>(rng() % q));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
    }
  }
}

TEST_CASE("frobenius is the p-power map with the prime field fixed") {
  const Field f(5, 2);
  int fixed = 0;
  for (int x = 0; x < f.size(); ++x) {
    FieldElement power = fe(x);
    for (int i = 0; i < 5 - 1; ++i) power = f.mul(power, fe(x));
    CHECK(f.frobenius(fe(x)) == power);
    if (f.frobenius(fe(x)) == fe(x)) ++fixed;
    CHECK(f.frobenius(fe(x), 2) == fe(x));
  }
  CHECK(fixed == 5);
  // Additivity distinguishes the frobenius from other power maps.
  const Field g(2, 3);
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      CHECK(g.frobenius(g.add(fe(a), fe(b))) ==
            g.add(g.frobenius(fe(a)), g.frobenius(fe(b))));
    }
  }
  CHECK_THROWS_AS(f.frobenius(fe(1), -1), std::invalid_argument);
}

TEST_CASE("element strings use coordinates, bare digits in the prime field") {
  CHECK(Field(5, 1).element_to_string(fe(3)) == "3");
  CHECK(Field(2, 2).element_to_string(fe(3)) == "[1,1]");
  CHECK(Field(2, 2).element_to_string(fe(2)) == "[0,1]");
  CHECK(Field(3, 2).element_to_string(fe(0)) == "[0,0]");
}

TEST_CASE("the standard flag is the identity matrix") {
  const Field f(3, 1);
  const Flag s = Flag::standard(f, 3);
  CHECK(s.rank() == 3);
  CHECK(s.field_size() == 3);
  for (int row = 0; row < 3; ++row) {
    for (int col = 0; col < 3; ++col) {
      CHECK(s.entry(row, col) == fe(row == col ? 1 : 0));
    }
  }
}

TEST_CASE("flag construction canonicalizes and rejects junk") {
  const Field f(2, 1);
  CHECK(Flag::from_matrix(f, 2, {fe(1), fe(0), fe(0), fe(1)}) ==
        Flag::standard(f, 2));
  // Column scaling and later-column adjustments hit one representative.
  const Field f3(3, 1);
  const Flag a = Flag::from_matrix(f3, 2, {fe(2), fe(1), fe(1), fe(1)});
  const Flag b = Flag::from_matrix(f3, 2, {fe(1), fe(2), fe(2), fe(0)});
  CHECK(a == b);
  CHECK(Flag::from_matrix(f3, 2, a.matrix()) == a);
  CHECK_THROWS_AS(Flag::from_matrix(f, 2, {fe(1), fe(0), fe(0)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Flag::from_matrix(f, 2, {fe(1), fe(0), fe(0), fe(3)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Flag::from_matrix(f, 2, {fe(1), fe(1), fe(1), fe(1)}),
                  std::invalid_argument);
}

TEST_CASE("canonicalization is idempotent on random invertible matrices") {
  const Field f(3, 1);
  std::mt19937_64 rng(6702);
  int built = 0;
  while (built < 50) {
    std::vector<FieldElement> m(9);
    for (auto& x : m) x = fe(static_cast<int>(rng() % 3));
    try {
      const Flag flag = Flag::from_matrix(f, 3, m);
      CHECK(Flag::from_matrix(f, 3, flag.matrix()) == flag);
      ++built;
    } catch (const std::invalid_argument&) {
      // singular draw, try again
    }
  }
}

TEST_CASE("flag enumeration is complete, duplicate-free, and capped") {
  const Field f(2, 1);
  const auto flags = enumerate_flags(3, f);
  REQUIRE(flags.size() == 21);
  for (size_t i = 0; i < flags.size(); ++i) {
    for (size_t j = i + 1; j < flags.size(); ++j) {
      CHECK(flags[i] != flags[j]);
    }
  }
  CHECK(enumerate_flags(3, f) == flags);
  CHECK(enumerate_flags(1, Field(5, 1)).size() == 1);
  CHECK_THROWS_AS(enumerate_flags(3, f, 20), resource_error);
  CHECK(enumerate_flags(3, f, 21).size() == 21);
}

TEST_CASE("relative position carves the flag set into Bruhat cells") {
  // Against the standard flag, the cell of w has q^length(w) members.
  const Field f(2, 1);
  const Flag base = Flag::standard(f, 3);
  std::map<weyl::Permutation, int> orbit;
  for (const Flag& other : enumerate_flags(3, f)) {
    ++orbit[relative_position(f, base, other)];
  }
  CHECK(orbit.size() == 6);
  long long total = 0;
  for (const auto& [w, size] : orbit) {
    CHECK(size == 1LL << w.length());
    total += size;
  }
  CHECK(total == 21);
  // Swapping the flags inverts the answer.
  const auto flags = enumerate_flags(2, Field(3, 1));
  for (const Flag& a : flags) {
    for (const Flag& b : flags) {
      const auto w = relative_position(Field(3, 1), a, b);
      CHECK(relative_position(Field(3, 1), b, a) == w.inverse());
      CHECK(w.is_identity() == (a == b));
    }
  }
}

TEST_CASE("point counts match the rank-2 closed forms") {
  // |X(sF)| over F_{q^m} is q^m - q; one step, exact position s.
  CHECK(dlpoints::count_points(gallery(2, "s1"), 5, 2) == 25 - 5);
  CHECK(dlpoints::count_points(gallery(2, "s1"), 2, 5) == 32 - 2);
  // |X(ssF)| is q^{2m} + q.
  CHECK(dlpoints::count_points(gallery(2, "s1 s1"), 3, 2) == 81 + 3);
  // The empty gallery counts the rational flags.
  CHECK(dlpoints::count_points(gallery(2, ""), 5, 1) == 6);
  // Over the base field every flag is rational, so exact position s is empty.
  CHECK(dlpoints::count_points(gallery(2, "s1"), 5, 1) == 0);
  // A closed s-letter admits every relative position in rank 2, so the
  // count is the full flag set over the extension.
  CHECK(dlpoints::count_points(gallery(2, "_s1"), 5, 1) == 6);
  CHECK(dlpoints::count_points(gallery(2, "_s1"), 3, 2) == 10);
}

TEST_CASE("worker partitioning does not change the count") {
  const auto word = gallery(3, "s1 s2");
  dlpoints::CountOptions serial;
  dlpoints::CountOptions wide;
  wide.jobs = 4;
  const long long reference = dlpoints::count_points(word, 2, 2, serial);
  CHECK(dlpoints::count_points(word, 2, 2, wide) == reference);
}

TEST_CASE("count rejects unsupported parameters and tight caps") {
  CHECK_THROWS_AS(dlpoints::count_points(gallery(2, "s1"), 4, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(dlpoints::count_points(gallery(2, "s1"), 7, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(dlpoints::count_points(gallery(2, "s1"), 2, 7),
                  std::invalid_argument);
  CHECK_THROWS_AS(dlpoints::count_points(gallery(2, "s1"), 2, 0),
                  std::invalid_argument);
  dlpoints::CountOptions tight;
  tight.flag_cap = 4;  // F_4 carries 5 complete flags in rank 2
  CHECK_THROWS_AS(dlpoints::count_points(gallery(2, "s1"), 2, 2, tight),
                  resource_error);
}

TEST_CASE("cyclic shifts preserve point counts") {
  const auto x = gallery(3, "s1");
  const auto y = gallery(3, "s2");
  const auto result = dlpoints::cyclic_shift_equal(x, y, 2, 2);
  CHECK(result.equal);
  CHECK(result.count_xy == dlpoints::count_points(gallery(3, "s1 s2"), 2, 2));
  CHECK(result.count_yx == dlpoints::count_points(gallery(3, "s2 s1"), 2, 2));
  CHECK(result.count_xy == result.count_yx);
  CHECK_THROWS_AS(dlpoints::cyclic_shift_equal(gallery(3, "_s1"), y, 2, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      dlpoints::cyclic_shift_equal(x, gallery(2, "s1"), 2, 2),
      std::invalid_argument);
}

TEST_CASE("flag frobenius fixes rational flags and moves the rest") {
  const Field f(2, 2);
  const Flag rational = Flag::standard(f, 2);
  CHECK(frobenius(f, rational) == rational);
  CHECK(frobenius(f, rational, 5) == rational);
  // Column (1, t) is genuinely quadratic: t squares to t + 1.
  const Flag twisted = Flag::from_matrix(f, 2, {fe(1), fe(2), fe(0), fe(1)});
  const Flag image = frobenius(f, twisted);
  CHECK(image != twisted);
  CHECK(image.entry(1, 0) == fe(3));
  CHECK(frobenius(f, image) == twisted);
}
