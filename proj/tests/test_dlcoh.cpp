#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "dltk/dlcoh.hpp"
#include "dltk/errors.hpp"
#include "dltk/partition.hpp"
#include "dltk/unipotent.hpp"
#include "dltk/weyl.hpp"

using namespace dltk;
using dlcoh::CohTable;

namespace {

const std::string kCoxeterFixture =
    std::string(DLTK_TEST_DATA_DIR) + "/gl2_coxeter.json";

}  // namespace

TEST_CASE("table construction and accumulation") {
  CohTable t(3, "pi");
  CHECK(t.rank() == 3);
  CHECK(t.braid_label() == "pi");
  CHECK(t.empty());
  CHECK(t.mult(0, Partition({3})) == 0);
  t.add(4, Partition({2, 1}), 2);
  t.add(4, Partition({2, 1}), 1);
  CHECK(t.mult(4, Partition({2, 1})) == 3);
  CHECK(t.total_multiplicity() == 3);
  CHECK_THROWS_AS(t.add(0, Partition({3}), 0), std::invalid_argument);
  CHECK_THROWS_AS(t.add(0, Partition({3}), -1), std::invalid_argument);
  CHECK_THROWS_AS(t.add(0, Partition({2}), 1), std::invalid_argument);
  CHECK_THROWS_AS(CohTable(0, "pi"), std::invalid_argument);
}

TEST_CASE("entries iterate by degree then label") {
  CohTable t(2, "pi");
  t.add(4, Partition({2}), 1);
  t.add(2, Partition({2}), 1);
  t.add(2, Partition({1, 1}), 1);
  std::vector<std::pair<long long, Partition>> keys;
  for (const auto& [key, mult] : t.entries()) keys.push_back(key);
  REQUIRE(keys.size() == 3);
  CHECK(keys[0] == std::pair<long long, Partition>{2, Partition({1, 1})});
  CHECK(keys[1] == std::pair<long long, Partition>{2, Partition({2})});
  CHECK(keys[2] == std::pair<long long, Partition>{4, Partition({2})});
}

TEST_CASE("entries_equal ignores the braid label, operator== does not") {
  CohTable a(2, "s1 s1");
  a.add(2, Partition({2}), 1);
  CohTable b(2, "pi");
  b.add(2, Partition({2}), 1);
  CHECK(a.entries_equal(b));
  CHECK(a != b);
  b.add(2, Partition({1, 1}), 1);
  CHECK(!a.entries_equal(b));
}

TEST_CASE("the base table is the permutation module on rational flags") {
  for (int n = 1; n <= 8; ++n) {
    const auto base = dlcoh::table_trivial_braid(n);
    CHECK(base.braid_label() == "1");
    for (const auto& [key, mult] : base.entries()) {
      CHECK(key.first == 0);
      CHECK(mpz_class(static_cast<long>(mult)) == unipotent::chi_dim(key.second));
    }
    CHECK(base.entries().size() == partitions_of(n).size());
    // Euler characteristic at q recovers the flag count.
    CHECK(dlcoh::euler_dim(base, 3) ==
          unipotent::flag_count_poly(n).eval(3));
  }
}

TEST_CASE("translation shifts each label by its fixed even amount") {
  std::mt19937_64 rng(5601);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    CohTable t(n, "pi");
    const auto parts = partitions_of(n);
    const int entries = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < entries; ++i) {
      t.add(static_cast<long long>(rng() % 20),
            parts[static_cast<size_t>(rng() % parts.size())],
            1 + static_cast<long long>(rng() % 4));
    }
    const auto shifted = dlcoh::translate_full_twist(t);
    const long long big_n = weyl::num_positive_roots(n);
    CHECK(shifted.total_multiplicity() == t.total_multiplicity());
    for (const auto& [key, mult] : t.entries()) {
      const auto [a, A] = unipotent::a_A(key.second);
      CHECK(shifted.mult(key.first + 4 * big_n - 2 * A, key.second) == mult);
    }
  }
}

TEST_CASE("pi power tables against iterated translation") {
  for (int n = 1; n <= 5; ++n) {
    auto iterated = dlcoh::table_trivial_braid(n);
    for (long long k = 0; k <= 3; ++k) {
      CHECK(dlcoh::table_pi_power(n, k).entries_equal(iterated));
      iterated = dlcoh::translate_full_twist(iterated);
    }
  }
  CHECK(dlcoh::table_pi_power(2, 1).braid_label() == "pi");
  CHECK(dlcoh::table_pi_power(2, 2).braid_label() == "pi^2");
  CHECK(dlcoh::table_pi_power(2, 0).braid_label() == "1");
  CHECK_THROWS_AS(dlcoh::table_pi_power(2, -1), std::invalid_argument);
  CHECK_THROWS_AS(dlcoh::table_pi_power(2, 1000001), std::invalid_argument);
}

TEST_CASE("inner products weight by multiplicity pairs") {
  CohTable t1(2, "a");
  t1.add(0, Partition({2}), 2);
  t1.add(0, Partition({1, 1}), 3);
  CohTable t2(2, "b");
  t2.add(5, Partition({2}), 7);
  CHECK(dlcoh::inner_product(t1, t2, 0, 5) == mpz_class(14));
  CHECK(dlcoh::inner_product(t1, t2, 5, 0) == mpz_class(0));
  CHECK(dlcoh::inner_product(t1, t1, 0, 0) == mpz_class(13));
  CHECK_THROWS_AS(dlcoh::inner_product(t1, CohTable(3, "c"), 0, 0),
                  std::invalid_argument);
}

TEST_CASE("disjointness and parity respond to single violations") {
  CohTable t(3, "x");
  t.add(0, Partition({3}), 1);
  t.add(2, Partition({2, 1}), 5);
  CHECK(dlcoh::disjointness_check(t));
  CHECK(dlcoh::parity_check(t));
  t.add(3, Partition({3}), 1);
  CHECK(!dlcoh::disjointness_check(t));
  CHECK(!dlcoh::parity_check(t));
  // Multiple appearances inside one degree are fine.
  CohTable u(3, "y");
  u.add(4, Partition({2, 1}), 2);
  CHECK(dlcoh::disjointness_check(u));
}

TEST_CASE("the document export is stable and schema-errors are located") {
  const auto t = dlcoh::table_pi_power(2, 1);
  const auto doc = dlcoh::table_document(t);
  CHECK(doc == dlcoh::table_document(t));
  CHECK(dlcoh::parse_table_document(doc) == t);
  CHECK(doc.back() == '\n');

  const auto reject = [](const std::string& text) {
    CHECK_THROWS_AS(dlcoh::parse_table_document(text), parse_error);
  };
  reject("[]");
  reject("{\"braid\": \"1\", \"entries\": []}");
  reject("{\"n\": 2, \"entries\": []}");
  reject("{\"n\": 2, \"braid\": \"1\"}");
  reject("{\"n\": 0, \"braid\": \"1\", \"entries\": []}");
  reject("{\"n\": 2, \"braid\": \"s7\", \"entries\": []}");
  reject("{\"n\": 2, \"braid\": \"1\", \"entries\": [], \"extra\": 1}");
  reject("{\"n\": 2, \"braid\": \"1\", \"entries\": [3]}");
  reject(
      "{\"n\": 2, \"braid\": \"1\", \"entries\": "
      "[{\"degree\": 0, \"lambda\": [2], \"mult\": 0}]}");
  reject(
      "{\"n\": 2, \"braid\": \"1\", \"entries\": "
      "[{\"degree\": 0, \"lambda\": [3], \"mult\": 1}]}");
  reject(
      "{\"n\": 2, \"braid\": \"1\", \"entries\": "
      "[{\"degree\": 0, \"lambda\": [1, 2], \"mult\": 1}]}");
  reject(
      "{\"n\": 2, \"braid\": \"1\", \"entries\": "
      "[{\"degree\": 0, \"lambda\": [2], \"mult\": 1},"
      " {\"degree\": 0, \"lambda\": [2], \"mult\": 2}]}");
  reject("{\"n\": 2, \"braid\": \"1\", \"entries\": [{}]}");
  reject("not json at all");
}

TEST_CASE("the Coxeter fixture imports, checks, and translates") {
  const auto t = dlcoh::import_table(kCoxeterFixture);
  CHECK(t.rank() == 2);
  CHECK(t.braid_label() == "s1");
  CHECK(t.mult(1, Partition({1, 1})) == 1);
  CHECK(t.mult(2, Partition({2})) == 1);
  CHECK(t.total_multiplicity() == 2);
  CHECK(dlcoh::disjointness_check(t));
  CHECK(!dlcoh::parity_check(t));
  // Lefschetz consistency: the alternating sum matches |X(sF)| = q - q = 0
  // at m = 1, i.e. 1 - q at q; the variety has q^m - q points.
  CHECK(dlcoh::euler_dim(t, 2) == mpz_class(1 - 2));
  CHECK(dlcoh::euler_dim(t, 5) == mpz_class(1 - 5));
  const auto shifted = dlcoh::translate_full_twist(t);
  CHECK(shifted.mult(3, Partition({1, 1})) == 1);
  CHECK(shifted.mult(6, Partition({2})) == 1);
  CHECK(shifted.total_multiplicity() == 2);
}

TEST_CASE("file import reports missing paths") {
  CHECK_THROWS_AS(dlcoh::import_table("/nonexistent/dir/table.json"),
                  std::runtime_error);
}

TEST_CASE("export and import round-trip through a file") {
  const auto path = (std::filesystem::temp_directory_path() /
                     "dltk-test-dlcoh-roundtrip.json")
                        .string();
  const auto t = dlcoh::table_pi_power(3, 2);
  dlcoh::export_table(t, path);
  const auto back = dlcoh::import_table(path);
  std::filesystem::remove(path);
  CHECK(back == t);
}

TEST_CASE("conjugacy invariance verdicts") {
  // Conjugate, equal entries: pass.
  CohTable t1(3, "s1");
  t1.add(1, Partition({2, 1}), 1);
  CohTable t2(3, "s2");
  t2.add(1, Partition({2, 1}), 1);
  auto report = dlcoh::conjugacy_invariance_check(t1, t2);
  CHECK(report.conjugate);
  CHECK(!report.central);
  CHECK(report.entries_equal);
  CHECK(report.ok);
  // Conjugate, unequal entries: fail.
  CohTable t3(3, "s2");
  t3.add(2, Partition({2, 1}), 1);
  report = dlcoh::conjugacy_invariance_check(t1, t3);
  CHECK(report.conjugate);
  CHECK(!report.ok);
  // Non-conjugate: vacuously fine whatever the entries say.
  CohTable t4(3, "s1 s2");
  t4.add(9, Partition({3}), 4);
  report = dlcoh::conjugacy_invariance_check(t1, t4);
  CHECK(!report.conjugate);
  CHECK(report.ok);
  // Central braid: flagged vacuous.
  CohTable p1(2, "pi^2");
  CohTable p2(2, "D^4");
  report = dlcoh::conjugacy_invariance_check(p1, p2);
  CHECK(report.conjugate);
  CHECK(report.central);
  CHECK(report.ok);
  CHECK_THROWS_AS(dlcoh::conjugacy_invariance_check(t1, CohTable(4, "s1")),
                  std::invalid_argument);
}
