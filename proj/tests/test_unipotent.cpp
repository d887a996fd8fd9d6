#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "dltk/cells.hpp"
#include "dltk/errors.hpp"
#include "dltk/partition.hpp"
#include "dltk/poly.hpp"
#include "dltk/unipotent.hpp"
#include "dltk/weyl.hpp"

using namespace dltk;

TEST_CASE("partition construction and accessors") {
  const Partition p({4, 2, 1});
  CHECK(p.sum() == 7);
  CHECK(p.num_parts() == 3);
  CHECK(p.part(1) == 4);
  CHECK(p.part(4) == 0);
  CHECK(Partition().sum() == 0);
  CHECK(Partition().to_string() == "[]");
  CHECK(p.to_string() == "[4,2,1]");
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
}

TEST_CASE("partition parsing") {
  CHECK(Partition::parse("[4,2,1]") == Partition({4, 2, 1}));
  CHECK(Partition::parse("[]") == Partition());
  CHECK(Partition::parse("4,2") == Partition({4, 2}));  // brackets optional
  CHECK_THROWS_AS(Partition::parse("[2,3]"), std::exception);
  CHECK_THROWS_AS(Partition::parse("[a]"), std::exception);
}

TEST_CASE("transpose is an involution that flips rows and columns") {
  const Partition p({4, 2, 1});
  CHECK(p.transpose() == Partition({3, 2, 1, 1}));
  CHECK(p.transpose().transpose() == p);
  CHECK(Partition({5}).transpose() == Partition({1, 1, 1, 1, 1}));
  CHECK(Partition().transpose() == Partition());
  for (const auto& q : partitions_of(8)) {
    CHECK(q.transpose().transpose() == q);
    CHECK(q.transpose().sum() == 8);
  }
}

TEST_CASE("hooks and the n-invariant") {
  CHECK(Partition({2, 1}).hooks() == std::vector<int>{3, 1, 1});
  CHECK(Partition({2, 2}).hooks() == std::vector<int>{3, 2, 2, 1});
  CHECK(Partition({3}).hooks() == std::vector<int>{3, 2, 1});
  CHECK(Partition({2, 1}).n_invariant() == 1);
  CHECK(Partition({1, 1, 1, 1}).n_invariant() == 6);
  CHECK(Partition({4}).n_invariant() == 0);
  // n(lambda) + n(lambda^T) + |lambda| = sum of hook lengths.
  for (const auto& p : partitions_of(7)) {
    long long hook_sum = 0;
    for (int h : p.hooks()) hook_sum += h;
    CHECK(p.n_invariant() + p.transpose().n_invariant() + 7 == hook_sum);
  }
}

TEST_CASE("partitions_of enumerates in descending lexicographic order") {
  const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) {
    const auto parts = partitions_of(n);
    CHECK(static_cast<int>(parts.size()) == counts[n]);
    for (const auto& p : parts) CHECK(p.sum() == n);
    for (size_t i = 1; i < parts.size(); ++i) {
      CHECK(parts[i - 1].parts() > parts[i].parts());
    }
    if (n >= 1) {
      CHECK(parts.front() == Partition({n}));
      CHECK(parts.back() ==
            Partition(std::vector<int>(static_cast<size_t>(n), 1)));
    }
  }
}

TEST_CASE("dominance order") {
  CHECK(dominance_leq(Partition({2, 2}), Partition({3, 1})));
  CHECK(!dominance_leq(Partition({3, 1}), Partition({2, 2})));
  // The classical incomparable pair at n = 6.
  CHECK(!dominance_leq(Partition({3, 1, 1, 1}), Partition({2, 2, 2})));
  CHECK(!dominance_leq(Partition({2, 2, 2}), Partition({3, 1, 1, 1})));
  // Transposition reverses dominance.
  for (const auto& a : partitions_of(6)) {
    for (const auto& b : partitions_of(6)) {
      CHECK(dominance_leq(a, b) ==
            dominance_leq(b.transpose(), a.transpose()));
    }
  }
}

TEST_CASE("IntPoly arithmetic and exact division") {
  const auto q = IntPoly::monomial(1, 1);
  const auto one = IntPoly::constant(1);
  CHECK((q * q + q).to_string() == "q^2 + q");
  CHECK(IntPoly().to_string() == "0");
  CHECK(IntPoly().degree() == -1);
  CHECK(q_pow_minus_one(3) == q * q * q - one);
  // (q^2 - 1) / (q - 1) = q + 1.
  CHECK(q_pow_minus_one(2).exact_div(q_pow_minus_one(1)) == q + one);
  CHECK_THROWS_AS(q_pow_minus_one(3).exact_div(q + one), std::domain_error);
  CHECK((q + one).eval(mpz_class(5)) == mpz_class(6));
  CHECK(IntPoly::monomial(1, 40).eval(mpz_class(2)) ==
        mpz_class("1099511627776"));
}

TEST_CASE("generic degree golden values") {
  // Hooks of (2,2) are 3,2,2,1, so D = q^2 (q^4-1)/(q^2-1) = q^4 + q^2.
  CHECK(unipotent::generic_degree(Partition({2, 2})) ==
        IntPoly::monomial(1, 4) + IntPoly::monomial(1, 2));
  // (3,1): n = 1, hooks 4,2,1,1: D = q (q^2-1)(q^3-1)/((q-1)(q^2-1))
  //       = q (q^2 + q + 1).
  CHECK(unipotent::generic_degree(Partition({3, 1})) ==
        IntPoly::monomial(1, 3) + IntPoly::monomial(1, 2) +
            IntPoly::monomial(1, 1));
  CHECK_THROWS_AS(unipotent::generic_degree(Partition(
                      std::vector<int>(31, 1))),
                  std::invalid_argument);
}

TEST_CASE("character degrees by the hook length formula") {
  CHECK(unipotent::chi_dim(Partition({3, 2})) == mpz_class(5));
  CHECK(unipotent::chi_dim(Partition({4, 3, 2, 1})) == mpz_class(768));
  CHECK(unipotent::chi_dim(Partition()) == mpz_class(1));
  // Transposition preserves the dimension (tensoring with sign).
  for (const auto& p : partitions_of(9)) {
    CHECK(unipotent::chi_dim(p) == unipotent::chi_dim(p.transpose()));
  }
}

TEST_CASE("unipotent_character bundles consistent fields") {
  for (const auto& lambda : partitions_of(6)) {
    const auto data = unipotent::unipotent_character(lambda);
    CHECK(data.lambda == lambda);
    CHECK(data.generic_degree == unipotent::generic_degree(lambda));
    CHECK(data.a == data.generic_degree.valuation());
    CHECK(data.A == data.generic_degree.degree());
    CHECK(data.chi_dim == unipotent::chi_dim(lambda));
    CHECK(data.chi_dim == data.generic_degree.eval(mpz_class(1)));
    const auto [a, A] = unipotent::a_A(lambda);
    CHECK(a == data.a);
    CHECK(A == data.A);
  }
}

TEST_CASE("all_unipotent_characters follows the partition order") {
  const auto chars = unipotent::all_unipotent_characters(7);
  const auto parts = partitions_of(7);
  REQUIRE(chars.size() == parts.size());
  for (size_t i = 0; i < chars.size(); ++i) {
    CHECK(chars[i].lambda == parts[i]);
  }
}

TEST_CASE("flag count polynomials") {
  CHECK(unipotent::flag_count_poly(1) == IntPoly::constant(1));
  CHECK(unipotent::flag_count_poly(4).eval(mpz_class(2)) == mpz_class(315));
  // Degree of [n]_q! is N = n(n-1)/2 and the coefficients are symmetric.
  for (int n = 1; n <= 9; ++n) {
    const auto poly = unipotent::flag_count_poly(n);
    const int big_n = static_cast<int>(weyl::num_positive_roots(n));
    CHECK(poly.degree() == big_n);
    for (int k = 0; k <= big_n; ++k) {
      CHECK(poly.coeff(k) == poly.coeff(big_n - k));
    }
    CHECK(poly.eval(mpz_class(1)) ==
          mpz_class(static_cast<long>(weyl::factorial(n))));
  }
}

TEST_CASE("family_cell pairs labels with transposed shapes") {
  const auto dec = cells::two_sided_cells(5);
  for (const auto& lambda : partitions_of(5)) {
    const int id = unipotent::family_cell(lambda, dec);
    CHECK(dec.cells()[static_cast<size_t>(id)].shape == lambda.transpose());
  }
  CHECK_THROWS_AS(unipotent::family_cell(Partition({2, 1}), dec),
                  std::invalid_argument);
}
