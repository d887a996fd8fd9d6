#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "dltk/cells.hpp"
#include "dltk/partition.hpp"
#include "dltk/weyl.hpp"

using namespace dltk;
using cells::Laurent;
using cells::QPolynomial;
using weyl::Permutation;

namespace {

Permutation perm(std::vector<int> images) {
  return Permutation::from_images(std::move(images));
}

Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> images(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<size_t>(i)] = i + 1;
  for (int i = n - 1; i > 0; --i) {
    std::uniform_int_distribution<int> pick(0, i);
    std::swap(images[static_cast<size_t>(i)],
              images[static_cast<size_t>(pick(rng))]);
  }
  return perm(std::move(images));
}

}  // namespace

TEST_CASE("Laurent polynomial arithmetic") {
  const auto v = Laurent::monomial(1, 1);
  const auto vinv = Laurent::monomial(1, -1);
  CHECK((v * vinv) == Laurent::monomial(1, 0));
  auto p = v + vinv;
  CHECK(p.val() == -1);
  CHECK(p.deg() == 1);
  CHECK(p.coeff(1) == 1);
  CHECK(p.coeff(0) == 0);
  CHECK(p.bar() == p);
  CHECK(Laurent::monomial(3, 2).bar() == Laurent::monomial(3, -2));
  p -= v;
  p -= vinv;
  CHECK(p.is_zero());
  CHECK_THROWS_AS(p.val(), std::logic_error);
  CHECK_THROWS_AS(p.deg(), std::logic_error);
  CHECK(Laurent::monomial(2, 0).to_string() == "2");
  CHECK((v + vinv).to_string() == "v + v^-1");
}

TEST_CASE("QPolynomial truncation and reciprocal") {
  auto p = QPolynomial::one() + QPolynomial::monomial(2, 1) +
           QPolynomial::monomial(1, 3);
  CHECK(p.degree() == 3);
  CHECK(p.truncate(1) == QPolynomial::one() + QPolynomial::monomial(2, 1));
  CHECK(p.truncate(0) == QPolynomial::one());
  // q^3 p(1/q) reverses the coefficients.
  CHECK(p.reciprocal(3) ==
        QPolynomial::one() + QPolynomial::monomial(2, 2) +
            QPolynomial::monomial(1, 3));
  CHECK(p.reciprocal(4) ==
        QPolynomial::monomial(1, 1) + QPolynomial::monomial(2, 3) +
            QPolynomial::monomial(1, 4));
  CHECK_THROWS_AS(p.reciprocal(2), std::invalid_argument);
}

TEST_CASE("T-basis quadratic relation") {
  const auto s = Permutation::simple(2, 1);
  const auto ts = cells::hecke_t_basis(s);
  const auto product = cells::hecke_multiply(ts, ts);
  // T_s T_s = (v^2 - 1) T_s + v^2 T_e.
  CHECK(product.coeff(s) ==
        Laurent::monomial(1, 2) - Laurent::monomial(1, 0));
  CHECK(product.coeff(Permutation(2)) == Laurent::monomial(1, 2));
}

TEST_CASE("T-basis products are length-additive on reduced pairs") {
  const auto s1 = Permutation::simple(3, 1);
  const auto s2 = Permutation::simple(3, 2);
  const auto t = cells::hecke_multiply(cells::hecke_t_basis(s1),
                                       cells::hecke_t_basis(s2));
  CHECK(t.terms().size() == 1);
  CHECK(t.coeff(weyl::multiply(s1, s2)) == Laurent::monomial(1, 0));
}

TEST_CASE("Hecke multiplication is associative in S_4") {
  std::mt19937_64 rng(3401);
  for (int trial = 0; trial < 25; ++trial) {
    const auto a = cells::hecke_t_basis(random_permutation(4, rng));
    const auto b = cells::hecke_t_basis(random_permutation(4, rng));
    const auto c = cells::hecke_t_basis(random_permutation(4, rng));
    CHECK(cells::hecke_multiply(cells::hecke_multiply(a, b), c) ==
          cells::hecke_multiply(a, cells::hecke_multiply(b, c)));
  }
}

TEST_CASE("C'-basis expansion of a simple reflection") {
  auto& ctx = cells::shared_context(3);
  const auto s = Permutation::simple(3, 1);
  const auto c = ctx.cprime(s);
  // C'_s = v^-1 (T_e + T_s).
  CHECK(c.terms().size() == 2);
  CHECK(c.coeff(s) == Laurent::monomial(1, -1));
  CHECK(c.coeff(Permutation(3)) == Laurent::monomial(1, -1));
}

TEST_CASE("KL polynomials vanish off the Bruhat order") {
  const auto x = perm({3, 1, 2});
  const auto w = perm({2, 3, 1});
  CHECK(!weyl::bruhat_leq(x, w));
  CHECK(cells::kl_polynomial(x, w).is_zero());
  CHECK(cells::kl_polynomial_oracle(x, w).is_zero());
}

TEST_CASE("KL degree bound holds strictly below the diagonal") {
  const auto all = weyl::all_permutations(4);
  for (const auto& x : all) {
    for (const auto& w : all) {
      if (x == w || !weyl::bruhat_leq(x, w)) continue;
      const auto p = cells::kl_polynomial(x, w);
      CHECK(!p.is_zero());
      CHECK(p.coeff(0) == 1);  // constant term one on Bruhat pairs
      CHECK(2 * p.degree() <= static_cast<int>(w.length() - x.length() - 1));
    }
  }
}

TEST_CASE("the two KL routes agree on sampled S_5 pairs") {
  std::mt19937_64 rng(3402);
  for (int trial = 0; trial < 12; ++trial) {
    const auto x = random_permutation(5, rng);
    const auto w = random_permutation(5, rng);
    CHECK(cells::kl_polynomial(x, w) == cells::kl_polynomial_oracle(x, w));
  }
}

TEST_CASE("R-polynomials have the expected degree and specialization") {
  auto& ctx = cells::shared_context(4);
  const auto all = weyl::all_permutations(4);
  for (const auto& x : all) {
    for (const auto& w : all) {
      if (!weyl::bruhat_leq(x, w)) continue;
      const auto r = ctx.r_polynomial(x, w);
      CHECK(r.degree() == static_cast<int>(w.length() - x.length()));
      // R_{x,w}(1) = 0 unless x = w: the Hecke algebra collapses to the
      // group algebra at q = 1.
      long long at_one = 0;
      for (int k = 0; k <= r.degree(); ++k) at_one += r.coeff(k);
      CHECK(at_one == (x == w ? 1 : 0));
    }
  }
}

TEST_CASE("mu vanishes on even length gaps") {
  std::mt19937_64 rng(3403);
  for (int trial = 0; trial < 80; ++trial) {
    const auto x = random_permutation(4, rng);
    const auto w = random_permutation(4, rng);
    if ((w.length() - x.length()) % 2 == 0) {
      CHECK(cells::mu(x, w) == 0);
    }
  }
}

TEST_CASE("rank caps reject oversize requests") {
  const auto big = weyl::Permutation(8);
  CHECK_THROWS_AS(cells::kl_polynomial(big, big), std::invalid_argument);
  CHECK_THROWS_AS(
      cells::kl_basis_product(weyl::Permutation(6), weyl::Permutation(6)),
      std::invalid_argument);
  CHECK_THROWS_AS(cells::a_value_oracle(weyl::Permutation(5)),
                  std::invalid_argument);
  CHECK_THROWS_AS(cells::two_sided_cells(6, cells::CellMethod::oracle),
                  std::invalid_argument);
  CHECK_THROWS_AS(cells::two_sided_cells(11, cells::CellMethod::fast),
                  std::invalid_argument);
  CHECK_THROWS_AS(cells::kl_polynomial(perm({2, 1}), perm({2, 1, 3})),
                  std::invalid_argument);
}

TEST_CASE("RSK tableaux are standard and of mirrored shapes") {
  std::mt19937_64 rng(3404);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const auto w = random_permutation(n, rng);
    const auto [p, q] = cells::rsk(w);
    CHECK(p.shape() == q.shape());
    CHECK(p.shape() == cells::shape(w));
    // Both tableaux hold 1..n with strictly increasing rows and columns.
    for (const auto* t : {&p, &q}) {
      std::set<int> seen;
      for (size_t r = 0; r < t->rows.size(); ++r) {
        const auto& row = t->rows[r];
        for (size_t k = 0; k < row.size(); ++k) {
          seen.insert(row[k]);
          if (k + 1 < row.size()) CHECK(row[k] < row[k + 1]);
          if (r + 1 < t->rows.size() && k < t->rows[r + 1].size()) {
            CHECK(row[k] < t->rows[r + 1][k]);
          }
        }
      }
      CHECK(static_cast<int>(seen.size()) == n);
      CHECK(*seen.begin() == 1);
      CHECK(*seen.rbegin() == n);
    }
    // The recording tableau of w is the insertion tableau of w^-1.
    CHECK(q == cells::rsk(w.inverse()).first);
  }
}

TEST_CASE("cell decompositions partition the group") {
  for (int n = 1; n <= 6; ++n) {
    const auto dec = cells::two_sided_cells(n);
    CHECK(dec.rank() == n);
    CHECK(dec.method() == cells::CellMethod::fast);
    size_t total = 0;
    std::set<std::uint64_t> seen;
    for (const auto& cell : dec.cells()) {
      total += cell.members.size();
      for (auto code : cell.members) {
        CHECK(seen.insert(code).second);
        const auto w = Permutation::unpack(n, code);
        CHECK(dec.cell_of(w) == cell.id);
        CHECK(cell.contains(w));
        CHECK(cells::shape(w) == cell.shape);
      }
      CHECK(cell.a == cell.shape.n_invariant());
      CHECK(std::is_sorted(cell.members.begin(), cell.members.end()));
    }
    CHECK(static_cast<long long>(total) == weyl::factorial(n));
    // Cell 0 is the identity's cell; the last is w0's.
    CHECK(dec.cells().front().contains(Permutation(n)));
    CHECK(dec.cells().back().contains(weyl::longest_element(n)));
  }
}

TEST_CASE("cell count equals the number of partitions") {
  const int counts[] = {0, 1, 2, 3, 5, 7, 11, 15};
  for (int n = 1; n <= 7; ++n) {
    CHECK(static_cast<int>(cells::two_sided_cells(n).cells().size()) ==
          counts[n]);
  }
}

TEST_CASE("cell order has the identity cell on top") {
  const auto dec = cells::two_sided_cells(5);
  const int e_cell = dec.cell_of(Permutation(5));
  const int w0_cell = dec.cell_of(weyl::longest_element(5));
  for (int i = 0; i < static_cast<int>(dec.cells().size()); ++i) {
    CHECK(dec.cell_leq(i, e_cell));
    CHECK(dec.cell_leq(w0_cell, i));
  }
  CHECK_THROWS_AS(dec.cell_of(Permutation(4)), std::invalid_argument);
}

TEST_CASE("a-function is constant on cells and ordered against them") {
  const auto dec = cells::two_sided_cells(4, cells::CellMethod::oracle);
  for (const auto& cell : dec.cells()) {
    for (auto code : cell.members) {
      CHECK(cells::a_value(Permutation::unpack(4, code)) == cell.a);
    }
  }
}
