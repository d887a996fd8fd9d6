#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "dltk/cells.hpp"
#include "dltk/partition.hpp"
#include "dltk/poly.hpp"

namespace dltk::unipotent {

inline constexpr int kUnipotentRankCap = 30;

// One unipotent character of GL_n(q), labeled by a partition of n.
struct UnipotentCharData {
  Partition lambda;
  IntPoly generic_degree;
  long long a = 0;   // valuation of generic_degree
  long long A = 0;   // degree of generic_degree
  mpz_class chi_dim; // degree of the labeling character of S_n
};

// q^{n(lambda)} prod_{i=1..n}(q^i - 1) / prod_{cells}(q^{hook} - 1), by
// exact polynomial division.  |lambda| <= kUnipotentRankCap.
IntPoly generic_degree(const Partition& lambda);

// (valuation, degree) of the generic degree polynomial.
std::pair<long long, long long> a_A(const Partition& lambda);

// Hook length formula |lambda|! / prod hooks.
mpz_class chi_dim(const Partition& lambda);

// Id of the two-sided cell whose RSK shape is the transpose of lambda.
// The cell of shape (1^n) carries the trivial character's family {w0}.
int family_cell(const Partition& lambda, const cells::CellDecomposition& dec);

// [n]_q! = prod_{i=1..n} (1 + q + ... + q^{i-1}).
IntPoly flag_count_poly(int n);

UnipotentCharData unipotent_character(const Partition& lambda);

// All unipotent characters of GL_n(q), labels in descending lexicographic
// order ((n) first, (1^n) last).
std::vector<UnipotentCharData> all_unipotent_characters(int n);

}  // namespace dltk::unipotent
