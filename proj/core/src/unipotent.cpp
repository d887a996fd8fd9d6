#include "dltk/unipotent.hpp"

#include <stdexcept>
#include <string>

namespace dltk::unipotent {

namespace {

void check_rank(const Partition& lambda) {
  if (lambda.sum() > kUnipotentRankCap) {
    throw std::invalid_argument("unipotent characters support n <= " +
                                std::to_string(kUnipotentRankCap));
  }
}

}  // namespace

IntPoly generic_degree(const Partition& lambda) {
  check_rank(lambda);
  const int n = lambda.sum();
  IntPoly out = IntPoly::monomial(1, static_cast<int>(lambda.n_invariant()));
  for (int i = 1; i <= n; ++i) out = out * q_pow_minus_one(i);
  for (int h : lambda.hooks()) out = out.exact_div(q_pow_minus_one(h));
  return out;
}

std::pair<long long, long long> a_A(const Partition& lambda) {
  const IntPoly d = generic_degree(lambda);
  return {d.valuation(), d.degree()};
}

mpz_class chi_dim(const Partition& lambda) {
  check_rank(lambda);
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(lambda.sum()));
  for (int h : lambda.hooks()) {
    if (!mpz_divisible_ui_p(out.get_mpz_t(), static_cast<unsigned long>(h))) {
      throw std::logic_error("hook length formula division failed");
    }
    mpz_divexact_ui(out.get_mpz_t(), out.get_mpz_t(),
                    static_cast<unsigned long>(h));
  }
  return out;
}

int family_cell(const Partition& lambda, const cells::CellDecomposition& dec) {
  if (lambda.sum() != dec.rank()) {
    throw std::invalid_argument("partition size does not match the rank of "
                                "the cell decomposition");
  }
  const Partition target = lambda.transpose();
  for (const auto& cell : dec.cells()) {
    if (cell.shape == target) return cell.id;
  }
  throw std::logic_error("cell decomposition is missing a shape");
}

IntPoly flag_count_poly(int n) {
  if (n < 0 || n > kUnipotentRankCap) {
    throw std::invalid_argument("flag count polynomial supports n <= " +
                                std::to_string(kUnipotentRankCap));
  }
  IntPoly out = IntPoly::constant(1);
  for (int i = 2; i <= n; ++i) {
    IntPoly factor;
    for (int j = 0; j < i; ++j) factor += IntPoly::monomial(1, j);
    out = out * factor;
  }
  return out;
}

UnipotentCharData unipotent_character(const Partition& lambda) {
  UnipotentCharData data;
  data.lambda = lambda;
  data.generic_degree = generic_degree(lambda);
  data.a = data.generic_degree.valuation();
  data.A = data.generic_degree.degree();
  data.chi_dim = chi_dim(lambda);
  return data;
}

std::vector<UnipotentCharData> all_unipotent_characters(int n) {
  if (n < 0 || n > kUnipotentRankCap) {
    throw std::invalid_argument("unipotent characters support n <= " +
                                std::to_string(kUnipotentRankCap));
  }
  std::vector<UnipotentCharData> out;
  for (const Partition& lambda : partitions_of(n)) {
    out.push_back(unipotent_character(lambda));
  }
  return out;
}

}  // namespace dltk::unipotent
