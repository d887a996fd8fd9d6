#include "verify.hpp"

#include <bit>
#include <cstdio>
#include <filesystem>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cli.hpp"
#include "dltk/braid.hpp"
#include "dltk/cells.hpp"
#include "dltk/dlcoh.hpp"
#include "dltk/dlpoints.hpp"
#include "dltk/errors.hpp"
#include "dltk/partition.hpp"
#include "dltk/poly.hpp"
#include "dltk/unipotent.hpp"
#include "dltk/weyl.hpp"

namespace dltk::tools {

namespace {

template <class T>
std::string display(const T& value) {
  if constexpr (std::is_same_v<T, bool>) {
    return value ? "true" : "false";
  } else if constexpr (requires { value.to_string(); }) {
    return value.to_string();
  } else if constexpr (requires { value.to_word_string(); }) {
    return value.to_word_string();
  } else if constexpr (requires(std::ostringstream& s) { s << value; }) {
    std::ostringstream s;
    s << value;
    return s.str();
  } else if constexpr (requires { value.begin(); value.end(); }) {
    std::string s = "[";
    for (const auto& item : value) {
      if (s.size() > 1) s += ",";
      s += display(item);
    }
    return s + "]";
  } else {
    return "<value>";
  }
}

class Checker {
 public:
  Checker(std::string suite, std::ostream& out)
      : suite_(std::move(suite)), out_(out) {}

  void require(const std::string& name, bool ok,
               const std::string& detail = "") {
    ++checks_;
    out_ << (ok ? "ok   " : "FAIL ") << suite_ << ": " << name;
    if (!ok && !detail.empty()) out_ << " (" << detail << ")";
    out_ << "\n";
    if (!ok) ++failures_;
  }

  template <class T, class U>
  void equal(const std::string& name, const T& got, const U& want) {
    const bool ok = got == want;
    require(name, ok,
            ok ? "" : "expected " + display(want) + ", got " + display(got));
  }

  int checks() const { return checks_; }
  int failures() const { return failures_; }

 private:
  std::string suite_;
  std::ostream& out_;
  int checks_ = 0;
  int failures_ = 0;
};

weyl::Permutation perm(std::vector<int> images) {
  return weyl::Permutation::from_images(std::move(images));
}

weyl::Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> images(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<size_t>(i)] = i + 1;
  for (int i = n - 1; i > 0; --i) {
    std::uniform_int_distribution<int> pick(0, i);
    std::swap(images[static_cast<size_t>(i)],
              images[static_cast<size_t>(pick(rng))]);
  }
  return perm(std::move(images));
}

braid::BraidWord random_braid_word(int n, int length, bool signed_letters,
                                   std::mt19937_64& rng) {
  braid::BraidWord word;
  word.rank = n;
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  for (int i = 0; i < length; ++i) {
    braid::BraidWord::Syllable s;
    s.kind = braid::BraidWord::Token::generator;
    s.index = gen(rng);
    s.sign = signed_letters && sign(rng) == 1 ? -1 : 1;
    word.syllables.push_back(s);
  }
  return word;
}

// Reference Bruhat test: some subword of a fixed reduced word of w is a
// reduced word for x.
bool bruhat_subword_oracle(const weyl::Permutation& x,
                           const weyl::Permutation& w) {
  const auto letters = weyl::reduced_word(w).letters;
  const auto len = static_cast<unsigned>(letters.size());
  const int lx = x.length();
  for (unsigned mask = 0; mask < (1u << len); ++mask) {
    if (std::popcount(mask) != lx) continue;
    weyl::Permutation p(x.rank());
    for (unsigned i = 0; i < len; ++i) {
      if (mask >> i & 1u) p.apply_right_simple(letters[i]);
    }
    if (p == x) return true;
  }
  return false;
}

// All distinct braids b with b^d = pi obtained from positive generator
// words of the forced exponent-sum length 2N/d.
std::vector<braid::GarsideElement> positive_roots_of_pi(int n, int d) {
  const long long length = 2 * weyl::num_positive_roots(n) / d;
  std::vector<int> letters(static_cast<size_t>(length), 1);
  std::set<braid::GarsideElement> roots;
  for (;;) {
    braid::BraidWord word;
    word.rank = n;
    for (int i : letters) {
      word.syllables.push_back({braid::BraidWord::Token::generator, i, 1});
    }
    const auto element = braid::normal_form(word);
    if (braid::is_dth_root_of_pi(element, d)) roots.insert(element);
    size_t i = 0;
    while (i < letters.size() && letters[i] == n - 1) {
      letters[i] = 1;
      ++i;
    }
    if (i == letters.size()) break;
    ++letters[i];
  }
  return {roots.begin(), roots.end()};
}

braid::EnrichedWord gallery(int n, std::vector<braid::EnrichedWord::Letter> letters) {
  braid::EnrichedWord word;
  word.rank = n;
  word.letters = std::move(letters);
  return word;
}

// ---------------------------------------------------------------------------

void suite_weyl(Checker& c, const VerifyOptions&) {
  c.equal("involution squares to the identity",
          weyl::multiply(perm({2, 1, 3}), perm({2, 1, 3})),
          weyl::Permutation(3));
  c.equal("composition convention (u*v)(i) = u(v(i))",
          weyl::multiply(perm({2, 1, 3}), perm({1, 3, 2})), perm({2, 3, 1}));
  {
    std::mt19937_64 rng(2024);
    bool ok = true;
    for (int trial = 0; trial < 100; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 8);
      const auto u = random_permutation(n, rng);
      if (!weyl::multiply(u, u.inverse()).is_identity()) ok = false;
    }
    c.require("u * u^-1 = identity, 100 random u, n <= 8", ok);
  }
  c.equal("length of the identity", weyl::Permutation(4).length(), 0);
  c.equal("length of w0 in S_4", weyl::longest_element(4).length(), 6);
  c.equal("length counts inversions", perm({2, 3, 1}).length(), 2);
  c.equal("longest element of S_2", weyl::longest_element(2), perm({2, 1}));
  c.equal("longest element of S_4", weyl::longest_element(4),
          perm({4, 3, 2, 1}));
  {
    bool ok = true;
    for (int n = 1; n <= 10; ++n) {
      if (weyl::longest_element(n).length() != n * (n - 1) / 2) ok = false;
    }
    c.require("l(w0) = n(n-1)/2 for n <= 10", ok);
  }
  {
    bool ok = true;
    const auto id = weyl::Permutation(4);
    for (const auto& w : weyl::all_permutations(4)) {
      if (!weyl::bruhat_leq(id, w)) ok = false;
    }
    c.require("identity lies below every element of S_4", ok);
  }
  c.require("(2,3,1) and (3,1,2) are Bruhat-incomparable",
            !weyl::bruhat_leq(perm({2, 3, 1}), perm({3, 1, 2})) &&
                !weyl::bruhat_leq(perm({3, 1, 2}), perm({2, 3, 1})));
  {
    bool ok = true;
    const auto all = weyl::all_permutations(4);
    for (const auto& x : all) {
      for (const auto& w : all) {
        if (weyl::bruhat_leq(x, w) != bruhat_subword_oracle(x, w)) ok = false;
      }
    }
    c.require("rank-matrix Bruhat test matches the subword oracle on S_4", ok);
  }
  c.require("identity has no descents",
            weyl::Permutation(5).right_descents().empty() &&
                weyl::Permutation(5).left_descents().empty());
  {
    const auto all_simple = std::vector<int>{1, 2, 3};
    c.equal("w0 descends at every position",
            weyl::longest_element(4).right_descents().size(),
            all_simple.size());
  }
  c.equal("right descents of (2,3,1)", perm({2, 3, 1}).right_descents(),
          std::vector<int>{2});
  {
    bool subadditive = true;
    const auto all = weyl::all_permutations(4);
    for (const auto& u : all) {
      for (const auto& v : all) {
        const int prod = weyl::multiply(u, v).length();
        if (prod > u.length() + v.length()) subadditive = false;
      }
    }
    c.require("l(uv) <= l(u) + l(v), exhaustive n = 4", subadditive);
  }
  {
    // Partial order axioms with unique minimum and maximum, S_4.
    const auto all = weyl::all_permutations(4);
    bool antisymmetric = true, transitive = true;
    for (size_t i = 0; i < all.size(); ++i) {
      for (size_t j = 0; j < all.size(); ++j) {
        if (i != j && weyl::bruhat_leq(all[i], all[j]) &&
            weyl::bruhat_leq(all[j], all[i])) {
          antisymmetric = false;
        }
        for (size_t k = 0; k < all.size(); ++k) {
          if (weyl::bruhat_leq(all[i], all[j]) &&
              weyl::bruhat_leq(all[j], all[k]) &&
              !weyl::bruhat_leq(all[i], all[k])) {
            transitive = false;
          }
        }
      }
    }
    c.require("Bruhat order is antisymmetric on S_4", antisymmetric);
    c.require("Bruhat order is transitive on S_4", transitive);
    bool max_ok = true;
    const auto w0 = weyl::longest_element(4);
    for (const auto& w : all) {
      if (!weyl::bruhat_leq(w, w0)) max_ok = false;
    }
    c.require("w0 lies above every element of S_4", max_ok);
  }
  {
    bool ok = true;
    for (int n = 1; n <= 6; ++n) {
      const auto w0 = weyl::longest_element(n);
      const long long big_n = weyl::num_positive_roots(n);
      for (const auto& w : weyl::all_permutations(n)) {
        if (weyl::multiply(w0, w).length() != big_n - w.length()) ok = false;
      }
    }
    c.require("l(w0 w) = N - l(w), exhaustive n <= 6", ok);
  }
}

// ---------------------------------------------------------------------------

void suite_braid(Checker& c, const VerifyOptions& options) {
  const auto nf = [](int n, const std::string& expr) {
    return braid::normal_form(braid::BraidWord::parse(n, expr));
  };
  {
    const auto d3 = nf(3, "s1 s2 s1");
    c.require("s1 s2 s1 normalizes to D in B_3",
              d3.inf() == 1 && d3.canonical_length() == 0);
    const auto ds1 = nf(3, "s1 s2 s1 s1");
    c.require("s1 s2 s1 s1 normalizes to D s1",
              ds1.inf() == 1 && ds1.factors() ==
                                    std::vector<weyl::Permutation>{
                                        weyl::Permutation::simple(3, 1)});
    const auto cubed = nf(2, "s1 s1 s1");
    c.require("s1^3 is D^3 in B_2",
              cubed.inf() == 3 && cubed.canonical_length() == 0);
  }
  {
    std::mt19937_64 rng(61);
    bool ok = true;
    for (int trial = 0; trial < 50; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 4);
      const auto a = braid::normal_form(random_braid_word(n, 10, true, rng));
      if (!braid::multiply(a, braid::inverse(a)).is_identity()) ok = false;
    }
    c.require("a * a^-1 = identity, 50 random braids", ok);
  }
  c.equal("(s1 s2)^3 = D^2 in B_3",
          braid::power(braid::lift(perm({2, 3, 1})), 3), braid::full_twist(3));
  {
    std::mt19937_64 rng(62);
    bool ok = true;
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 4);
      const auto a = braid::normal_form(random_braid_word(n, 8, true, rng));
      const auto b = braid::normal_form(random_braid_word(n, 8, true, rng));
      if (braid::multiply(a, b).length() != a.length() + b.length()) ok = false;
    }
    c.require("exponent-sum length is a morphism, 200 random pairs", ok);
  }
  c.require("full twist of B_2 is D^2",
            braid::full_twist(2).inf() == 2 &&
                braid::full_twist(2).canonical_length() == 0);
  {
    std::mt19937_64 rng(63);
    bool ok = true;
    for (int trial = 0; trial < 100; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 4);
      const auto g = braid::normal_form(random_braid_word(n, 10, true, rng));
      const auto pi = braid::full_twist(n);
      if (braid::multiply(pi, g) != braid::multiply(g, pi)) ok = false;
    }
    c.require("full twist is central, 100 random braids, n <= 5", ok);
  }
  c.equal("l(full_twist(4)) = 12", braid::full_twist(4).length(), 12LL);
  c.require("lift of the identity is the identity braid",
            braid::lift(weyl::Permutation(4)).is_identity());
  {
    bool ok = true;
    for (int n = 1; n <= 6; ++n) {
      const auto half = braid::lift(weyl::longest_element(n));
      if (braid::multiply(half, half) != braid::full_twist(n)) ok = false;
    }
    c.require("lift(w0)^2 = full twist, n <= 6", ok);
  }
  c.equal("lifts multiply when lengths add",
          braid::multiply(braid::lift(weyl::Permutation::simple(3, 1)),
                          braid::lift(weyl::Permutation::simple(3, 2))),
          nf(3, "s1 s2"));
  c.equal("star fixes D", braid::star(nf(3, "D")), nf(3, "D"));
  c.equal("star reverses words", braid::star(nf(3, "s1 s2")), nf(3, "s2 s1"));
  {
    std::mt19937_64 rng(64);
    bool ok = true;
    for (int trial = 0; trial < 100; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 4);
      const auto b = braid::normal_form(random_braid_word(n, 10, true, rng));
      if (braid::star(braid::star(b)) != b) ok = false;
    }
    c.require("star is an involution, 100 random braids", ok);
  }
  {
    const auto sss_pi = braid::super_summit_set(braid::full_twist(3),
                                                options.sss_cap);
    c.require("super summit set of D^2 in B_3 is {D^2}",
              sss_pi.size() == 1 && sss_pi[0] == braid::full_twist(3));
    const auto sss_s1 = braid::super_summit_set(
        braid::lift(weyl::Permutation::simple(3, 1)), options.sss_cap);
    bool contains_s2 = false;
    for (const auto& g : sss_s1) {
      if (g == braid::lift(weyl::Permutation::simple(3, 2))) contains_s2 = true;
    }
    c.require("super summit set of s1 in B_3 contains s2", contains_s2);
    c.equal("super summit set of s1 s2 in B_3 has two elements",
            braid::super_summit_set(nf(3, "s1 s2"), options.sss_cap).size(),
            size_t{2});
  }
  {
    const auto a = nf(3, "s1 s2");
    const auto b = nf(3, "s2 s1");
    const auto result = braid::are_conjugate(a, b, options.sss_cap);
    bool witness_ok = false;
    if (result.conjugate && result.witness.has_value()) {
      const auto& w = *result.witness;
      witness_ok =
          braid::multiply(braid::multiply(w, b), braid::inverse(w)) == a;
    }
    c.require("s1 s2 and s2 s1 are conjugate in B_3 with a verified witness",
              result.conjugate && witness_ok);
  }
  {
    std::mt19937_64 rng(65);
    bool ok = true;
    const auto delta = nf(4, "D");
    for (int trial = 0; trial < 20; ++trial) {
      const auto x = braid::normal_form(random_braid_word(4, 6, true, rng));
      const auto conj =
          braid::multiply(braid::multiply(x, delta), braid::inverse(x));
      const auto result = braid::are_conjugate(delta, conj, options.sss_cap);
      if (!result.conjugate || !result.witness.has_value()) {
        ok = false;
        continue;
      }
      const auto& w = *result.witness;
      if (braid::multiply(braid::multiply(w, conj), braid::inverse(w)) !=
          delta) {
        ok = false;
      }
    }
    c.require("D is conjugate to 20 random conjugates of D, witnesses verify",
              ok);
  }
  c.require("s1 and s1^3 are not conjugate in B_2",
            !braid::are_conjugate(nf(2, "s1"), nf(2, "s1 s1 s1"),
                                  options.sss_cap)
                 .conjugate);
  c.require("(s1 s2)^3 = pi in B_3",
            braid::is_dth_root_of_pi(nf(3, "s1 s2"), 3));
  c.require("D^2 = pi", braid::is_dth_root_of_pi(nf(3, "D"), 2));
  c.require("s1 is not a square root of pi in B_3",
            !braid::is_dth_root_of_pi(nf(3, "s1"), 2));
  {
    std::mt19937_64 rng(66);
    bool ok = true;
    for (int trial = 0; trial < 500; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 4);
      const int len = 1 + static_cast<int>(rng() % 20);
      const auto b = braid::normal_form(random_braid_word(n, len, true, rng));
      const auto reparsed = nf(n, b.to_word_string());
      if (reparsed != b) ok = false;
    }
    c.require("normal form round-trips through its word string, 500 random "
              "words, n <= 5, length <= 20",
              ok);
  }
  {
    std::mt19937_64 rng(67);
    bool ok = true;
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 4);
      const auto b = braid::normal_form(random_braid_word(n, 10, true, rng));
      const auto x = braid::normal_form(random_braid_word(n, 8, true, rng));
      const auto conj =
          braid::multiply(braid::multiply(x, b), braid::inverse(x));
      if (conj.length() != b.length()) ok = false;
    }
    c.require("length is a conjugacy invariant, 200 random instances", ok);
  }
  {
    bool ok = true;
    for (int n = 3; n <= 6; ++n) {
      for (int i = 1; i + 1 <= n - 1; ++i) {
        std::string a = "s" + std::to_string(i) + " s" + std::to_string(i + 1) +
                        " s" + std::to_string(i);
        std::string b = "s" + std::to_string(i + 1) + " s" + std::to_string(i) +
                        " s" + std::to_string(i + 1);
        if (nf(n, a) != nf(n, b)) ok = false;
      }
      for (int i = 1; i <= n - 1; ++i) {
        for (int j = i + 2; j <= n - 1; ++j) {
          std::string a = "s" + std::to_string(i) + " s" + std::to_string(j);
          std::string b = "s" + std::to_string(j) + " s" + std::to_string(i);
          if (nf(n, a) != nf(n, b)) ok = false;
        }
      }
    }
    c.require("braid relations hold after normal form, n <= 6", ok);
  }
  {
    bool ok = true;
    for (int n = 2; n <= 6; ++n) {
      const auto delta = braid::lift(weyl::longest_element(n));
      for (int i = 1; i <= n - 1; ++i) {
        const auto lhs = braid::multiply(
            braid::multiply(delta, braid::lift(weyl::Permutation::simple(n, i))),
            braid::inverse(delta));
        if (lhs != braid::lift(weyl::Permutation::simple(n, n - i))) ok = false;
      }
    }
    c.require("D-conjugation flips the generators s_i -> s_{n-i}, n <= 6", ok);
  }
  {
    const std::vector<std::pair<int, int>> instances = {{3, 2}, {3, 3}, {4, 2}};
    for (const auto& [n, d] : instances) {
      const auto roots = positive_roots_of_pi(n, d);
      const std::string tag =
          "positive " + std::to_string(d) + "-th roots of pi in B_" +
          std::to_string(n);
      bool all_roots = !roots.empty();
      for (const auto& r : roots) {
        if (braid::power(r, d) != braid::full_twist(n)) all_roots = false;
      }
      c.require(tag + " all satisfy b^d = pi and some exist", all_roots);
      bool pairwise = true;
      for (size_t i = 1; i < roots.size(); ++i) {
        if (!braid::are_conjugate(roots[0], roots[i], options.sss_cap)
                 .conjugate) {
          pairwise = false;
        }
      }
      c.require(tag + " form a single conjugacy class", pairwise);
    }
    c.require("the cube-root search in B_3 finds both s1 s2 and s2 s1",
              positive_roots_of_pi(3, 3).size() >= 2);
  }
}

// ---------------------------------------------------------------------------

void suite_cells(Checker& c, const VerifyOptions&) {
  const auto one = cells::QPolynomial::one();
  const auto one_plus_q =
      cells::QPolynomial::one() + cells::QPolynomial::monomial(1, 1);
  {
    bool ok = true;
    for (const auto& w : weyl::all_permutations(4)) {
      if (cells::kl_polynomial(w, w) != one) ok = false;
    }
    c.require("P_{w,w} = 1 for all w in S_4", ok);
  }
  c.equal("P_{e,(3,4,1,2)} by the induction route",
          cells::kl_polynomial(weyl::Permutation(4), perm({3, 4, 1, 2})),
          one_plus_q);
  c.equal("P_{e,(3,4,1,2)} by the bar-invariance oracle",
          cells::kl_polynomial_oracle(weyl::Permutation(4), perm({3, 4, 1, 2})),
          one_plus_q);
  {
    bool ok = true;
    const auto all = weyl::all_permutations(3);
    for (const auto& x : all) {
      for (const auto& w : all) {
        if (!weyl::bruhat_leq(x, w)) continue;
        if (cells::kl_polynomial(x, w) != one) ok = false;
        if (cells::kl_polynomial_oracle(x, w) != one) ok = false;
      }
    }
    c.require("P_{x,w} = 1 on all Bruhat pairs of S_3, both routes", ok);
  }
  {
    bool ok = true;
    const auto all = weyl::all_permutations(4);
    for (const auto& x : all) {
      for (const auto& w : all) {
        if (w.length() - x.length() == 1 && weyl::bruhat_leq(x, w)) {
          if (cells::mu(x, w) != 1) ok = false;
        }
      }
    }
    c.require("mu = 1 on covering pairs of S_4", ok);
  }
  // Despite P_{e,(3,4,1,2)} = 1 + q, the length difference 4 is even, so
  // the half-integer exponent (l(w) - l(x) - 1)/2 picks out no coefficient.
  c.equal("mu(e,(3,4,1,2)) vanishes by parity",
          cells::mu(weyl::Permutation(4), perm({3, 4, 1, 2})), 0LL);
  c.equal("mu(e,w0) = 0 in S_3",
          cells::mu(weyl::Permutation(3), weyl::longest_element(3)), 0LL);
  {
    const auto s = weyl::Permutation::simple(2, 1);
    const auto h = cells::kl_basis_product(s, s);
    auto expected = cells::Laurent::monomial(1, 1);
    expected += cells::Laurent::monomial(1, -1);
    c.require("C'_s C'_s = (v + v^-1) C'_s in S_2",
              h.terms().size() == 1 && h.coeff(s) == expected);
  }
  {
    const auto w0 = weyl::longest_element(3);
    const auto h = cells::kl_basis_product(w0, w0);
    c.require("C'_{w0} C'_{w0} is supported on C'_{w0} with top v-degree 3",
              h.terms().size() == 1 && h.coeff(w0).deg() == 3);
  }
  {
    const auto y = perm({2, 3, 1});
    const auto h = cells::kl_basis_product(weyl::Permutation(3), y);
    c.require("C'_e is the unit of the C'-basis product",
              h.terms().size() == 1 &&
                  h.coeff(y) == cells::Laurent::monomial(1, 0));
  }
  c.equal("a(identity) by the structure-constant oracle",
          cells::a_value_oracle(weyl::Permutation(3)), 0LL);
  c.equal("a(w0) = N = 3 in S_3 by the oracle",
          cells::a_value_oracle(weyl::longest_element(3)), 3LL);
  c.equal("a(s1) = 1 in S_3 by the oracle",
          cells::a_value_oracle(weyl::Permutation::simple(3, 1)), 1LL);
  {
    bool ok = true;
    for (int n = 1; n <= 4; ++n) {
      const auto bulk = cells::a_values_oracle(n);
      const auto all = weyl::all_permutations(n);
      for (size_t i = 0; i < all.size(); ++i) {
        if (bulk[i] != cells::a_value(all[i])) ok = false;
      }
    }
    c.require("RSK a-function matches the structure-constant oracle, n <= 4",
              ok);
  }
  c.equal("shape of the identity in S_5", cells::shape(weyl::Permutation(5)),
          Partition({5}));
  c.equal("shape of w0 in S_4", cells::shape(weyl::longest_element(4)),
          Partition({1, 1, 1, 1}));
  c.equal("shape of (2,1,3)", cells::shape(perm({2, 1, 3})),
          Partition({2, 1}));
  {
    const auto dec = cells::two_sided_cells(2, cells::CellMethod::oracle);
    c.require("S_2 splits into the cells {e} and {s1} with {s1} below {e}",
              dec.cells().size() == 2 &&
                  dec.cells()[0].shape == Partition({2}) &&
                  dec.cells()[1].shape == Partition({1, 1}) &&
                  dec.cell_leq(1, 0) && !dec.cell_leq(0, 1));
  }
  {
    const auto dec = cells::two_sided_cells(3, cells::CellMethod::oracle);
    bool ok = dec.cells().size() == 3;
    if (ok) {
      ok = dec.cells()[0].members.size() == 1 &&
           dec.cells()[1].members.size() == 4 &&
           dec.cells()[2].members.size() == 1 &&
           dec.cells()[0].shape == Partition({3}) &&
           dec.cells()[1].shape == Partition({2, 1}) &&
           dec.cells()[2].shape == Partition({1, 1, 1});
    }
    c.require("S_3 has cells of sizes 1, 4, 1 with the expected shapes", ok);
    bool middle = true;
    for (const auto code : dec.cells()[1].members) {
      if (cells::a_value(weyl::Permutation::unpack(3, code)) != 1) {
        middle = false;
      }
    }
    c.require("the four middle-cell elements of S_3 have a = 1", middle);
  }
  c.equal("S_4 has five two-sided cells",
          cells::two_sided_cells(4, cells::CellMethod::oracle).cells().size(),
          size_t{5});
  c.equal("a(w0) = 6 in S_4", cells::a_value(weyl::longest_element(4)), 6LL);
  c.equal("a(identity) = 0", cells::a_value(weyl::Permutation(4)), 0LL);
  {
    bool ok = true;
    for (int n = 1; n <= 5; ++n) {
      const auto fast = cells::two_sided_cells(n, cells::CellMethod::fast);
      const auto oracle = cells::two_sided_cells(n, cells::CellMethod::oracle);
      if (fast.cells().size() != oracle.cells().size()) {
        ok = false;
        continue;
      }
      const int count = static_cast<int>(fast.cells().size());
      for (int i = 0; i < count; ++i) {
        if (fast.cells()[static_cast<size_t>(i)].shape !=
                oracle.cells()[static_cast<size_t>(i)].shape ||
            fast.cells()[static_cast<size_t>(i)].a !=
                oracle.cells()[static_cast<size_t>(i)].a ||
            fast.cells()[static_cast<size_t>(i)].members !=
                oracle.cells()[static_cast<size_t>(i)].members) {
          ok = false;
        }
        for (int j = 0; j < count; ++j) {
          if (fast.cell_leq(i, j) != oracle.cell_leq(i, j)) ok = false;
        }
      }
    }
    c.require("RSK cells and order match the KL-preorder oracle, n <= 5", ok);
  }
  {
    bool ok = true;
    for (int n = 1; n <= 5; ++n) {
      const auto dec = cells::two_sided_cells(n, cells::CellMethod::oracle);
      const int count = static_cast<int>(dec.cells().size());
      for (int i = 0; i < count; ++i) {
        for (int j = 0; j < count; ++j) {
          if (dec.cell_leq(i, j) &&
              dec.cells()[static_cast<size_t>(i)].a <
                  dec.cells()[static_cast<size_t>(j)].a) {
            ok = false;
          }
          if (dec.cell_leq(i, j) !=
              dominance_leq(dec.cells()[static_cast<size_t>(i)].shape,
                            dec.cells()[static_cast<size_t>(j)].shape)) {
            ok = false;
          }
        }
      }
    }
    c.require(
        "cell order reverses the a-function and equals dominance, n <= 5", ok);
  }
  {
    bool ok = true;
    for (int n = 1; n <= 6; ++n) {
      const auto w0 = weyl::longest_element(n);
      for (const auto& w : weyl::all_permutations(n)) {
        if (cells::shape(weyl::multiply(w, w0)) !=
            cells::shape(w).transpose()) {
          ok = false;
        }
        if (cells::shape(w.inverse()) != cells::shape(w)) ok = false;
      }
    }
    c.require("shape(w w0) = shape(w)^T and shape(w^-1) = shape(w), n <= 6",
              ok);
  }
  {
    bool ok = true;
    for (const auto& w : weyl::all_permutations(5)) {
      for (const auto& x : weyl::all_permutations(5)) {
        if (!weyl::bruhat_leq(x, w)) continue;
        const auto p = cells::kl_polynomial(x, w);
        for (int k = 0; k <= p.degree(); ++k) {
          if (p.coeff(k) < 0) ok = false;
        }
      }
    }
    c.require("computed KL polynomials have non-negative coefficients, n <= 5",
              ok);
  }
}

// ---------------------------------------------------------------------------

void suite_unipotent(Checker& c, const VerifyOptions&) {
  c.equal("generic degree of the trivial label (5)",
          unipotent::generic_degree(Partition({5})), IntPoly::constant(1));
  c.equal("generic degree of the Steinberg label (1^4)",
          unipotent::generic_degree(Partition({1, 1, 1, 1})),
          IntPoly::monomial(1, 6));
  {
    auto expected = IntPoly::monomial(1, 2);
    expected += IntPoly::monomial(1, 1);
    c.equal("generic degree of (2,1) is q^2 + q",
            unipotent::generic_degree(Partition({2, 1})), expected);
  }
  c.require("a_A of (4) is (0,0)",
            unipotent::a_A(Partition({4})) == std::pair<long long, long long>{0, 0});
  c.require("a_A of (1^4) is (N,N) = (6,6)",
            unipotent::a_A(Partition({1, 1, 1, 1})) ==
                std::pair<long long, long long>{6, 6});
  c.require("a_A of (2,1) is (1,2)",
            unipotent::a_A(Partition({2, 1})) ==
                std::pair<long long, long long>{1, 2});
  c.equal("chi(1) of the trivial label", unipotent::chi_dim(Partition({6})),
          mpz_class(1));
  c.equal("chi(1) of (2,1)", unipotent::chi_dim(Partition({2, 1})),
          mpz_class(2));
  {
    bool ok = true;
    for (int n = 1; n <= 8; ++n) {
      mpz_class total = 0;
      for (const auto& lambda : partitions_of(n)) {
        const mpz_class d = unipotent::chi_dim(lambda);
        total += d * d;
      }
      if (total != mpz_class(static_cast<long>(weyl::factorial(n)))) {
        ok = false;
      }
    }
    c.require("sum of chi(1)^2 over labels is n!, n <= 8", ok);
  }
  {
    const auto dec = cells::two_sided_cells(4);
    const int top = unipotent::family_cell(Partition({4}), dec);
    const int bottom = unipotent::family_cell(Partition({1, 1, 1, 1}), dec);
    c.require("family of the trivial character is the cell {w0}",
              dec.cells()[static_cast<size_t>(top)].members.size() == 1 &&
                  dec.cells()[static_cast<size_t>(top)].contains(
                      weyl::longest_element(4)));
    c.require("family of the Steinberg character is the cell {identity}",
              dec.cells()[static_cast<size_t>(bottom)].contains(
                  weyl::Permutation(4)));
  }
  {
    bool ok = true;
    for (int n = 1; n <= 5; ++n) {
      const auto dec = cells::two_sided_cells(n);
      const long long big_n = weyl::num_positive_roots(n);
      const long long pi_len = 2 * big_n;
      for (const auto& lambda : partitions_of(n)) {
        const auto [a, A] = unipotent::a_A(lambda);
        const int cell = unipotent::family_cell(lambda, dec);
        const long long cell_a = dec.cells()[static_cast<size_t>(cell)].a;
        if (cell_a != lambda.transpose().n_invariant()) ok = false;
        if (pi_len + 2 * cell_a != 4 * big_n - 2 * A) ok = false;
      }
    }
    c.require("family-cell a-values satisfy l(pi) + 2a = 4N - 2A, n <= 5", ok);
  }
  {
    auto expected = IntPoly::monomial(1, 1);
    expected += IntPoly::constant(1);
    c.equal("[2]_q! = 1 + q", unipotent::flag_count_poly(2), expected);
  }
  {
    auto expected = IntPoly::monomial(1, 3);
    expected += IntPoly::monomial(2, 2);
    expected += IntPoly::monomial(2, 1);
    expected += IntPoly::constant(1);
    c.equal("[3]_q! = 1 + 2q + 2q^2 + q^3", unipotent::flag_count_poly(3),
            expected);
  }
  c.equal("[3]_q! at q = 2", unipotent::flag_count_poly(3).eval(2),
          mpz_class(21));
  {
    bool ok = true;
    for (int n = 1; n <= 10; ++n) {
      for (const auto& lambda : partitions_of(n)) {
        if (unipotent::generic_degree(lambda).eval(1) !=
            unipotent::chi_dim(lambda)) {
          ok = false;
        }
      }
    }
    c.require("generic degree at q = 1 equals chi(1), n <= 10", ok);
  }
  {
    bool ok = true;
    for (int n = 1; n <= 8; ++n) {
      IntPoly total;
      for (const auto& lambda : partitions_of(n)) {
        total += unipotent::generic_degree(lambda) *
                 IntPoly::constant(unipotent::chi_dim(lambda));
      }
      if (total != unipotent::flag_count_poly(n)) ok = false;
    }
    c.require("sum of chi(1) * generic degree is [n]_q!, n <= 8", ok);
  }
  {
    bool ok = true;
    for (int n = 1; n <= 10; ++n) {
      const long long big_n = weyl::num_positive_roots(n);
      for (const auto& lambda : partitions_of(n)) {
        const auto [a, A] = unipotent::a_A(lambda);
        if (4 * big_n - 2 * A != 2 * big_n + 2 * lambda.transpose().n_invariant()) {
          ok = false;
        }
        const auto [ta, tA] = unipotent::a_A(lambda.transpose());
        if (ta != big_n - A || tA != big_n - a) ok = false;
      }
    }
    c.require("exponent identity and transpose duality of (a, A), n <= 10",
              ok);
  }
}

// ---------------------------------------------------------------------------

void suite_dlcoh(Checker& c, const VerifyOptions& options) {
  {
    const auto base = dlcoh::table_trivial_braid(2);
    c.require("base table for GL_2 is trivial + Steinberg in degree 0",
              base.entries().size() == 2 &&
                  base.mult(0, Partition({2})) == 1 &&
                  base.mult(0, Partition({1, 1})) == 1);
    const auto base3 = dlcoh::table_trivial_braid(3);
    c.require("base table for GL_3 has multiplicities 1, 2, 1 in degree 0",
              base3.entries().size() == 3 &&
                  base3.mult(0, Partition({3})) == 1 &&
                  base3.mult(0, Partition({2, 1})) == 2 &&
                  base3.mult(0, Partition({1, 1, 1})) == 1);
    c.equal("base-table dimension at q = 2 is the flag count 21",
            dlcoh::euler_dim(base3, 2), mpz_class(21));
  }
  {
    const auto t = dlcoh::translate_full_twist(dlcoh::table_trivial_braid(2));
    c.require("translated GL_2 base table is {(2,(1,1)):1, (4,(2)):1}",
              t.entries().size() == 2 && t.mult(2, Partition({1, 1})) == 1 &&
                  t.mult(4, Partition({2})) == 1);
    const auto t3 = dlcoh::translate_full_twist(dlcoh::table_trivial_braid(3));
    c.require("translated GL_3 base table matches the full-twist table",
              t3.entries().size() == 3 &&
                  t3.mult(6, Partition({1, 1, 1})) == 1 &&
                  t3.mult(8, Partition({2, 1})) == 2 &&
                  t3.mult(12, Partition({3})) == 1);
    const auto empty = dlcoh::translate_full_twist(dlcoh::CohTable(3, "1"));
    c.require("translating the empty table yields the empty table",
              empty.empty());
  }
  {
    c.require("pi^0 table is the base table",
              dlcoh::table_pi_power(4, 0) == dlcoh::table_trivial_braid(4));
    const auto pi3 = dlcoh::table_pi_power(3, 1);
    c.require("pi^1 table for GL_3 equals the translated base table",
              pi3.entries_equal(dlcoh::translate_full_twist(
                  dlcoh::table_trivial_braid(3))));
    c.require("all degrees of the GL_3 full-twist table are even",
              dlcoh::parity_check(pi3));
    const auto pi22 = dlcoh::table_pi_power(2, 2);
    c.require("pi^2 table for GL_2 is {(4,(1,1)):1, (8,(2)):1}",
              pi22.entries().size() == 2 &&
                  pi22.mult(4, Partition({1, 1})) == 1 &&
                  pi22.mult(8, Partition({2})) == 1);
  }
  {
    const auto pi3 = dlcoh::table_pi_power(3, 1);
    c.equal("inner product of the GL_3 pi table with itself at (8,8)",
            dlcoh::inner_product(pi3, pi3, 8, 8), mpz_class(4));
    c.equal("inner product at distinct degrees (6,8)",
            dlcoh::inner_product(pi3, pi3, 6, 8), mpz_class(0));
    c.equal("inner product against the empty table",
            dlcoh::inner_product(pi3, dlcoh::CohTable(3, "1"), 8, 8),
            mpz_class(0));
  }
  {
    bool ok = true;
    for (int n = 1; n <= 6; ++n) {
      for (long long k = 0; k <= 3; ++k) {
        if (!dlcoh::disjointness_check(dlcoh::table_pi_power(n, k))) {
          ok = false;
        }
        if (!dlcoh::parity_check(dlcoh::table_pi_power(n, k))) ok = false;
      }
    }
    c.require("pi^k tables are disjoint and even, n <= 6, k <= 3", ok);
    dlcoh::CohTable shared(2, "1");
    shared.add(0, Partition({2}), 1);
    shared.add(1, Partition({2}), 1);
    c.require("a table sharing a constituent across degrees fails",
              !dlcoh::disjointness_check(shared));
    c.require("the empty table is disjoint",
              dlcoh::disjointness_check(dlcoh::CohTable(2, "1")));
  }
  c.equal("euler_dim of the GL_2 full-twist table at q = 2",
          dlcoh::euler_dim(dlcoh::table_pi_power(2, 1), 2), mpz_class(3));
  {
    bool ok = true;
    for (int n = 1; n <= 6; ++n) {
      for (long long k = 0; k <= 3; ++k) {
        const auto t = dlcoh::table_pi_power(n, k);
        const long long big_n = weyl::num_positive_roots(n);
        if (t.mult(2 * big_n * k, Partition(std::vector<int>(
                                      static_cast<size_t>(n), 1))) != 1) {
          ok = false;
        }
        if (t.mult(4 * big_n * k, Partition({n})) != 1) ok = false;
        for (const auto& [key, mult] : t.entries()) {
          if (key.first < 2 * big_n * k || key.first > 4 * big_n * k) {
            ok = false;
          }
        }
        if (t.total_multiplicity() !=
            dlcoh::table_trivial_braid(n).total_multiplicity()) {
          ok = false;
        }
      }
    }
    c.require("pi^k support lies in [2Nk, 4Nk] with Steinberg and trivial at "
              "the ends, n <= 6, k <= 3",
              ok);
  }
  {
    bool ok = true;
    for (int n = 1; n <= 6; ++n) {
      const auto once = dlcoh::translate_full_twist(
          dlcoh::table_trivial_braid(n));
      const auto twice = dlcoh::translate_full_twist(once);
      const long long big_n = weyl::num_positive_roots(n);
      for (const auto& lambda : partitions_of(n)) {
        const auto [a, A] = unipotent::a_A(lambda);
        const long long shift = 4 * big_n - 2 * A;
        if (twice.mult(2 * shift, lambda) != once.mult(shift, lambda)) {
          ok = false;
        }
      }
      if (twice.total_multiplicity() != once.total_multiplicity()) ok = false;
    }
    c.require("translation composes to a shift by 2(4N - 2A) per label, "
              "n <= 6",
              ok);
  }
  {
    const auto pi3 = dlcoh::table_pi_power(3, 1);
    const auto round = dlcoh::parse_table_document(dlcoh::table_document(pi3));
    c.require("the GL_3 full-twist document round-trips", round == pi3);
    bool rejected = false;
    try {
      dlcoh::parse_table_document(
          "{\"n\": 2, \"braid\": \"1\", \"entries\": [{\"degree\": 0, "
          "\"lambda\": [2], \"mult\": 0}]}");
    } catch (const parse_error&) {
      rejected = true;
    }
    c.require("a document with a zero multiplicity is rejected", rejected);
  }
  {
    std::mt19937_64 rng(68);
    bool ok = true;
    for (int trial = 0; trial < 100; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 5);
      dlcoh::CohTable t(n, "pi");
      const auto parts = partitions_of(n);
      const int entries = 1 + static_cast<int>(rng() % 6);
      for (int i = 0; i < entries; ++i) {
        t.add(static_cast<long long>(rng() % 31),
              parts[static_cast<size_t>(rng() % parts.size())],
              1 + static_cast<long long>(rng() % 9));
      }
      if (dlcoh::parse_table_document(dlcoh::table_document(t)) != t) {
        ok = false;
      }
      if (dlcoh::translate_full_twist(t).total_multiplicity() !=
          t.total_multiplicity()) {
        ok = false;
      }
    }
    c.require("100 random tables round-trip and conserve multiplicity", ok);
  }
  {
    const auto path = (std::filesystem::temp_directory_path() /
                       "dltk-verify-roundtrip.json")
                          .string();
    const auto pi2 = dlcoh::table_pi_power(2, 1);
    dlcoh::export_table(pi2, path);
    const auto back = dlcoh::import_table(path);
    std::filesystem::remove(path);
    c.require("file export/import round-trips", back == pi2);
  }
  {
    dlcoh::CohTable t1(3, "s1 s2");
    t1.add(1, Partition({2, 1}), 1);
    dlcoh::CohTable t2(3, "s2 s1");
    t2.add(1, Partition({2, 1}), 1);
    const auto report = dlcoh::conjugacy_invariance_check(t1, t2,
                                                          options.sss_cap);
    c.require("equal tables for conjugate braids pass the invariance check",
              report.conjugate && !report.central && report.entries_equal &&
                  report.ok);
    dlcoh::CohTable t3(3, "s2 s1");
    t3.add(2, Partition({2, 1}), 1);
    const auto bad = dlcoh::conjugacy_invariance_check(t1, t3,
                                                       options.sss_cap);
    c.require("unequal tables for conjugate braids fail the invariance check",
              bad.conjugate && !bad.ok);
    dlcoh::CohTable t4(3, "s1 s2 s1");
    t4.add(5, Partition({3}), 2);
    const auto vacuous = dlcoh::conjugacy_invariance_check(t1, t4,
                                                           options.sss_cap);
    c.require("non-conjugate braids make the check vacuously pass",
              !vacuous.conjugate && vacuous.ok);
    dlcoh::CohTable p1(3, "pi");
    p1.add(6, Partition({1, 1, 1}), 1);
    const auto central = dlcoh::conjugacy_invariance_check(p1, p1,
                                                           options.sss_cap);
    c.require("the full twist is flagged central",
              central.conjugate && central.central && central.ok);
  }
}

// ---------------------------------------------------------------------------

void suite_dlpoints(Checker& c, const VerifyOptions& options) {
  {
    const dlpoints::Field f4(2, 2);
    c.require("F_4 is built from the modulus t^2 + t + 1",
              f4.modulus() == std::vector<int>{1, 1, 1});
    c.require("Frobenius of a generator of F_4 is alpha + 1",
              f4.frobenius(2) == 3 && f4.frobenius(3) == 2);
  }
  {
    bool ok = true;
    for (const auto& [p, k] : std::vector<std::pair<int, int>>{
             {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}}) {
      const dlpoints::Field f(p, k);
      for (int x = 0; x < f.size(); ++x) {
        if (f.frobenius(static_cast<dlpoints::FieldElement>(x), k) != x) {
          ok = false;
        }
      }
    }
    c.require("frobenius^k is the identity on F_{p^k}", ok);
  }
  {
    const dlpoints::Field f2(2, 1);
    bool ok = true;
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        if (f2.add(static_cast<dlpoints::FieldElement>(a),
                   static_cast<dlpoints::FieldElement>(b)) != (a ^ b)) {
          ok = false;
        }
        if (f2.mul(static_cast<dlpoints::FieldElement>(a),
                   static_cast<dlpoints::FieldElement>(b)) != (a & b)) {
          ok = false;
        }
      }
    }
    c.require("F_2 arithmetic is XOR and AND", ok);
  }
  {
    const dlpoints::Field f2(2, 1);
    const dlpoints::Field f4(2, 2);
    c.equal("GL_2(F_2) has 3 flags",
            dlpoints::enumerate_flags(2, f2).size(), size_t{3});
    c.equal("GL_3(F_2) has 21 flags",
            dlpoints::enumerate_flags(3, f2).size(), size_t{21});
    c.equal("GL_2(F_4) has 5 flags",
            dlpoints::enumerate_flags(2, f4).size(), size_t{5});
  }
  {
    bool ok = true;
    for (int q : {2, 3}) {
      const dlpoints::Field f(q, 1);
      for (int n = 1; n <= 3; ++n) {
        const auto count =
            static_cast<long>(dlpoints::enumerate_flags(n, f).size());
        if (mpz_class(count) != unipotent::flag_count_poly(n).eval(q)) {
          ok = false;
        }
      }
    }
    c.require("flag counts equal [n]_q!, n <= 3, q in {2,3}", ok);
  }
  {
    const dlpoints::Field f2(2, 1);
    const auto flags = dlpoints::enumerate_flags(3, f2);
    bool identity_ok = true, antisym_ok = true;
    for (const auto& a : flags) {
      if (!dlpoints::relative_position(f2, a, a).is_identity()) {
        identity_ok = false;
      }
      for (const auto& b : flags) {
        const auto w = dlpoints::relative_position(f2, a, b);
        if (dlpoints::relative_position(f2, b, a) != w.inverse()) {
          antisym_ok = false;
        }
      }
    }
    c.require("relative position of a flag with itself is the identity",
              identity_ok);
    c.require("relpos(b,a) = relpos(a,b)^-1, exhaustive over GL_3(F_2)",
              antisym_ok);
    const auto std3 = dlpoints::Flag::standard(f2, 3);
    const auto rev = dlpoints::Flag::from_matrix(
        f2, 3, {0, 0, 1, 0, 1, 0, 1, 0, 0});
    c.equal("standard vs reversed flag sit in position w0",
            dlpoints::relative_position(f2, std3, rev),
            weyl::longest_element(3));
  }
  dlpoints::CountOptions copt;
  copt.flag_cap = options.flag_cap;
  const auto s2 = weyl::Permutation::simple(2, 1);
  {
    c.equal("|X(sF)| over F_4 for GL_2",
            dlpoints::count_points(gallery(2, {{s2, false}}), 2, 2, copt),
            2LL);
    c.equal("|X(ssF)| at q = 2, m = 1 for GL_2",
            dlpoints::count_points(gallery(2, {{s2, false}, {s2, false}}), 2,
                                   1, copt),
            6LL);
    c.equal("closed letter s at q = 2, m = 1 counts all rational flags",
            dlpoints::count_points(gallery(2, {{s2, true}}), 2, 1, copt),
            3LL);
  }
  {
    bool ok = true;
    for (const auto& [q, m] : std::vector<std::pair<int, int>>{
             {2, 2}, {2, 3}, {3, 2}}) {
      long long qm = 1;
      for (int i = 0; i < m; ++i) qm *= q;
      if (dlpoints::count_points(gallery(2, {{s2, false}}), q, m, copt) !=
          qm - q) {
        ok = false;
      }
    }
    c.require("|X(sF)| = q^m - q at (2,2), (2,3), (3,2)", ok);
  }
  {
    bool ok = true;
    for (const auto& [q, m] : std::vector<std::pair<int, int>>{
             {2, 1}, {2, 2}, {2, 3}, {3, 1}}) {
      long long qm = 1;
      for (int i = 0; i < m; ++i) qm *= q;
      if (dlpoints::count_points(gallery(2, {{s2, false}, {s2, false}}), q, m,
                                 copt) != qm * qm + q) {
        ok = false;
      }
    }
    c.require("|X(ssF)| = q^{2m} + q at (2,1), (2,2), (2,3), (3,1)", ok);
  }
  {
    bool ok = true;
    for (int q : {2, 3}) {
      for (int n = 1; n <= 3; ++n) {
        const auto expected = unipotent::flag_count_poly(n).eval(q);
        for (int m = 1; m <= 2; ++m) {
          const auto count = static_cast<long>(
              dlpoints::count_points(gallery(n, {}), q, m, copt));
          if (mpz_class(count) != expected) ok = false;
        }
      }
    }
    c.require("the empty gallery counts the F_q-rational flags for every m",
              ok);
  }
  {
    bool ok = true;
    for (int n = 2; n <= 3; ++n) {
      for (int m = 1; m <= 2; ++m) {
        for (const auto& w : weyl::all_permutations(n)) {
          const auto closed =
              dlpoints::count_points(gallery(n, {{w, true}}), 2, m, copt);
          long long total = 0;
          for (const auto& v : weyl::all_permutations(n)) {
            if (!weyl::bruhat_leq(v, w)) continue;
            total +=
                dlpoints::count_points(gallery(n, {{v, false}}), 2, m, copt);
          }
          if (closed != total) ok = false;
        }
      }
    }
    c.require("closed-letter counts stratify: count(closure of w) = sum of "
              "count(v) over v <= w, n <= 3",
              ok);
  }
  {
    const auto s1 = weyl::Permutation::simple(3, 1);
    const auto s2of3 = weyl::Permutation::simple(3, 2);
    const auto s1s2 = weyl::multiply(s1, s2of3);
    bool ok = true;
    for (int m = 1; m <= 2; ++m) {
      for (const auto& x : {s1, s2of3, s1s2}) {
        for (const auto& y : {s1, s2of3, s1s2}) {
          const auto result = dlpoints::cyclic_shift_equal(
              gallery(3, {{x, false}}), gallery(3, {{y, false}}), 2, m, copt);
          if (!result.equal) ok = false;
        }
      }
    }
    c.require("cyclic shift equality for letter pairs from {s1, s2, s1s2} in "
              "GL_3, m <= 2",
              ok);
    const auto mixed = dlpoints::cyclic_shift_equal(
        gallery(3, {{s1, false}}),
        gallery(3, {{s2of3, false}, {s1, false}}), 2, 2, copt);
    c.require("cyclic shift equality for x = (s1), y = (s2, s1) at m = 2",
              mixed.equal);
  }
  {
    bool ok = true;
    for (int m = 1; m <= 2; ++m) {
      const auto a = dlpoints::count_points(
          braid::EnrichedWord::parse(3, "s1 s2 s1"), 2, m, copt);
      const auto b = dlpoints::count_points(
          braid::EnrichedWord::parse(3, "s2 s1 s2"), 2, m, copt);
      if (a != b) ok = false;
    }
    c.require("the two reduced galleries for w0 in GL_3 count equally", ok);
  }
}

// ---------------------------------------------------------------------------

struct CliRun {
  int exit_code = 0;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  CliRun run;
  run.exit_code = run_cli(std::move(args), out, err);
  run.out = out.str();
  run.err = err.str();
  return run;
}

void suite_cli(Checker& c, const VerifyOptions&) {
  {
    const auto run =
        cli({"dl", "cohomology", "--rank", "3", "--braid", "pi"});
    const std::string expected =
        "degree\tlambda\tmult\n"
        "6\t[1,1,1]\t1\n"
        "8\t[2,1]\t2\n"
        "12\t[3]\t1\n";
    c.require("dl cohomology --rank 3 --braid pi emits the full-twist table",
              run.exit_code == 0 && run.out == expected,
              "got exit " + std::to_string(run.exit_code));
  }
  {
    const auto run = cli({"braid", "root-check", "--rank", "3", "--braid",
                          "(s1 s2)", "--d", "3"});
    c.require("braid root-check confirms (s1 s2)^3 = pi",
              run.exit_code == 0 && run.out == "true\n");
  }
  {
    const auto run =
        cli({"braid", "nf", "--rank", "3", "--braid", "s1 s2 s1 s1"});
    c.require("braid nf prints D s1", run.exit_code == 0 &&
                                          run.out == "D s1\n");
    const auto run2 = cli({"braid", "nf", "--rank", "2", "--braid",
                           "s1 s1 s1"});
    c.require("braid nf prints D^3 in B_2",
              run2.exit_code == 0 && run2.out == "D^3\n");
  }
  {
    const auto run = cli({"braid", "conj", "--rank", "3", "--braid", "s1 s2",
                          "--other", "s2 s1"});
    bool ok = run.exit_code == 0 && run.out.starts_with("true\nwitness\t");
    if (ok) {
      const auto word =
          run.out.substr(run.out.find('\t') + 1,
                         run.out.size() - run.out.find('\t') - 2);
      const auto witness =
          braid::normal_form(braid::BraidWord::parse(3, word));
      const auto a = braid::normal_form(braid::BraidWord::parse(3, "s1 s2"));
      const auto b = braid::normal_form(braid::BraidWord::parse(3, "s2 s1"));
      ok = braid::multiply(braid::multiply(witness, b),
                           braid::inverse(witness)) == a;
    }
    c.require("braid conj reports a witness that verifies by multiplication",
              ok);
  }
  {
    const auto first = cli({"dl", "cohomology", "--rank", "2", "--braid",
                            "pi", "--format", "doc"});
    const auto second = cli({"dl", "cohomology", "--rank", "2", "--braid",
                             "pi", "--format", "doc"});
    c.require("the GL_2 full-twist document is byte-identical across runs",
              first.exit_code == 0 && first.out == second.out);
    c.require("the emitted document parses back to the same table",
              dlcoh::parse_table_document(first.out) ==
                  dlcoh::table_pi_power(2, 1));
  }
  {
    const auto run =
        cli({"dl", "cohomology", "--rank", "3", "--braid", "pi"});
    long long rows = -1;  // header
    for (char ch : run.out) {
      if (ch == '\n') ++rows;
    }
    c.equal("TSV row count equals the support size",
            rows, dlcoh::table_pi_power(3, 1).entries().size());
  }
  {
    const auto one = cli({"dl", "count", "--rank", "2", "--word", "s1", "-q",
                          "2", "-m", "2", "--jobs", "1"});
    const auto four = cli({"dl", "count", "--rank", "2", "--word", "s1", "-q",
                           "2", "-m", "2", "--jobs", "4"});
    c.require("dl count output is identical across worker counts",
              one.exit_code == 0 && one.out == four.out);
    c.equal("dl count emits the count and its machine-readable record",
            one.out,
            std::string("2\n{\"n\":2,\"word\":\"s1\",\"q\":2,\"m\":2,"
                        "\"count\":2}\n"));
  }
  {
    const auto fast = cli({"cells", "--rank", "3"});
    const auto oracle = cli({"cells", "--rank", "3", "--oracle"});
    c.require("cells TSV is identical for the fast path and the oracle",
              fast.exit_code == 0 && fast.out == oracle.out);
    long long lines = 0;
    for (char ch : fast.out) {
      if (ch == '\n') ++lines;
    }
    c.equal("cells --rank 3 emits a header plus six rows", lines, 7LL);
  }
  {
    const auto run = cli({"cells", "--rank", "3", "--dot"});
    const std::string expected =
        "digraph cells {\n"
        "  rankdir=BT;\n"
        "  c0 [label=\"[3]\"];\n"
        "  c1 [label=\"[2,1]\"];\n"
        "  c2 [label=\"[1,1,1]\"];\n"
        "  c1 -> c0;\n"
        "  c2 -> c1;\n"
        "}\n";
    c.equal("cells --dot emits the Hasse diagram of the cell order", run.out,
            expected);
  }
  {
    const auto run = cli({"unipotent", "--rank", "2"});
    const std::string expected =
        "lambda\tdegree\ta\tA\tchi1\n"
        "[2]\t1\t0\t0\t1\n"
        "[1,1]\tq\t1\t1\t1\n";
    c.equal("unipotent --rank 2 emits the two generic degrees", run.out,
            expected);
  }
  {
    const auto path = (std::filesystem::temp_directory_path() /
                       "dltk-verify-empty.json")
                          .string();
    dlcoh::export_table(dlcoh::CohTable(2, "1"), path);
    const auto run = cli({"dl", "translate", "--input", path});
    std::filesystem::remove(path);
    c.require("translating an empty table emits the TSV header only",
              run.exit_code == 0 && run.out == "degree\tlambda\tmult\n");
  }
  {
    const auto run =
        cli({"dl", "cohomology", "--rank", "3", "--braid", "s1"});
    c.require("dl cohomology rejects braids that are not powers of pi",
              run.exit_code == 1 && run.out.empty() && !run.err.empty());
    const auto bad_flag = cli({"cells", "--rank", "3", "--bogus"});
    c.require("unknown flags are rejected", bad_flag.exit_code == 1);
    const auto bad_gen =
        cli({"braid", "nf", "--rank", "3", "--braid", "s9"});
    c.require("parse errors report the offending position",
              bad_gen.exit_code == 1 &&
                  bad_gen.err.find("position") != std::string::npos);
  }
}

using SuiteFn = void (*)(Checker&, const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"weyl", suite_weyl},         {"braid", suite_braid},
      {"cells", suite_cells},       {"unipotent", suite_unipotent},
      {"dlcoh", suite_dlcoh},       {"dlpoints", suite_dlpoints},
      {"cli", suite_cli},
  };
  return suites;
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

int run_verify(const std::vector<std::string>& suites,
               const VerifyOptions& options, std::ostream& out) {
  std::set<std::string> wanted(suites.begin(), suites.end());
  for (const auto& name : wanted) {
    bool known = false;
    for (const auto& [known_name, fn] : registry()) {
      if (known_name == name) known = true;
    }
    if (!known) {
      std::string valid;
      for (const auto& [known_name, fn] : registry()) {
        if (!valid.empty()) valid += ", ";
        valid += known_name;
      }
      throw std::invalid_argument("unknown suite '" + name +
                                  "' (available: " + valid + ")");
    }
  }
  int checks = 0;
  int failures = 0;
  for (const auto& [name, fn] : registry()) {
    if (!wanted.empty() && wanted.find(name) == wanted.end()) continue;
    Checker checker(name, out);
    try {
      fn(checker, options);
    } catch (const std::exception& e) {
      checker.require("suite completed without exceptions", false, e.what());
    }
    checks += checker.checks();
    failures += checker.failures();
  }
  out << "verify: " << checks << " checks, " << failures << " failed\n";
  return failures;
}

}  // namespace dltk::tools
