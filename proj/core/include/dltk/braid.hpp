#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dltk/weyl.hpp"

namespace dltk::braid {

// Unevaluated word in the braid group on n strands: generators with signs
// plus named tokens for the half twist D (the lift of w_0) and the full
// twist pi = D^2.
struct BraidWord {
  enum class Token : std::uint8_t { generator, half_twist, full_twist };

  struct Syllable {
    Token kind = Token::generator;
    int index = 0;  // generator index, meaningful for Token::generator
    int sign = 1;   // +1 or -1

    friend bool operator==(const Syllable&, const Syllable&) = default;
  };

  int rank = 0;
  std::vector<Syllable> syllables;

  // Grammar: generators "s1".."s{n-1}", tokens "D" and "pi", "1" for the
  // empty word, inverse suffix "'", integer powers "^k" (k may be
  // negative), parentheses for grouping, juxtaposition = product.
  // Whitespace separates tokens but is not required around operators.
  static BraidWord parse(int rank, std::string_view expression);

  std::string to_string() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

// Garside normal form D^p x_1 ... x_r: infimum p together with a
// left-weighted sequence of permutation-braid factors, none equal to the
// identity or to w_0.  Equal group elements have identical (p, factors),
// so defaulted equality decides the word problem.
class GarsideElement {
 public:
  static GarsideElement identity(int n);

  // Normalizes an arbitrary (infimum, factors) pair; the public entry
  // point for code that assembles braids factor by factor.
  static GarsideElement make(int n, long long inf,
                             std::vector<weyl::Permutation> factors);

  int rank() const { return n_; }
  long long inf() const { return inf_; }
  int canonical_length() const { return static_cast<int>(factors_.size()); }
  const std::vector<weyl::Permutation>& factors() const { return factors_; }

  long long sup() const { return inf_ + canonical_length(); }

  // Exponent-sum length, the group morphism l(D^p x_1...x_r) = pN + sum l(x_i).
  long long length() const;

  bool is_identity() const { return inf_ == 0 && factors_.empty(); }

  // True when the element equals D^p for some p (in particular when it is
  // a power of the full twist).
  bool is_delta_power() const { return factors_.empty(); }

  // Word form "D^p w1 w2 ..." with factors as juxtaposed generator words;
  // parses back to an equal element.  The identity prints as "1".
  std::string to_word_string() const;

  friend bool operator==(const GarsideElement&, const GarsideElement&) = default;
  friend auto operator<=>(const GarsideElement&, const GarsideElement&) = default;

 private:
  GarsideElement(int n, long long inf, std::vector<weyl::Permutation> factors)
      : n_(n), inf_(inf), factors_(std::move(factors)) {}

  int n_ = 0;
  long long inf_ = 0;
  std::vector<weyl::Permutation> factors_;
};

GarsideElement normal_form(const BraidWord& word);

GarsideElement multiply(const GarsideElement& a, const GarsideElement& b);
GarsideElement inverse(const GarsideElement& a);
GarsideElement power(const GarsideElement& a, long long k);

// pi = D^2, central in the braid group.
GarsideElement full_twist(int n);

// Positive lift w -> GarsideElement of the same length.
GarsideElement lift(const weyl::Permutation& w);

// The anti-involution fixing the generators: reverses every word.
GarsideElement star(const GarsideElement& b);

// One conjugation step each; both return (result, c) with
// result = c^-1 * b * c.  Cycling moves the first factor to the end and
// never decreases the infimum; decycling moves the last factor to the
// front and never increases the canonical length.
std::pair<GarsideElement, GarsideElement> cycling(const GarsideElement& b);
std::pair<GarsideElement, GarsideElement> decycling(const GarsideElement& b);

inline constexpr long long kDefaultSssCap = 100000;

// Super summit set: all conjugates of b with maximal infimum and minimal
// canonical length, enumerated by closing under permutation-braid
// conjugation and filtering.  Result is sorted and deterministic.
// Throws resource_error if the set would exceed `cap` elements.
std::vector<GarsideElement> super_summit_set(const GarsideElement& b,
                                             long long cap = kDefaultSssCap);

struct ConjugacyResult {
  bool conjugate = false;
  // When conjugate: a = witness * b * witness^-1.
  std::optional<GarsideElement> witness;
};

ConjugacyResult are_conjugate(const GarsideElement& a, const GarsideElement& b,
                              long long cap = kDefaultSssCap);

bool is_dth_root_of_pi(const GarsideElement& b, int d);

// Formal word whose letters are Weyl group elements, each tagged either
// exact or closed ("underlined").  No rewriting and no equality test is
// provided; the letters are consumed literally by the point counters.
struct EnrichedWord {
  struct Letter {
    weyl::Permutation w;
    bool closed = false;

    friend bool operator==(const Letter&, const Letter&) = default;
  };

  int rank = 0;
  std::vector<Letter> letters;

  // Whitespace-separated letters.  Each letter is a one-line permutation
  // ("2,1,3"), a juxtaposed generator word ("s1s2"), "D"/"w0" for the
  // longest element, or "e"/"1" for the identity; a leading underscore
  // marks the letter closed ("_s1", "_2,1,3").
  static EnrichedWord parse(int rank, std::string_view text);

  std::string to_string() const;

  friend bool operator==(const EnrichedWord&, const EnrichedWord&) = default;
};

}  // namespace dltk::braid
