#include "dltk/braid.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

#include "dltk/errors.hpp"

namespace dltk::braid {

namespace {

using weyl::Permutation;

// w0 * w * w0, the diagram flip s_i -> s_{n-i}.
Permutation flip(const Permutation& w) {
  const int n = w.rank();
  std::vector<int> images(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    images[static_cast<size_t>(i) - 1] = n + 1 - w(n + 1 - i);
  }
  return Permutation::from_images(std::move(images));
}

// Left-weights the pair (x, y) in place without changing the product x*y:
// while some simple s shortens y from the left but extends x from the
// right, slide it across.  Terminates because l(y) strictly decreases.
bool pair_normalize(Permutation& x, Permutation& y) {
  bool moved = false;
  const int n = x.rank();
  for (;;) {
    int pick = 0;
    for (int i = 1; i < n; ++i) {
      if (y.has_left_descent(i) && !x.has_right_descent(i)) {
        pick = i;
        break;
      }
    }
    if (pick == 0) break;
    x.apply_right_simple(pick);
    y.apply_left_simple(pick);
    moved = true;
  }
  return moved;
}

// Accumulates a product of D-powers and positive permutation factors,
// folding every D to the front as it goes (D^p F D^k = D^{p+k} tau^k(F)).
class Builder {
 public:
  explicit Builder(int n) : n_(n), w0_(weyl::longest_element(n)) {}

  void push_delta(long long k) {
    inf_ += k;
    if (k % 2 != 0) {
      for (auto& f : factors_) f = flip(f);
    }
  }

  void push_factor(const Permutation& x) {
    if (x.is_identity()) return;
    if (x == w0_) {
      push_delta(1);
      return;
    }
    factors_.push_back(x);
  }

  GarsideElement finish() && {
    return GarsideElement::make(n_, inf_, std::move(factors_));
  }

 private:
  int n_;
  Permutation w0_;
  long long inf_ = 0;
  std::vector<Permutation> factors_;
};

void check_same_rank(const GarsideElement& a, const GarsideElement& b) {
  if (a.rank() != b.rank()) {
    throw std::invalid_argument("rank mismatch: " + std::to_string(a.rank()) +
                                " vs " + std::to_string(b.rank()));
  }
}

}  // namespace

GarsideElement GarsideElement::identity(int n) {
  return make(n, 0, {});
}

GarsideElement GarsideElement::make(int n, long long inf,
                                    std::vector<Permutation> factors) {
  if (n < 1) {
    throw std::invalid_argument("rank must be positive, got " +
                                std::to_string(n));
  }
  for (const auto& f : factors) {
    if (f.rank() != n) {
      throw std::invalid_argument("factor rank mismatch");
    }
  }
  // B_1 is trivial and D is its identity, so the unique normal form has
  // twist power zero.
  if (n == 1) return GarsideElement(1, 0, {});
  const Permutation w0 = weyl::longest_element(n);
  auto is_id = [](const Permutation& f) { return f.is_identity(); };
  std::erase_if(factors, is_id);
  // Greedy passes: left-weight adjacent pairs until nothing moves.  Each
  // slide pushes length leftwards, so the pass count is finite.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < factors.size(); ++i) {
      if (pair_normalize(factors[i], factors[i + 1])) changed = true;
    }
    const size_t before = factors.size();
    std::erase_if(factors, is_id);
    if (factors.size() != before) changed = true;
  }
  // A stable sequence has its w0 factors as a prefix; fold them into the
  // twist power.  Nothing sits left of them, so no flip is needed.
  size_t lead = 0;
  while (lead < factors.size() && factors[lead] == w0) ++lead;
  if (lead > 0) {
    factors.erase(factors.begin(),
                  factors.begin() + static_cast<std::ptrdiff_t>(lead));
    inf += static_cast<long long>(lead);
  }
  return GarsideElement(n, inf, std::move(factors));
}

long long GarsideElement::length() const {
  long long total = inf_ * weyl::num_positive_roots(n_);
  for (const auto& f : factors_) total += f.length();
  return total;
}

std::string GarsideElement::to_word_string() const {
  std::string out;
  if (inf_ != 0) {
    out = "D";
    if (inf_ != 1) out += "^" + std::to_string(inf_);
  }
  for (const auto& f : factors_) {
    if (!out.empty()) out.push_back(' ');
    for (int i : weyl::reduced_word(f).letters) {
      out.push_back('s');
      out += std::to_string(i);
    }
  }
  if (out.empty()) out = "1";
  return out;
}

namespace {

using Syllable = BraidWord::Syllable;
using Token = BraidWord::Token;

constexpr size_t kExpansionCap = 8u << 20;  // syllables

std::vector<Syllable> inverted(std::vector<Syllable> word) {
  std::reverse(word.begin(), word.end());
  for (auto& s : word) s.sign = -s.sign;
  return word;
}

struct ExpressionParser {
  std::string_view text;
  int rank;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }

  long long parse_integer() {
    skip_ws();
    const size_t start = pos;
    bool negative = false;
    if (pos < text.size() && text[pos] == '-') {
      negative = true;
      ++pos;
    }
    if (pos == text.size() ||
        !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw parse_error("expected integer exponent", pos);
    }
    long long value = 0;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > 1'000'000'000) {
        throw parse_error("exponent too large", start);
      }
      ++pos;
    }
    return negative ? -value : value;
  }

  std::vector<Syllable> parse_atom() {
    skip_ws();
    if (pos == text.size()) {
      throw parse_error("expected braid atom", pos);
    }
    const char c = text[pos];
    if (c == '(') {
      const size_t open = pos;
      ++pos;
      auto inner = parse_sequence(true);
      skip_ws();
      if (pos == text.size() || text[pos] != ')') {
        throw parse_error("unmatched '('", open);
      }
      ++pos;
      return inner;
    }
    if (c == 's') {
      ++pos;
      const size_t start = pos;
      int index = 0;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos]))) {
        index = index * 10 + (text[pos] - '0');
        if (index > 1000) break;
        ++pos;
      }
      if (pos == start) {
        throw parse_error("generator token missing index", pos);
      }
      if (index < 1 || index >= rank) {
        throw parse_error("generator index " + std::to_string(index) +
                              " out of range for rank " + std::to_string(rank),
                          start - 1);
      }
      return {{Token::generator, index, 1}};
    }
    if (text.compare(pos, 2, "pi") == 0) {
      pos += 2;
      return {{Token::full_twist, 0, 1}};
    }
    if (c == 'D') {
      ++pos;
      return {{Token::half_twist, 0, 1}};
    }
    if (c == '1') {
      ++pos;
      return {};
    }
    throw parse_error("unexpected character in braid expression", pos);
  }

  std::vector<Syllable> parse_term() {
    auto value = parse_atom();
    for (;;) {
      skip_ws();
      if (pos < text.size() && text[pos] == '\'') {
        ++pos;
        value = inverted(std::move(value));
      } else if (pos < text.size() && text[pos] == '^') {
        ++pos;
        const long long k = parse_integer();
        const unsigned long long reps =
            static_cast<unsigned long long>(k < 0 ? -k : k);
        if (reps * value.size() > kExpansionCap) {
          throw resource_error("braid expression expands past " +
                               std::to_string(kExpansionCap) + " syllables");
        }
        std::vector<Syllable> base =
            k < 0 ? inverted(std::move(value)) : std::move(value);
        value.clear();
        for (unsigned long long r = 0; r < reps; ++r) {
          value.insert(value.end(), base.begin(), base.end());
        }
      } else {
        break;
      }
    }
    return value;
  }

  std::vector<Syllable> parse_sequence(bool stop_at_paren) {
    std::vector<Syllable> out;
    for (;;) {
      skip_ws();
      if (pos == text.size()) break;
      if (text[pos] == ')') {
        if (stop_at_paren) break;
        throw parse_error("unmatched ')'", pos);
      }
      auto term = parse_term();
      if (out.size() + term.size() > kExpansionCap) {
        throw resource_error("braid expression expands past " +
                             std::to_string(kExpansionCap) + " syllables");
      }
      out.insert(out.end(), term.begin(), term.end());
    }
    return out;
  }
};

}  // namespace

BraidWord BraidWord::parse(int rank, std::string_view expression) {
  if (rank < 1) {
    throw std::invalid_argument("rank must be positive, got " +
                                std::to_string(rank));
  }
  ExpressionParser parser{expression, rank};
  BraidWord word;
  word.rank = rank;
  word.syllables = parser.parse_sequence(false);
  return word;
}

std::string BraidWord::to_string() const {
  std::string out;
  for (const auto& s : syllables) {
    if (!out.empty()) out.push_back(' ');
    switch (s.kind) {
      case Token::generator:
        out.push_back('s');
        out += std::to_string(s.index);
        break;
      case Token::half_twist:
        out.push_back('D');
        break;
      case Token::full_twist:
        out += "pi";
        break;
    }
    if (s.sign < 0) out.push_back('\'');
  }
  if (out.empty()) out = "1";
  return out;
}

GarsideElement normal_form(const BraidWord& word) {
  const int n = word.rank;
  if (n < 1) {
    throw std::invalid_argument("rank must be positive, got " +
                                std::to_string(n));
  }
  const Permutation w0 = weyl::longest_element(n);
  Builder builder(n);
  for (const auto& syl : word.syllables) {
    switch (syl.kind) {
      case BraidWord::Token::generator: {
        if (syl.index < 1 || syl.index >= n) {
          throw std::invalid_argument("generator index " +
                                      std::to_string(syl.index) +
                                      " out of range for rank " +
                                      std::to_string(n));
        }
        if (syl.sign > 0) {
          builder.push_factor(Permutation::simple(n, syl.index));
        } else {
          // s^-1 = D^-1 * lift(w0 s)
          builder.push_delta(-1);
          Permutation x = w0;
          x.apply_right_simple(syl.index);
          builder.push_factor(x);
        }
        break;
      }
      case BraidWord::Token::half_twist:
        builder.push_delta(syl.sign);
        break;
      case BraidWord::Token::full_twist:
        builder.push_delta(2 * syl.sign);
        break;
    }
  }
  return std::move(builder).finish();
}

GarsideElement multiply(const GarsideElement& a, const GarsideElement& b) {
  check_same_rank(a, b);
  Builder builder(a.rank());
  builder.push_delta(a.inf());
  for (const auto& f : a.factors()) builder.push_factor(f);
  builder.push_delta(b.inf());
  for (const auto& f : b.factors()) builder.push_factor(f);
  return std::move(builder).finish();
}

GarsideElement inverse(const GarsideElement& a) {
  const int n = a.rank();
  const Permutation w0 = weyl::longest_element(n);
  Builder builder(n);
  const auto& fs = a.factors();
  // (D^p x_1...x_r)^-1 = x_r^-1 ... x_1^-1 D^-p with x^-1 = D^-1 lift(w0 x^-1).
  for (auto it = fs.rbegin(); it != fs.rend(); ++it) {
    builder.push_delta(-1);
    builder.push_factor(weyl::multiply(w0, it->inverse()));
  }
  builder.push_delta(-a.inf());
  return std::move(builder).finish();
}

GarsideElement power(const GarsideElement& a, long long k) {
  GarsideElement acc = GarsideElement::identity(a.rank());
  if (k == 0) return acc;
  GarsideElement base = k < 0 ? inverse(a) : a;
  unsigned long long e = static_cast<unsigned long long>(k < 0 ? -k : k);
  for (;;) {
    if (e & 1) acc = multiply(acc, base);
    e >>= 1;
    if (e == 0) break;
    base = multiply(base, base);
  }
  return acc;
}

GarsideElement full_twist(int n) {
  return GarsideElement::make(n, 2, {});
}

GarsideElement lift(const weyl::Permutation& w) {
  return GarsideElement::make(w.rank(), 0, {w});
}

GarsideElement star(const GarsideElement& b) {
  Builder builder(b.rank());
  const auto& fs = b.factors();
  // star(D^p x_1...x_r) = lift(x_r^-1) ... lift(x_1^-1) D^p.
  for (auto it = fs.rbegin(); it != fs.rend(); ++it) {
    builder.push_factor(it->inverse());
  }
  builder.push_delta(b.inf());
  return std::move(builder).finish();
}

std::pair<GarsideElement, GarsideElement> cycling(const GarsideElement& b) {
  const int n = b.rank();
  if (b.canonical_length() == 0) {
    return {b, GarsideElement::identity(n)};
  }
  Permutation head = b.factors().front();
  if (b.inf() % 2 != 0) head = flip(head);
  Builder builder(n);
  builder.push_delta(b.inf());
  for (size_t i = 1; i < b.factors().size(); ++i) {
    builder.push_factor(b.factors()[i]);
  }
  builder.push_factor(head);
  return {std::move(builder).finish(), lift(head)};
}

std::pair<GarsideElement, GarsideElement> decycling(const GarsideElement& b) {
  const int n = b.rank();
  if (b.canonical_length() == 0) {
    return {b, GarsideElement::identity(n)};
  }
  Permutation tail = b.factors().back();
  Permutation moved = b.inf() % 2 != 0 ? flip(tail) : tail;
  Builder builder(n);
  builder.push_delta(b.inf());
  builder.push_factor(moved);
  for (size_t i = 0; i + 1 < b.factors().size(); ++i) {
    builder.push_factor(b.factors()[i]);
  }
  return {std::move(builder).finish(), inverse(lift(tail))};
}

namespace {

// Walks the cycling (resp. decycling) orbit of `cur`; commits the first
// strict improvement of the infimum (resp. canonical length) and retries
// until the orbit closes without improvement.  `conj` accumulates c with
// cur = c^-1 * original * c.
template <typename Step, typename Better>
bool improve(GarsideElement& cur, GarsideElement& conj, Step step,
             Better better) {
  bool improved = false;
  for (;;) {
    std::set<GarsideElement> seen;
    GarsideElement walker = cur;
    GarsideElement path = GarsideElement::identity(cur.rank());
    bool found = false;
    while (seen.insert(walker).second) {
      auto [next, c] = step(walker);
      path = multiply(path, c);
      walker = std::move(next);
      if (better(walker, cur)) {
        cur = walker;
        conj = multiply(conj, path);
        improved = found = true;
        break;
      }
    }
    if (!found) return improved;
  }
}

// Conjugates b into its super summit set; returns (rep, c) with
// rep = c^-1 * b * c.
std::pair<GarsideElement, GarsideElement> to_super_summit(
    const GarsideElement& b) {
  GarsideElement cur = b;
  GarsideElement conj = GarsideElement::identity(b.rank());
  for (;;) {
    const bool raised =
        improve(cur, conj, [](const GarsideElement& x) { return cycling(x); },
                [](const GarsideElement& a, const GarsideElement& old) {
                  return a.inf() > old.inf();
                });
    const bool shrunk =
        improve(cur, conj, [](const GarsideElement& x) { return decycling(x); },
                [](const GarsideElement& a, const GarsideElement& old) {
                  return a.canonical_length() < old.canonical_length();
                });
    if (!raised && !shrunk) break;
  }
  return {cur, conj};
}

}  // namespace

std::vector<GarsideElement> super_summit_set(const GarsideElement& b,
                                             long long cap) {
  if (cap < 1) {
    throw std::invalid_argument("cap must be positive");
  }
  auto [rep, rep_conj] = to_super_summit(b);
  const long long target_inf = rep.inf();
  const int target_len = rep.canonical_length();
  const auto simples = weyl::all_permutations(b.rank());
  std::set<GarsideElement> closed{rep};
  std::vector<GarsideElement> frontier{rep};
  while (!frontier.empty()) {
    GarsideElement x = std::move(frontier.back());
    frontier.pop_back();
    for (size_t i = 1; i < simples.size(); ++i) {  // skip the identity
      const GarsideElement u = lift(simples[i]);
      GarsideElement y = multiply(multiply(inverse(u), x), u);
      if (y.inf() != target_inf || y.canonical_length() != target_len) continue;
      if (closed.insert(y).second) {
        if (static_cast<long long>(closed.size()) > cap) {
          throw resource_error("super summit set exceeds cap of " +
                               std::to_string(cap) + " elements");
        }
        frontier.push_back(std::move(y));
      }
    }
  }
  return {closed.begin(), closed.end()};
}

ConjugacyResult are_conjugate(const GarsideElement& a, const GarsideElement& b,
                              long long cap) {
  check_same_rank(a, b);
  if (a.length() != b.length()) return {false, std::nullopt};
  auto [rep_a, conj_a] = to_super_summit(a);
  auto [rep_b, conj_b] = to_super_summit(b);
  if (rep_a.inf() != rep_b.inf() ||
      rep_a.canonical_length() != rep_b.canonical_length()) {
    return {false, std::nullopt};
  }
  // BFS over the super summit set of a, tracking g with node = g^-1 rep_a g.
  std::optional<GarsideElement> g_to_b;
  if (rep_a == rep_b) {
    g_to_b = GarsideElement::identity(a.rank());
  } else {
    const auto simples = weyl::all_permutations(a.rank());
    std::map<GarsideElement, GarsideElement> from_rep;
    from_rep.emplace(rep_a, GarsideElement::identity(a.rank()));
    std::vector<GarsideElement> frontier{rep_a};
    while (!frontier.empty() && !g_to_b) {
      GarsideElement x = std::move(frontier.back());
      frontier.pop_back();
      const GarsideElement g_x = from_rep.at(x);
      for (size_t i = 1; i < simples.size() && !g_to_b; ++i) {
        const GarsideElement u = lift(simples[i]);
        GarsideElement y = multiply(multiply(inverse(u), x), u);
        if (y.inf() != rep_a.inf() ||
            y.canonical_length() != rep_a.canonical_length()) {
          continue;
        }
        if (from_rep.contains(y)) continue;
        GarsideElement g_y = multiply(g_x, u);
        if (static_cast<long long>(from_rep.size()) + 1 > cap) {
          throw resource_error("super summit set exceeds cap of " +
                               std::to_string(cap) + " elements");
        }
        if (y == rep_b) g_to_b = g_y;
        auto [slot, inserted] = from_rep.emplace(std::move(y), std::move(g_y));
        if (inserted && !g_to_b) frontier.push_back(slot->first);
      }
    }
  }
  if (!g_to_b) return {false, std::nullopt};
  // rep_b = g^-1 rep_a g, rep_a = conj_a^-1 a conj_a, rep_b = conj_b^-1 b conj_b
  // give b = C^-1 a C with C = conj_a * g * conj_b^-1.
  GarsideElement witness =
      multiply(multiply(conj_a, *g_to_b), inverse(conj_b));
  GarsideElement check =
      multiply(multiply(witness, b), inverse(witness));
  if (check != a) {
    throw std::logic_error("conjugacy witness failed to verify");
  }
  return {true, std::move(witness)};
}

bool is_dth_root_of_pi(const GarsideElement& b, int d) {
  if (d < 1) {
    throw std::invalid_argument("root degree must be positive");
  }
  return power(b, d) == full_twist(b.rank());
}

EnrichedWord EnrichedWord::parse(int rank, std::string_view text) {
  if (rank < 1) {
    throw std::invalid_argument("rank must be positive, got " +
                                std::to_string(rank));
  }
  EnrichedWord word{rank, {}};
  size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    const size_t start = pos;
    while (pos < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    std::string_view token = text.substr(start, pos - start);
    bool closed = false;
    if (token.front() == '_') {
      closed = true;
      token.remove_prefix(1);
      if (token.empty()) {
        throw parse_error("'_' must prefix a letter", start);
      }
    }
    weyl::Permutation w;
    if (token == "D" || token == "w0") {
      w = weyl::longest_element(rank);
    } else {
      try {
        w = weyl::parse_permutation(rank, token);
      } catch (const std::exception& e) {
        throw parse_error("bad letter '" + std::string(token) +
                              "': " + e.what(),
                          start);
      }
    }
    word.letters.push_back({std::move(w), closed});
  }
  return word;
}

std::string EnrichedWord::to_string() const {
  std::string out;
  for (const auto& letter : letters) {
    if (!out.empty()) out.push_back(' ');
    if (letter.closed) out.push_back('_');
    out += letter.w.to_string();
  }
  if (out.empty()) out = "e";
  return out;
}

}  // namespace dltk::braid
