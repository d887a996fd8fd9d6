#include "dltk/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "dltk/errors.hpp"

namespace dltk::weyl {

namespace {

void check_same_rank(const Permutation& u, const Permutation& v) {
  if (u.rank() != v.rank()) {
    throw std::invalid_argument("rank mismatch: " + std::to_string(u.rank()) +
                                " vs " + std::to_string(v.rank()));
  }
}

void check_rank_positive(int n) {
  if (n < 1) {
    throw std::invalid_argument("rank must be positive, got " +
                                std::to_string(n));
  }
}

}  // namespace

Permutation::Permutation(int n) {
  check_rank_positive(n);
  img_.resize(static_cast<size_t>(n));
  std::iota(img_.begin(), img_.end(), 1);
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  check_rank_positive(n);
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int x : images) {
    if (x < 1 || x > n || seen[static_cast<size_t>(x) - 1]) {
      throw std::invalid_argument("not a permutation of {1,...," +
                                  std::to_string(n) + "}");
    }
    seen[static_cast<size_t>(x) - 1] = true;
  }
  Permutation w;
  w.img_ = std::move(images);
  return w;
}

Permutation Permutation::simple(int n, int i) {
  if (i < 1 || i >= n) {
    throw std::invalid_argument("simple reflection index " + std::to_string(i) +
                                " out of range for rank " + std::to_string(n));
  }
  Permutation w(n);
  std::swap(w.img_[static_cast<size_t>(i) - 1], w.img_[static_cast<size_t>(i)]);
  return w;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < rank(); ++i) {
    if (img_[static_cast<size_t>(i)] != i + 1) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 0; i < rank(); ++i) {
    inv[static_cast<size_t>(img_[static_cast<size_t>(i)]) - 1] = i + 1;
  }
  Permutation w;
  w.img_ = std::move(inv);
  return w;
}

int Permutation::length() const {
  int count = 0;
  const int n = rank();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (img_[static_cast<size_t>(i)] > img_[static_cast<size_t>(j)]) ++count;
    }
  }
  return count;
}

bool Permutation::has_right_descent(int i) const {
  return img_[static_cast<size_t>(i) - 1] > img_[static_cast<size_t>(i)];
}

bool Permutation::has_left_descent(int i) const {
  // i is a left descent of w iff it is a right descent of w^{-1}, i.e. the
  // value i occurs to the right of the value i+1.
  int pos_i = 0, pos_i1 = 0;
  for (int k = 0; k < rank(); ++k) {
    if (img_[static_cast<size_t>(k)] == i) pos_i = k;
    if (img_[static_cast<size_t>(k)] == i + 1) pos_i1 = k;
  }
  return pos_i > pos_i1;
}

std::vector<int> Permutation::right_descents() const {
  std::vector<int> out;
  for (int i = 1; i < rank(); ++i) {
    if (has_right_descent(i)) out.push_back(i);
  }
  return out;
}

std::vector<int> Permutation::left_descents() const {
  return inverse().right_descents();
}

void Permutation::apply_right_simple(int i) {
  std::swap(img_[static_cast<size_t>(i) - 1], img_[static_cast<size_t>(i)]);
}

void Permutation::apply_left_simple(int i) {
  for (auto& x : img_) {
    if (x == i) {
      x = i + 1;
    } else if (x == i + 1) {
      x = i;
    }
  }
}

std::uint64_t Permutation::pack() const {
  if (rank() > 16) {
    throw std::invalid_argument("pack supports rank <= 16");
  }
  std::uint64_t code = 0;
  for (int i = 0; i < rank(); ++i) {
    code = (code << 4) | static_cast<std::uint64_t>(img_[static_cast<size_t>(i)] - 1);
  }
  return code;
}

Permutation Permutation::unpack(int n, std::uint64_t code) {
  std::vector<int> images(static_cast<size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    images[static_cast<size_t>(i)] = static_cast<int>(code & 0xF) + 1;
    code >>= 4;
  }
  return from_images(std::move(images));
}

std::string Permutation::to_string() const {
  std::string out;
  for (int i = 0; i < rank(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(img_[static_cast<size_t>(i)]);
  }
  return out;
}

Permutation Permutation::parse_one_line(std::string_view text) {
  std::vector<int> images;
  size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) break;
    size_t start = pos;
    int value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      ++pos;
    }
    if (pos == start) {
      throw parse_error("expected digit in one-line notation", pos);
    }
    images.push_back(value);
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos < text.size()) {
      if (text[pos] != ',') {
        throw parse_error("expected ',' in one-line notation", pos);
      }
      ++pos;
    }
  }
  if (images.empty()) {
    throw parse_error("empty permutation", 0);
  }
  return from_images(std::move(images));
}

Permutation CoxeterWord::evaluate() const {
  Permutation w(rank);
  // (s_{i_1} ... s_{i_k}) built left to right by right multiplication.
  for (int i : letters) w.apply_right_simple(i);
  return w;
}

std::string CoxeterWord::to_string() const {
  if (letters.empty()) return "e";
  std::string out;
  for (size_t k = 0; k < letters.size(); ++k) {
    if (k) out.push_back(' ');
    out.push_back('s');
    out += std::to_string(letters[k]);
  }
  return out;
}

CoxeterWord CoxeterWord::parse(int rank, std::string_view text) {
  check_rank_positive(rank);
  CoxeterWord word{rank, {}};
  size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] == 'e' && word.letters.empty()) {
      // Lone "e" denotes the empty word.
      ++pos;
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos != text.size()) {
        throw parse_error("unexpected input after identity token", pos);
      }
      return word;
    }
    if (text[pos] != 's') {
      throw parse_error("expected generator token 's<k>'", pos);
    }
    ++pos;
    size_t start = pos;
    int index = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      index = index * 10 + (text[pos] - '0');
      ++pos;
    }
    if (pos == start) {
      throw parse_error("generator token missing index", pos);
    }
    if (index < 1 || index >= rank) {
      throw parse_error("generator index " + std::to_string(index) +
                            " out of range for rank " + std::to_string(rank),
                        start);
    }
    word.letters.push_back(index);
  }
  return word;
}

Permutation multiply(const Permutation& u, const Permutation& v) {
  check_same_rank(u, v);
  std::vector<int> images(static_cast<size_t>(u.rank()));
  for (int i = 1; i <= u.rank(); ++i) {
    images[static_cast<size_t>(i) - 1] = u(v(i));
  }
  return Permutation::from_images(std::move(images));
}

int length(const Permutation& w) { return w.length(); }

Permutation longest_element(int n) {
  check_rank_positive(n);
  std::vector<int> images(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<size_t>(i)] = n - i;
  return Permutation::from_images(std::move(images));
}

bool bruhat_leq(const Permutation& x, const Permutation& w) {
  check_same_rank(x, w);
  const int n = x.rank();
  // rank[i][j] = |{k <= i : .(k) <= j}|, accumulated row by row.
  std::vector<int> rx(static_cast<size_t>(n), 0), rw(static_cast<size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = x(i); j <= n; ++j) rx[static_cast<size_t>(j) - 1] += 1;
    for (int j = w(i); j <= n; ++j) rw[static_cast<size_t>(j) - 1] += 1;
    for (int j = 0; j < n; ++j) {
      if (rx[static_cast<size_t>(j)] < rw[static_cast<size_t>(j)]) return false;
    }
  }
  return true;
}

std::vector<int> descents(const Permutation& w, Side side) {
  return side == Side::right ? w.right_descents() : w.left_descents();
}

CoxeterWord reduced_word(const Permutation& w) {
  CoxeterWord word{w.rank(), {}};
  Permutation u = w;
  // Peeling the smallest left descent at each step yields the
  // lexicographically smallest reduced word.
  while (!u.is_identity()) {
    int i = 1;
    while (!u.has_left_descent(i)) ++i;
    word.letters.push_back(i);
    u.apply_left_simple(i);
  }
  return word;
}

std::vector<Permutation> all_permutations(int n) {
  check_rank_positive(n);
  if (n > 10) {
    throw std::invalid_argument("exhaustive enumeration capped at rank 10");
  }
  std::vector<Permutation> out;
  out.reserve(static_cast<size_t>(factorial(n)));
  std::vector<int> images(static_cast<size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  do {
    out.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

long long lex_rank(const Permutation& w) {
  const int n = w.rank();
  long long r = 0;
  for (int i = 1; i <= n; ++i) {
    int smaller_later = 0;
    for (int j = i + 1; j <= n; ++j) {
      if (w(j) < w(i)) ++smaller_later;
    }
    r += smaller_later * factorial(n - i);
  }
  return r;
}

Permutation from_lex_rank(int n, long long r) {
  check_rank_positive(n);
  std::vector<int> pool(static_cast<size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> images;
  images.reserve(static_cast<size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    long long f = factorial(i);
    auto idx = static_cast<size_t>(r / f);
    r %= f;
    images.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return Permutation::from_images(std::move(images));
}

Permutation parse_permutation(int rank, std::string_view text) {
  size_t first = 0;
  while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
  size_t last = text.size();
  while (last > first && std::isspace(static_cast<unsigned char>(text[last - 1]))) --last;
  std::string_view body = text.substr(first, last - first);
  if (body.empty()) {
    throw parse_error("empty permutation", first);
  }
  if (body == "e" || body == "1") {
    check_rank_positive(rank);
    return Permutation(rank);
  }
  if (body[0] == 's') {
    // Coxeter word, either whitespace-separated or juxtaposed.
    std::string spaced;
    for (char c : body) {
      if (c == 's' && !spaced.empty()) spaced.push_back(' ');
      spaced.push_back(c);
    }
    return CoxeterWord::parse(rank, spaced).evaluate();
  }
  Permutation w = Permutation::parse_one_line(body);
  if (rank > 0 && w.rank() != rank) {
    throw std::invalid_argument("permutation rank " + std::to_string(w.rank()) +
                                " does not match expected rank " +
                                std::to_string(rank));
  }
  return w;
}

}  // namespace dltk::weyl
