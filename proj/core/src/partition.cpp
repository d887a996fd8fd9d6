#include "dltk/partition.hpp"

#include <cctype>
#include <stdexcept>

#include "dltk/errors.hpp"

namespace dltk {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) {
      throw std::invalid_argument("partition parts must be positive");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
}

int Partition::sum() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

int Partition::part(int i) const {
  if (i < 1 || i > num_parts()) return 0;
  return parts_[static_cast<size_t>(i) - 1];
}

Partition Partition::transpose() const {
  if (parts_.empty()) return {};
  std::vector<int> t(static_cast<size_t>(parts_[0]), 0);
  for (int p : parts_) {
    for (int j = 0; j < p; ++j) t[static_cast<size_t>(j)] += 1;
  }
  return Partition(std::move(t));
}

long long Partition::n_invariant() const {
  long long s = 0;
  for (size_t i = 0; i < parts_.size(); ++i) {
    s += static_cast<long long>(i) * parts_[i];
  }
  return s;
}

std::vector<int> Partition::hooks() const {
  const Partition t = transpose();
  std::vector<int> out;
  for (int i = 1; i <= num_parts(); ++i) {
    for (int j = 1; j <= part(i); ++j) {
      // arm + leg + 1
      out.push_back((part(i) - j) + (t.part(j) - i) + 1);
    }
  }
  return out;
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(parts_[i]);
  }
  out.push_back(']');
  return out;
}

Partition Partition::parse(std::string_view text) {
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  bool bracketed = pos < text.size() && (text[pos] == '[' || text[pos] == '(');
  char closer = 0;
  if (bracketed) {
    closer = text[pos] == '[' ? ']' : ')';
    ++pos;
  }
  std::vector<int> parts;
  skip_ws();
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    int value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      ++pos;
    }
    parts.push_back(value);
    skip_ws();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      skip_ws();
      if (pos == text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
        throw parse_error("expected part after ','", pos);
      }
    }
  }
  if (bracketed) {
    if (pos == text.size() || text[pos] != closer) {
      throw parse_error(std::string("expected '") + closer + "'", pos);
    }
    ++pos;
  }
  skip_ws();
  if (pos != text.size()) {
    throw parse_error("unexpected input after partition", pos);
  }
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument& e) {
    throw parse_error(e.what(), 0);
  }
}

namespace {

void extend_partitions(std::vector<int>& prefix, int remaining, int max_part,
                       std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(prefix));
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    extend_partitions(prefix, remaining - p, p, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) {
    throw std::invalid_argument("partitions_of requires n >= 0");
  }
  std::vector<Partition> out;
  std::vector<int> prefix;
  extend_partitions(prefix, n, n, out);
  return out;
}

bool dominance_leq(const Partition& a, const Partition& b) {
  if (a.sum() != b.sum()) {
    throw std::invalid_argument("dominance order compares partitions of equal sum");
  }
  int sa = 0, sb = 0;
  const int k = std::max(a.num_parts(), b.num_parts());
  for (int i = 1; i <= k; ++i) {
    sa += a.part(i);
    sb += b.part(i);
    if (sa > sb) return false;
  }
  return true;
}

}  // namespace dltk
