#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace dltk {

// Integer partition: weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;  // the empty partition of 0

  // Validates weakly decreasing positive parts.
  explicit Partition(std::vector<int> parts);

  int sum() const;
  int num_parts() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }
  int part(int i) const;  // 1-based, 0 beyond the last part

  Partition transpose() const;

  // n(lambda) = sum (i-1) * lambda_i.
  long long n_invariant() const;

  // Multiset of hook lengths, one per cell, row by row.
  std::vector<int> hooks() const;

  // "[2,1]"; the empty partition prints as "[]".
  std::string to_string() const;
  static Partition parse(std::string_view text);

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a,
                                          const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
};

// All partitions of n, largest-first lexicographic: (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);

// Dominance order: a <= b iff the partial sums of a never exceed those of b.
// Requires |a| = |b|.
bool dominance_leq(const Partition& a, const Partition& b);

}  // namespace dltk
