#include "dltk/dlpoints.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>

#include "dltk/errors.hpp"

namespace dltk::dlpoints {

namespace {

// Dense coefficient vectors over F_p, constant term first, used only to
// pick the field modulus and fill the tables.
using Poly = std::vector<int>;

void poly_trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo monic g.
Poly poly_mod(Poly f, const Poly& g, int p) {
  poly_trim(f);
  const int dg = static_cast<int>(g.size()) - 1;
  while (static_cast<int>(f.size()) - 1 >= dg) {
    const int shift = static_cast<int>(f.size()) - 1 - dg;
    const int factor = f.back();
    for (int i = 0; i <= dg; ++i) {
      f[static_cast<size_t>(shift + i)] =
          ((f[static_cast<size_t>(shift + i)] - factor * g[static_cast<size_t>(i)]) % p + p) % p;
    }
    poly_trim(f);
  }
  return f;
}

bool poly_is_zero(const Poly& f) { return f.empty(); }

bool divides(const Poly& g, const Poly& f, int p) {
  return poly_is_zero(poly_mod(f, g, p));
}

// Monic polynomials of degree d in lexicographic order of the coefficient
// tuple (c0, ..., c_{d-1}).
std::vector<Poly> monic_polys(int d, int p) {
  std::vector<Poly> out;
  std::vector<int> c(static_cast<size_t>(d), 0);
  for (;;) {
    Poly f(c.begin(), c.end());
    f.push_back(1);
    out.push_back(std::move(f));
    int i = d - 1;
    while (i >= 0 && c[static_cast<size_t>(i)] == p - 1) {
      c[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++c[static_cast<size_t>(i)];
  }
  return out;
}

bool is_irreducible(const Poly& f, int p) {
  const int d = static_cast<int>(f.size()) - 1;
  for (int e = 1; 2 * e <= d; ++e) {
    for (const Poly& g : monic_polys(e, p)) {
      if (divides(g, f, p)) return false;
    }
  }
  return true;
}

Poly smallest_irreducible(int k, int p) {
  // Tuples (c0, ..., c_{k-1}) in lexicographic order, c0 most significant.
  std::vector<int> c(static_cast<size_t>(k), 0);
  for (;;) {
    Poly f(c.begin(), c.end());
    f.push_back(1);
    if (is_irreducible(f, p)) return f;
    int i = k - 1;
    while (i >= 0 && c[static_cast<size_t>(i)] == p - 1) {
      c[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) throw std::logic_error("no irreducible polynomial found");
    ++c[static_cast<size_t>(i)];
  }
}

}  // namespace

Field::Field(int p, int k) : p_(p), k_(k) {
  if (p != 2 && p != 3 && p != 5) {
    throw std::invalid_argument("field characteristic must be 2, 3 or 5");
  }
  if (k < 1) throw std::invalid_argument("extension degree must be positive");
  long long q = 1;
  for (int i = 0; i < k; ++i) q *= p;
  if (q > 64) throw std::invalid_argument("field size cap is 64");
  q_ = static_cast<int>(q);
  modulus_ = smallest_irreducible(k, p);

  const auto digits = [this](int x) {
    std::vector<int> d(static_cast<size_t>(k_));
    for (int i = 0; i < k_; ++i) {
      d[static_cast<size_t>(i)] = x % p_;
      x /= p_;
    }
    return d;
  };
  const auto undigits = [this](const Poly& d) {
    int x = 0;
    for (int i = k_ - 1; i >= 0; --i) {
      x = x * p_ + (i < static_cast<int>(d.size()) ? d[static_cast<size_t>(i)] : 0);
    }
    return static_cast<FieldElement>(x);
  };

  add_.resize(static_cast<size_t>(q_) * static_cast<size_t>(q_));
  mul_.resize(static_cast<size_t>(q_) * static_cast<size_t>(q_));
  neg_.resize(static_cast<size_t>(q_));
  inv_.resize(static_cast<size_t>(q_));
  frob_.resize(static_cast<size_t>(q_));
  for (int a = 0; a < q_; ++a) {
    const auto da = digits(a);
    Poly na(static_cast<size_t>(k_));
    for (int i = 0; i < k_; ++i) {
      na[static_cast<size_t>(i)] = (p_ - da[static_cast<size_t>(i)]) % p_;
    }
    neg_[static_cast<size_t>(a)] = undigits(na);
    for (int b = 0; b < q_; ++b) {
      const auto db = digits(b);
      Poly s(static_cast<size_t>(k_));
      for (int i = 0; i < k_; ++i) {
        s[static_cast<size_t>(i)] =
            (da[static_cast<size_t>(i)] + db[static_cast<size_t>(i)]) % p_;
      }
      add_[index(static_cast<FieldElement>(a), static_cast<FieldElement>(b))] =
          undigits(s);
      Poly prod(static_cast<size_t>(2 * k_ - 1), 0);
      for (int i = 0; i < k_; ++i) {
        for (int j = 0; j < k_; ++j) {
          prod[static_cast<size_t>(i + j)] =
              (prod[static_cast<size_t>(i + j)] +
               da[static_cast<size_t>(i)] * db[static_cast<size_t>(j)]) % p_;
        }
      }
      mul_[index(static_cast<FieldElement>(a), static_cast<FieldElement>(b))] =
          undigits(poly_mod(std::move(prod), modulus_, p_));
    }
  }
  for (int a = 1; a < q_; ++a) {
    for (int b = 1; b < q_; ++b) {
      if (mul_[index(static_cast<FieldElement>(a), static_cast<FieldElement>(b))] == 1) {
        inv_[static_cast<size_t>(a)] = static_cast<FieldElement>(b);
        break;
      }
    }
  }
  for (int a = 0; a < q_; ++a) {
    FieldElement x = static_cast<FieldElement>(a);
    FieldElement power = x;
    for (int i = 1; i < p_; ++i) power = mul(power, x);
    frob_[static_cast<size_t>(a)] = power;
  }
}

FieldElement Field::inv(FieldElement a) const {
  if (a == 0) throw std::invalid_argument("inverse of zero");
  return inv_[a];
}

FieldElement Field::frobenius(FieldElement x, long long e) const {
  if (e < 0) throw std::invalid_argument("frobenius iterations must be >= 0");
  FieldElement out = x;
  for (long long i = 0; i < e % k_; ++i) out = frob_[out];
  return out;
}

std::string Field::element_to_string(FieldElement x) const {
  if (k_ == 1) return std::to_string(static_cast<int>(x));
  std::string out = "[";
  int v = x;
  for (int i = 0; i < k_; ++i) {
    if (i) out += ",";
    out += std::to_string(v % p_);
    v /= p_;
  }
  return out + "]";
}

// ---------------------------------------------------------------------------
// Flags

Flag Flag::standard(const Field& field, int n) {
  std::vector<FieldElement> m(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    m[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(i)] = 1;
  }
  return Flag(n, field.size(), std::move(m));
}

Flag Flag::from_matrix(const Field& field, int n,
                       std::vector<FieldElement> column_major) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  if (column_major.size() != static_cast<size_t>(n) * static_cast<size_t>(n)) {
    throw std::invalid_argument("matrix must be n x n, column-major");
  }
  for (FieldElement x : column_major) {
    if (x >= field.size()) throw std::invalid_argument("entry outside the field");
  }
  auto at = [&](int row, int col) -> FieldElement& {
    return column_major[static_cast<size_t>(col) * static_cast<size_t>(n) +
                        static_cast<size_t>(row)];
  };
  std::vector<int> pivots(static_cast<size_t>(n));
  for (int col = 0; col < n; ++col) {
    for (int t = 0; t < col; ++t) {
      const FieldElement factor = at(pivots[static_cast<size_t>(t)], col);
      if (factor == 0) continue;
      for (int row = 0; row < n; ++row) {
        at(row, col) = field.sub(at(row, col), field.mul(factor, at(row, t)));
      }
    }
    int pivot = 0;
    while (pivot < n && at(pivot, col) == 0) ++pivot;
    if (pivot == n) {
      throw std::invalid_argument("matrix is singular: not a flag");
    }
    const FieldElement scale = field.inv(at(pivot, col));
    for (int row = 0; row < n; ++row) at(row, col) = field.mul(scale, at(row, col));
    pivots[static_cast<size_t>(col)] = pivot;
  }
  return Flag(n, field.size(), std::move(column_major));
}

Flag frobenius(const Field& field, const Flag& flag, long long e) {
  if (flag.field_size() != field.size()) {
    throw std::invalid_argument("flag does not live over this field");
  }
  std::vector<FieldElement> m = flag.matrix();
  for (FieldElement& x : m) x = field.frobenius(x, e);
  return Flag::from_matrix(field, flag.rank(), std::move(m));
}

std::vector<Flag> enumerate_flags(int n, const Field& field, long long cap) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  const long long q = field.size();
  long long expected = 1;
  long long q_bracket = 0, q_power = 1;
  for (int i = 1; i <= n; ++i) {
    q_bracket += q_power;  // [i]_q = 1 + q + ... + q^{i-1}
    q_power *= q;
    if (expected > cap / q_bracket) {
      throw resource_error("flag enumeration would exceed the cap of " +
                           std::to_string(cap));
    }
    expected *= q_bracket;
  }

  std::vector<Flag> out;
  out.reserve(static_cast<size_t>(expected));
  std::vector<FieldElement> m(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (const auto& sigma : weyl::all_permutations(n)) {
    // Column col gets its leading 1 at row sigma(col+1)-1; the free
    // entries sit below it in rows no earlier column claims.
    std::vector<int> pivots(static_cast<size_t>(n));
    std::vector<bool> claimed(static_cast<size_t>(n), false);
    std::vector<std::pair<int, int>> free_cells;  // (row, col)
    for (int col = 0; col < n; ++col) {
      const int pivot = sigma(col + 1) - 1;
      pivots[static_cast<size_t>(col)] = pivot;
      for (int row = pivot + 1; row < n; ++row) {
        if (!claimed[static_cast<size_t>(row)]) free_cells.push_back({row, col});
      }
      claimed[static_cast<size_t>(pivot)] = true;
    }
    long long assignments = 1;
    for (size_t i = 0; i < free_cells.size(); ++i) assignments *= q;
    for (long long a = 0; a < assignments; ++a) {
      std::fill(m.begin(), m.end(), 0);
      for (int col = 0; col < n; ++col) {
        m[static_cast<size_t>(col) * static_cast<size_t>(n) +
          static_cast<size_t>(pivots[static_cast<size_t>(col)])] = 1;
      }
      long long rest = a;
      for (const auto& [row, col] : free_cells) {
        m[static_cast<size_t>(col) * static_cast<size_t>(n) +
          static_cast<size_t>(row)] = static_cast<FieldElement>(rest % q);
        rest /= q;
      }
      out.push_back(Flag::from_matrix(field, n, m));
    }
  }
  if (static_cast<long long>(out.size()) != expected) {
    throw std::logic_error("flag enumeration count mismatch");
  }
  return out;
}

namespace {

// Columns of a^-1 b, column-major.
std::vector<FieldElement> invert_matrix(const Field& field, const Flag& a) {
  const int n = a.rank();
  std::vector<FieldElement> left = a.matrix();
  std::vector<FieldElement> right(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
  auto l = [&](int r, int c) -> FieldElement& {
    return left[static_cast<size_t>(c) * static_cast<size_t>(n) + static_cast<size_t>(r)];
  };
  auto rr = [&](int r, int c) -> FieldElement& {
    return right[static_cast<size_t>(c) * static_cast<size_t>(n) + static_cast<size_t>(r)];
  };
  for (int i = 0; i < n; ++i) rr(i, i) = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (l(pivot, col) == 0) ++pivot;  // invertible by construction
    if (pivot != col) {
      for (int c = 0; c < n; ++c) {
        std::swap(l(col, c), l(pivot, c));
        std::swap(rr(col, c), rr(pivot, c));
      }
    }
    const FieldElement scale = field.inv(l(col, col));
    for (int c = 0; c < n; ++c) {
      l(col, c) = field.mul(scale, l(col, c));
      rr(col, c) = field.mul(scale, rr(col, c));
    }
    for (int row = 0; row < n; ++row) {
      if (row == col || l(row, col) == 0) continue;
      const FieldElement factor = l(row, col);
      for (int c = 0; c < n; ++c) {
        l(row, c) = field.sub(l(row, c), field.mul(factor, l(col, c)));
        rr(row, c) = field.sub(rr(row, c), field.mul(factor, rr(col, c)));
      }
    }
  }
  return right;
}

std::vector<FieldElement> mat_mul(const Field& field, int n,
                                  const std::vector<FieldElement>& a,
                                  const std::vector<FieldElement>& b) {
  std::vector<FieldElement> out(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
  for (int col = 0; col < n; ++col) {
    for (int k = 0; k < n; ++k) {
      const FieldElement f = b[static_cast<size_t>(col) * static_cast<size_t>(n) +
                              static_cast<size_t>(k)];
      if (f == 0) continue;
      for (int row = 0; row < n; ++row) {
        auto& slot = out[static_cast<size_t>(col) * static_cast<size_t>(n) +
                         static_cast<size_t>(row)];
        slot = field.add(slot, field.mul(f, a[static_cast<size_t>(k) * static_cast<size_t>(n) +
                                              static_cast<size_t>(row)]));
      }
    }
  }
  return out;
}

// Relative position from the columns of a^-1 b: eliminate to give every
// column a distinct bottom-most nonzero row b_j; then w(b_j) = j.
weyl::Permutation relpos_from_product(const Field& field, int n,
                                      std::vector<FieldElement> m) {
  auto at = [&](int row, int col) -> FieldElement& {
    return m[static_cast<size_t>(col) * static_cast<size_t>(n) + static_cast<size_t>(row)];
  };
  std::vector<int> owner(static_cast<size_t>(n), -1);  // row -> column
  std::vector<int> images(static_cast<size_t>(n));
  for (int col = 0; col < n; ++col) {
    for (;;) {
      int bottom = n - 1;
      while (bottom >= 0 && at(bottom, col) == 0) --bottom;
      if (bottom < 0) throw std::logic_error("singular relative position input");
      const int t = owner[static_cast<size_t>(bottom)];
      if (t < 0) {
        owner[static_cast<size_t>(bottom)] = col;
        images[static_cast<size_t>(bottom)] = col + 1;
        break;
      }
      const FieldElement factor = field.mul(at(bottom, col), field.inv(at(bottom, t)));
      for (int row = 0; row <= bottom; ++row) {
        at(row, col) = field.sub(at(row, col), field.mul(factor, at(row, t)));
      }
    }
  }
  return weyl::Permutation::from_images(std::move(images));
}

void check_pair(const Field& field, const Flag& a, const Flag& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("flag rank mismatch");
  if (a.field_size() != field.size() || b.field_size() != field.size()) {
    throw std::invalid_argument("flags do not live over this field");
  }
}

}  // namespace

weyl::Permutation relative_position(const Field& field, const Flag& a,
                                    const Flag& b) {
  check_pair(field, a, b);
  return relpos_from_product(
      field, a.rank(),
      mat_mul(field, a.rank(), invert_matrix(field, a), b.matrix()));
}

// ---------------------------------------------------------------------------
// Gallery point counts

namespace {

struct GalleryTables {
  std::vector<Flag> flags;
  std::vector<int> frob;                       // index of F(flag)
  std::vector<int> letter_class;               // per gallery letter
  std::vector<std::vector<std::vector<int>>> adj;  // class -> flag -> next
};

GalleryTables build_tables(const braid::EnrichedWord& gallery, const Field& field,
                           long long flag_cap) {
  const int n = gallery.rank;
  GalleryTables t;
  t.flags = enumerate_flags(n, field, flag_cap);
  const int count = static_cast<int>(t.flags.size());

  std::map<Flag, int> index;
  for (int i = 0; i < count; ++i) index.emplace(t.flags[static_cast<size_t>(i)], i);
  t.frob.resize(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    t.frob[static_cast<size_t>(i)] =
        index.at(frobenius(field, t.flags[static_cast<size_t>(i)]));
  }

  // Letters with equal tag and permutation share one adjacency table.
  std::map<std::pair<weyl::Permutation, bool>, int> classes;
  std::vector<std::vector<bool>> allowed;  // class -> lex rank -> allowed
  const auto perms = weyl::all_permutations(n);
  for (const auto& letter : gallery.letters) {
    auto [it, inserted] =
        classes.emplace(std::make_pair(letter.w, letter.closed),
                        static_cast<int>(classes.size()));
    t.letter_class.push_back(it->second);
    if (inserted) {
      std::vector<bool> ok(perms.size(), false);
      for (size_t r = 0; r < perms.size(); ++r) {
        ok[r] = letter.closed ? weyl::bruhat_leq(perms[r], letter.w)
                              : perms[r] == letter.w;
      }
      allowed.push_back(std::move(ok));
    }
  }

  t.adj.assign(allowed.size(), std::vector<std::vector<int>>(
                                   static_cast<size_t>(count)));
  for (int b = 0; b < count; ++b) {
    const auto inv = invert_matrix(field, t.flags[static_cast<size_t>(b)]);
    for (int c = 0; c < count; ++c) {
      const auto w = relpos_from_product(
          field, n, mat_mul(field, n, inv, t.flags[static_cast<size_t>(c)].matrix()));
      const auto r = static_cast<size_t>(weyl::lex_rank(w));
      for (size_t cls = 0; cls < allowed.size(); ++cls) {
        if (allowed[cls][r]) t.adj[cls][static_cast<size_t>(b)].push_back(c);
      }
    }
  }
  return t;
}

long long count_range(const GalleryTables& t, int lo, int hi) {
  const size_t depth = t.letter_class.size();
  long long total = 0;
  // Iterative DFS over the gallery letters.
  std::vector<size_t> cursor(depth + 1, 0);
  std::vector<int> node(depth + 1, 0);
  for (int b0 = lo; b0 < hi; ++b0) {
    const int target = t.frob[static_cast<size_t>(b0)];
    if (depth == 0) {
      if (b0 == target) ++total;
      continue;
    }
    size_t level = 0;
    node[0] = b0;
    cursor[0] = 0;
    for (;;) {
      const auto& next =
          t.adj[static_cast<size_t>(t.letter_class[level])][static_cast<size_t>(node[level])];
      if (cursor[level] == next.size()) {
        if (level == 0) break;
        --level;
        continue;
      }
      const int candidate = next[cursor[level]++];
      if (level + 1 == depth) {
        if (candidate == target) ++total;
      } else {
        node[level + 1] = candidate;
        cursor[level + 1] = 0;
        ++level;
      }
    }
  }
  return total;
}

}  // namespace

long long count_points(const braid::EnrichedWord& gallery, int q, int m,
                       const CountOptions& options) {
  if (q != 2 && q != 3 && q != 5) {
    throw std::invalid_argument("base field size must be 2, 3 or 5");
  }
  if (m < 1) throw std::invalid_argument("extension degree must be positive");
  if (gallery.rank < 1) throw std::invalid_argument("rank must be positive");
  const Field field(q, m);  // also enforces q^m <= 64
  const GalleryTables tables = build_tables(gallery, field, options.flag_cap);
  const int count = static_cast<int>(tables.flags.size());

  const int jobs = std::max(1, std::min({options.jobs, count, 64}));
  if (jobs == 1) return count_range(tables, 0, count);

  std::vector<long long> partial(static_cast<size_t>(jobs), 0);
  std::vector<std::thread> workers;
  workers.reserve(static_cast<size_t>(jobs));
  for (int j = 0; j < jobs; ++j) {
    const int lo = static_cast<int>(static_cast<long long>(count) * j / jobs);
    const int hi = static_cast<int>(static_cast<long long>(count) * (j + 1) / jobs);
    workers.emplace_back([&tables, &partial, j, lo, hi] {
      partial[static_cast<size_t>(j)] = count_range(tables, lo, hi);
    });
  }
  for (auto& worker : workers) worker.join();
  long long total = 0;
  for (long long part : partial) total += part;
  return total;
}

CyclicShiftResult cyclic_shift_equal(const braid::EnrichedWord& x,
                                     const braid::EnrichedWord& y, int q,
                                     int m, const CountOptions& options) {
  if (x.rank != y.rank) throw std::invalid_argument("rank mismatch");
  for (const auto& word : {x, y}) {
    for (const auto& letter : word.letters) {
      if (letter.closed) {
        throw std::invalid_argument("cyclic shift requires exact letters only");
      }
    }
  }
  braid::EnrichedWord xy{x.rank, x.letters};
  xy.letters.insert(xy.letters.end(), y.letters.begin(), y.letters.end());
  braid::EnrichedWord yx{x.rank, y.letters};
  yx.letters.insert(yx.letters.end(), x.letters.begin(), x.letters.end());
  CyclicShiftResult out;
  out.count_xy = count_points(xy, q, m, options);
  out.count_yx = count_points(yx, q, m, options);
  out.equal = out.count_xy == out.count_yx;
  return out;
}

}  // namespace dltk::dlpoints
