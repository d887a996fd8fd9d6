#include "dltk/cells.hpp"

#include <algorithm>
#include <stdexcept>

namespace dltk::cells {

using weyl::Permutation;

// ---------------------------------------------------------------------------
// Laurent polynomials in v

Laurent Laurent::monomial(long long c, int exponent) {
  Laurent out;
  if (c != 0) {
    out.lo_ = exponent;
    out.coeffs_ = {c};
  }
  return out;
}

int Laurent::val() const {
  if (is_zero()) throw std::logic_error("valuation of zero Laurent polynomial");
  return lo_;
}

int Laurent::deg() const {
  if (is_zero()) throw std::logic_error("degree of zero Laurent polynomial");
  return lo_ + static_cast<int>(coeffs_.size()) - 1;
}

long long Laurent::coeff(int exponent) const {
  const int k = exponent - lo_;
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<size_t>(k)];
}

void Laurent::trim() {
  size_t drop = 0;
  while (drop < coeffs_.size() && coeffs_[drop] == 0) ++drop;
  if (drop == coeffs_.size()) {
    coeffs_.clear();
    lo_ = 0;
    return;
  }
  if (drop > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(drop));
    lo_ += static_cast<int>(drop);
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Laurent& Laurent::operator+=(const Laurent& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) {
    *this = other;
    return *this;
  }
  const int new_lo = std::min(lo_, other.lo_);
  const int new_hi = std::max(lo_ + static_cast<int>(coeffs_.size()),
                              other.lo_ + static_cast<int>(other.coeffs_.size()));
  std::vector<long long> merged(static_cast<size_t>(new_hi - new_lo), 0);
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    merged[static_cast<size_t>(lo_ - new_lo) + k] += coeffs_[k];
  }
  for (size_t k = 0; k < other.coeffs_.size(); ++k) {
    merged[static_cast<size_t>(other.lo_ - new_lo) + k] += other.coeffs_[k];
  }
  lo_ = new_lo;
  coeffs_ = std::move(merged);
  trim();
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& other) {
  Laurent negated = other;
  for (auto& c : negated.coeffs_) c = -c;
  return *this += negated;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Laurent out;
  out.lo_ = a.lo_ + b.lo_;
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  out.trim();
  return out;
}

Laurent& Laurent::scale(long long c) {
  if (c == 0) {
    coeffs_.clear();
    lo_ = 0;
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Laurent Laurent::bar() const {
  Laurent out;
  if (is_zero()) return out;
  out.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  out.lo_ = -(lo_ + static_cast<int>(coeffs_.size()) - 1);
  return out;
}

std::string Laurent::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = static_cast<int>(coeffs_.size()) - 1; k >= 0; --k) {
    const long long c = coeffs_[static_cast<size_t>(k)];
    if (c == 0) continue;
    const int e = lo_ + k;
    const long long mag = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const bool show_coeff = mag != 1 || e == 0;
    if (show_coeff) out += std::to_string(mag);
    if (e != 0) {
      if (show_coeff) out += "*";
      out += var;
      if (e != 1) {
        out += "^";
        out += std::to_string(e);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Polynomials in q

QPolynomial QPolynomial::one() { return monomial(1, 0); }

QPolynomial QPolynomial::monomial(long long c, int exponent) {
  if (exponent < 0) {
    throw std::invalid_argument("monomial exponent must be non-negative");
  }
  QPolynomial out;
  if (c != 0) {
    out.coeffs_.assign(static_cast<size_t>(exponent) + 1, 0);
    out.coeffs_.back() = c;
  }
  return out;
}

long long QPolynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<size_t>(k)];
}

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  QPolynomial out;
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  out.trim();
  return out;
}

QPolynomial QPolynomial::truncate(int k) const {
  QPolynomial out;
  if (k < 0) return out;
  const size_t keep = std::min(coeffs_.size(), static_cast<size_t>(k) + 1);
  out.coeffs_.assign(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(keep));
  out.trim();
  return out;
}

QPolynomial QPolynomial::reciprocal(int d) const {
  if (is_zero()) return {};
  if (d < degree()) {
    throw std::invalid_argument("reciprocal requires d >= degree");
  }
  QPolynomial out;
  out.coeffs_.assign(static_cast<size_t>(d) + 1, 0);
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    out.coeffs_[static_cast<size_t>(d) - k] = coeffs_[k];
  }
  out.trim();
  return out;
}

std::string QPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const long long c = coeff(k);
    if (c == 0) continue;
    const long long mag = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const bool show_coeff = mag != 1 || k == 0;
    if (show_coeff) out += std::to_string(mag);
    if (k > 0) {
      if (show_coeff) out += "*";
      out += var;
      if (k > 1) {
        out += "^";
        out += std::to_string(k);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hecke algebra over the T-basis

Laurent HeckeElement::coeff(const Permutation& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Laurent{} : it->second;
}

void HeckeElement::add(const Permutation& w, const Laurent& c) {
  if (c.is_zero()) return;
  if (w.rank() != n_) throw std::invalid_argument("rank mismatch");
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& other) {
  if (other.n_ != n_) throw std::invalid_argument("rank mismatch");
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& other) {
  if (other.n_ != n_) throw std::invalid_argument("rank mismatch");
  for (const auto& [w, c] : other.terms_) {
    Laurent neg = c;
    neg.scale(-1);
    add(w, neg);
  }
  return *this;
}

HeckeElement& HeckeElement::scale(const Laurent& c) {
  if (c.is_zero()) {
    *this = HeckeElement(n_);
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff = coeff * c;
  return *this;
}

HeckeElement hecke_t_basis(const Permutation& w) {
  HeckeElement out(w.rank());
  out.add(w, Laurent::monomial(1, 0));
  return out;
}

namespace {

// h * T_s over the T-basis.
HeckeElement ts_right(const HeckeElement& h, int s) {
  HeckeElement out(h.rank());
  const Laurent q = Laurent::monomial(1, 2);
  const Laurent q_minus_1 = q - Laurent::monomial(1, 0);
  for (const auto& [w, c] : h.terms()) {
    Permutation ws = w;
    ws.apply_right_simple(s);
    if (!w.has_right_descent(s)) {
      out.add(ws, c);
    } else {
      out.add(w, c * q_minus_1);
      out.add(ws, c * q);
    }
  }
  return out;
}

// T_s * h over the T-basis.
HeckeElement ts_left(int s, const HeckeElement& h) {
  HeckeElement out(h.rank());
  const Laurent q = Laurent::monomial(1, 2);
  const Laurent q_minus_1 = q - Laurent::monomial(1, 0);
  for (const auto& [w, c] : h.terms()) {
    Permutation sw = w;
    sw.apply_left_simple(s);
    if (!w.has_left_descent(s)) {
      out.add(sw, c);
    } else {
      out.add(w, c * q_minus_1);
      out.add(sw, c * q);
    }
  }
  return out;
}

}  // namespace

HeckeElement hecke_multiply(const HeckeElement& a, const HeckeElement& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch");
  HeckeElement out(a.rank());
  for (const auto& [y, c] : b.terms()) {
    HeckeElement chain = a;
    for (int s : weyl::reduced_word(y).letters) chain = ts_right(chain, s);
    chain.scale(c);
    out += chain;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Kazhdan-Lusztig context

namespace {

// Coefficient of q^{(ldiff-1)/2}; zero for even length difference.
long long mu_from_poly(const QPolynomial& p, int ldiff) {
  if (ldiff <= 0 || ldiff % 2 == 0) return 0;
  return p.coeff((ldiff - 1) / 2);
}

}  // namespace

struct KLContext::Impl {
  int n;
  std::vector<Permutation> perms;  // lexicographic order
  std::vector<int> lengths;

  // One row per w: x-rank -> P_{x,w}, built by the C'-basis induction.
  using Row = std::map<long long, KLPolynomial>;
  std::vector<std::unique_ptr<Row>> rows;

  // Independent verification route.
  std::map<std::pair<long long, long long>, QPolynomial> r_memo;
  std::map<std::pair<long long, long long>, KLPolynomial> oracle_memo;

  explicit Impl(int rank) : n(rank), perms(weyl::all_permutations(rank)) {
    lengths.reserve(perms.size());
    for (const auto& w : perms) lengths.push_back(w.length());
    rows.resize(perms.size());
  }

  long long rank_of(const Permutation& w) const { return weyl::lex_rank(w); }

  // C'_w = v^{-l(w)} sum_{x <= w} P_{x,w}(v^2) T_x.
  HeckeElement cprime_from_row(long long wr, const Row& row) const {
    HeckeElement out(n);
    const int lw = lengths[static_cast<size_t>(wr)];
    for (const auto& [xr, p] : row) {
      Laurent c;
      for (int j = 0; j <= p.degree(); ++j) {
        c += Laurent::monomial(p.coeff(j), 2 * j - lw);
      }
      out.add(perms[static_cast<size_t>(xr)], c);
    }
    return out;
  }

  const Row& row(long long wr) {
    auto& slot = rows[static_cast<size_t>(wr)];
    if (slot) return *slot;
    const Permutation& w = perms[static_cast<size_t>(wr)];
    auto built = std::make_unique<Row>();
    if (w.is_identity()) {
      (*built)[wr] = QPolynomial::one();
      slot = std::move(built);
      return *slot;
    }
    int s = 1;
    while (!w.has_left_descent(s)) ++s;
    Permutation wp = w;
    wp.apply_left_simple(s);
    const long long wpr = rank_of(wp);
    const Row& row_wp = row(wpr);

    // C'_w = C'_s C'_{w'} - sum_{z < w', sz < z} mu(z, w') C'_z
    //      = v^-1 (C'_{w'} + T_s C'_{w'}) - corrections.
    HeckeElement h = cprime_from_row(wpr, row_wp);
    HeckeElement acc = ts_left(s, h);
    acc += h;
    acc.scale(Laurent::monomial(1, -1));
    for (const auto& [zr, pz] : row_wp) {
      if (zr == wpr) continue;
      const Permutation& z = perms[static_cast<size_t>(zr)];
      if (!z.has_left_descent(s)) continue;
      const long long m = mu_from_poly(
          pz, lengths[static_cast<size_t>(wpr)] - lengths[static_cast<size_t>(zr)]);
      if (m == 0) continue;
      HeckeElement cz = cprime_from_row(zr, row(zr));
      cz.scale(Laurent::monomial(m, 0));
      acc -= cz;
    }

    // Read the polynomials back off the T-expansion, checking the degree
    // bound and parity as we go.
    const int lw = lengths[static_cast<size_t>(wr)];
    for (const auto& [x, c] : acc.terms()) {
      const long long xr = rank_of(x);
      KLPolynomial p;
      for (int e = c.val(); e <= c.deg(); ++e) {
        const long long a = c.coeff(e);
        if (a == 0) continue;
        const int shifted = e + lw;
        if (shifted < 0 || shifted % 2 != 0) {
          throw std::logic_error("basis induction produced a stray exponent");
        }
        p += QPolynomial::monomial(a, shifted / 2);
      }
      const bool diagonal = xr == wr;
      if (diagonal) {
        if (!(p == QPolynomial::one())) {
          throw std::logic_error("basis induction broke P_{w,w} = 1");
        }
      } else if (2 * p.degree() > lw - lengths[static_cast<size_t>(xr)] - 1) {
        throw std::logic_error("basis induction broke the degree bound");
      }
      (*built)[xr] = std::move(p);
    }
    slot = std::move(built);
    return *slot;
  }

  QPolynomial r_poly(long long xr, long long wr) {
    if (xr == wr) return QPolynomial::one();
    if (!weyl::bruhat_leq(perms[static_cast<size_t>(xr)],
                          perms[static_cast<size_t>(wr)])) {
      return {};
    }
    const auto key = std::make_pair(xr, wr);
    if (auto it = r_memo.find(key); it != r_memo.end()) return it->second;
    const Permutation& w = perms[static_cast<size_t>(wr)];
    int s = 1;
    while (!w.has_left_descent(s)) ++s;
    Permutation sw = w;
    sw.apply_left_simple(s);
    Permutation sx = perms[static_cast<size_t>(xr)];
    sx.apply_left_simple(s);
    const long long swr = rank_of(sw);
    const long long sxr = rank_of(sx);
    QPolynomial out;
    if (perms[static_cast<size_t>(xr)].has_left_descent(s)) {
      out = r_poly(sxr, swr);
    } else {
      const QPolynomial q = QPolynomial::monomial(1, 1);
      const QPolynomial q_minus_1 = q - QPolynomial::one();
      out = q_minus_1 * r_poly(xr, swr) + q * r_poly(sxr, swr);
    }
    r_memo.emplace(key, out);
    return out;
  }

  KLPolynomial kl_oracle(long long xr, long long wr) {
    if (xr == wr) return QPolynomial::one();
    const Permutation& x = perms[static_cast<size_t>(xr)];
    const Permutation& w = perms[static_cast<size_t>(wr)];
    if (!weyl::bruhat_leq(x, w)) return {};
    const auto key = std::make_pair(xr, wr);
    if (auto it = oracle_memo.find(key); it != oracle_memo.end()) return it->second;

    // Downward solve of q^d bar(P_{x,w}) - P_{x,w} = sum_{x < y <= w} R_{x,y} P_{y,w}:
    // the two sides live in disjoint degree ranges, so P is minus the low
    // half of the right side, and the full identity is then re-checked.
    QPolynomial g;
    for (long long yr = 0; yr < static_cast<long long>(perms.size()); ++yr) {
      if (yr == xr || yr == wr) continue;
      const Permutation& y = perms[static_cast<size_t>(yr)];
      if (lengths[static_cast<size_t>(yr)] <= lengths[static_cast<size_t>(xr)] ||
          lengths[static_cast<size_t>(yr)] >= lengths[static_cast<size_t>(wr)]) {
        continue;
      }
      if (!weyl::bruhat_leq(x, y) || !weyl::bruhat_leq(y, w)) continue;
      g += r_poly(xr, yr) * kl_oracle(yr, wr);
    }
    g += r_poly(xr, wr);  // y = w term, P_{w,w} = 1
    const int d = lengths[static_cast<size_t>(wr)] - lengths[static_cast<size_t>(xr)];
    QPolynomial p = QPolynomial() - g.truncate((d - 1) / 2);
    if (!(p.reciprocal(d) - p == g)) {
      throw std::logic_error("bar-invariance solve failed to close");
    }
    oracle_memo.emplace(key, p);
    return p;
  }
};

KLContext::KLContext(int n) : n_(n) {
  if (n < 1 || n > kKlRankCap) {
    throw std::invalid_argument("Kazhdan-Lusztig computations support rank 1.." +
                                std::to_string(kKlRankCap));
  }
  impl_ = std::make_unique<Impl>(n);
}

KLContext::~KLContext() = default;

KLPolynomial KLContext::kl(const Permutation& x, const Permutation& w) {
  if (x.rank() != n_ || w.rank() != n_) {
    throw std::invalid_argument("rank mismatch");
  }
  std::lock_guard lock(mutex_);
  if (x == w) return QPolynomial::one();
  if (!weyl::bruhat_leq(x, w)) return {};
  const auto& row = impl_->row(weyl::lex_rank(w));
  auto it = row.find(weyl::lex_rank(x));
  if (it == row.end()) {
    throw std::logic_error("missing Kazhdan-Lusztig table entry");
  }
  return it->second;
}

long long KLContext::mu(const Permutation& x, const Permutation& w) {
  const KLPolynomial p = kl(x, w);
  if (p.is_zero()) return 0;
  return mu_from_poly(p, w.length() - x.length());
}

KLPolynomial KLContext::kl_oracle(const Permutation& x, const Permutation& w) {
  if (x.rank() != n_ || w.rank() != n_) {
    throw std::invalid_argument("rank mismatch");
  }
  std::lock_guard lock(mutex_);
  return impl_->kl_oracle(weyl::lex_rank(x), weyl::lex_rank(w));
}

QPolynomial KLContext::r_polynomial(const Permutation& x, const Permutation& w) {
  if (x.rank() != n_ || w.rank() != n_) {
    throw std::invalid_argument("rank mismatch");
  }
  std::lock_guard lock(mutex_);
  return impl_->r_poly(weyl::lex_rank(x), weyl::lex_rank(w));
}

HeckeElement KLContext::cprime(const Permutation& w) {
  if (w.rank() != n_) throw std::invalid_argument("rank mismatch");
  std::lock_guard lock(mutex_);
  const long long wr = weyl::lex_rank(w);
  return impl_->cprime_from_row(wr, impl_->row(wr));
}

HeckeElement KLContext::cprime_product(const Permutation& x, const Permutation& y) {
  HeckeElement h = hecke_multiply(cprime(x), cprime(y));
  HeckeElement out(n_);
  // Peel the expansion from the top: a T-term of maximal length can only
  // come from its own C', where T_m carries v^{-l(m)} P_{m,m} = v^{-l(m)}.
  while (!h.is_zero()) {
    const Permutation* top = nullptr;
    int top_len = -1;
    for (const auto& [w, c] : h.terms()) {
      const int lw = w.length();
      if (lw >= top_len) {
        top_len = lw;
        top = &w;
      }
    }
    const Permutation m = *top;
    const Laurent hm = h.coeff(m) * Laurent::monomial(1, top_len);
    out.add(m, hm);
    HeckeElement cm = cprime(m);
    cm.scale(hm);
    h -= cm;
  }
  return out;
}

KLContext& shared_context(int n) {
  static std::mutex registry_mutex;
  static std::map<int, std::unique_ptr<KLContext>> registry;
  std::lock_guard lock(registry_mutex);
  auto& slot = registry[n];
  if (!slot) slot = std::make_unique<KLContext>(n);
  return *slot;
}

KLPolynomial kl_polynomial(const Permutation& x, const Permutation& w) {
  if (x.rank() != w.rank()) throw std::invalid_argument("rank mismatch");
  return shared_context(x.rank()).kl(x, w);
}

KLPolynomial kl_polynomial_oracle(const Permutation& x, const Permutation& w) {
  if (x.rank() != w.rank()) throw std::invalid_argument("rank mismatch");
  return shared_context(x.rank()).kl_oracle(x, w);
}

long long mu(const Permutation& x, const Permutation& w) {
  if (x.rank() != w.rank()) throw std::invalid_argument("rank mismatch");
  return shared_context(x.rank()).mu(x, w);
}

HeckeElement kl_basis_product(const Permutation& x, const Permutation& y) {
  if (x.rank() != y.rank()) throw std::invalid_argument("rank mismatch");
  if (x.rank() > kProductRankCap) {
    throw std::invalid_argument("basis products support rank <= " +
                                std::to_string(kProductRankCap));
  }
  return shared_context(x.rank()).cprime_product(x, y);
}

namespace {

std::vector<long long> compute_a_values_oracle(int n) {
  KLContext ctx(n);
  const auto perms = weyl::all_permutations(n);
  // h_{e,z,z} = 1 gives every z a term of degree 0, so 0 is a safe floor.
  std::vector<long long> a(perms.size(), 0);
  for (const auto& x : perms) {
    for (const auto& y : perms) {
      const HeckeElement dec = ctx.cprime_product(x, y);
      for (const auto& [z, h] : dec.terms()) {
        a[static_cast<size_t>(weyl::lex_rank(z))] =
            std::max(a[static_cast<size_t>(weyl::lex_rank(z))],
                     static_cast<long long>(h.deg()));
      }
    }
  }
  return a;
}

}  // namespace

std::vector<long long> a_values_oracle(int n) {
  if (n < 1 || n > kAOracleRankCap) {
    throw std::invalid_argument("a-function oracle supports rank 1.." +
                                std::to_string(kAOracleRankCap));
  }
  static std::mutex cache_mutex;
  static std::map<int, std::vector<long long>> cache;
  std::lock_guard lock(cache_mutex);
  auto& slot = cache[n];
  if (slot.empty()) slot = compute_a_values_oracle(n);
  return slot;
}

long long a_value_oracle(const Permutation& z) {
  const auto table = a_values_oracle(z.rank());
  return table[static_cast<size_t>(weyl::lex_rank(z))];
}

// ---------------------------------------------------------------------------
// RSK and cells

Partition Tableau::shape() const {
  std::vector<int> parts;
  parts.reserve(rows.size());
  for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

std::string Tableau::to_string() const {
  std::string out;
  for (const auto& row : rows) {
    if (!out.empty()) out.push_back('/');
    for (size_t k = 0; k < row.size(); ++k) {
      if (k) out.push_back(',');
      out += std::to_string(row[k]);
    }
  }
  return out;
}

std::pair<Tableau, Tableau> rsk(const Permutation& w) {
  Tableau p, q;
  for (int i = 1; i <= w.rank(); ++i) {
    int x = w(i);
    size_t r = 0;
    for (;; ++r) {
      if (r == p.rows.size()) {
        p.rows.push_back({x});
        q.rows.push_back({i});
        break;
      }
      auto& row = p.rows[r];
      auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) {
        row.push_back(x);
        q.rows[r].push_back(i);
        break;
      }
      std::swap(x, *it);
    }
  }
  return {std::move(p), std::move(q)};
}

Partition shape(const Permutation& w) { return rsk(w).first.shape(); }

long long a_value(const Permutation& w) { return shape(w).n_invariant(); }

bool Cell::contains(const weyl::Permutation& w) const {
  return std::binary_search(members.begin(), members.end(), w.pack());
}

CellDecomposition::CellDecomposition(int n, CellMethod method,
                                     std::vector<Cell> cells,
                                     std::vector<std::vector<bool>> leq)
    : n_(n), method_(method), cells_(std::move(cells)), leq_(std::move(leq)) {
  long long total = 0;
  for (const auto& cell : cells_) total += static_cast<long long>(cell.members.size());
  if (total != weyl::factorial(n_) || leq_.size() != cells_.size()) {
    throw std::logic_error("malformed cell decomposition");
  }
}

int CellDecomposition::cell_of(const Permutation& w) const {
  if (w.rank() != n_) throw std::invalid_argument("rank mismatch");
  for (const auto& cell : cells_) {
    if (cell.contains(w)) return cell.id;
  }
  throw std::logic_error("permutation missing from cell decomposition");
}

bool CellDecomposition::cell_leq(int a, int b) const {
  return leq_.at(static_cast<size_t>(a)).at(static_cast<size_t>(b));
}

namespace {

// Cells listed by shape in descending lexicographic order, so the cell of
// the identity (shape (n)) always gets id 0 and the cell of w0 comes last.
std::vector<Cell> assemble_cells(std::map<Partition, std::vector<std::uint64_t>> fibers) {
  std::vector<Cell> cells;
  cells.reserve(fibers.size());
  for (auto it = fibers.rbegin(); it != fibers.rend(); ++it) {
    Cell cell;
    cell.id = static_cast<int>(cells.size());
    cell.shape = it->first;
    cell.a = it->first.n_invariant();
    cell.members = std::move(it->second);
    std::sort(cell.members.begin(), cell.members.end());
    cells.push_back(std::move(cell));
  }
  return cells;
}

CellDecomposition two_sided_cells_fast(int n) {
  std::map<Partition, std::vector<std::uint64_t>> fibers;
  const long long total = weyl::factorial(n);
  for (long long r = 0; r < total; ++r) {
    const Permutation w = weyl::from_lex_rank(n, r);
    fibers[shape(w)].push_back(w.pack());
  }
  std::vector<Cell> cells = assemble_cells(std::move(fibers));
  const size_t k = cells.size();
  std::vector<std::vector<bool>> leq(k, std::vector<bool>(k, false));
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < k; ++j) {
      leq[i][j] = dominance_leq(cells[i].shape, cells[j].shape);
    }
  }
  return CellDecomposition(n, CellMethod::fast, std::move(cells), std::move(leq));
}

// Tarjan over an explicit stack; the graphs here have at most 5! nodes.
struct SccState {
  const std::vector<std::vector<int>>& adj;
  std::vector<int> index, low, comp;
  std::vector<bool> on_stack;
  std::vector<int> stack;
  int next_index = 0, next_comp = 0;

  explicit SccState(const std::vector<std::vector<int>>& graph)
      : adj(graph),
        index(graph.size(), -1),
        low(graph.size(), 0),
        comp(graph.size(), -1),
        on_stack(graph.size(), false) {}

  void run(int root) {
    struct Frame {
      int v;
      size_t edge;
    };
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [v, edge] = frames.back();
      if (edge < adj[static_cast<size_t>(v)].size()) {
        const int u = adj[static_cast<size_t>(v)][edge++];
        if (index[static_cast<size_t>(u)] == -1) {
          index[u] = low[u] = next_index++;
          stack.push_back(u);
          on_stack[u] = true;
          frames.push_back({u, 0});
        } else if (on_stack[static_cast<size_t>(u)]) {
          low[v] = std::min(low[v], index[u]);
        }
      } else {
        if (low[v] == index[v]) {
          for (;;) {
            const int u = stack.back();
            stack.pop_back();
            on_stack[static_cast<size_t>(u)] = false;
            comp[static_cast<size_t>(u)] = next_comp;
            if (u == v) break;
          }
          ++next_comp;
        }
        const int finished = v;
        frames.pop_back();
        if (!frames.empty()) {
          low[frames.back().v] = std::min(low[frames.back().v], low[finished]);
        }
      }
    }
  }
};

CellDecomposition two_sided_cells_oracle(int n) {
  KLContext ctx(n);
  const auto perms = weyl::all_permutations(n);
  const int total = static_cast<int>(perms.size());

  // Step edges of the left preorder: w -> z means z <=_L w.
  std::vector<std::vector<int>> left_edges(static_cast<size_t>(total));
  for (int wr = 0; wr < total; ++wr) {
    const Permutation& w = perms[static_cast<size_t>(wr)];
    for (int s = 1; s < n; ++s) {
      if (!w.has_left_descent(s)) {
        Permutation sw = w;
        sw.apply_left_simple(s);
        left_edges[static_cast<size_t>(wr)].push_back(
            static_cast<int>(weyl::lex_rank(sw)));
      }
    }
    for (int zr = 0; zr < total; ++zr) {
      if (zr == wr) continue;
      const Permutation& z = perms[static_cast<size_t>(zr)];
      if (z.length() >= w.length()) continue;
      if (ctx.mu(z, w) == 0) continue;
      bool witness = false;
      for (int s = 1; s < n && !witness; ++s) {
        witness = z.has_left_descent(s) && !w.has_left_descent(s);
      }
      if (witness) {
        left_edges[static_cast<size_t>(wr)].push_back(zr);
      }
    }
  }

  // Right preorder through inverses, then the union graph.
  std::vector<long long> inv_rank(static_cast<size_t>(total));
  for (int wr = 0; wr < total; ++wr) {
    inv_rank[static_cast<size_t>(wr)] =
        weyl::lex_rank(perms[static_cast<size_t>(wr)].inverse());
  }
  std::vector<std::vector<int>> adj(static_cast<size_t>(total));
  for (int wr = 0; wr < total; ++wr) {
    adj[static_cast<size_t>(wr)] = left_edges[static_cast<size_t>(wr)];
  }
  for (int ar = 0; ar < total; ++ar) {
    for (int br : left_edges[static_cast<size_t>(ar)]) {
      adj[static_cast<size_t>(inv_rank[static_cast<size_t>(ar)])].push_back(
          static_cast<int>(inv_rank[static_cast<size_t>(br)]));
    }
  }

  SccState scc(adj);
  for (int v = 0; v < total; ++v) {
    if (scc.index[static_cast<size_t>(v)] == -1) scc.run(v);
  }
  const int num_comps = scc.next_comp;

  // Condensation reachability.
  std::vector<std::vector<bool>> reach(static_cast<size_t>(num_comps),
                                       std::vector<bool>(static_cast<size_t>(num_comps), false));
  std::vector<std::vector<int>> comp_adj(static_cast<size_t>(num_comps));
  for (int v = 0; v < total; ++v) {
    for (int u : adj[static_cast<size_t>(v)]) {
      const int cv = scc.comp[static_cast<size_t>(v)];
      const int cu = scc.comp[static_cast<size_t>(u)];
      if (cv != cu) comp_adj[static_cast<size_t>(cv)].push_back(cu);
    }
  }
  for (int c = 0; c < num_comps; ++c) {
    std::vector<int> stack{c};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      if (reach[static_cast<size_t>(c)][static_cast<size_t>(v)]) continue;
      reach[static_cast<size_t>(c)][static_cast<size_t>(v)] = true;
      for (int u : comp_adj[static_cast<size_t>(v)]) stack.push_back(u);
    }
  }

  // Group members by component, label each group by the RSK shape of its
  // lexicographically smallest member, and order the groups like the fast
  // path does.
  std::vector<std::vector<std::uint64_t>> members(static_cast<size_t>(num_comps));
  for (int v = 0; v < total; ++v) {
    members[static_cast<size_t>(scc.comp[static_cast<size_t>(v)])].push_back(
        perms[static_cast<size_t>(v)].pack());
  }
  std::map<Partition, std::vector<std::uint64_t>> fibers;
  std::map<Partition, int> comp_of_shape;
  for (int c = 0; c < num_comps; ++c) {
    auto& group = members[static_cast<size_t>(c)];
    std::sort(group.begin(), group.end());
    const Partition label = shape(Permutation::unpack(n, group.front()));
    if (!fibers.emplace(label, std::move(group)).second) {
      throw std::logic_error("two cells received the same shape label");
    }
    comp_of_shape.emplace(label, c);
  }
  std::vector<Cell> cells = assemble_cells(std::move(fibers));
  const size_t k = cells.size();
  std::vector<std::vector<bool>> leq(k, std::vector<bool>(k, false));
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < k; ++j) {
      const int ci = comp_of_shape.at(cells[i].shape);
      const int cj = comp_of_shape.at(cells[j].shape);
      // cell i lies below cell j when j's component reaches i's.
      leq[i][j] = reach[static_cast<size_t>(cj)][static_cast<size_t>(ci)];
    }
  }
  return CellDecomposition(n, CellMethod::oracle, std::move(cells), std::move(leq));
}

}  // namespace

CellDecomposition two_sided_cells(int n, CellMethod method) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  if (method == CellMethod::fast) {
    if (n > kCellsFastRankCap) {
      throw std::invalid_argument("fast cell decomposition supports rank <= " +
                                  std::to_string(kCellsFastRankCap));
    }
    return two_sided_cells_fast(n);
  }
  if (n > kCellsOracleRankCap) {
    throw std::invalid_argument("oracle cell decomposition supports rank <= " +
                                std::to_string(kCellsOracleRankCap));
  }
  return two_sided_cells_oracle(n);
}

}  // namespace dltk::cells
