#include "dltk/dlcoh.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "dltk/braid.hpp"
#include "dltk/errors.hpp"
#include "dltk/unipotent.hpp"
#include "dltk/weyl.hpp"
#include "json.hpp"

namespace dltk::dlcoh {

CohTable::CohTable(int n, std::string braid_label)
    : n_(n), braid_label_(std::move(braid_label)) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
}

long long CohTable::mult(long long degree, const Partition& lambda) const {
  auto it = entries_.find({degree, lambda});
  return it == entries_.end() ? 0 : it->second;
}

void CohTable::add(long long degree, const Partition& lambda, long long mult) {
  if (mult <= 0) throw std::invalid_argument("multiplicity must be positive");
  if (lambda.sum() != n_) {
    throw std::invalid_argument("label is not a partition of the rank");
  }
  entries_[{degree, lambda}] += mult;
}

long long CohTable::total_multiplicity() const {
  long long total = 0;
  for (const auto& [key, m] : entries_) total += m;
  return total;
}

bool CohTable::entries_equal(const CohTable& other) const {
  return n_ == other.n_ && entries_ == other.entries_;
}

namespace {

long long chi_dim_ll(const Partition& lambda) {
  const mpz_class d = unipotent::chi_dim(lambda);
  if (!d.fits_slong_p()) {
    throw std::overflow_error("character degree exceeds 64 bits");
  }
  return d.get_si();
}

std::string full_twist_label(const std::string& label) {
  if (label == "1") return "pi";
  if (label == "pi") return "pi^2";
  if (label.starts_with("pi^")) {
    const std::string tail = label.substr(3);
    if (!tail.empty() && tail.find_first_not_of("0123456789") == std::string::npos) {
      return "pi^" + std::to_string(std::stoll(tail) + 1);
    }
  }
  return "pi (" + label + ")";
}

}  // namespace

CohTable table_trivial_braid(int n) {
  CohTable t(n, "1");
  for (const Partition& lambda : partitions_of(n)) {
    t.add(0, lambda, chi_dim_ll(lambda));
  }
  return t;
}

CohTable translate_full_twist(const CohTable& t) {
  const long long four_n = 4 * weyl::num_positive_roots(t.rank());
  CohTable out(t.rank(), full_twist_label(t.braid_label()));
  std::map<Partition, long long> shift;  // 4N - 2A per label
  for (const auto& [key, m] : t.entries()) {
    const auto& [degree, lambda] = key;
    auto it = shift.find(lambda);
    if (it == shift.end()) {
      it = shift.emplace(lambda, four_n - 2 * unipotent::a_A(lambda).second).first;
    }
    out.add(degree + it->second, lambda, m);
  }
  return out;
}

CohTable table_pi_power(int n, long long k) {
  if (k < 0 || k > 1000000) {
    throw std::invalid_argument("full twist power must be in [0, 10^6]");
  }
  std::string label = "1";
  if (k == 1) label = "pi";
  if (k >= 2) label = "pi^" + std::to_string(k);
  CohTable t(n, std::move(label));
  const long long four_n = 4 * weyl::num_positive_roots(n);
  for (const Partition& lambda : partitions_of(n)) {
    const long long shift = four_n - 2 * unipotent::a_A(lambda).second;
    t.add(k * shift, lambda, chi_dim_ll(lambda));
  }
  return t;
}

mpz_class inner_product(const CohTable& t1, const CohTable& t2, long long i,
                        long long j) {
  if (t1.rank() != t2.rank()) throw std::invalid_argument("rank mismatch");
  mpz_class total = 0;
  const auto begin = t1.entries().lower_bound({i, Partition()});
  for (auto it = begin; it != t1.entries().end() && it->first.first == i; ++it) {
    const long long m2 = t2.mult(j, it->first.second);
    if (m2 != 0) total += mpz_class(static_cast<long>(it->second)) * static_cast<long>(m2);
  }
  return total;
}

bool disjointness_check(const CohTable& t) {
  std::map<Partition, long long> degree_of;
  for (const auto& [key, m] : t.entries()) {
    auto [it, inserted] = degree_of.emplace(key.second, key.first);
    if (!inserted && it->second != key.first) return false;
  }
  return true;
}

bool parity_check(const CohTable& t) {
  for (const auto& [key, m] : t.entries()) {
    if (key.first % 2 != 0) return false;
  }
  return true;
}

mpz_class euler_dim(const CohTable& t, const mpz_class& q) {
  mpz_class total = 0;
  std::map<Partition, mpz_class> dim;  // generic degree at q, per label
  for (const auto& [key, m] : t.entries()) {
    const auto& [degree, lambda] = key;
    auto it = dim.find(lambda);
    if (it == dim.end()) {
      it = dim.emplace(lambda, unipotent::generic_degree(lambda).eval(q)).first;
    }
    const mpz_class term = mpz_class(static_cast<long>(m)) * it->second;
    if (degree % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

// ---------------------------------------------------------------------------
// Document format

namespace {

using nlohmann::ordered_json;

[[noreturn]] void bad_document(const std::string& what) {
  throw parse_error("table document: " + what, 0);
}

}  // namespace

std::string table_document(const CohTable& t) {
  ordered_json doc;
  doc["n"] = t.rank();
  doc["braid"] = t.braid_label();
  doc["entries"] = ordered_json::array();
  for (const auto& [key, m] : t.entries()) {
    const auto& [degree, lambda] = key;
    ordered_json entry;
    entry["degree"] = degree;
    entry["lambda"] = ordered_json::array();
    for (int i = 1; i <= lambda.num_parts(); ++i) entry["lambda"].push_back(lambda.part(i));
    entry["mult"] = m;
    doc["entries"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

CohTable parse_table_document(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(std::string("table document: ") + e.what(),
                      e.byte > 0 ? e.byte - 1 : 0);
  }
  if (!doc.is_object()) bad_document("top level must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "n" && key != "braid" && key != "entries") {
      bad_document("unknown field '" + key + "'");
    }
  }
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    bad_document("field 'n' must be an integer");
  }
  const long long n = doc["n"].get<long long>();
  if (n < 1 || n > 64) bad_document("field 'n' out of range");
  if (!doc.contains("braid") || !doc["braid"].is_string()) {
    bad_document("field 'braid' must be a string");
  }
  const std::string braid_label = doc["braid"].get<std::string>();
  try {
    braid::BraidWord::parse(static_cast<int>(n), braid_label);
  } catch (const parse_error& e) {
    throw parse_error("table document: field 'braid' does not parse: " +
                          e.reason(),
                      e.position());
  }
  if (!doc.contains("entries") || !doc["entries"].is_array()) {
    bad_document("field 'entries' must be an array");
  }
  CohTable t(static_cast<int>(n), braid_label);
  for (const auto& entry : doc["entries"]) {
    if (!entry.is_object()) bad_document("entries must be objects");
    for (const auto& [key, value] : entry.items()) {
      if (key != "degree" && key != "lambda" && key != "mult") {
        bad_document("unknown entry field '" + key + "'");
      }
    }
    if (!entry.contains("degree") || !entry["degree"].is_number_integer()) {
      bad_document("entry field 'degree' must be an integer");
    }
    if (!entry.contains("mult") || !entry["mult"].is_number_integer()) {
      bad_document("entry field 'mult' must be an integer");
    }
    const long long mult = entry["mult"].get<long long>();
    if (mult <= 0) bad_document("multiplicity must be positive");
    if (!entry.contains("lambda") || !entry["lambda"].is_array()) {
      bad_document("entry field 'lambda' must be an array of parts");
    }
    std::vector<int> parts;
    for (const auto& part : entry["lambda"]) {
      if (!part.is_number_integer()) bad_document("partition parts must be integers");
      const long long p = part.get<long long>();
      if (p < 1 || p > n) bad_document("partition part out of range");
      parts.push_back(static_cast<int>(p));
    }
    Partition lambda;
    try {
      lambda = Partition(std::move(parts));
    } catch (const std::invalid_argument&) {
      bad_document("label is not a partition");
    }
    if (lambda.sum() != n) bad_document("label is not a partition of n");
    const long long degree = entry["degree"].get<long long>();
    if (t.mult(degree, lambda) != 0) {
      bad_document("duplicate entry for one (degree, label) pair");
    }
    t.add(degree, lambda, mult);
  }
  return t;
}

CohTable import_table(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_table_document(buffer.str());
}

void export_table(const CohTable& t, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << table_document(t);
  if (!out) throw std::runtime_error("write failed for " + path);
}

// ---------------------------------------------------------------------------
// Conjugacy invariance

namespace {

bool is_central(const braid::GarsideElement& b) {
  for (int i = 1; i < b.rank(); ++i) {
    const auto g = braid::lift(weyl::Permutation::simple(b.rank(), i));
    if (!(braid::multiply(g, b) == braid::multiply(b, g))) return false;
  }
  return true;
}

}  // namespace

InvarianceReport conjugacy_invariance_check(const CohTable& t1,
                                            const CohTable& t2,
                                            long long sss_cap) {
  if (t1.rank() != t2.rank()) throw std::invalid_argument("rank mismatch");
  const auto b1 = braid::normal_form(
      braid::BraidWord::parse(t1.rank(), t1.braid_label()));
  const auto b2 = braid::normal_form(
      braid::BraidWord::parse(t2.rank(), t2.braid_label()));
  InvarianceReport report;
  report.conjugate = braid::are_conjugate(b1, b2, sss_cap).conjugate;
  report.central = is_central(b1);
  report.entries_equal = t1.entries_equal(t2);
  report.ok = !report.conjugate || report.entries_equal;
  return report;
}

}  // namespace dltk::dlcoh
