#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

#include "dltk/partition.hpp"

namespace dltk::dlcoh {

// Multiplicity table of unipotent characters in the compactly supported
// cohomology of one Deligne-Lusztig variety: (degree, label) -> how often
// the character appears.  Tables for braids outside the reach of the
// full-twist translation enter only through import_table; nothing here
// fabricates cohomology it cannot derive.
class CohTable {
 public:
  CohTable(int n, std::string braid_label);

  int rank() const { return n_; }
  const std::string& braid_label() const { return braid_label_; }

  // Ordered by (degree, label lexicographic), which is also the export
  // order of the document format.
  const std::map<std::pair<long long, Partition>, long long>& entries() const {
    return entries_;
  }

  bool empty() const { return entries_.empty(); }
  long long mult(long long degree, const Partition& lambda) const;

  // Accumulates; the increment must be positive and the label a partition
  // of the rank.
  void add(long long degree, const Partition& lambda, long long mult);

  long long total_multiplicity() const;

  // Same rank and same entries, braid labels ignored.  Conjugacy
  // invariance compares tables of distinct labels.
  bool entries_equal(const CohTable& other) const;

  // Equality includes the braid label (round-trip identity).
  friend bool operator==(const CohTable&, const CohTable&) = default;

 private:
  int n_;
  std::string braid_label_;
  std::map<std::pair<long long, Partition>, long long> entries_;
};

// X(1*F): the discrete set of rational Borels, all cohomology in degree 0,
// where the multiplicity of each label is its character degree.
CohTable table_trivial_braid(int n);

// Translation law: multiplying the braid by the full twist shifts the
// lambda-block up by 4N - 2A(lambda).
CohTable translate_full_twist(const CohTable& t);

// Closed form for X(pi^k F): entry (k*(4N - 2A(lambda)), lambda) with
// multiplicity chi_dim(lambda).  Equals k iterations of the translation.
CohTable table_pi_power(int n, long long k);

// sum over lambda of mult_t1(i, lambda) * mult_t2(j, lambda).
mpz_class inner_product(const CohTable& t1, const CohTable& t2, long long i,
                        long long j);

// True iff distinct supported degrees share no constituent.
bool disjointness_check(const CohTable& t);

// True iff every supported degree is even.
bool parity_check(const CohTable& t);

// sum of (-1)^degree * mult * generic_degree(lambda)(q): the alternating
// sum of dimensions of the cohomology the table describes.
mpz_class euler_dim(const CohTable& t, const mpz_class& q);

// Structured text document: {"n": int, "braid": string, "entries":
// [{"degree": int, "lambda": [parts], "mult": int}, ...]}.  Entries are
// sorted by (degree, lambda lexicographic) on export.  Import validates
// the schema, positive multiplicities, partition labels of size n, a braid
// expression that parses at rank n, and no duplicate (degree, lambda).
std::string table_document(const CohTable& t);
CohTable parse_table_document(const std::string& text);

CohTable import_table(const std::string& path);
void export_table(const CohTable& t, const std::string& path);

// Consistency probe for a pair of imported tables: tables asserted for
// conjugate braids must agree entry-for-entry.  When the
// braid is central its conjugacy class is a singleton and the check is
// vacuous, which `central` flags.
struct InvarianceReport {
  bool conjugate = false;     // braid labels conjugate in B_n
  bool central = false;       // conjugacy class is {b}: check is vacuous
  bool entries_equal = false;
  bool ok = false;            // !conjugate or entries_equal
};

// `sss_cap` bounds the conjugacy search, as in braid::are_conjugate.
InvarianceReport conjugacy_invariance_check(const CohTable& t1,
                                            const CohTable& t2,
                                            long long sss_cap = 100000);

}  // namespace dltk::dlcoh
