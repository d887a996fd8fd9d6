#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dltk/braid.hpp"
#include "dltk/cells.hpp"
#include "dltk/dlcoh.hpp"
#include "dltk/dlpoints.hpp"
#include "dltk/errors.hpp"
#include "dltk/unipotent.hpp"
#include "dltk/weyl.hpp"
#include "verify.hpp"

namespace dltk::tools {

namespace {

// Only DLTK_-prefixed cap overrides are honored from the environment.
long long env_cap(const char* name, long long fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  std::string text(raw);
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument(std::string(name) +
                                  " must be a positive integer");
    }
  }
  long long value = 0;
  try {
    value = std::stoll(text);
  } catch (const std::out_of_range&) {
    throw std::invalid_argument(std::string(name) + " is out of range");
  }
  if (value <= 0) {
    throw std::invalid_argument(std::string(name) +
                                " must be a positive integer");
  }
  return value;
}

void emit_table_tsv(const dlcoh::CohTable& table, std::ostream& out) {
  out << "degree\tlambda\tmult\n";
  for (const auto& [key, mult] : table.entries()) {
    out << key.first << '\t' << key.second.to_string() << '\t' << mult << '\n';
  }
}

void emit_cells_tsv(const cells::CellDecomposition& dec, std::ostream& out) {
  out << "permutation\tshape\ta\tcell\n";
  for (const auto& w : weyl::all_permutations(dec.rank())) {
    out << w.to_string() << '\t' << cells::shape(w).to_string() << '\t'
        << cells::a_value(w) << '\t' << dec.cell_of(w) << '\n';
  }
}

void emit_cells_dot(const cells::CellDecomposition& dec, std::ostream& out) {
  const int count = static_cast<int>(dec.cells().size());
  out << "digraph cells {\n  rankdir=BT;\n";
  for (const auto& cell : dec.cells()) {
    out << "  c" << cell.id << " [label=\"" << cell.shape.to_string()
        << "\"];\n";
  }
  // Edges of the transitive reduction, pointing toward the larger cell.
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) {
      if (i == j || !dec.cell_leq(i, j)) continue;
      bool covered = true;
      for (int k = 0; k < count && covered; ++k) {
        if (k != i && k != j && dec.cell_leq(i, k) && dec.cell_leq(k, j)) {
          covered = false;
        }
      }
      if (covered) out << "  c" << i << " -> c" << j << ";\n";
    }
  }
  out << "}\n";
}

void emit_unipotent_tsv(int rank, std::ostream& out) {
  out << "lambda\tdegree\ta\tA\tchi1\n";
  for (const auto& data : unipotent::all_unipotent_characters(rank)) {
    out << data.lambda.to_string() << '\t' << data.generic_degree.to_string()
        << '\t' << data.a << '\t' << data.A << '\t' << data.chi_dim.get_str()
        << '\n';
  }
}

// The exponent k with b = pi^k, for the braids whose cohomology table the
// translation formula derives from the base case.
long long pi_power_exponent(const braid::GarsideElement& element) {
  if (element.is_identity()) return 0;
  if (element.is_delta_power() && element.inf() > 0 &&
      element.inf() % 2 == 0) {
    return element.inf() / 2;
  }
  throw std::invalid_argument(
      "cohomology tables are derived only for powers of the full twist; use "
      "'dl translate' or 'dl disjoint' on an imported table instead");
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "Braid normal forms, Kazhdan-Lusztig cells, unipotent character "
      "degrees and Deligne-Lusztig cohomology tables for GL_n"};
  app.name("dltk");
  app.require_subcommand(1);

  int rank = 0;
  std::string braid_expr;
  std::string other_expr;
  std::string word_expr;
  std::string input_path;
  std::string format = "tsv";
  int root_degree = 0;
  int field_q = 0;
  int field_m = 0;
  int jobs = 1;
  bool use_oracle = false;
  bool emit_dot = false;
  std::vector<std::string> suites;

  auto* braid_cmd =
      app.add_subcommand("braid", "Garside arithmetic in the braid group");
  braid_cmd->require_subcommand(1);
  auto* braid_nf = braid_cmd->add_subcommand(
      "nf", "Left-greedy normal form of a braid expression");
  braid_nf->add_option("--rank", rank, "Rank n (strands)")
      ->required()
      ->check(CLI::PositiveNumber);
  braid_nf->add_option("--braid", braid_expr, "Braid expression")->required();
  auto* braid_conj = braid_cmd->add_subcommand(
      "conj", "Decide conjugacy of two braids via super summit sets");
  braid_conj->add_option("--rank", rank, "Rank n (strands)")
      ->required()
      ->check(CLI::PositiveNumber);
  braid_conj->add_option("--braid", braid_expr, "First braid expression")
      ->required();
  braid_conj->add_option("--other", other_expr, "Second braid expression")
      ->required();
  auto* braid_root = braid_cmd->add_subcommand(
      "root-check", "Test whether braid^d equals the full twist");
  braid_root->add_option("--rank", rank, "Rank n (strands)")
      ->required()
      ->check(CLI::PositiveNumber);
  braid_root->add_option("--braid", braid_expr, "Braid expression")
      ->required();
  braid_root->add_option("--d", root_degree, "Root degree d")
      ->required()
      ->check(CLI::PositiveNumber);

  auto* cells_cmd = app.add_subcommand(
      "cells", "Two-sided Kazhdan-Lusztig cells of the symmetric group");
  cells_cmd->add_option("--rank", rank, "Rank n")
      ->required()
      ->check(CLI::PositiveNumber);
  cells_cmd->add_flag("--oracle", use_oracle,
                      "Use the KL-preorder oracle instead of the RSK path");
  cells_cmd->add_flag("--dot", emit_dot,
                      "Emit the cell order as a DOT digraph");

  auto* unip_cmd = app.add_subcommand(
      "unipotent", "Unipotent characters of GL_n(q): generic degrees");
  unip_cmd->add_option("--rank", rank, "Rank n")
      ->required()
      ->check(CLI::PositiveNumber);

  auto* dl_cmd =
      app.add_subcommand("dl", "Deligne-Lusztig tables and point counts");
  dl_cmd->require_subcommand(1);
  auto* dl_coh = dl_cmd->add_subcommand(
      "cohomology", "Cohomology table of X(pi^k F) via the translation law");
  dl_coh->add_option("--rank", rank, "Rank n")
      ->required()
      ->check(CLI::PositiveNumber);
  dl_coh->add_option("--braid", braid_expr, "Braid expression (a power of pi)")
      ->required();
  dl_coh->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"tsv", "doc"}));
  auto* dl_count = dl_cmd->add_subcommand(
      "count", "Count rational points of a gallery variety by enumeration");
  dl_count->add_option("--rank", rank, "Rank n")
      ->required()
      ->check(CLI::PositiveNumber);
  dl_count
      ->add_option("--word", word_expr,
                   "Enriched word; '_' prefix closes a letter")
      ->required();
  dl_count->add_option("-q", field_q, "Base field size (prime: 2, 3 or 5)")
      ->required();
  dl_count->add_option("-m", field_m, "Frobenius extension degree")
      ->required()
      ->check(CLI::PositiveNumber);
  dl_count->add_option("--jobs", jobs, "Worker threads for the outer loop")
      ->check(CLI::PositiveNumber);
  auto* dl_disjoint = dl_cmd->add_subcommand(
      "disjoint", "Check a cohomology table document for disjointness");
  dl_disjoint->add_option("--input", input_path, "Table document path")
      ->required();
  auto* dl_translate = dl_cmd->add_subcommand(
      "translate", "Apply the full-twist translation to a table document");
  dl_translate->add_option("--input", input_path, "Table document path")
      ->required();
  dl_translate->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"tsv", "doc"}));

  auto* verify_cmd = app.add_subcommand(
      "verify", "Run the built-in invariant and golden-value suites");
  verify_cmd->add_option("suites", suites, "Suites to run (default: all)");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  try {
    const long long sss_cap = env_cap("DLTK_SSS_CAP", braid::kDefaultSssCap);
    const long long flag_cap =
        env_cap("DLTK_FLAG_CAP", dlpoints::kDefaultFlagCap);

    if (braid_nf->parsed()) {
      const auto element =
          braid::normal_form(braid::BraidWord::parse(rank, braid_expr));
      out << element.to_word_string() << "\n";
    } else if (braid_conj->parsed()) {
      const auto a = braid::normal_form(braid::BraidWord::parse(rank, braid_expr));
      const auto b = braid::normal_form(braid::BraidWord::parse(rank, other_expr));
      const auto result = braid::are_conjugate(a, b, sss_cap);
      out << (result.conjugate ? "true" : "false") << "\n";
      if (result.witness.has_value()) {
        out << "witness\t" << result.witness->to_word_string() << "\n";
      }
    } else if (braid_root->parsed()) {
      const auto element =
          braid::normal_form(braid::BraidWord::parse(rank, braid_expr));
      out << (braid::is_dth_root_of_pi(element, root_degree) ? "true"
                                                             : "false")
          << "\n";
    } else if (cells_cmd->parsed()) {
      const auto dec = cells::two_sided_cells(
          rank, use_oracle ? cells::CellMethod::oracle
                           : cells::CellMethod::fast);
      if (emit_dot) {
        emit_cells_dot(dec, out);
      } else {
        emit_cells_tsv(dec, out);
      }
    } else if (unip_cmd->parsed()) {
      emit_unipotent_tsv(rank, out);
    } else if (dl_coh->parsed()) {
      const auto element =
          braid::normal_form(braid::BraidWord::parse(rank, braid_expr));
      const auto table =
          dlcoh::table_pi_power(rank, pi_power_exponent(element));
      if (format == "doc") {
        out << dlcoh::table_document(table);
      } else {
        emit_table_tsv(table, out);
      }
    } else if (dl_count->parsed()) {
      const auto word = braid::EnrichedWord::parse(rank, word_expr);
      dlpoints::CountOptions options;
      options.flag_cap = flag_cap;
      options.jobs = jobs;
      const long long count =
          dlpoints::count_points(word, field_q, field_m, options);
      out << count << "\n";
      // The record echoes the word exactly as given; the grammar admits no
      // characters that would need JSON escaping.
      out << "{\"n\":" << rank << ",\"word\":\"" << word_expr
          << "\",\"q\":" << field_q << ",\"m\":" << field_m
          << ",\"count\":" << count << "}\n";
    } else if (dl_disjoint->parsed()) {
      const auto table = dlcoh::import_table(input_path);
      const bool disjoint = dlcoh::disjointness_check(table);
      out << "disjointness\t" << (disjoint ? "ok" : "violated") << "\n";
      out << "parity\t" << (dlcoh::parity_check(table) ? "even" : "mixed")
          << "\n";
      if (!disjoint) return 2;
    } else if (dl_translate->parsed()) {
      const auto table =
          dlcoh::translate_full_twist(dlcoh::import_table(input_path));
      if (format == "doc") {
        out << dlcoh::table_document(table);
      } else {
        emit_table_tsv(table, out);
      }
    } else if (verify_cmd->parsed()) {
      VerifyOptions options;
      options.sss_cap = sss_cap;
      options.flag_cap = flag_cap;
      const int failures = run_verify(suites, options, out);
      if (failures > 0) {
        err << "verify: " << failures << " check(s) failed\n";
        return 2;
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace dltk::tools
