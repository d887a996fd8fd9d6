#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "dltk/dlcoh.hpp"

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = dltk::tools::run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = (std::filesystem::temp_directory_path() / name).string();
  std::ofstream out(path, std::ios::binary);
  out << text;
  return path;
}

}  // namespace

TEST_CASE("help lists the subcommands and exits cleanly") {
  const auto run = cli({"--help"});
  CHECK(run.code == 0);
  CHECK(run.err.empty());
  for (const char* name : {"braid", "cells", "unipotent", "dl", "verify"}) {
    CHECK(run.out.find(name) != std::string::npos);
  }
}

TEST_CASE("usage errors exit 1 without polluting stdout") {
  CHECK(cli({"braid", "nf", "--braid", "s1"}).code == 1);  // missing --rank
  CHECK(cli({"no-such-command"}).code == 1);
  const auto run = cli({"cells", "--rank", "3", "--frobnicate"});
  CHECK(run.code == 1);
  CHECK(run.out.empty());
  CHECK(!run.err.empty());
}

TEST_CASE("domain errors land on stderr as one line") {
  const auto run = cli({"braid", "nf", "--rank", "3", "--braid", "s9"});
  CHECK(run.code == 1);
  CHECK(run.out.empty());
  CHECK(run.err.substr(0, 7) == "error: ");
  CHECK(run.err.find("position") != std::string::npos);
  CHECK(run.err.back() == '\n');
  CHECK(cli({"cells", "--rank", "11"}).code == 1);
  CHECK(cli({"cells", "--rank", "6", "--oracle"}).code == 1);
  CHECK(cli({"dl", "count", "--rank", "2", "--word", "s1", "-q", "4",
             "-m", "1"}).code == 1);
}

TEST_CASE("normal form output is deterministic") {
  const std::vector<std::string> args = {"braid", "nf", "--rank", "3",
                                         "--braid", "(s1 s2)^3 D'"};
  const auto first = cli(args);
  CHECK(first.code == 0);
  CHECK(first.out == "D\n");
  CHECK(cli(args).out == first.out);
}

TEST_CASE("conjugacy answers carry a witness only when conjugate") {
  const auto yes = cli({"braid", "conj", "--rank", "3", "--braid", "s1 s2",
                        "--other", "s2 s1"});
  CHECK(yes.code == 0);
  REQUIRE(yes.out.substr(0, 5) == "true\n");
  CHECK(yes.out.find("witness\t") != std::string::npos);
  const auto no = cli({"braid", "conj", "--rank", "3", "--braid", "s1",
                       "--other", "s1 s1"});
  CHECK(no.code == 0);
  CHECK(no.out == "false\n");
}

TEST_CASE("cohomology table for the full twist, rank 3") {
  const auto run = cli({"dl", "cohomology", "--rank", "3", "--braid", "pi"});
  CHECK(run.code == 0);
  CHECK(run.out ==
        "degree\tlambda\tmult\n"
        "6\t[1,1,1]\t1\n"
        "8\t[2,1]\t2\n"
        "12\t[3]\t1\n");
}

TEST_CASE("cohomology document output parses back and is byte-stable") {
  const std::vector<std::string> args = {"dl",      "cohomology", "--rank", "3",
                                         "--braid", "pi",         "--format",
                                         "doc"};
  const auto run = cli(args);
  CHECK(run.code == 0);
  CHECK(run.out.back() == '\n');
  CHECK(cli(args).out == run.out);
  const auto table = dltk::dlcoh::parse_table_document(run.out);
  CHECK(table.rank() == 3);
  CHECK(table.total_multiplicity() == 4);
}

TEST_CASE("cohomology refuses braids it cannot derive") {
  const auto run = cli({"dl", "cohomology", "--rank", "3", "--braid", "s1"});
  CHECK(run.code == 1);
  CHECK(run.out.empty());
  CHECK(run.err.find("import") != std::string::npos);
}

TEST_CASE("count subcommand prints the count and a JSON record") {
  const auto run = cli({"dl", "count", "--rank", "2", "--word", "s1", "-q",
                        "2", "-m", "2"});
  CHECK(run.code == 0);
  CHECK(run.out ==
        "2\n"
        "{\"n\":2,\"word\":\"s1\",\"q\":2,\"m\":2,\"count\":2}\n");
  const auto wide = cli({"dl", "count", "--rank", "3", "--word", "s1 s2",
                         "-q", "2", "-m", "2", "--jobs", "4"});
  const auto serial = cli({"dl", "count", "--rank", "3", "--word", "s1 s2",
                           "-q", "2", "-m", "2"});
  CHECK(wide.code == 0);
  CHECK(wide.out == serial.out);
}

TEST_CASE("translate shifts an imported table and prints TSV") {
  const auto run = cli({"dl", "translate", "--input",
                        std::string(DLTK_TEST_DATA_DIR) + "/gl2_coxeter.json"});
  CHECK(run.code == 0);
  CHECK(run.out ==
        "degree\tlambda\tmult\n"
        "3\t[1,1]\t1\n"
        "6\t[2]\t1\n");
  const auto missing = cli({"dl", "translate", "--input", "/no/such.json"});
  CHECK(missing.code == 1);
  CHECK(missing.err.substr(0, 7) == "error: ");
}

TEST_CASE("disjointness gate distinguishes clean from violating tables") {
  const auto clean = cli({"dl", "disjoint", "--input",
                          std::string(DLTK_TEST_DATA_DIR) + "/gl2_coxeter.json"});
  CHECK(clean.code == 0);
  CHECK(clean.out.find("disjointness\tok") != std::string::npos);
  CHECK(clean.out.find("parity\tmixed") != std::string::npos);
  const auto path = write_temp(
      "dltk-test-cli-violating.json",
      "{\"n\": 2, \"braid\": \"s1\", \"entries\": ["
      "{\"degree\": 1, \"lambda\": [2], \"mult\": 1},"
      "{\"degree\": 2, \"lambda\": [2], \"mult\": 1}]}");
  const auto bad = cli({"dl", "disjoint", "--input", path});
  std::filesystem::remove(path);
  CHECK(bad.code == 2);
  CHECK(bad.out.find("disjointness\tviolated") != std::string::npos);
}

TEST_CASE("cells subcommand agrees between routes and renders dot") {
  const auto fast = cli({"cells", "--rank", "3"});
  const auto oracle = cli({"cells", "--rank", "3", "--oracle"});
  CHECK(fast.code == 0);
  CHECK(fast.out == oracle.out);
  const auto dot = cli({"cells", "--rank", "3", "--dot"});
  CHECK(dot.code == 0);
  CHECK(dot.out ==
        "digraph cells {\n"
        "  rankdir=BT;\n"
        "  c0 [label=\"[3]\"];\n"
        "  c1 [label=\"[2,1]\"];\n"
        "  c2 [label=\"[1,1,1]\"];\n"
        "  c1 -> c0;\n"
        "  c2 -> c1;\n"
        "}\n");
}

TEST_CASE("unipotent table for rank 2") {
  const auto run = cli({"unipotent", "--rank", "2"});
  CHECK(run.code == 0);
  CHECK(run.out ==
        "lambda\tdegree\ta\tA\tchi1\n"
        "[2]\t1\t0\t0\t1\n"
        "[1,1]\tq\t1\t1\t1\n");
}

TEST_CASE("verify runs a named suite and rejects unknown ones") {
  const auto run = cli({"verify", "weyl"});
  CHECK(run.code == 0);
  CHECK(run.out.substr(0, 11) == "ok   weyl: ");
  CHECK(run.out.find("FAIL") == std::string::npos);
  CHECK(run.out.find("checks, 0 failed") != std::string::npos);
  const auto unknown = cli({"verify", "weyl", "nonsense"});
  CHECK(unknown.code == 1);
  CHECK(unknown.err.find("available:") != std::string::npos);
}
