#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "lielat/cli.hpp"
#include "lielat/io.hpp"

using namespace lielat;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("lielat");
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& content) {
    static int counter = 0;
    path = (std::filesystem::temp_directory_path() /
            ("lielat_test_" + std::to_string(counter++) + ".json"))
               .string();
    std::ofstream f(path);
    f << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("lattice JSON round-trips to an identical lattice") {
  LieLattice l = builtin_lattice("sl2", 5);
  LieLattice l2 = lattice_from_json(lattice_to_json(l));
  CHECK(l2.p == l.p);
  CHECK(l2.dim == l.dim);
  CHECK(l2.brackets == l.brackets);
  CHECK(lattice_to_json(l2) == lattice_to_json(l));  // canonical serialization
}

TEST_CASE("matrix and vector argument parsing") {
  QMatrix d = parse_matrix_arg("diag(3,1,1/2)");
  CHECK(d == QMatrix::diagonal({Rat(3), Rat(1), Rat(1, 2)}));
  QMatrix j = parse_matrix_arg("[[\"1\",\"0\"],[\"2\",\"1/3\"]]");
  CHECK(j.at(1, 1) == Rat(1, 3));
  CHECK(parse_vector_arg("[1,\"2/3\"]") == std::vector<Rat>{Rat(1), Rat(2, 3)});
  CHECK_THROWS_AS(parse_matrix_arg("diag()"), InvalidInput);
  CHECK_THROWS_AS(parse_matrix_arg("/no/such/file.json"), InvalidInput);
}

TEST_CASE("documented command invocations") {
  auto r = run_cli({"semisimple", "builtin:sl2", "--p", "5"});
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["semisimple"] == true);
  CHECK(j["det_killing"] == "-128");

  auto r2 = run_cli({"index", "builtin:abelian?dim=2", "--p", "3", "--sub", "diag(3,9)"});
  CHECK(r2.exit_code == 0);
  CHECK(Json::parse(r2.out)["index_exponent"] == 3);

  auto r3 = run_cli({"stable", "builtin:heisenberg", "--p", "5"});
  CHECK(r3.exit_code == 0);
  Json j3 = Json::parse(r3.out);
  CHECK(j3["status"] == "Unstable");
  CHECK(j3.contains("witness"));
}

TEST_CASE("exit codes") {
  CHECK(run_cli({"no-such-command"}).exit_code == 2);
  CHECK(run_cli({"semisimple", "builtin:nope", "--p", "5"}).exit_code == 2);
  CHECK(run_cli({"semisimple", "builtin:sl2", "--p", "4"}).exit_code == 2);  // non-prime
  CHECK(run_cli({"semisimple", "builtin:sl2"}).exit_code == 2);              // missing --p

  // lattice file with a denominator divisible by p
  TempFile bad(R"({"name":"bad","p":3,"dim":2,
    "brackets":[{"i":0,"j":1,"coeffs":["1/3","0"]}]})");
  CHECK(run_cli({"validate", bad.path}).exit_code == 2);

  // inconclusive outcomes exit 3 (budget exhaustion)
  TempFile unknown(R"({"name":"x","p":3,"dim":2,"brackets":[]})");
  auto r = run_cli({"enum", unknown.path, "--k", "50"});
  CHECK(r.exit_code == 3);
}

TEST_CASE("file-based lattices work end to end") {
  TempFile heis(R"({"name":"h","p":5,"dim":3,"basis":["x","y","z"],
    "brackets":[{"i":0,"j":1,"coeffs":["0","0","1"]}]})");
  auto r = run_cli({"series", heis.path});
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["nilpotency_class"] == 2);

  // --p overrides the file's prime
  auto r2 = run_cli({"powerful", heis.path, "--p", "7"});
  CHECK(Json::parse(r2.out)["powerful"] == false);

  // builtin:abelian?dim=2 has zero brackets
  auto r3 = run_cli({"validate", "builtin:abelian?dim=2", "--p", "3"});
  CHECK(r3.exit_code == 0);
}

TEST_CASE("identical invocations produce byte-identical stdout") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"report", "builtin:sl2", "--p", "3"},
        {"oracle-check", "builtin:abelian?dim=1", "--p", "3", "--k", "2", "--prec", "1"},
        {"killing", "builtin:so3", "--p", "7"}}) {
    auto a = run_cli(args);
    auto b = run_cli(args);
    CHECK(a.out == b.out);
    CHECK(a.exit_code == b.exit_code);
  }
}

TEST_CASE("stdout is a single JSON document; diagnostics go to stderr") {
  auto ok = run_cli({"killing", "builtin:sl2", "--p", "5"});
  CHECK_NOTHROW([[maybe_unused]] Json parsed = Json::parse(ok.out));
  auto bad = run_cli({"killing", "builtin:nope", "--p", "5"});
  CHECK(bad.out.empty());
  CHECK_FALSE(bad.err.empty());
}

TEST_CASE("remaining subcommands smoke-run") {
  CHECK(run_cli({"derivations", "builtin:heisenberg", "--p", "3"}).exit_code == 0);
  CHECK(run_cli({"simplicity", "builtin:sl2_plus_sl2", "--p", "5"}).exit_code == 0);
  CHECK(run_cli({"gram", "builtin:sl2", "--p", "5", "--sub", "diag(1,1,5)"}).exit_code == 0);
  CHECK(run_cli({"serre", "builtin:heisenberg", "--p", "5", "--map", "diag(5,1,5)"}).exit_code ==
        0);
  CHECK(run_cli({"witness-search", "builtin:abelian?dim=2", "--p", "3"}).exit_code == 0);
  CHECK(run_cli({"enum", "builtin:abelian?dim=2", "--p", "3", "--k", "1"}).exit_code == 0);
  CHECK(run_cli({"classify", "builtin:abelian?dim=2", "--p", "3", "--k", "1", "--prec", "1"})
            .exit_code == 0);
  CHECK(run_cli({"bch", "builtin:heisenberg_powerful", "--p", "5", "--x", "[1,0,0]", "--y",
                 "[0,1,0]", "--prec", "2"})
            .exit_code == 0);
  CHECK(run_cli({"group-index", "builtin:heisenberg_powerful", "--p", "5", "--sub",
                 "diag(5,5,5)", "--prec", "2"})
            .exit_code == 0);
  auto iso = run_cli({"iso-check", "builtin:abelian?dim=2", "--p", "5", "--m", "diag(1,1)",
                      "--n", "diag(5,5)", "--phi", "diag(5,5)"});
  CHECK(iso.exit_code == 0);
  CHECK(Json::parse(iso.out)["equal"] == false);
}
