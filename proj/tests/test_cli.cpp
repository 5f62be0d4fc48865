#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ak4/cli.hpp"

using namespace ak4;
namespace {

using Q = Rational;

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("ak4_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name, const std::string& content) const {
    const auto p = path / name;
    std::ofstream out(p);
    out << content;
    return p.string();
  }
};

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

const char* nil3_lie = "dim 4\n1 3 2 1\n";
const char* j27_matrix =
    "0 -1 0 0\n"
    "1 0 0 0\n"
    "0 0 0 -1\n"
    "0 0 1 0\n";
const char* j_ab_10_matrix =
    "0 0 -1 0\n"
    "1 0 0 -1\n"
    "1 0 0 0\n"
    "0 1 -1 0\n";

}  // namespace

TEST_CASE(".lie round trip through the io layer") {
  for (const auto& entry : catalog<Q>()) {
    std::stringstream buffer;
    write_lie(buffer, entry.algebra, entry.description);
    const auto back = read_lie(buffer);
    CHECK(back == entry.algebra);
  }
}

TEST_CASE(".lie parser reports line numbers and rejects bad tables") {
  std::istringstream missing("1 3 2 1\n");
  CHECK_THROWS_AS(read_lie(missing), ParseError);
  std::istringstream bad_token("dim 4\n1 2 x 3\n");
  CHECK_THROWS_WITH_AS(read_lie(bad_token), doctest::Contains("line 2"), ParseError);
  std::istringstream bad_rational("dim 4\n1 2 3 1.5\n");
  CHECK_THROWS_AS(read_lie(bad_rational), ParseError);
  std::istringstream not_jacobi("dim 4\n1 2 1 1\n1 3 2 1\n");
  CHECK_THROWS_AS(read_lie(not_jacobi), ParseError);
  std::istringstream comments("# a comment\ndim 4\n\n1 3 2 1 # trailing\n");
  CHECK(read_lie(comments) == catalog_get<Q>("nil3xR").algebra);
}

TEST_CASE("J matrix parser") {
  std::istringstream good(j27_matrix);
  const auto j = read_acs(good, 4);
  CHECK((j.matrix() - standard_j_matrix(4)).isZero(Q(0)));
  std::istringstream short_row("0 -1 0\n1 0 0 0\n0 0 0 -1\n0 0 1 0\n");
  CHECK_THROWS_AS(read_acs(short_row, 4), ParseError);
  std::istringstream not_acs("1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n");
  CHECK_THROWS_AS(read_acs(not_acs, 4), ParseError);
}

TEST_CASE("cli validate") {
  TempDir dir;
  const auto lie = dir.file("nil3.lie", nil3_lie);
  auto r = run({"validate", lie});
  CHECK(r.code == 0);
  CHECK(r.out.find("unimodular: true") != std::string::npos);
  CHECK(r.out.find("betti: 1 3 4 3 1") != std::string::npos);

  const auto abelian = dir.file("r4.lie", "dim 4\n");
  r = run({"validate", abelian});
  CHECK(r.code == 0);
  CHECK(r.out.find("betti: 1 4 6 4 1") != std::string::npos);

  // malformed line reported with its number, parse exit code
  const auto bad = dir.file("bad.lie", "dim 4\n1 2 x 3\n");
  r = run({"validate", bad});
  CHECK(r.code == 12);
  CHECK(r.err.find("line 2") != std::string::npos);

  // Jacobi violation reported with the violating triple
  const auto nj = dir.file("nj.lie", "dim 4\n1 2 1 1\n1 3 2 1\n");
  r = run({"validate", nj});
  CHECK(r.code == 13);
  CHECK(r.out.find("(1, 2, 3)") != std::string::npos);

  r = run({"validate", (dir.path / "absent.lie").string()});
  CHECK(r.code == 12);
}

TEST_CASE("cli classify: exit codes, witnesses, JSON round trip") {
  TempDir dir;
  const auto lie = dir.file("nil3.lie", nil3_lie);
  const auto j27 = dir.file("j27.mat", j27_matrix);
  auto r = run({"classify", lie, j27});
  CHECK(r.code == 0);
  CHECK(r.out.find("tamed: true") != std::string::npos);
  CHECK(r.out.find("compatible form:") != std::string::npos);

  // JSON output re-parses to equal values, rationals as p/q strings
  r = run({"classify", lie, j27, "--json"});
  CHECK(r.code == 0);
  const Json parsed = Json::parse(r.out);
  CHECK(parsed["tamed"] == true);
  CHECK(parsed["almost_kahler"] == true);
  CHECK(parsed["integrable"] == false);
  CHECK(parsed["cohomology"]["b2"] == 4);
  CHECK(parsed["cohomology"]["b_plus"] == 2);
  CHECK(parsed["cohomology"]["h_plus"] == 3);
  CHECK(parsed["cohomology"]["h_minus"] == 1);
  const auto witness = exterior_from_json<KForm<Q>>(parsed["witness"]["form"], 4, 2);
  CHECK(is_compatible_with(catalog_get<Q>("nil3xR").algebra,
                           AlmostComplexStructure<Q>::from_matrix(standard_j_matrix(4)), witness));
  CHECK(r.out.find('.') == std::string::npos);  // no floating point anywhere

  // J_ab needs the reversed orientation; with the right flag it is not tamed
  const auto jab = dir.file("jab.mat", j_ab_10_matrix);
  r = run({"classify", lie, jab, "--zeta", "-1"});
  CHECK(r.code == 10);
  CHECK(r.out.find("tamed: false") != std::string::npos);
  CHECK(r.out.find("obstruction vector") != std::string::npos);

  // without the flag the orientation mismatch is a domain error with a hint
  r = run({"classify", lie, jab});
  CHECK(r.code == 13);
  CHECK(r.err.find("negate zeta") != std::string::npos);

  // non-unimodular input
  const auto aff = dir.file("aff.lie", "dim 4\n1 2 2 1\n");
  r = run({"classify", aff, j27});
  CHECK(r.code == 13);
}

TEST_CASE("cli cone") {
  TempDir dir;
  const auto lie = dir.file("nil3.lie", nil3_lie);
  const auto j27 = dir.file("j27.mat", j27_matrix);
  // the emitted representative basis is echoed; query the witness class itself
  auto r = run({"classify", lie, j27, "--json"});
  const Json parsed = Json::parse(r.out);
  const auto reps = parsed["cohomology"]["h_plus_basis"];
  REQUIRE(reps.size() == 3);
  // coordinates of the compatible witness in the emitted basis, via exact solve
  Mat<Q> basis(6, 3);
  for (int i = 0; i < 3; ++i)
    basis.col(i) = exterior_from_json<KForm<Q>>(reps[i], 4, 2).coords();
  const auto witness = exterior_from_json<KForm<Q>>(parsed["witness"]["form"], 4, 2);
  const auto coords = solve(basis, witness.coords());
  REQUIRE(coords.has_value());
  const std::string cls =
      (*coords)(0).str() + "," + (*coords)(1).str() + "," + (*coords)(2).str();
  r = run({"cone", lie, j27, "--class", cls});
  CHECK(r.code == 0);
  CHECK(r.out.find("in_compatible_cone: true") != std::string::npos);
  CHECK(r.out.find("in_tamed_cone: true") != std::string::npos);

  r = run({"cone", lie, j27, "--class", "0,0,0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("in_compatible_cone: false") != std::string::npos);

  // malformed class string
  r = run({"cone", lie, j27, "--class", "1,zzz"});
  CHECK(r.code == 12);

  // cone on a non-tamed J is a domain error
  const auto jab = dir.file("jab.mat", j_ab_10_matrix);
  r = run({"cone", lie, jab, "--class", "1,1", "--zeta", "-1"});
  CHECK(r.code == 13);
}

TEST_CASE("cli catalog: list, show, export round trip") {
  TempDir dir;
  auto r = run({"catalog", "--list"});
  CHECK(r.code == 0);
  CHECK(r.out.find("nil3xR") != std::string::npos);
  CHECK(r.out.find("r'30xR") != std::string::npos);

  r = run({"catalog", "--show", "nil4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("b2 = 2, b+ = 1") != std::string::npos);

  const auto out_path = (dir.path / "nil4.lie").string();
  r = run({"catalog", "--export", "nil4", "--out", out_path});
  CHECK(r.code == 0);
  std::ifstream exported(out_path);
  const auto back = read_lie(exported);
  CHECK(back == catalog_get<Q>("nil4").algebra);

  r = run({"catalog", "--show", "does_not_exist"});
  CHECK(r.code == 13);
}

TEST_CASE("cli selftest runs the acceptance suite") {
  auto r = run({"selftest", "--seed", "7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("[PASS] 1:") != std::string::npos);
  CHECK(r.out.find("[PASS] 11:") != std::string::npos);
  CHECK(r.out.find("[FAIL]") == std::string::npos);
}

TEST_CASE("json reports are byte-for-byte reproducible") {
  TempDir dir;
  const auto lie = dir.file("nil3.lie", nil3_lie);
  const auto j27 = dir.file("j27.mat", j27_matrix);
  const auto first = run({"classify", lie, j27, "--json"});
  const auto second = run({"classify", lie, j27, "--json"});
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
}

TEST_CASE("cli usage errors carry codes above 10") {
  auto r = run({"no_such_command"});
  CHECK(r.code > 10);
  r = run({"classify"});
  CHECK(r.code > 10);
}
