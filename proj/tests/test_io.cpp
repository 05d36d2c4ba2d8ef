#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#include "doctest.h"

#include "gpi/constructions.hpp"
#include "gpi/io.hpp"

#include "json.hpp"

using namespace gpi;
namespace fs = std::filesystem;

namespace {

const char *ut2_doc = R"({
  "field": "Q",
  "semigroup": {"type": "table", "size": 2, "table": [[0, 1], [1, 0]]},
  "basis": [{"name": "e11", "degree": 0}, {"name": "e22", "degree": 0}, {"name": "e12", "degree": 1}],
  "products": [[0, 0, [[0, "1"]]], [1, 1, [[1, "1"]]], [0, 2, [[2, "1"]]], [2, 1, [[2, "1"]]]]
})";

// xy = x on a one-element grading: (xy)y = x, x(yy) = 0
const char *broken_doc = R"({
  "field": "Q",
  "semigroup": {"type": "right_zero_band", "size": 1},
  "basis": [{"name": "x", "degree": 0}, {"name": "y", "degree": 0}],
  "products": [[0, 1, [[0, "1"]]]]
})";

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string &args) {
  std::string cmd = std::string(GPI_EXE) + " " + args + " 2>/dev/null";
  Run r;
  FILE *p = ::popen(cmd.c_str(), "r");
  REQUIRE(p);
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  int st = ::pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("gpi-unit-" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string &name, const std::string &text) const {
    std::ofstream(path / name) << text;
    return (path / name).string();
  }
};

} // namespace

TEST_SUITE("io") {

TEST_CASE("documents parse and round trip") {
  auto a = parse_algebra_document(ut2_doc);
  CHECK(a.dim() == 3);
  CHECK(validate(a).empty());
  CHECK(a.algebra() == fixture("ut2-z2").algebra());
  for (const auto &name : fixture_names()) {
    auto f = fixture(name);
    auto doc = algebra_document(f);
    auto back = parse_algebra_document(doc);
    CHECK(back.algebra() == f.algebra());
    CHECK(back.degrees() == f.degrees());
    CHECK(back.semigroup() == f.semigroup());
    CHECK(algebra_document(back) == doc);
  }
}

TEST_CASE("semigroup documents") {
  auto r = parse_semigroup_document(R"({"type": "rees", "n": 1, "m": 2, "sandwich": [[1], [1]]})");
  CHECK(r.size() == 3);
  CHECK(r.zero() == std::optional<std::size_t>(2));
  CHECK(parse_semigroup_document(R"({"type": "right_zero_band", "size": 3})") == right_zero_band(3));
  CHECK_THROWS_AS(parse_semigroup_document(R"({"type": "rees", "n": 1, "m": 1, "sandwich": [[0]]})"), Error);
  CHECK_THROWS_AS(parse_semigroup_document(R"({"type": "table", "size": 2, "table": [[1, 1], [0, 1]]})"), Error);
}

TEST_CASE("fixture references") {
  auto a = parse_algebra_document(R"({"field": "Q", "semigroup": {"ref": "ft-rzb2"},
    "basis": [{"name": "e", "degree": 0}, {"name": "f", "degree": 1}],
    "products": [[0, 0, [[0, "1"]]], [0, 1, [[1, "1"]]], [1, 0, [[0, "1"]]], [1, 1, [[1, "1"]]]]})");
  CHECK(a.algebra() == fixture("ft-rzb2").algebra());
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_algebra_document("{\"field\": \"Q\",\n  \"basis\": [}");
    FAIL("accepted malformed JSON");
  } catch (const ParseError &e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  try {
    parse_algebra_document(R"({"field": "Q", "semigroup": {"type": "right_zero_band", "size": 1},
      "basis": [{"name": "x", "degree": 0}], "products": [[0, 0, [[0, "1/x"]]]]})");
    FAIL("accepted a bad scalar");
  } catch (const ParseError &e) {
    CHECK(std::string(e.what()).find("/products/0/2/0/1") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_algebra_document(R"({"field": "Q"})"), ParseError);
}

TEST_CASE("canonical documents ignore layout") {
  std::string squeezed;
  for (const char *c = ut2_doc; *c; ++c)
    if (*c != ' ' && *c != '\n') squeezed += *c;
  CHECK(canonical_document(ut2_doc) == canonical_document(squeezed));
  CHECK(canonical_document(ut2_doc) == canonical_document(algebra_document(parse_algebra_document(ut2_doc))));
  CHECK(canonical_document(ut2_doc) != canonical_document(algebra_document(fixture("ft-rzb2"))));
}

TEST_CASE("sha256") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("report store") {
  TempDir dir;
  ReportStore store(dir.path / "cache");
  auto key = ReportStore::key(canonical_document(ut2_doc), "codim n=3");
  CHECK(key != ReportStore::key(canonical_document(ut2_doc), "codim n=4"));
  CHECK_FALSE(store.get(key));
  store.put(key, "{\"x\": 1}");
  REQUIRE(store.get(key));
  CHECK(*store.get(key) == "{\"x\": 1}");
}

TEST_CASE("constructions from parameters") {
  auto m2 = construct_from_params("m2-family", R"({"t0": 3, "classes": [2, 1], "t1": 0})");
  CHECK(m2.dim() == 6);
  auto munn = construct_from_params("munn", R"({"n": 2, "m": 2, "sandwich": [["1", "1"], ["1", "1"]]})");
  CHECK(munn.dim() == 4);
  CHECK_THROWS_AS(construct_from_params("munn", R"({"n": 2, "m": 2, "sandwich": [["1", "1"], ["0", "0"]]})"), Error);
  CHECK_THROWS_AS(construct_from_params("nothing", "{}"), ParseError);
  CHECK(construct_from_params("fixture", R"({"name": "ft-rzb2"})").algebra() == fixture("ft-rzb2").algebra());
}

} // TEST_SUITE

TEST_SUITE("cli") {

TEST_CASE("check exit codes") {
  TempDir dir;
  auto good = run("check " + dir.write("ut2.json", ut2_doc));
  CHECK(good.code == 0);
  CHECK(good.out.find("\"valid\": true") != std::string::npos);
  auto bad = run("check " + dir.write("broken.json", broken_doc));
  CHECK(bad.code == 1);
  CHECK(bad.out.find("associativity") != std::string::npos);
  CHECK(run("check " + dir.write("junk.json", "{\"field\": ")).code == 2);
  CHECK(run("check " + (dir.path / "missing.json").string()).code == 2);
  CHECK(run("frobnicate").code == 2);
}

TEST_CASE("construct and analyze") {
  TempDir dir;
  auto ft = run("construct fixture name=ft-rzb2");
  REQUIRE(ft.code == 0);
  CHECK(parse_algebra_document(ft.out).algebra() == fixture("ft-rzb2").algebra());
  auto an = run("analyze " + dir.write("ft.json", ft.out));
  CHECK(an.code == 0);
  auto j = nlohmann::json::parse(an.out);
  CHECK(j["radical_dim"] == 1);
  CHECK(j["faithful"] == false);

  auto fam = run("construct m2-family t0=3 classes=2,1 t1=0");
  REQUIRE(fam.code == 0);
  CHECK(parse_algebra_document(fam.out).dim() == 6);
  CHECK(run("check " + dir.write("fam.json", fam.out)).code == 0);

  dir.write("zero-row.json", R"({"n": 2, "m": 2, "sandwich": [["1", "1"], ["0", "0"]]})");
  CHECK(run("construct munn " + (dir.path / "zero-row.json").string()).code == 1);
}

TEST_CASE("codim and exponent output") {
  TempDir dir;
  auto path = dir.write("ut2.json", ut2_doc);
  auto c = run("codim " + path + " --n 3");
  REQUIRE(c.code == 0);
  std::istringstream lines(c.out);
  std::string header, row1, row2;
  std::getline(lines, header);
  std::getline(lines, row1);
  std::getline(lines, row2);
  CHECK(header == "n,c_n,c_n_graded,budget_used");
  CHECK(row2.rfind("2,", 0) == 0);
  CHECK(row2.find(",5,") != std::string::npos);

  auto fam = run("construct m2-family t0=3 classes=2,1 t1=0 --out " + (dir.path / "fam.json").string());
  REQUIRE(fam.code == 0);
  auto e = run("exponent " + (dir.path / "fam.json").string());
  REQUIRE(e.code == 0);
  CHECK(e.out.find("3+2*sqrt(2)") != std::string::npos);
  CHECK(run("codim " + path + " --n 6 --budget 10").code == 1);
}

} // TEST_SUITE
