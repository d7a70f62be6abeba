#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run cli(const std::string& args) {
  std::string cmd = std::string(P3D_CLI_PATH) + " " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const std::string& name) { return std::string(P3D_FIXTURE_DIR) + "/" + name; }

fs::path temp_dir(const std::string& tag) {
  fs::path d = fs::temp_directory_path() / ("p3d-cli-" + tag + "-" + std::to_string(::getpid()));
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("analyze with json output") {
  Run r = cli("analyze " + fixture("jouanolou-generic.form") + " --json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["c2"] == 6);
  CHECK(j["c3"] == 20);
  CHECK(j["singular_scheme"]["dimension"] == 0);
  CHECK(j["stability"] == "stable");
  CHECK(j["table_row"] == "(6,20)");
}

TEST_CASE("analyze text output") {
  Run r = cli("analyze " + fixture("rational-quartic.form"));
  CHECK(r.code == 0);
  CHECK(r.out.find("chern classes (0, 2, 2)") != std::string::npos);
}

TEST_CASE("parse errors exit with 2") {
  fs::path d = temp_dir("garbage");
  std::ofstream(d / "garbage.form") << "this is not a form\n";
  CHECK(cli("analyze " + (d / "garbage.form").string()).code == 2);
  CHECK(cli("analyze " + (d / "missing.form").string()).code == 2);
  CHECK(cli("no-such-command").code == 2);
  CHECK(cli("").code == 2);
  CHECK(cli("spectra 5 14 --h2-at-most nonsense").code == 2);
  fs::remove_all(d);
}

TEST_CASE("math errors exit with 3") {
  fs::path d = temp_dir("math");
  // does not descend: A0 x + A1 y != 0
  std::ofstream(d / "bad.form") << "A0: y^2\nA1: x\nA2: 0\nA3: 0\n";
  CHECK(cli("analyze " + (d / "bad.form").string()).code == 3);
  CHECK(cli("spectra 2 3").code == 3);
  fs::remove_all(d);
}

TEST_CASE("spectra") {
  Run r = cli("spectra 5 14 --stable --h1-zero -1");
  CHECK(r.code == 0);
  CHECK(r.out == "{-2,-2,-1,-1,-1}\n");
  Run j = cli("spectra 2 2 --stable --json");
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["spectra"] == nlohmann::json::array({"{-1,0}"}));
  Run t = cli("spectra --table");
  CHECK(t.code == 0);
  CHECK(t.out.find("[table prints {-3,-2,-1,-1,-1}]") != std::string::npos);
  Run eq = cli("spectra 4 8 --stable --h2-equal 0:0");
  CHECK(eq.code == 0);
}

TEST_CASE("classify-linear") {
  fs::path d = temp_dir("linear");
  std::ofstream(d / "m.matrix") << "1 0 0 0\n0 1 0 0\n0 0 -1 0\n0 0 0 -1\n";
  Run r = cli("classify-linear " + (d / "m.matrix").string() + " --json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["case"] == 3);
  CHECK(j["conormal_chern"] == nlohmann::json::array({-4, 4, 0}));
  fs::remove_all(d);
}

TEST_CASE("construct") {
  Run l = cli("construct --list");
  CHECK(l.code == 0);
  CHECK(l.out.find("induced-two-sections") != std::string::npos);
  Run r = cli("construct rational-22 --seed 1 --json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["table_row"] == "(2,4)");
  CHECK(cli("construct unknown-recipe").code == 2);
}

TEST_CASE("verify-corpus on a single entry") {
  Run r = cli("verify-corpus --fixtures " + std::string(P3D_FIXTURE_DIR) + " --only rational-quartic");
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS rational-quartic") != std::string::npos);
  CHECK(r.out.find("corpus passed") != std::string::npos);
  CHECK(cli("verify-corpus --fixtures " + std::string(P3D_FIXTURE_DIR) + " --only nothing-here").code == 2);
  CHECK(cli("verify-corpus --fixtures /nonexistent/dir").code == 2);
}

TEST_CASE("verify-corpus reports an edited expectation") {
  fs::path d = temp_dir("corpus");
  for (const char* f : {"rational-quartic.form", "rational-quartic.expect.json"})
    fs::copy_file(fixture(f), d / f);
  Run base = cli("verify-corpus --fixtures " + d.string() + " --only rational-quartic --json");
  CHECK(base.code == 0);
  // a full run also needs every table row
  CHECK(cli("verify-corpus --fixtures " + d.string()).out.find("MISSING (5,14)") != std::string::npos);
  std::ifstream ein(d / "rational-quartic.expect.json");
  auto spec = nlohmann::ordered_json::parse(ein);
  ein.close();
  spec["expected"]["c3"] = 4;
  std::ofstream(d / "rational-quartic.expect.json") << spec.dump(2);
  Run r = cli("verify-corpus --fixtures " + d.string() + " --only rational-quartic --json");
  CHECK(r.code == 1);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["pass"] == false);
  auto diffs = j["entries"][0]["diffs"];
  REQUIRE(diffs.size() >= 1);
  bool c3_diff = false;
  for (const auto& x : diffs)
    if (x["field"] == "c3" && x["expected"] == 4 && x["actual"] == 2) c3_diff = true;
  CHECK(c3_diff);
  fs::remove_all(d);
}

TEST_CASE("verify-corpus reports an edited form coefficient") {
  fs::path d = temp_dir("form-edit");
  fs::copy_file(fixture("rational-quartic.expect.json"), d / "rational-quartic.expect.json");
  // add yzw to A0 and -xzw to A1; the form still descends
  std::ifstream in(fixture("rational-quartic.form"));
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const std::string a0 = "(2xz^2-z^3-2y^2w+yw^2)dx", a1 = "(-2y^2z+2xz^2+2yz^2+2xyw-2y^2w-2xzw)dy";
  REQUIRE(text.find(a0) != std::string::npos);
  REQUIRE(text.find(a1) != std::string::npos);
  text.replace(text.find(a0), a0.size(), "(2xz^2-z^3-2y^2w+yw^2+yzw)dx");
  text.replace(text.find(a1), a1.size(), "(-2y^2z+2xz^2+2yz^2+2xyw-2y^2w-2xzw-xzw)dy");
  std::ofstream(d / "rational-quartic.form") << text;
  Run r = cli("verify-corpus --fixtures " + d.string() + " --only rational-quartic");
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL rational-quartic") != std::string::npos);
  CHECK(r.out.find("c2: expected 2, got 6") != std::string::npos);
  fs::remove_all(d);
}
