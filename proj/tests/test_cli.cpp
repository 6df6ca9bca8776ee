#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "leibten/io.hpp"
#include "suite.hpp"

using namespace leibten;

namespace {

struct Run {
  int exit = -1;
  std::string out;
  Json json() const { return Json::parse(out); }
};

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "leibten_test_cli";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string write_file(const std::string& name, const std::string& text) {
  const auto p = scratch(name);
  std::ofstream(p) << text;
  return p.string();
}

Run run(const std::string& args) {
  Run r;
  FILE* pipe = popen((std::string(LEIBTEN_CLI) + " " + args + " 2>/dev/null").c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Run run_on(const std::string& args, const Json& doc, const std::string& name) {
  return run(args + " " + write_file(name, doc.dump()));
}

std::string error_location(const std::string& text) {
  try {
    parse_document_text(text);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SchemaError);
    return e.location();
  }
  return "<accepted>";
}

const char* kHeisenbergOne = R"({
  "version": "leibten/1",
  "lie_algebra": {"dim": 3, "brackets": [[1, 2, {"3": 1}]]},
  "representation": "adjoint",
  "embedding_tensor": {"matrix": [[1, 1, 0], [1, 1, 0], [0, 0, 0]]}
})";

}  // namespace

TEST_CASE("documents round trip through JSON") {
  for (const std::string& name : example_names()) {
    CAPTURE(name);
    const Json j = to_json(example_document(name));
    const InputDocument back = parse_document(j);
    CHECK(to_json(back) == j);
    CHECK(parse_document_text(j.dump()).has_triple() == back.has_triple());
  }
}

TEST_CASE("schema errors carry locations") {
  CHECK(error_location(R"({"version":"leibten/1","foo":1})") == "/foo");
  CHECK(error_location(R"({"version":"other"})") == "/version");
  CHECK(error_location(R"({"version":"leibten/1","lie_algebra":{"dim":2,"brackets":[[1,3,{"1":1}]]}})") ==
        "/lie_algebra/brackets/0/1");
  CHECK(error_location(R"({"version":"leibten/1","lie_algebra":{"dim":2,"brackets":[[1,2,{"1":"x"}]]}})")
            .starts_with("/lie_algebra/brackets/0"));
  CHECK(error_location(
            R"({"version":"leibten/1","lie_algebra":{"dim":2,"brackets":[[1,2,{"1":1}],[2,1,{"1":1}]]}})")
            .starts_with("/lie_algebra/brackets/1"));
  CHECK(error_location(R"({"version":"leibten/1","embedding_tensor":{"matrix":[[1]]}})") == "/embedding_tensor");
  CHECK(error_location(R"({"version":"leibten/1","lie_algebra":{"dim":2,"brackets":[]},)"
                       R"("representation":"adjoint","embedding_tensor":{"matrix":[[1,2],[3]]}})") ==
        "/embedding_tensor/matrix/1");
  CHECK(error_location("{").starts_with("byte"));
  CHECK(error_location(kHeisenbergOne) == "<accepted>");
}

TEST_CASE("exit codes") {
  CHECK(run("example heisenberg-i | " + std::string(LEIBTEN_CLI) + " validate").exit == 0);
  for (const std::string& name : example_names()) {
    CAPTURE(name);
    CHECK(run("example " + name + " | " + std::string(LEIBTEN_CLI) + " validate").exit == 0);
  }

  Json bad = Json::parse(kHeisenbergOne);
  bad["embedding_tensor"]["matrix"] = Json::parse(R"([[1,0,0],[0,2,0],[0,0,0]])");
  const Run v = run_on("validate", bad, "bad.json");
  CHECK(v.exit == 1);
  const Json rep = v.json();
  CHECK(rep["status"] == "violation");
  bool found = false;
  for (const auto& check : rep["checks"])
    if (!check["ok"].get<bool>()) {
      CHECK(check["witnesses"][0]["tuple"] == Json::parse("[1,2]"));
      found = true;
    }
  CHECK(found);

  const Run schema = run("validate " + write_file("schema.json", R"({"version":"leibten/1","x":0})"));
  CHECK(schema.exit == 2);
  CHECK(schema.json()["error"]["location"] == "/x");
  CHECK(run("validate " + write_file("garbage.json", "not json")).exit == 2);
  CHECK(run("nonsense").exit == 2);
  CHECK(run("cohomology --complex et " + write_file("h1.json", kHeisenbergOne)).exit == 2);
  CHECK(run("cohomology --complex nope --degree 1 " + write_file("h1.json", kHeisenbergOne)).exit == 2);
}

TEST_CASE("a hand-written file and the built-in example agree") {
  const std::string file = write_file("h1.json", kHeisenbergOne);
  for (const std::string cmd : {"validate", "induce", "cohomology --complex et --degree 2", "les --max-degree 2"}) {
    CAPTURE(cmd);
    const Run a = run(cmd + " " + file);
    const Run b = run("example heisenberg-i | " + std::string(LEIBTEN_CLI) + " " + cmd);
    CHECK(a.exit == 0);
    CHECK(a.out == b.out);
    // Byte-identical on reruns.
    CHECK(run(cmd + " " + file).out == a.out);
  }
}

TEST_CASE("so(8) induced bracket from the command line") {
  const Run r = run("example so8 | " + std::string(LEIBTEN_CLI) + " induce");
  REQUIRE(r.exit == 0);
  const Json alg = r.json()["leibniz_algebra"];
  REQUIRE(alg["dim"] == 56);
  const MultilinearMap m = map_from_json(alg["brackets"], "/leibniz_algebra/brackets", {56, 56}, 56);
  std::size_t mismatches = 0;
  for (Index u = 0; u < 56; ++u)
    for (Index v = 0; v < 56; ++v) mismatches += m.value({u, v}) != testing::so8_closed_form(u, v);
  CHECK(mismatches == 0);
}

TEST_CASE("deform-equiv finds a witness for cohomologous data") {
  InputDocument doc = example_document("heisenberg-i");
  const LieLeibnizTriple t = doc.triple();
  const CochainComplex reg = reg_complex(t);
  const Vector w = testing::random_vector(reg.dim(1), 4);
  doc.deformations = {zero_deformation(t), unflatten_deformation(t, reg.apply(1, w))};
  const Run r = run_on("deform-equiv", to_json(doc), "equiv.json");
  CHECK(r.exit == 0);
  const Json rep = r.json();
  CHECK(rep["equivalent"] == true);
  CHECK(rep["same_class"] == true);
  CHECK(rep["witness"].is_object());

  const Run c = run_on("deform-check", to_json(doc), "check.json");
  CHECK(c.exit == 0);
  CHECK(c.json()["deformations"].size() == 2);
}

TEST_CASE("extension round trip from the command line") {
  InputDocument doc = example_document("heisenberg-i");
  const LieLeibnizTriple t = doc.triple();
  Matrix ft(1, 1);
  ft(0, 0) = 1;
  doc.extension = ExtensionPayload{ft, zero_extension_cocycle(t, ft)};
  const Run r = run_on("extend", to_json(doc), "ext.json");
  CHECK(r.exit == 0);
  CHECK(r.json()["round_trip"] == true);
  Json ext = r.json()["extension"];
  CHECK(run_on("validate", ext, "ext_out.json").exit == 0);
}
