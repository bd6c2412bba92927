#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

const std::string kData = QUIVERMAG_DATA_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "quivermag");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = quivermag::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args, int expected_code = 0) {
  args.insert(args.begin(), "--json");
  const Outcome o = run(args);
  REQUIRE_MESSAGE(o.code == expected_code, o.err);
  return nlohmann::json::parse(o.out);
}

std::string data(const std::string& name) { return kData + "/" + name; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("parse echoes the normalized quiver") {
  const auto doc = run_json({"parse", data("a2.quiver")});
  CHECK(doc.at("command") == "parse");
  CHECK(doc.at("input_digest").get<std::string>().rfind("sha256:", 0) == 0);
  CHECK(doc.at("result").at("vertices") == nlohmann::json::array({"1", "2"}));
  CHECK(doc.at("warnings").empty());

  const Outcome bad = run({"parse", data("bad_vertex.quiver")});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("unknown vertex 2") != std::string::npos);

  // Text output re-parses to the same normalized quiver.
  const Outcome text = run({"parse", data("bound_a3.quiver")});
  const std::filesystem::path tmp = std::filesystem::temp_directory_path() / "quivermag_roundtrip.quiver";
  std::ofstream(tmp) << text.out;
  CHECK(run({"parse", tmp.string()}).out == text.out);
  std::filesystem::remove(tmp);
}

TEST_CASE("cartan") {
  const auto a2 = run_json({"cartan", data("a2.quiver")});
  CHECK(a2.at("result").at("cartan") == nlohmann::json::parse(R"([["1","0"],["1","1"]])"));
  CHECK(a2.at("result").at("determinant") == "1");

  const auto cyc = run_json({"cartan", data("truncated_3cycle.quiver")});
  CHECK(cyc.at("result").at("determinant") == "0");
  CHECK(cyc.at("result").at("cartan")[2] == nlohmann::json::array({"1", "1", "1"}));

  CHECK(run({"cartan", data("loop.quiver")}).code == 3);
}

TEST_CASE("ext") {
  const auto bound = run_json({"ext", data("bound_a3.quiver")});
  CHECK(bound.at("result").at("global_dimension") == 2);
  CHECK(bound.at("result").at("ext")[2][0][2] == 1);

  const auto a2 = run_json({"ext", data("a2.quiver")});
  CHECK(a2.at("result").at("ext")[1] == nlohmann::json::parse("[[0,1],[0,0]]"));

  const auto cyc = run_json({"--max-degree", "3", "ext", data("truncated_3cycle.quiver")});
  CHECK(cyc.at("result").at("global_dimension").is_null());
  CHECK(cyc.at("result").at("degree_bound") == 3);
  CHECK(cyc.at("warnings").size() == 1);
}

TEST_CASE("magnitude") {
  CHECK(run_json({"magnitude", data("a2.quiver")}).at("result").at("magnitude").at("value") == "1");
  const auto k = run_json({"magnitude", data("kronecker.quiver")});
  CHECK(k.at("result").at("magnitude").at("value") == "0");
  CHECK(k.at("result").at("euler_characteristic") == "0");
  const auto cyc = run_json({"magnitude", data("truncated_3cycle.quiver")});
  CHECK(cyc.at("result").at("magnitude").at("status") == "weighted");
  CHECK(cyc.at("result").at("magnitude").at("value") == "1");

  const Outcome text = run({"magnitude", data("a2.quiver")});
  CHECK(text.out == "magnitude = 1 (invertible)\nchi(S, S) = 1\n");
}

TEST_CASE("verify exit codes") {
  CHECK(run({"verify", data("a2.quiver")}).code == 0);
  CHECK(run({"verify", data("bound_a3.quiver")}).code == 0);
  CHECK(run({"verify", data("bad_vertex.quiver")}).code == 2);
  CHECK(run({"verify", data("loop.quiver")}).code == 3);
  CHECK(run({"verify", data("truncated_3cycle.quiver")}).code == 4);
  const auto adversarial = run_json({"verify", data("a2.quiver"), "--matrix", data("a2_wrong_cartan.txt")}, 1);
  CHECK(adversarial.at("result").at("checks")[0].at("outcome") == "failed");
  CHECK(run({"verify", data("a2.quiver"), "--matrix", data("all_ones_3.txt")}).code == 2);
  // The degree bound can be too small to confirm finite global dimension.
  CHECK(run({"--max-degree", "1", "verify", data("bound_a3.quiver")}).code == 4);
}

TEST_CASE("paths") {
  const auto a2 = run_json({"paths", data("a2.quiver"), "--from", "1", "--to", "2"});
  REQUIRE(a2.at("result").at("pairs").size() == 1);
  CHECK(a2.at("result").at("pairs")[0].at("paths") == nlohmann::json::array({"a"}));

  const auto bound = run_json({"paths", data("bound_a3.quiver"), "--from", "1", "--to", "3"});
  CHECK(bound.at("result").at("pairs")[0].at("paths").empty());

  const auto counts = run_json({"paths", data("kronecker.quiver"), "--count-only"});
  CHECK(counts.at("result").at("pairs").size() == 4);
  CHECK(counts.at("result").at("pairs")[1].at("count") == 2);  // Z_{21}
  CHECK_FALSE(counts.at("result").at("pairs")[1].contains("paths"));

  CHECK(run({"paths", data("a2.quiver"), "--from", "9"}).code == 2);
}

TEST_CASE("matrix-magnitude") {
  CHECK(run_json({"matrix-magnitude", "--matrix", data("all_ones_3.txt")}).at("result").at("magnitude").at("value") == "1");
  CHECK(run_json({"matrix-magnitude", "--matrix", data("a2_wrong_cartan.txt")}).at("result").at("magnitude").at("value") ==
        "0");
  const std::filesystem::path tmp = std::filesystem::temp_directory_path() / "quivermag_identity.txt";
  std::ofstream(tmp) << "1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n";
  CHECK(run_json({"matrix-magnitude", "--matrix", tmp.string()}).at("result").at("magnitude").at("value") == "4");
  std::ofstream(tmp) << "1 0\n0\n";
  CHECK(run({"matrix-magnitude", "--matrix", tmp.string()}).code == 2);
  std::filesystem::remove(tmp);
}

TEST_CASE("output is byte-stable") {
  const std::vector<std::string> args{"--json", "verify", data("bound_a3.quiver")};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

}
