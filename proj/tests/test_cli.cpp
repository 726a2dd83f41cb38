#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "fqtree/cli.hpp"
#include "fqtree/document.hpp"
#include "fqtree/folded_construction.hpp"

using namespace fqtree;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "fqtree");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("fqtree_test_" + name);
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("construct json") {
  const Result r = run({"construct", "--n", "3", "--s", "000,010,011", "--format", "json"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["n"] == 3);
  CHECK(j["trees"].size() == 3);
  CHECK(j["s"] == json::array({"000", "010", "011"}));
  CHECK(j["generator"] == std::string(kGenerator));
  CHECK(j["trace"] == json::array({"BaseN3"}));
}

TEST_CASE("construct dot") {
  const Result r = run({"construct", "--n", "2", "--s", "00,01,10", "--format", "dot"});
  CHECK(r.code == 0);
  CHECK(r.out.starts_with("graph "));
  CHECK(r.out.find("treeindex=0") != std::string::npos);
  CHECK(r.out.find("treeindex=1") != std::string::npos);
  CHECK(r.out.find("treeindex=2") == std::string::npos);
}

TEST_CASE("construct usage errors") {
  CHECK(run({"construct", "--n", "4", "--s", "0000,0000,0001"}).code == 64);
  CHECK(run({"construct", "--n", "4", "--s", "0000,0002,0001"}).code == 64);
  CHECK(run({"construct", "--n", "4", "--s", "0000,0001"}).code == 64);
  CHECK(run({"construct", "--n", "4", "--s", "000,001,010"}).code == 64);
  CHECK(run({"construct", "--n", "1", "--s", "0,1,1"}).code == 64);
  CHECK(run({"construct", "--n", "4", "--s", "0000,0001,0010", "--format", "xml"}).code == 64);
  CHECK(run({"construct", "--s", "0000,0001,0010"}).code == 64);
  CHECK(run({"frobnicate"}).code == 64);
  CHECK(run({}).code == 64);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify pipeline") {
  const Result built = run({"construct", "--n", "5", "--s", "00000,01011,10110"});
  REQUIRE(built.code == 0);
  const auto good = write_temp("good.json", built.out);
  const Result ok = run({"verify", good.string()});
  CHECK(ok.code == 0);
  CHECK(json::parse(ok.out)["ok"] == true);

  // Tamper: route tree 0 through an internal vertex of tree 1.
  json doc = json::parse(built.out);
  std::string internal;
  for (const auto& e : doc["trees"][1]["edges"]) {
    for (const auto& u : e) {
      const std::string s = u.get<std::string>();
      if (s != "00000" && s != "01011" && s != "10110") internal = s;
    }
  }
  REQUIRE_FALSE(internal.empty());
  const std::string terminal = [&] {
    for (const auto& e : doc["trees"][1]["edges"]) {
      if (e[0] == internal) return e[1].get<std::string>();
      if (e[1] == internal) return e[0].get<std::string>();
    }
    return std::string();
  }();
  doc["trees"][0]["edges"].push_back({terminal, internal});
  const auto bad = write_temp("bad.json", doc.dump());
  const Result tampered = run({"verify", bad.string()});
  CHECK(tampered.code == 1);
  bool shared = false;
  const json report = json::parse(tampered.out);
  for (const auto& v : report["violations"]) {
    shared = shared || v["kind"] == "SharedInternalVertex";
  }
  CHECK(shared);

  const auto truncated = write_temp("truncated.json", built.out.substr(0, built.out.size() / 2));
  CHECK(run({"verify", truncated.string()}).code == 64);
  CHECK(run({"verify", "/nonexistent/bundle.json"}).code == 64);

  json wrong_label = json::parse(built.out);
  wrong_label["trace"].push_back("Case9");
  CHECK(run({"verify", write_temp("label.json", wrong_label.dump()).string()}).code == 64);
  json wrong_len = json::parse(built.out);
  wrong_len["s"][0] = "000";
  CHECK(run({"verify", write_temp("len.json", wrong_len.dump()).string()}).code == 64);
}

TEST_CASE("document round trip") {
  for (const auto& [n, a, b, c] : std::vector<std::tuple<int, int, int, int>>{
           {2, 0, 1, 2}, {3, 0, 2, 3}, {4, 1, 6, 15}, {6, 5, 40, 63}, {7, 0, 3, 100}}) {
    const TreeBundle bundle =
        s_trees(TerminalTriple(VertexId(a), VertexId(b), VertexId(c), n));
    const BundleDocument doc = to_document(bundle);
    const std::string text = to_json(doc);
    const BundleDocument back = parse_document(text);
    CHECK(back == doc);
    CHECK(to_json(back) == text);
    const TreeBundle restored = from_document(back);
    CHECK(restored.trees == bundle.trees);
    CHECK(restored.trace.steps == bundle.trace.steps);
  }
  // Endpoint order inside an edge survives.
  BundleDocument doc = to_document(s_trees(TerminalTriple(VertexId{0}, VertexId{1}, VertexId{2}, 2)));
  std::swap(doc.trees[0][0].u, doc.trees[0][0].v);
  CHECK(parse_document(to_json(doc)) == doc);
}

TEST_CASE("sweep") {
  const Result r3 = run({"sweep", "--n", "3"});
  CHECK(r3.code == 0);
  const json s3 = json::parse(r3.out);
  CHECK(s3["triples"] == 56);
  CHECK(s3["failures"] == 0);

  const Result r6 = run({"sweep", "--n", "6", "--orbit-reduce", "--workers", "2"});
  CHECK(r6.code == 0);
  const json s6 = json::parse(r6.out);
  CHECK(s6["triples"] == 1953);
  CHECK(s6["failures"] == 0);

  const json s5 = json::parse(run({"sweep", "--n", "5"}).out);
  CHECK(s5["histogram"].contains("Case1"));
  bool case23 = false;
  for (const auto& [key, value] : s5["histogram"].items()) {
    case23 = case23 || key.starts_with("Case2.3");
  }
  CHECK(case23);
  CHECK(s5["fallbacks"] == 0);

  CHECK(run({"sweep", "--n", "9"}).code == 64);
  CHECK(run({"sweep", "--n", "4", "--workers", "0"}).code == 64);
  CHECK(sweep_size(7, false) == 341376);
  CHECK(sweep_size(6, true) == 1953);
}

TEST_CASE("oracle and topo") {
  const Result infeasible = run({"oracle", "--n", "2", "--s", "00,01,10", "--k", "3"});
  CHECK(infeasible.code == 0);
  CHECK(json::parse(infeasible.out)["feasible"] == false);
  const Result feasible = run({"oracle", "--n", "3", "--s", "000,010,011", "--k", "3"});
  CHECK(json::parse(feasible.out)["feasible"] == true);
  CHECK(json::parse(feasible.out)["trees"].size() == 3);
  CHECK(run({"oracle", "--n", "5", "--s", "00000,00001,00010", "--k", "2"}).code == 64);

  const json t3 = json::parse(run({"topo", "--n", "3"}).out);
  CHECK(t3["order"] == 8);
  CHECK(t3["size"] == 16);
  CHECK(t3["degree"] == 4);
  CHECK(t3["diameter"] == 2);
  const json t2 = json::parse(run({"topo", "--n", "2"}).out);
  CHECK(t2["order"] == 4);
  CHECK(t2["size"] == 6);
  CHECK(t2["degree"] == 3);
  CHECK(t2["diameter"] == 1);
  CHECK(run({"topo", "--n", "15"}).code == 64);
}
