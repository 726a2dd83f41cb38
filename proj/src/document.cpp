#include "fqtree/document.hpp"

#include <json.hpp>
#include <sstream>

namespace fqtree {
namespace {

using nlohmann::json;

constexpr std::array<const char*, 10> kPalette{
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
};

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorKind::InvalidDocument, what);
}

VertexId vertex_field(const json& j, int n) {
  if (!j.is_string()) invalid("vertex is not a string");
  try {
    return parse_vertex(j.get<std::string>(), n);
  } catch (const Error& e) {
    invalid(e.what());
  }
}

}  // namespace

BundleDocument to_document(const TreeBundle& bundle) {
  BundleDocument doc;
  doc.n = bundle.n;
  std::copy(bundle.s.begin(), bundle.s.end(), doc.s.begin());
  for (const Tree& t : bundle.trees) doc.trees.push_back(t.edges);
  doc.trace = bundle.trace.labels();
  return doc;
}

TreeBundle from_document(const BundleDocument& doc) {
  check_order(doc.n);
  TerminalTriple s(doc.s[0], doc.s[1], doc.s[2], doc.n);
  std::vector<Tree> trees;
  for (const auto& edges : doc.trees) {
    for (const Edge& e : edges) {
      check_vertex(e.u, doc.n);
      check_vertex(e.v, doc.n);
    }
    trees.push_back(make_tree({s.begin(), s.end()}, edges));
  }
  CaseTrace trace{{}, Automorphism::identity(doc.n)};
  for (const std::string& label : doc.trace) {
    trace.steps.push_back(parse_trace_step(label));
  }
  return {doc.n, s, std::move(trees), std::move(trace)};
}

std::string to_json(const BundleDocument& doc) {
  json j;
  j["n"] = doc.n;
  j["s"] = json::array();
  for (VertexId v : doc.s) j["s"].push_back(render(v, doc.n));
  j["trees"] = json::array();
  for (const auto& edges : doc.trees) {
    json list = json::array();
    for (const Edge& e : edges) {
      list.push_back({render(e.u, doc.n), render(e.v, doc.n)});
    }
    j["trees"].push_back({{"edges", std::move(list)}});
  }
  j["trace"] = doc.trace;
  j["generator"] = doc.generator;
  return j.dump(2) + "\n";
}

BundleDocument parse_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    invalid(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) invalid("document is not an object");
  for (const char* key : {"n", "s", "trees", "trace", "generator"}) {
    if (!j.contains(key)) invalid(std::string("missing field '") + key + "'");
  }
  BundleDocument doc;
  if (!j["n"].is_number_integer()) invalid("'n' is not an integer");
  doc.n = j["n"].get<int>();
  try {
    check_order(doc.n);
  } catch (const Error& e) {
    invalid(e.what());
  }
  const json& s = j["s"];
  if (!s.is_array() || s.size() != 3) invalid("'s' must list three vertices");
  for (std::size_t i = 0; i < 3; ++i) doc.s[i] = vertex_field(s[i], doc.n);

  if (!j["trees"].is_array()) invalid("'trees' is not an array");
  for (const json& t : j["trees"]) {
    if (!t.is_object() || !t.contains("edges") || !t["edges"].is_array()) {
      invalid("tree without an 'edges' array");
    }
    std::vector<Edge> edges;
    for (const json& e : t["edges"]) {
      if (!e.is_array() || e.size() != 2) invalid("edge is not a pair");
      edges.push_back({vertex_field(e[0], doc.n), vertex_field(e[1], doc.n)});
    }
    doc.trees.push_back(std::move(edges));
  }
  if (!j["trace"].is_array()) invalid("'trace' is not an array");
  for (const json& label : j["trace"]) {
    if (!label.is_string()) invalid("trace label is not a string");
    doc.trace.push_back(label.get<std::string>());
  }
  if (!j["generator"].is_string()) invalid("'generator' is not a string");
  doc.generator = j["generator"].get<std::string>();
  return doc;
}

std::string to_dot(const TreeBundle& bundle) {
  const int n = bundle.n;
  std::ostringstream out;
  out << "graph fq" << n << " {\n";
  out << "  node [shape=circle, fontname=\"monospace\"];\n";
  for (VertexId v : bundle.s) {
    out << "  \"" << render(v, n) << "\" [shape=doublecircle];\n";
  }
  for (std::size_t i = 0; i < bundle.trees.size(); ++i) {
    const char* color = kPalette[i % kPalette.size()];
    for (const Edge& e : bundle.trees[i].edges) {
      out << "  \"" << render(e.u, n) << "\" -- \"" << render(e.v, n)
          << "\" [treeindex=" << i << ", color=\"" << color << "\", label=\"T"
          << i + 1 << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string to_json(const CertReport& report, int n) {
  json list = json::array();
  for (const Violation& v : report.violations) {
    json item;
    item["kind"] = std::string(to_string(v.kind));
    item["trees"] = v.trees;
    item["vertices"] = json::array();
    for (VertexId u : v.witness_vertices) item["vertices"].push_back(render(u, n));
    item["edges"] = json::array();
    for (const Edge& e : v.witness_edges) {
      item["edges"].push_back({render(e.u, n), render(e.v, n)});
    }
    list.push_back(std::move(item));
  }
  json j;
  j["ok"] = report.ok();
  j["violations"] = std::move(list);
  return j.dump(2) + "\n";
}

}  // namespace fqtree
