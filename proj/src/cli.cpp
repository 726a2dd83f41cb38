#include "fqtree/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "fqtree/certify.hpp"
#include "fqtree/document.hpp"
#include "fqtree/folded_construction.hpp"
#include "fqtree/oracle.hpp"

namespace fqtree::cli {
namespace {

constexpr int kTopoOrderCap = kBfsOrderCap;

std::vector<VertexId> parse_terminals(const std::string& text, int n) {
  std::vector<VertexId> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_vertex(item, n));
  if (!text.empty() && text.back() == ',') {
    throw Error(ErrorKind::InvalidVertex, "trailing comma in terminal list");
  }
  if (out.size() != 3) {
    throw Error(ErrorKind::InvalidTerminals, "expected three terminals, got " +
                                                 std::to_string(out.size()));
  }
  return out;
}

int usage(std::ostream& err, const std::exception& e) {
  err << "usage error: " << e.what() << "\n";
  return kExitUsage;
}

}  // namespace

int cmd_construct(int n, const std::string& s, const std::string& format,
                  std::ostream& out, std::ostream& err) {
  if (format != "json" && format != "dot") {
    err << "usage error: unknown format '" << format << "'\n";
    return kExitUsage;
  }
  std::optional<TerminalTriple> triple;
  try {
    check_order(n);
    const auto v = parse_terminals(s, n);
    triple.emplace(v[0], v[1], v[2], n);
  } catch (const Error& e) {
    return usage(err, e);
  }
  try {
    const TreeBundle bundle = s_trees(*triple);
    if (format == "dot") {
      out << to_dot(bundle);
    } else {
      out << to_json(to_document(bundle));
    }
    return kExitOk;
  } catch (const ConstructionDefect& e) {
    err << "construction defect: " << e.what() << "\n";
    err << "trace:";
    for (const auto& label : e.trace().labels()) err << " " << label;
    err << "\n";
    return kExitDefect;
  }
}

int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "usage error: cannot read '" << path << "'\n";
    return kExitUsage;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::optional<TreeBundle> bundle;
  try {
    bundle.emplace(from_document(parse_document(buffer.str())));
  } catch (const Error& e) {
    return usage(err, e);
  }
  const CertReport report = verify_bundle(*bundle);
  out << to_json(report, bundle->n);
  return report.ok() ? kExitOk : kExitCertification;
}

int cmd_sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err) {
  SweepSummary summary;
  try {
    summary = run_sweep(opts);
  } catch (const Error& e) {
    return usage(err, e);
  }
  out << to_json(summary);
  return summary.failures == 0 ? kExitOk : kExitCertification;
}

int cmd_oracle(int n, const std::string& s, int k, std::ostream& out,
               std::ostream& err) {
  PackingInstance inst;
  try {
    check_order(n);
    if (k < 1) throw Error(ErrorKind::InvalidTerminals, "k must be positive");
    const SearchLimits limits;
    if (vertex_count(n) > limits.max_vertices) {
      throw Error(ErrorKind::Resource,
                  "FQ_" + std::to_string(n) + " exceeds the oracle cap of " +
                      std::to_string(limits.max_vertices) + " vertices");
    }
    const auto v = parse_terminals(s, n);
    const TerminalTriple triple(v[0], v[1], v[2], n);
    inst = {folded_hypercube_graph(n), {triple.begin(), triple.end()}, k};
  } catch (const Error& e) {
    return usage(err, e);
  }
  const auto found = packing_feasible(inst);
  nlohmann::json j;
  j["n"] = n;
  j["k"] = k;
  j["feasible"] = found.has_value();
  if (found) {
    nlohmann::json trees = nlohmann::json::array();
    for (const Tree& t : *found) {
      nlohmann::json edges = nlohmann::json::array();
      for (const Edge& e : t.edges) edges.push_back({render(e.u, n), render(e.v, n)});
      trees.push_back({{"edges", std::move(edges)}});
    }
    j["trees"] = std::move(trees);
  }
  out << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_topo(int n, std::ostream& out, std::ostream& err) {
  try {
    check_order(n);
    if (n > kTopoOrderCap) {
      throw Error(ErrorKind::Resource,
                  "topo is capped at n = " + std::to_string(kTopoOrderCap));
    }
  } catch (const Error& e) {
    return usage(err, e);
  }
  nlohmann::json j;
  j["n"] = n;
  j["order"] = vertex_count(n);
  j["size"] = edge_count(n);
  j["degree"] = degree(n);
  j["diameter"] = bfs_eccentricity_max(n);
  out << j.dump(2) << "\n";
  return kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Internally disjoint S-trees in folded hypercubes", "fqtree"};
  app.require_subcommand(1);

  int n = 0;
  std::string s;
  std::string format = "json";
  auto* construct = app.add_subcommand("construct", "Build and certify n trees for S");
  construct->add_option("--n", n, "Order of FQ_n")->required();
  construct->add_option("--s", s, "Three comma-separated n-digit strings")->required();
  construct->add_option("--format", format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));

  std::string path;
  auto* verify = app.add_subcommand("verify", "Certify a bundle document");
  verify->add_option("input", path, "Bundle JSON file")->required();

  SweepOptions sweep_opts;
  auto* sweep = app.add_subcommand("sweep", "Construct and certify every triple");
  sweep->add_option("--n", sweep_opts.n, "Order of FQ_n")->required();
  sweep->add_flag("--orbit-reduce", sweep_opts.orbit_reduce,
                  "Fix the first terminal at 0...0");
  sweep->add_option("--workers", sweep_opts.workers, "Worker threads")
      ->check(CLI::PositiveNumber);
  sweep->add_flag("--allow-large", sweep_opts.allow_large, "Lift the order cap");

  int k = 1;
  auto* oracle = app.add_subcommand("oracle", "Exact search for k disjoint S-trees");
  oracle->add_option("--n", n, "Order of FQ_n")->required();
  oracle->add_option("--s", s, "Three comma-separated n-digit strings")->required();
  oracle->add_option("--k", k, "Number of trees")->required();

  auto* topo = app.add_subcommand("topo", "Order, size, degree and diameter of FQ_n");
  topo->add_option("--n", n, "Order of FQ_n")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (construct->parsed()) return cmd_construct(n, s, format, out, err);
  if (verify->parsed()) return cmd_verify(path, out, err);
  if (sweep->parsed()) return cmd_sweep(sweep_opts, out, err);
  if (oracle->parsed()) return cmd_oracle(n, s, k, out, err);
  return cmd_topo(n, out, err);
}

}  // namespace fqtree::cli
