#include "fqtree/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>

namespace fqtree {

int Graph::index_of(VertexId v) const {
  const auto it = std::find(labels.begin(), labels.end(), v);
  return it == labels.end() ? -1 : static_cast<int>(it - labels.begin());
}

Graph graph_from_edges(std::vector<VertexId> labels,
                       std::span<const std::pair<int, int>> edges) {
  Graph g;
  g.adj.resize(labels.size());
  g.labels = std::move(labels);
  for (auto [a, b] : edges) {
    g.adj[static_cast<std::size_t>(a)].push_back(b);
    g.adj[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& nb : g.adj) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  return g;
}

namespace {

Graph cube_graph(int n, Network net) {
  const std::uint32_t count = static_cast<std::uint32_t>(vertex_count(n));
  Graph g;
  g.labels.reserve(count);
  g.adj.resize(count);
  for (std::uint32_t u = 0; u < count; ++u) {
    g.labels.push_back(VertexId{u});
    for (VertexId w : neighbors(VertexId{u}, n, net)) {
      g.adj[u].push_back(static_cast<int>(w.value));
    }
    std::sort(g.adj[u].begin(), g.adj[u].end());
  }
  return g;
}

}  // namespace

Graph folded_hypercube_graph(int n) { return cube_graph(n, Network::Folded); }
Graph hypercube_graph(int n) { return cube_graph(n, Network::Hypercube); }

Graph hypercube_induced(std::span<const VertexId> vertices, int n) {
  std::vector<VertexId> labels(vertices.begin(), vertices.end());
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      if (adjacent(labels[i], labels[j], n, Network::Hypercube)) {
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return graph_from_edges(std::move(labels), edges);
}

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int i) { return Mask{1} << i; }

// Backtracking over the owner of every non-terminal vertex (unused or one of
// the k trees) and of every edge joining two terminals. A tree is feasible
// once the terminals are connected inside S plus its own vertices; the search
// prunes whenever some tree can no longer become connected even if it
// received every still-unassigned vertex.
class PackingSearch {
 public:
  PackingSearch(const Graph& g, std::span<const int> terminals, int k)
      : k_(k), n_(static_cast<int>(g.size())), adj_(g.size(), 0) {
    for (int v = 0; v < n_; ++v) {
      for (int w : g.adj[static_cast<std::size_t>(v)]) {
        adj_[static_cast<std::size_t>(v)] |= bit(w);
      }
    }
    for (int t : terminals) {
      terms_.push_back(t);
      s_ |= bit(t);
    }
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      for (std::size_t j = i + 1; j < terms_.size(); ++j) {
        if (adj_[static_cast<std::size_t>(terms_[i])] & bit(terms_[j])) {
          tt_.push_back({terms_[i], terms_[j]});
        }
      }
    }
    tt_owner_.assign(tt_.size(), -1);
    for (int v = 0; v < n_; ++v) {
      if (!(s_ & bit(v))) order_.push_back(v);
    }
    owner_.assign(static_cast<std::size_t>(n_), -1);
    own_.assign(static_cast<std::size_t>(k_) + 1, 0);
    for (int v : order_) unassigned_ |= bit(v);
  }

  bool run() { return step(0); }

  std::vector<std::vector<Edge>> witness_edges(const Graph& g) const {
    std::vector<std::vector<Edge>> out;
    for (int tree = 1; tree <= k_; ++tree) {
      out.push_back(spanning_edges(g, tree));
    }
    return out;
  }

 private:
  bool tt_available(int a, int b, int tree) const {
    for (std::size_t e = 0; e < tt_.size(); ++e) {
      const auto [x, y] = tt_[e];
      if ((x == a && y == b) || (x == b && y == a)) {
        return tt_owner_[e] == tree || tt_owner_[e] == -1;
      }
    }
    return false;
  }

  Mask neighbors_for(int v, Mask allowed, int tree) const {
    Mask nb = adj_[static_cast<std::size_t>(v)] & allowed;
    if (s_ & bit(v)) {
      for (int t : terms_) {
        if ((nb & bit(t)) && !tt_available(v, t, tree)) nb &= ~bit(t);
      }
    }
    return nb;
  }

  bool connects(int tree, Mask allowed) const {
    Mask reach = bit(terms_[0]);
    Mask frontier = reach;
    while (frontier) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const Mask fresh = neighbors_for(v, allowed, tree) & ~reach;
      reach |= fresh;
      frontier |= fresh;
    }
    return (reach & s_) == s_;
  }

  // A tree index above `opened_` has no vertices yet, so all unopened trees
  // share one potential graph; `k_ + 1` stands for that shared case.
  bool potential_ok() const {
    for (int tree = 1; tree <= opened_; ++tree) {
      if (!connects(tree, s_ | own_[static_cast<std::size_t>(tree)] |
                              unassigned_)) {
        return false;
      }
    }
    if (opened_ < k_ && !connects(k_ + 1, s_ | unassigned_)) return false;
    return true;
  }

  bool step(std::size_t item) {
    const std::size_t total = tt_.size() + order_.size();
    if (item == total) return opened_ == k_ && potential_ok();
    const int limit = std::min(k_, opened_ + 1);
    for (int choice = 0; choice <= limit; ++choice) {
      const int before = opened_;
      if (choice > opened_) opened_ = choice;
      if (item < tt_.size()) {
        tt_owner_[item] = choice;
      } else {
        const int v = order_[item - tt_.size()];
        owner_[static_cast<std::size_t>(v)] = choice;
        unassigned_ &= ~bit(v);
        own_[static_cast<std::size_t>(choice)] |= bit(v);
      }
      if (potential_ok() && step(item + 1)) return true;
      if (item < tt_.size()) {
        tt_owner_[item] = -1;
      } else {
        const int v = order_[item - tt_.size()];
        owner_[static_cast<std::size_t>(v)] = -1;
        unassigned_ |= bit(v);
        own_[static_cast<std::size_t>(choice)] &= ~bit(v);
      }
      opened_ = before;
    }
    return false;
  }

  std::vector<Edge> spanning_edges(const Graph& g, int tree) const {
    const Mask allowed = s_ | own_[static_cast<std::size_t>(tree)];
    std::vector<int> parent(static_cast<std::size_t>(n_), -1);
    std::vector<int> queue{terms_[0]};
    Mask reach = bit(terms_[0]);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      Mask fresh = neighbors_for(v, allowed, tree) & ~reach;
      reach |= fresh;
      while (fresh) {
        const int w = std::countr_zero(fresh);
        fresh &= fresh - 1;
        parent[static_cast<std::size_t>(w)] = v;
        queue.push_back(w);
      }
    }
    // Drop non-terminal leaves until only terminals are leaves.
    std::vector<int> deg(static_cast<std::size_t>(n_), 0);
    Mask kept = reach;
    for (int v : queue) {
      const int p = parent[static_cast<std::size_t>(v)];
      if (p >= 0) {
        ++deg[static_cast<std::size_t>(v)];
        ++deg[static_cast<std::size_t>(p)];
      }
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v : queue) {
        if ((kept & bit(v)) && !(s_ & bit(v)) &&
            deg[static_cast<std::size_t>(v)] <= 1) {
          kept &= ~bit(v);
          changed = true;
          for (int w : queue) {
            if (!(kept & bit(w))) continue;
            if (parent[static_cast<std::size_t>(v)] == w ||
                parent[static_cast<std::size_t>(w)] == v) {
              --deg[static_cast<std::size_t>(w)];
            }
          }
        }
      }
    }
    std::vector<Edge> edges;
    for (int v : queue) {
      const int p = parent[static_cast<std::size_t>(v)];
      if (p >= 0 && (kept & bit(v)) && (kept & bit(p))) {
        edges.push_back(make_edge(g.labels[static_cast<std::size_t>(v)],
                                  g.labels[static_cast<std::size_t>(p)]));
      }
    }
    return edges;
  }

  int k_;
  int n_;
  std::vector<Mask> adj_;
  std::vector<int> terms_;
  Mask s_ = 0;
  std::vector<std::pair<int, int>> tt_;
  std::vector<int> tt_owner_;
  std::vector<int> order_;
  std::vector<int> owner_;
  std::vector<Mask> own_;
  Mask unassigned_ = 0;
  int opened_ = 0;
};

std::vector<int> terminal_indices(const Graph& g, std::span<const VertexId> s) {
  std::vector<int> idx;
  for (VertexId v : s) {
    const int i = g.index_of(v);
    if (i < 0) {
      throw Error(ErrorKind::Membership,
                  "terminal " + std::to_string(v.value) + " not in graph");
    }
    if (std::find(idx.begin(), idx.end(), i) != idx.end()) {
      throw Error(ErrorKind::InvalidTerminals, "terminals must be distinct");
    }
    idx.push_back(i);
  }
  if (idx.size() < 2) {
    throw Error(ErrorKind::InvalidTerminals, "need at least two terminals");
  }
  return idx;
}

void check_limits(const Graph& g, SearchLimits limits) {
  if (g.size() > limits.max_vertices || g.size() > 64) {
    throw Error(ErrorKind::Resource,
                "graph with " + std::to_string(g.size()) +
                    " vertices exceeds the search cap of " +
                    std::to_string(std::min<std::size_t>(limits.max_vertices, 64)));
  }
}

int min_terminal_degree(const Graph& g, std::span<const int> terms) {
  int best = std::numeric_limits<int>::max();
  for (int t : terms) {
    best = std::min(best,
                    static_cast<int>(g.adj[static_cast<std::size_t>(t)].size()));
  }
  return best;
}

}  // namespace

std::optional<std::vector<Tree>> packing_feasible(const PackingInstance& inst,
                                                  SearchLimits limits) {
  check_limits(inst.graph, limits);
  const auto terms = terminal_indices(inst.graph, inst.s);
  if (inst.k < 1) {
    throw Error(ErrorKind::InvalidTerminals, "tree count must be positive");
  }
  // Every tree spends at least one edge at each terminal.
  if (inst.k > min_terminal_degree(inst.graph, terms)) return std::nullopt;
  PackingSearch search(inst.graph, terms, inst.k);
  if (!search.run()) return std::nullopt;
  std::vector<Tree> trees;
  for (auto& edges : search.witness_edges(inst.graph)) {
    trees.push_back(make_tree(inst.s, std::move(edges)));
  }
  return trees;
}

int kappa_s(const Graph& graph, std::span<const VertexId> s,
            SearchLimits limits) {
  PackingInstance inst{graph, {s.begin(), s.end()}, 1};
  int best = 0;
  while (packing_feasible(inst, limits)) {
    best = inst.k;
    ++inst.k;
  }
  return best;
}

int generalized_3_connectivity(const Graph& graph, bool vertex_transitive,
                               SearchLimits limits) {
  check_limits(graph, limits);
  const int count = static_cast<int>(graph.size());
  if (count < 3) {
    throw Error(ErrorKind::InvalidTerminals, "graph has fewer than 3 vertices");
  }
  int best = std::numeric_limits<int>::max();
  const int first_end = vertex_transitive ? 1 : count;
  const int pinned = vertex_transitive ? graph.index_of(VertexId{0}) : -1;
  if (vertex_transitive && pinned < 0) {
    throw Error(ErrorKind::Membership, "no vertex labelled 0 to pin");
  }
  for (int a = 0; a < first_end; ++a) {
    const int ia = vertex_transitive ? pinned : a;
    for (int b = 0; b < count; ++b) {
      if (b == ia || (!vertex_transitive && b <= a)) continue;
      for (int c = b + 1; c < count; ++c) {
        if (c == ia) continue;
        const VertexId s[3] = {graph.labels[static_cast<std::size_t>(ia)],
                               graph.labels[static_cast<std::size_t>(b)],
                               graph.labels[static_cast<std::size_t>(c)]};
        best = std::min(best, kappa_s(graph, s, limits));
      }
    }
  }
  return best;
}

std::optional<int> upper_bound_delta(const Graph& graph) {
  if (graph.size() == 0) return std::nullopt;
  std::size_t delta = std::numeric_limits<std::size_t>::max();
  for (const auto& nb : graph.adj) delta = std::min(delta, nb.size());
  for (std::size_t v = 0; v < graph.size(); ++v) {
    if (graph.adj[v].size() != delta) continue;
    for (int w : graph.adj[v]) {
      if (graph.adj[static_cast<std::size_t>(w)].size() == delta) {
        return static_cast<int>(delta) - 1;
      }
    }
  }
  return std::nullopt;
}

}  // namespace fqtree
