#include "fqtree/hypercube_routing.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>

#include "fqtree/oracle.hpp"

namespace fqtree {

Cube::Cube(int n, std::vector<int> free_dims, VertexId anchor)
    : n_(n), free_(std::move(free_dims)) {
  if (n < 1 || n > kMaxOrder) {
    throw Error(ErrorKind::InvalidOrder, "cube ambient order out of range");
  }
  std::sort(free_.begin(), free_.end());
  if (std::adjacent_find(free_.begin(), free_.end()) != free_.end()) {
    throw Error(ErrorKind::Dimension, "repeated free dimension");
  }
  std::uint32_t free_mask = 0;
  for (int d : free_) {
    check_dimension(d, n);
    free_mask |= digit_mask(d, n);
  }
  check_vertex(anchor, n);
  fixed_mask_ = all_ones(n).value & ~free_mask;
  fixed_ = VertexId{anchor.value & fixed_mask_};
}

Cube Cube::full(int n) {
  std::vector<int> dims;
  for (int d = 1; d <= n; ++d) dims.push_back(d);
  return Cube(n, std::move(dims), VertexId{0});
}

Cube Cube::from_side(const SubcubeSide& s, int n) {
  check_dimension(s.dim, n);
  std::vector<int> dims;
  VertexId anchor{0};
  if (s.bit) anchor = anchor ^ VertexId{digit_mask(s.dim, n)};
  if (s.dim2) {
    check_dimension(*s.dim2, n);
    if (s.bit2) anchor = anchor ^ VertexId{digit_mask(*s.dim2, n)};
  }
  for (int d = 1; d <= n; ++d) {
    if (d != s.dim && (!s.dim2 || d != *s.dim2)) dims.push_back(d);
  }
  return Cube(n, std::move(dims), anchor);
}

bool Cube::contains(VertexId v) const {
  return (v.value >> n_) == 0 && (v.value & fixed_mask_) == fixed_.value;
}

Cube Cube::restrict(int d, int bit) const {
  if (std::find(free_.begin(), free_.end(), d) == free_.end()) {
    throw Error(ErrorKind::Dimension,
                "dimension " + std::to_string(d) + " is not free in this cube");
  }
  std::vector<int> dims;
  for (int f : free_) {
    if (f != d) dims.push_back(f);
  }
  VertexId anchor = fixed_;
  if (bit) anchor = anchor ^ VertexId{digit_mask(d, n_)};
  return Cube(n_, std::move(dims), anchor);
}

std::uint32_t Cube::to_local(VertexId v) const {
  std::uint32_t local = 0;
  for (int d : free_) local = (local << 1) | static_cast<std::uint32_t>(digit(v, d, n_));
  return local;
}

VertexId Cube::from_local(std::uint32_t local) const {
  const int m = order();
  VertexId v = fixed_;
  for (int j = 0; j < m; ++j) {
    if ((local >> (m - 1 - j)) & 1U) {
      v = v ^ VertexId{digit_mask(free_[static_cast<std::size_t>(j)], n_)};
    }
  }
  return v;
}

namespace {

void require_member(const Cube& cube, VertexId v) {
  if (!cube.contains(v)) {
    throw Error(ErrorKind::Membership,
                "vertex " + render(v, cube.ambient_order()) +
                    " lies outside the cube");
  }
}

Path flip_sequence(VertexId start, std::span<const int> dims, int n) {
  Path p{start};
  for (int d : dims) p.push_back(flip(p.back(), d, n));
  return p;
}

}  // namespace

std::vector<Path> menger_paths(VertexId x, VertexId y, const Cube& cube) {
  require_member(cube, x);
  require_member(cube, y);
  if (x == y) {
    throw Error(ErrorKind::DegeneratePair, "menger_paths needs x != y");
  }
  const int n = cube.ambient_order();
  std::vector<int> differ;
  std::vector<int> agree;
  for (int d : cube.free_dims()) {
    (digit(x, d, n) != digit(y, d, n) ? differ : agree).push_back(d);
  }
  std::vector<Path> paths;
  const std::size_t k = differ.size();
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<int> seq;
    for (std::size_t t = 0; t < k; ++t) seq.push_back(differ[(j + t) % k]);
    paths.push_back(flip_sequence(x, seq, n));
  }
  for (int f : agree) {
    std::vector<int> seq{f};
    seq.insert(seq.end(), differ.begin(), differ.end());
    seq.push_back(f);
    paths.push_back(flip_sequence(x, seq, n));
  }
  return paths;
}

Tree steiner_avoiding(std::span<const VertexId> s,
                      std::span<const VertexId> forbidden, const Cube& cube) {
  const int n = cube.ambient_order();
  const int m = cube.order();
  std::vector<VertexId> terms(s.begin(), s.end());
  std::sort(terms.begin(), terms.end());
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  if (terms.empty()) {
    throw Error(ErrorKind::InvalidTerminals, "steiner_avoiding needs terminals");
  }
  for (VertexId t : terms) require_member(cube, t);

  std::vector<VertexId> blocked;
  for (VertexId f : forbidden) {
    if (cube.contains(f)) blocked.push_back(f);
  }
  std::sort(blocked.begin(), blocked.end());
  blocked.erase(std::unique(blocked.begin(), blocked.end()), blocked.end());
  for (VertexId t : terms) {
    if (std::binary_search(blocked.begin(), blocked.end(), t)) {
      throw Error(ErrorKind::Conflict,
                  "terminal " + render(t, n) + " is forbidden");
    }
  }
  if (static_cast<int>(blocked.size()) > m - 1) {
    throw Error(ErrorKind::Capacity,
                std::to_string(blocked.size()) +
                    " forbidden vertices may disconnect a cube of order " +
                    std::to_string(m));
  }

  // 0 = free, 1 = forbidden, 2 = in tree
  std::vector<std::uint8_t> state(std::size_t{1} << m, 0);
  for (VertexId b : blocked) state[cube.to_local(b)] = 1;
  state[cube.to_local(terms.front())] = 2;

  std::vector<Edge> edges;
  std::vector<std::int64_t> parent(state.size());
  std::vector<std::uint32_t> queue;
  for (std::size_t ti = 1; ti < terms.size(); ++ti) {
    const std::uint32_t start = cube.to_local(terms[ti]);
    if (state[start] == 2) continue;
    std::fill(parent.begin(), parent.end(), -1);
    queue.assign(1, start);
    parent[start] = start;
    std::optional<std::uint32_t> hit;
    for (std::size_t head = 0; head < queue.size() && !hit; ++head) {
      const std::uint32_t u = queue[head];
      for (int j = 0; j < m; ++j) {
        const std::uint32_t w = u ^ (std::uint32_t{1} << (m - 1 - j));
        if (parent[w] >= 0 || state[w] == 1) continue;
        parent[w] = u;
        if (state[w] == 2) {
          hit = w;
          break;
        }
        queue.push_back(w);
      }
    }
    if (!hit) {
      throw Error(ErrorKind::ConstructionDefect,
                  "punctured cube is disconnected at terminal " +
                      render(terms[ti], n));
    }
    for (std::uint32_t w = *hit; w != start;) {
      const auto p = static_cast<std::uint32_t>(parent[w]);
      edges.push_back(make_edge(cube.from_local(w), cube.from_local(p)));
      state[p] = 2;
      w = p;
    }
  }
  return make_tree(std::move(terms), std::move(edges));
}

namespace {

using LocalTriple = std::array<std::uint32_t, 3>;
using BaseTable = std::map<LocalTriple, std::vector<Tree>>;

BaseTable build_base_table(int m) {
  BaseTable table;
  const Graph g = hypercube_graph(m);
  const std::uint32_t count = std::uint32_t{1} << m;
  for (std::uint32_t a = 0; a < count; ++a) {
    for (std::uint32_t b = a + 1; b < count; ++b) {
      for (std::uint32_t c = b + 1; c < count; ++c) {
        PackingInstance inst{g, {VertexId{a}, VertexId{b}, VertexId{c}}, m - 1};
        auto trees = packing_feasible(inst);
        if (!trees) {
          throw Error(ErrorKind::TheoremViolation,
                      "no base packing in Q_" + std::to_string(m));
        }
        table.emplace(LocalTriple{a, b, c}, std::move(*trees));
      }
    }
  }
  return table;
}

const BaseTable& base_table(int m) {
  static const BaseTable q2 = build_base_table(2);
  static const BaseTable q3 = build_base_table(3);
  return m == 2 ? q2 : q3;
}

std::vector<Tree> base_trees(std::span<const VertexId, 3> s, const Cube& cube) {
  const int m = cube.order();
  LocalTriple key{cube.to_local(s[0]), cube.to_local(s[1]), cube.to_local(s[2])};
  std::sort(key.begin(), key.end());
  std::vector<Tree> out;
  for (const Tree& local : base_table(m).at(key)) {
    std::vector<Edge> edges;
    for (const Edge& e : local.edges) {
      edges.push_back(
          make_edge(cube.from_local(e.u.value), cube.from_local(e.v.value)));
    }
    out.push_back(make_tree({s.begin(), s.end()}, std::move(edges)));
  }
  return out;
}

std::vector<VertexId> tree_neighbors(const Tree& t, VertexId v) {
  std::vector<VertexId> out;
  for (const Edge& e : t.edges) {
    if (e.u == v) out.push_back(e.v);
    if (e.v == v) out.push_back(e.u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Tree> qn_s_trees(std::span<const VertexId, 3> s, const Cube& cube) {
  const int n = cube.ambient_order();
  const int m = cube.order();
  for (VertexId v : s) require_member(cube, v);
  if (s[0] == s[1] || s[0] == s[2] || s[1] == s[2]) {
    throw Error(ErrorKind::InvalidTerminals, "terminals must be distinct");
  }
  if (m < 2) {
    throw Error(ErrorKind::InvalidOrder, "qn_s_trees needs a cube of order >= 2");
  }
  if (m <= 3) return base_trees(s, cube);

  const std::vector<VertexId> terms(s.begin(), s.end());

  // A free digit shared by all three terminals: recurse in that half and
  // route one more tree through the opposite half.
  for (int f : cube.free_dims()) {
    const int b = digit(s[0], f, n);
    if (digit(s[1], f, n) != b || digit(s[2], f, n) != b) continue;
    auto trees = qn_s_trees(s, cube.restrict(f, b));
    std::vector<VertexId> lifted;
    for (VertexId v : terms) lifted.push_back(flip(v, f, n));
    Tree cross = steiner_avoiding(lifted, {}, cube.restrict(f, 1 - b));
    for (VertexId v : terms) cross.edges.push_back(make_edge(v, flip(v, f, n)));
    cross.terminals = terms;
    cross.normalize();
    trees.push_back(std::move(cross));
    return trees;
  }

  // Every free digit splits the terminals 2-1. Take as the lone terminal one
  // that is alone on at least two digits (one exists since m >= 4), and split
  // along the smallest of those digits; then z' = N_f(z) differs from x and y.
  std::array<std::vector<int>, 3> lone_dims;
  for (int f : cube.free_dims()) {
    for (std::size_t t = 0; t < 3; ++t) {
      const int bt = digit(s[t], f, n);
      if (digit(s[(t + 1) % 3], f, n) != bt && digit(s[(t + 2) % 3], f, n) != bt) {
        lone_dims[t].push_back(f);
      }
    }
  }
  std::size_t lone = 0;
  for (std::size_t t = 1; t < 3; ++t) {
    if (lone_dims[t].size() > lone_dims[lone].size()) lone = t;
  }
  const int f = lone_dims[lone].front();
  const VertexId z = s[lone];
  const VertexId x = s[(lone + 1) % 3];
  const VertexId y = s[(lone + 2) % 3];
  const VertexId zp = flip(z, f, n);
  const Cube near = cube.restrict(f, digit(x, f, n));
  const Cube far = cube.restrict(f, digit(z, f, n));

  const std::array<VertexId, 3> inner_terms{x, y, zp};
  auto inner = qn_s_trees(std::span<const VertexId, 3>(inner_terms), near);

  // The tree keeping z' intact: the one using edge x-z' or y-z' if any,
  // otherwise the one where z' has the largest degree.
  std::size_t keep = 0;
  std::size_t best_degree = 0;
  std::optional<std::size_t> via_terminal;
  for (std::size_t i = 0; i < inner.size(); ++i) {
    const auto nb = tree_neighbors(inner[i], zp);
    for (VertexId u : nb) {
      if (u == x || u == y) via_terminal = i;
    }
    if (nb.size() > best_degree) {
      best_degree = nb.size();
      keep = i;
    }
  }
  if (via_terminal) keep = *via_terminal;

  std::vector<VertexId> used_far;
  std::vector<Tree> out;
  for (std::size_t i = 0; i < inner.size(); ++i) {
    Tree t = inner[i];
    if (i == keep) {
      t.edges.push_back(make_edge(zp, z));
    } else {
      const auto nb = tree_neighbors(t, zp);
      std::erase_if(t.edges, [&](const Edge& e) { return e.u == zp || e.v == zp; });
      for (VertexId u : nb) {
        const VertexId up = flip(u, f, n);
        t.edges.push_back(make_edge(u, up));
        t.edges.push_back(make_edge(up, z));
        used_far.push_back(up);
      }
    }
    t.terminals = terms;
    t.normalize();
    out.push_back(std::move(t));
  }
  const std::array<VertexId, 3> far_terms{flip(x, f, n), flip(y, f, n), z};
  Tree last = steiner_avoiding(far_terms, used_far, far);
  last.edges.push_back(make_edge(x, flip(x, f, n)));
  last.edges.push_back(make_edge(y, flip(y, f, n)));
  last.terminals = terms;
  last.normalize();
  out.push_back(std::move(last));
  return out;
}

}  // namespace fqtree
