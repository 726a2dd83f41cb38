#include "fqtree/folded_construction.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <span>

#include "fqtree/certify.hpp"
#include "fqtree/hypercube_routing.hpp"
#include "fqtree/oracle.hpp"

namespace fqtree {
namespace {

using cases::Context;

VertexId ones(const Context& ctx) { return all_ones(ctx.n); }
VertexId unit(int i, const Context& ctx) { return unit_vertex(i, ctx.n); }
VertexId anti(int i, const Context& ctx) { return anti_unit_vertex(i, ctx.n); }
/// N_1(Z) for Z = 1...1.
VertexId z_hyper(const Context& ctx) { return ones(ctx) ^ unit(1, ctx); }

Cube half(int bit, int n) { return Cube::from_side({1, bit, std::nullopt, 0}, n); }
Cube quarter(int bit2, int n) { return Cube::from_side({1, 1, 2, bit2}, n); }

void require(bool cond, const char* what) {
  if (!cond) throw PreconditionFailure(what);
}

void note(Context& ctx, Branch b, int dim = 0) {
  ctx.trace->steps.push_back({b, dim});
}

std::vector<Tree> pull_back(const Automorphism& a, std::vector<Tree> trees) {
  const Automorphism inv = inverse(a);
  for (Tree& t : trees) t = apply_tree(inv, t);
  return trees;
}

Tree finish(std::vector<Edge> edges, std::initializer_list<VertexId> terminals) {
  return make_tree(std::vector<VertexId>(terminals), std::move(edges));
}

int first_dim(const Path& p, int n) { return edge_kind(p[0], p[1], n)->dim(); }

/// Digit permutation fixing digit 1 that sends dims[0] to 2, dims[1] to 3, ...
Automorphism to_front(std::initializer_list<int> dims, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n), 0);
  std::vector<bool> taken(static_cast<std::size_t>(n) + 1, false);
  int pos = 2;
  for (int d : dims) {
    perm[static_cast<std::size_t>(d - 1)] = pos;
    taken[static_cast<std::size_t>(pos)] = true;
    ++pos;
  }
  int next = 1;
  for (int d = 1; d <= n; ++d) {
    if (perm[static_cast<std::size_t>(d - 1)] != 0) continue;
    while (taken[static_cast<std::size_t>(next)]) ++next;
    perm[static_cast<std::size_t>(d - 1)] = next;
    taken[static_cast<std::size_t>(next)] = true;
  }
  return coord_perm(perm, n);
}

std::vector<Tree> solve(VertexId a, VertexId b, VertexId c, Context& ctx);

/// Re-splits along digit d, on which all three terminals agree, and solves
/// the resulting Case 1 instance.
std::vector<Tree> resplit(int d, VertexId a, VertexId b, VertexId c,
                          Context& ctx) {
  const int n = ctx.n;
  require(digit(a, d, n) == digit(b, d, n) && digit(b, d, n) == digit(c, d, n),
          "re-split digit is not shared by the terminals");
  note(ctx, Branch::Resplit, d);
  Automorphism map = swap_digits(1, d, n);
  if (digit(a, d, n) == 1) map = compose(xor_translate(unit(1, ctx), n), map);
  Context inner{n, ctx.trace, ctx.depth + 1};
  return pull_back(map, solve(map(a), map(b), map(c), inner));
}

std::vector<Tree> solve(VertexId a, VertexId b, VertexId c, Context& ctx) {
  const int n = ctx.n;
  if (ctx.depth > kMaxResplitDepth) {
    throw ConstructionDefect("re-split depth cap exceeded", *ctx.trace);
  }
  const int da = digit(a, 1, n), db = digit(b, 1, n), dc = digit(c, 1, n);
  if (da == db && db == dc) {
    const Automorphism map =
        da ? xor_translate(unit(1, ctx), n) : Automorphism::identity(n);
    if (ctx.depth == 0) ctx.trace->normalization = map;
    return pull_back(map, cases::case1(map(a), map(b), map(c), ctx));
  }
  // Exactly one terminal is alone on digit 1; it becomes Z = 1...1.
  VertexId z = c, x = a, y = b;
  if (da != db && da != dc) {
    z = a; x = b; y = c;
  } else if (db != da && db != dc) {
    z = b; x = a; y = c;
  }
  const Automorphism map = xor_translate(z ^ ones(ctx), n);
  if (ctx.depth == 0) ctx.trace->normalization = map;
  auto trees = cases::case2_dispatch(map(x), map(y), ctx);
  return pull_back(map, std::move(trees));
}

/// Paths of a Menger system indexed by the dimension of their first edge.
std::map<int, Path> paths_by_first_dim(VertexId x, VertexId y, const Context& ctx) {
  std::map<int, Path> out;
  for (Path& p : menger_paths(x, y, half(0, ctx.n))) {
    const int d = first_dim(p, ctx.n);
    out.emplace(d, std::move(p));
  }
  return out;
}

enum class Hit { None, Hyper, Bar };

struct OutHit {
  Hit kind = Hit::None;
  int index = 0;
};

/// Which out-neighbour of v (digit 1 of v is 0) lands in W, and on which W_i.
OutHit out_hit(VertexId v, const Context& ctx) {
  const int n = ctx.n;
  for (int i = 2; i <= n; ++i) {
    if ((v ^ unit(1, ctx)) == anti(i, ctx)) return {Hit::Hyper, i};
    if ((v ^ ones(ctx)) == anti(i, ctx)) return {Hit::Bar, i};
  }
  return {};
}

/// Out-neighbour of v (digit 1 of v is 0) inside Q_n^{12}[1 bit2].
VertexId out_in_quarter(VertexId v, int bit2, const Context& ctx) {
  const VertexId hyper = v ^ unit(1, ctx);
  return digit(hyper, 2, ctx.n) == bit2 ? hyper : v ^ ones(ctx);
}

std::vector<VertexId> z_neighbors_in(const Tree& t, VertexId zh) {
  std::vector<VertexId> out;
  for (const Edge& e : t.edges) {
    if (e.u == zh) out.push_back(e.v);
    if (e.v == zh) out.push_back(e.u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Subcase 2.3.1: no out-neighbour of X or Y lies in W.
std::vector<Tree> case2_3_1(VertexId x, VertexId y, Context& ctx) {
  const int n = ctx.n;
  const VertexId z = ones(ctx);
  const VertexId zh = z_hyper(ctx);
  require(out_hit(x, ctx).kind == Hit::None && out_hit(y, ctx).kind == Hit::None,
          "2.3.1 requires all out-neighbours of X and Y outside W");
  require(x != zh && y != zh && x != VertexId{0} && y != VertexId{0},
          "2.3.1 requires X, Y outside {N_1(Z), complement of Z}");

  const std::array<VertexId, 3> terms{x, y, zh};
  std::vector<Tree> inner =
      qn_s_trees(std::span<const VertexId, 3>(terms), half(0, n));

  // Dimension of every edge at N_1(Z), per tree.
  std::vector<std::vector<int>> stub_dims;
  std::size_t wide = inner.size();
  for (std::size_t i = 0; i < inner.size(); ++i) {
    std::vector<int> dims;
    for (VertexId u : z_neighbors_in(inner[i], zh)) {
      dims.push_back(edge_kind(u, zh, n)->dim());
    }
    require(!dims.empty() && dims.size() <= 2, "stub degree outside [1, 2]");
    if (dims.size() == 2) {
      require(wide == inner.size(), "two trees of stub degree 2");
      wide = i;
    }
    stub_dims.push_back(std::move(dims));
  }

  std::size_t keep = 0;
  int to_w2 = 0, to_w3 = 0;
  if (wide < inner.size()) {
    note(ctx, Branch::Case2_3_1_2);
    keep = wide;
    to_w2 = stub_dims[keep][0];
    to_w3 = stub_dims[keep][1];
  } else {
    note(ctx, Branch::Case2_3_1_1);
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    for (const auto& dims : stub_dims) used[static_cast<std::size_t>(dims[0])] = true;
    for (int d = 2; d <= n && to_w2 == 0; ++d) {
      if (!used[static_cast<std::size_t>(d)]) to_w2 = d;
    }
    to_w3 = stub_dims[keep][0];
  }
  require(to_w2 != 0, "no free neighbour of N_1(Z)");

  // Relabel so the unused (or second) stub is N_1(W_2) and T_3's is N_1(W_3).
  const Automorphism sigma = to_front({to_w2, to_w3}, n);
  const VertexId sx = sigma(x), sy = sigma(y);

  std::vector<Tree> out;
  std::vector<VertexId> h;
  for (std::size_t i = 0; i < inner.size(); ++i) {
    Tree t = apply_tree(sigma, inner[i]);
    if (i == keep) {
      t.edges.push_back(make_edge(zh, z));
    } else {
      const auto nb = z_neighbors_in(t, zh);
      require(nb.size() == 1, "detached tree has stub degree != 1");
      const VertexId w = nb[0] ^ unit(1, ctx);
      require(edge_kind(w, z, n)->dim() >= 4, "stub outside W_4..W_n");
      std::erase_if(t.edges, [&](const Edge& e) { return e.u == zh || e.v == zh; });
      t.edges.push_back(make_edge(nb[0], w));
      t.edges.push_back(make_edge(w, z));
      h.push_back(w);
    }
    out.push_back(finish(std::move(t.edges), {sx, sy, z}));
  }

  // T_1 through Q_n^{12}[10] and W_2; T_2 through Q_n^{12}[11] minus H.
  const VertexId w2 = anti(2, ctx);
  {
    const VertexId ox = out_in_quarter(sx, 0, ctx), oy = out_in_quarter(sy, 0, ctx);
    const std::array<VertexId, 3> s1{ox, oy, w2};
    Tree t = steiner_avoiding(s1, {}, quarter(0, n));
    t.edges.push_back(make_edge(sx, ox));
    t.edges.push_back(make_edge(sy, oy));
    t.edges.push_back(make_edge(w2, z));
    out.push_back(finish(std::move(t.edges), {sx, sy, z}));
  }
  {
    const VertexId ox = out_in_quarter(sx, 1, ctx), oy = out_in_quarter(sy, 1, ctx);
    const std::array<VertexId, 3> s2{ox, oy, z};
    Tree t = steiner_avoiding(s2, h, quarter(1, n));
    t.edges.push_back(make_edge(sx, ox));
    t.edges.push_back(make_edge(sy, oy));
    out.push_back(finish(std::move(t.edges), {sx, sy, z}));
  }
  return pull_back(sigma, std::move(out));
}

// Subcase 2.3.2.3 after relabelling: X = E_2, Y = E_3, explicit paths.
std::vector<Tree> case2_3_2_3(VertexId x, VertexId y, Context& ctx) {
  const int n = ctx.n;
  const VertexId z = ones(ctx);
  const VertexId zero{0};
  require(x == unit(2, ctx) && y == unit(3, ctx), "2.3.2.3 expects X=E_2, Y=E_3");
  std::vector<Tree> out;
  std::vector<VertexId> w_prime;

  {
    std::vector<Edge> e;
    append_path(e, {x, zero, y});
    e.push_back(make_edge(zero, z));
    out.push_back(finish(std::move(e), {x, y, z}));
  }
  {
    std::vector<Edge> e;
    append_path(e, {x, x ^ y, y});
    e.push_back(make_edge(y, anti(3, ctx)));
    e.push_back(make_edge(anti(3, ctx), z));
    w_prime.push_back(anti(3, ctx));
    out.push_back(finish(std::move(e), {x, y, z}));
  }
  for (int i = 4; i <= n; ++i) {
    const VertexId ei = unit(i, ctx);
    const Path p{x, x ^ ei, ei, ei ^ unit(3, ctx), y};
    std::vector<Edge> e;
    append_path(e, p);
    e.push_back(make_edge(ei, anti(i, ctx)));
    e.push_back(make_edge(anti(i, ctx), z));
    w_prime.push_back(anti(i, ctx));
    out.push_back(finish(std::move(e), {x, y, z}));
  }
  const VertexId hx = x ^ unit(1, ctx), hy = y ^ unit(1, ctx);
  const std::array<VertexId, 3> s1{hx, hy, z};
  Tree t1 = steiner_avoiding(s1, w_prime, half(1, n));
  t1.edges.push_back(make_edge(x, hx));
  t1.edges.push_back(make_edge(y, hy));
  out.insert(out.begin(), finish(std::move(t1.edges), {x, y, z}));
  return out;
}

// Same configuration as the 2.3.2.2/2.3.2.4 pair but with both out-neighbours
// hitting one W_2: X, Y = {N_1(W_2), E_2}. No digit is shared, so exchange the
// complement generator with E_3; the image shares digit 4.
std::vector<Tree> collided_resplit(VertexId x, VertexId y, Context& ctx) {
  const int n = ctx.n;
  const Automorphism swap = dim_complement_swap(3, n);
  const VertexId a = swap(x), b = swap(y), c = swap(ones(ctx));
  Context inner{n, ctx.trace, ctx.depth + 1};
  return pull_back(swap, resplit(4, a, b, c, inner));
}

std::vector<Tree> case2_3_2(VertexId x, VertexId y, OutHit hx, OutHit hy,
                            Context& ctx) {
  const int n = ctx.n;
  const VertexId z = ones(ctx);
  if (hx.kind == Hit::Hyper && hy.kind == Hit::Hyper) {
    note(ctx, Branch::Case2_3_2_1);
    const Automorphism sigma = to_front({hx.index, hy.index}, n);
    // X = 0011..1, Y = 0101..1: digit n is 1 everywhere.
    return pull_back(sigma, resplit(n, sigma(x), sigma(y), z, ctx));
  }
  if (hx.kind == Hit::Bar && hy.kind == Hit::Bar) {
    note(ctx, Branch::Case2_3_2_3);
    const Automorphism sigma = to_front({hx.index, hy.index}, n);
    return pull_back(sigma, case2_3_2_3(sigma(x), sigma(y), ctx));
  }
  const bool second = hx.kind == Hit::Hyper;  // 2.3.2.2, else 2.3.2.4
  note(ctx, second ? Branch::Case2_3_2_2 : Branch::Case2_3_2_4);
  if (hx.index == hy.index) {
    const Automorphism sigma = to_front({hx.index}, n);
    return pull_back(sigma, collided_resplit(sigma(x), sigma(y), ctx));
  }
  const Automorphism sigma = to_front({hx.index, hy.index}, n);
  // 2.3.2.2: X = 0011..1, Y = 0010..0 share digit 3.
  // 2.3.2.4: X = 0100..0, Y = 0101..1 share digit 2.
  return pull_back(sigma, resplit(second ? 3 : 2, sigma(x), sigma(y), z, ctx));
}

std::vector<Tree> case2_3_3(VertexId x, VertexId y, OutHit hx, Context& ctx) {
  const int n = ctx.n;
  const VertexId z = ones(ctx);
  const Automorphism sigma = to_front({hx.index}, n);
  const VertexId sx = sigma(x), sy = sigma(y);
  if (hx.kind == Hit::Hyper) {
    note(ctx, Branch::Case2_3_3_1);
    // X = 0011..1; any later 1 in Y is shared with X and Z.
    for (int k = 3; k <= n; ++k) {
      if (digit(sy, k, n) == 1) return pull_back(sigma, resplit(k, sx, sy, z, ctx));
    }
    throw PreconditionFailure("2.3.3.1: Y has no 1 beyond digit 2");
  }
  note(ctx, Branch::Case2_3_3_2);
  // X = E_2.
  if (digit(sy, 2, n) == 1) return pull_back(sigma, resplit(2, sx, sy, z, ctx));
  int tail_ones = 0;
  for (int k = 3; k <= n; ++k) tail_ones += digit(sy, k, n);
  require(tail_ones >= 2, "2.3.3.2: fewer than two 1s among y_3..y_n");
  require(tail_ones <= n - 3, "2.3.3.2: no 0 among y_3..y_n");

  // Split along digit 2 with {X, Z} together and Y alone; move digit 2 to
  // the front and Y to 1...1.
  note(ctx, Branch::Resplit, 2);
  const Automorphism swap = swap_digits(1, 2, n);
  const Automorphism map = compose(xor_translate(swap(sy) ^ z, n), swap);
  const VertexId nx = map(sx), nz = map(z);
  Context inner{n, ctx.trace, ctx.depth + 1};
  require(out_hit(nx, inner).kind == Hit::None && out_hit(nz, inner).kind == Hit::None,
          "2.3.3.2 re-split does not meet the 2.3.1 preconditions");
  auto trees = cases::case2_dispatch(nx, nz, inner);
  return pull_back(sigma, pull_back(map, std::move(trees)));
}

Tree attach_t1(VertexId x, VertexId ox, VertexId y,
               std::span<const VertexId> w_prime, const Context& ctx) {
  const int n = ctx.n;
  const VertexId z = ones(ctx);
  require(std::find(w_prime.begin(), w_prime.end(), ox) == w_prime.end(),
          "out-neighbour of X lies in W'");
  VertexId oy = y ^ ones(ctx);
  if (std::find(w_prime.begin(), w_prime.end(), oy) != w_prime.end()) {
    oy = y ^ unit(1, ctx);
  }
  require(std::find(w_prime.begin(), w_prime.end(), oy) == w_prime.end(),
          "both out-neighbours of Y lie in W'");
  const std::array<VertexId, 3> s1{ox, oy, z};
  Tree t = steiner_avoiding(s1, w_prime, half(1, n));
  t.edges.push_back(make_edge(x, ox));
  t.edges.push_back(make_edge(y, oy));
  return finish(std::move(t.edges), {x, y, z});
}

/// Shared body of Subcases 2.2.1 and 2.2.2 once Y, if adjacent to X, is its
/// dimension-2 neighbour. `through` maps N_i(X) to W_i.
template <class Through>
std::vector<Tree> two_two_body(VertexId x, VertexId y, VertexId out_x,
                               Through through, Context& ctx) {
  const int n = ctx.n;
  const VertexId z = ones(ctx);
  auto paths = paths_by_first_dim(x, y, ctx);
  require(static_cast<int>(paths.size()) == n - 1, "Menger system incomplete");
  std::vector<Tree> out;
  std::vector<VertexId> w_prime;
  {
    std::vector<Edge> e;
    append_path(e, paths.at(2));
    e.push_back(make_edge(x, z));
    out.push_back(finish(std::move(e), {x, y, z}));
  }
  for (int i = 3; i <= n; ++i) {
    const Path& p = paths.at(i);
    require(p.size() > 2, "only P_2 may be a single edge");
    const VertexId w = through(p[1]);
    require(w == anti(i, ctx), "W_i is not the expected neighbour of Z");
    std::vector<Edge> e;
    append_path(e, p);
    e.push_back(make_edge(p[1], w));
    e.push_back(make_edge(w, z));
    w_prime.push_back(w);
    out.push_back(finish(std::move(e), {x, y, z}));
  }
  out.insert(out.begin(), attach_t1(x, out_x, y, w_prime, ctx));
  return out;
}

/// If X ~ Y along dimension g, relabel so that g = 2.
std::optional<Automorphism> adjacency_to_dim2(VertexId x, VertexId y, int n) {
  const auto kind = edge_kind(x, y, n);
  if (!kind || kind->is_complement() || kind->dim() == 2) return std::nullopt;
  return swap_digits(2, kind->dim(), n);
}

}  // namespace

namespace cases {

std::vector<Tree> case1(VertexId x, VertexId y, VertexId z, Context& ctx) {
  const int n = ctx.n;
  require(digit(x, 1, n) == 0 && digit(y, 1, n) == 0 && digit(z, 1, n) == 0,
          "Case 1 expects all terminals in Q_n^1[0]");
  note(ctx, Branch::Case1);
  const std::array<VertexId, 3> terms{x, y, z};
  std::vector<Tree> out =
      qn_s_trees(std::span<const VertexId, 3>(terms), half(0, n));
  for (Tree& t : out) t = finish(std::move(t.edges), {x, y, z});
  for (int bit2 = 0; bit2 <= 1; ++bit2) {
    std::array<VertexId, 3> outs{};
    for (std::size_t i = 0; i < 3; ++i) outs[i] = out_in_quarter(terms[i], bit2, ctx);
    Tree t = steiner_avoiding(outs, {}, quarter(bit2, n));
    for (std::size_t i = 0; i < 3; ++i) t.edges.push_back(make_edge(terms[i], outs[i]));
    out.push_back(finish(std::move(t.edges), {x, y, z}));
  }
  return out;
}

std::vector<Tree> case2_dispatch(VertexId x, VertexId y, Context& ctx) {
  const int n = ctx.n;
  require(x != y && digit(x, 1, n) == 0 && digit(y, 1, n) == 0,
          "Case 2 expects distinct X, Y in Q_n^1[0]");
  const VertexId zh = z_hyper(ctx);
  const VertexId zbar{0};
  const int hits = (x == zh || y == zh) + (x == zbar || y == zbar);
  if (hits == 2) return x == zh ? case2_1(x, y, ctx) : case2_1(y, x, ctx);
  if (hits == 1) {
    if (x == zh) return case2_2_1(x, y, ctx);
    if (y == zh) return case2_2_1(y, x, ctx);
    if (x == zbar) return case2_2_2(x, y, ctx);
    return case2_2_2(y, x, ctx);
  }
  return case2_3(x, y, ctx);
}

std::vector<Tree> case2_1(VertexId x, VertexId y, Context& ctx) {
  const VertexId z = ones(ctx);
  require(x == z_hyper(ctx) && y == VertexId{0}, "2.1 expects X=N_1(Z), Y=0");
  note(ctx, Branch::Case2_1);
  std::vector<Tree> out;
  out.push_back(finish({make_edge(x, z), make_edge(y, z)}, {x, y, z}));
  for (auto& [i, p] : paths_by_first_dim(x, y, ctx)) {
    const VertexId w = p[1] ^ unit(1, ctx);
    require(w == anti(i, ctx), "W_i is not the expected neighbour of Z");
    std::vector<Edge> e;
    append_path(e, p);
    e.push_back(make_edge(p[1], w));
    e.push_back(make_edge(w, z));
    out.push_back(finish(std::move(e), {x, y, z}));
  }
  return out;
}

std::vector<Tree> case2_2_1(VertexId x, VertexId y, Context& ctx) {
  const int n = ctx.n;
  require(x == z_hyper(ctx) && y != VertexId{0} && digit(y, 1, n) == 0 && y != x,
          "2.2.1 expects X=N_1(Z) and Y outside {X, 0}");
  note(ctx, Branch::Case2_2_1);
  if (auto sigma = adjacency_to_dim2(x, y, n)) {
    auto& steps = ctx.trace->steps;
    steps.pop_back();
    return pull_back(*sigma, case2_2_1((*sigma)(x), (*sigma)(y), ctx));
  }
  const VertexId xbar = x ^ ones(ctx);  // = E_1
  return two_two_body(x, y, xbar,
                      [&](VertexId u) { return u ^ unit(1, ctx); }, ctx);
}

std::vector<Tree> case2_2_2(VertexId x, VertexId y, Context& ctx) {
  const int n = ctx.n;
  require(x == VertexId{0} && y != z_hyper(ctx) && digit(y, 1, n) == 0 && y != x,
          "2.2.2 expects X=0 and Y outside {X, N_1(Z)}");
  note(ctx, Branch::Case2_2_2);
  if (auto sigma = adjacency_to_dim2(x, y, n)) {
    auto& steps = ctx.trace->steps;
    steps.pop_back();
    return pull_back(*sigma, case2_2_2((*sigma)(x), (*sigma)(y), ctx));
  }
  // The complement edge of X is X-Z itself (used by T_2), so T_1 leaves X
  // through its dimension-1 neighbour E_1.
  return two_two_body(x, y, x ^ unit(1, ctx),
                      [&](VertexId u) { return u ^ ones(ctx); }, ctx);
}

std::vector<Tree> case2_3(VertexId x, VertexId y, Context& ctx) {
  require(x != z_hyper(ctx) && y != z_hyper(ctx) && x != VertexId{0} &&
              y != VertexId{0},
          "2.3 expects {N_1(Z), complement of Z} disjoint from {X, Y}");
  OutHit hx = out_hit(x, ctx), hy = out_hit(y, ctx);
  if (hx.kind == Hit::None && hy.kind != Hit::None) {
    std::swap(x, y);
    std::swap(hx, hy);
  }
  if (hx.kind == Hit::None) return case2_3_1(x, y, ctx);
  if (hy.kind != Hit::None) return case2_3_2(x, y, hx, hy, ctx);
  return case2_3_3(x, y, hx, ctx);
}

}  // namespace cases

SplitChoice choose_split(const TerminalTriple& s) {
  const int n = s.order();
  for (int d = 1; d <= n; ++d) {
    const int b = digit(s[0], d, n);
    if (digit(s[1], d, n) == b && digit(s[2], d, n) == b) return {d, true, {}};
  }
  for (std::size_t t = 0; t < 3; ++t) {
    const int b = digit(s[t], 1, n);
    if (digit(s[(t + 1) % 3], 1, n) != b && digit(s[(t + 2) % 3], 1, n) != b) {
      return {1, false, s[t]};
    }
  }
  return {1, false, {}};  // unreachable: some digit-1 value appears once
}

TreeBundle base_fq2(const TerminalTriple& s) {
  const int n = s.order();
  if (n != 2) throw Error(ErrorKind::InvalidOrder, "base_fq2 needs n = 2");
  VertexId rest{0};
  while (s.contains(rest)) rest.value++;
  std::vector<Tree> trees;
  trees.push_back(finish({make_edge(s[0], s[1]), make_edge(s[0], s[2])},
                         {s[0], s[1], s[2]}));
  trees.push_back(finish({make_edge(rest, s[0]), make_edge(rest, s[1]),
                          make_edge(rest, s[2])},
                         {s[0], s[1], s[2]}));
  return {n, s, std::move(trees), {{{Branch::BaseN2}}, Automorphism::identity(n)}};
}

namespace {

struct Fq3Memo {
  std::vector<Automorphism> group;  // translations x digit permutations
  std::map<std::array<std::uint32_t, 3>, std::vector<Tree>> trees;
};

std::array<std::uint32_t, 3> image_key(const Automorphism& a, const TerminalTriple& s) {
  std::array<std::uint32_t, 3> key{a(s[0]).value, a(s[1]).value, a(s[2]).value};
  std::sort(key.begin(), key.end());
  return key;
}

/// Smallest image of s and the group element producing it.
std::pair<std::array<std::uint32_t, 3>, std::size_t> canonical(
    const Fq3Memo& memo, const TerminalTriple& s) {
  std::size_t best = 0;
  auto best_key = image_key(memo.group[0], s);
  for (std::size_t g = 1; g < memo.group.size(); ++g) {
    const auto key = image_key(memo.group[g], s);
    if (key < best_key) {
      best_key = key;
      best = g;
    }
  }
  return {best_key, best};
}

const Fq3Memo& fq3_memo() {
  static const Fq3Memo memo = [] {
    constexpr int n = 3;
    Fq3Memo m;
    std::array<int, 3> perm{1, 2, 3};
    do {
      const Automorphism p = coord_perm(perm, n);
      for (std::uint32_t c = 0; c < 8; ++c) {
        m.group.push_back(compose(xor_translate(VertexId{c}, n), p));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    const Graph g = folded_hypercube_graph(n);
    for (std::uint32_t a = 0; a < 8; ++a) {
      for (std::uint32_t b = a + 1; b < 8; ++b) {
        for (std::uint32_t c = b + 1; c < 8; ++c) {
          const TerminalTriple s(VertexId{a}, VertexId{b}, VertexId{c}, n);
          const auto [key, idx] = canonical(m, s);
          if (m.trees.contains(key)) continue;
          PackingInstance inst{
              g, {VertexId{key[0]}, VertexId{key[1]}, VertexId{key[2]}}, n};
          auto found = packing_feasible(inst);
          if (!found) {
            throw Error(ErrorKind::TheoremViolation,
                        "no three internally disjoint trees in FQ_3");
          }
          m.trees.emplace(key, std::move(*found));
        }
      }
    }
    return m;
  }();
  return memo;
}

}  // namespace

TreeBundle base_fq3(const TerminalTriple& s) {
  const int n = s.order();
  if (n != 3) throw Error(ErrorKind::InvalidOrder, "base_fq3 needs n = 3");
  const Fq3Memo& memo = fq3_memo();
  const auto [key, idx] = canonical(memo, s);
  const Automorphism& g = memo.group[idx];
  std::vector<Tree> trees = pull_back(g, memo.trees.at(key));
  return {n, s, std::move(trees), {{{Branch::BaseN3}}, g}};
}

std::size_t fq3_orbit_count() { return fq3_memo().trees.size(); }

TreeBundle s_trees(const TerminalTriple& s) {
  const int n = s.order();
  if (n == 2) return base_fq2(s);
  if (n == 3) return base_fq3(s);

  CaseTrace trace{{}, Automorphism::identity(n)};
  Context ctx{n, &trace, 0};
  std::vector<Tree> trees;
  try {
    trees = solve(s[0], s[1], s[2], ctx);
  } catch (const PreconditionFailure& failure) {
    trace.steps.push_back({Branch::Fallback});
    if (n > 4) {
      throw ConstructionDefect(
          std::string("branch precondition failed: ") + failure.what(), trace);
    }
    PackingInstance inst{folded_hypercube_graph(n), {s.begin(), s.end()}, n};
    auto found = packing_feasible(inst);
    if (!found) {
      throw ConstructionDefect("fallback search found no packing", trace);
    }
    trees = std::move(*found);
  }
  for (Tree& t : trees) t = finish(std::move(t.edges), {s[0], s[1], s[2]});
  TreeBundle bundle{n, s, std::move(trees), std::move(trace)};
  if (!verify_bundle(bundle).ok()) {
    throw ConstructionDefect("constructed bundle failed certification",
                             bundle.trace);
  }
  return bundle;
}

}  // namespace fqtree
