#include "fqtree/automorphism.hpp"

#include <algorithm>
#include <bit>

namespace fqtree {
namespace {

bool is_generator(VertexId v, int n) {
  return std::has_single_bit(v.value) || v == all_ones(n);
}

void check_same_order(const Automorphism& a, const Automorphism& b) {
  if (a.order() != b.order()) {
    throw Error(ErrorKind::OrderMismatch,
                "automorphisms of orders " + std::to_string(a.order()) +
                    " and " + std::to_string(b.order()));
  }
}

}  // namespace

Automorphism Automorphism::identity(int n) {
  check_order(n);
  std::vector<VertexId> images;
  for (int i = 1; i <= n; ++i) images.push_back(VertexId{digit_mask(i, n)});
  return Automorphism(n, std::move(images), VertexId{0});
}

Automorphism Automorphism::from_images(int n, std::vector<VertexId> unit_images,
                                       VertexId offset) {
  check_order(n);
  check_vertex(offset, n);
  if (unit_images.size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorKind::MalformedPermutation,
                "expected one image per unit vector");
  }
  auto sorted = unit_images;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorKind::MalformedPermutation, "repeated generator image");
  }
  for (VertexId v : unit_images) {
    check_vertex(v, n);
    if (!is_generator(v, n)) {
      throw Error(ErrorKind::MalformedPermutation,
                  "image " + render(v, n) + " is not a generator of FQ_n");
    }
  }
  return Automorphism(n, std::move(unit_images), offset);
}

VertexId Automorphism::linear(VertexId v) const {
  VertexId out{0};
  for (int i = 1; i <= n_; ++i) {
    if (digit(v, i, n_)) out = out ^ images_[static_cast<std::size_t>(i - 1)];
  }
  return out;
}

Automorphism xor_translate(VertexId c, int n) {
  check_vertex(c, n);
  auto id = Automorphism::identity(n);
  return Automorphism::from_images(n, id.unit_images(), c);
}

Automorphism coord_perm(std::span<const int> perm, int n) {
  check_order(n);
  if (perm.size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorKind::MalformedPermutation,
                "permutation has " + std::to_string(perm.size()) +
                    " entries, expected " + std::to_string(n));
  }
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::vector<VertexId> images;
  for (int target : perm) {
    if (target < 1 || target > n || seen[static_cast<std::size_t>(target)]) {
      throw Error(ErrorKind::MalformedPermutation,
                  "not a permutation of [1, n]");
    }
    seen[static_cast<std::size_t>(target)] = true;
    images.push_back(VertexId{digit_mask(target, n)});
  }
  return Automorphism::from_images(n, std::move(images), VertexId{0});
}

Automorphism swap_digits(int a, int b, int n) {
  check_order(n);
  check_dimension(a, n);
  check_dimension(b, n);
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) perm[static_cast<std::size_t>(i - 1)] = i;
  std::swap(perm[static_cast<std::size_t>(a - 1)],
            perm[static_cast<std::size_t>(b - 1)]);
  return coord_perm(perm, n);
}

Automorphism dim_complement_swap(int d, int n) {
  check_order(n);
  check_dimension(d, n);
  auto images = Automorphism::identity(n).unit_images();
  images[static_cast<std::size_t>(d - 1)] = all_ones(n);
  return Automorphism::from_images(n, std::move(images), VertexId{0});
}

VertexId apply(const Automorphism& a, VertexId v) {
  check_vertex(v, a.order());
  return a(v);
}

Path apply_path(const Automorphism& a, const Path& p) {
  Path out;
  out.reserve(p.size());
  for (VertexId v : p) out.push_back(apply(a, v));
  return out;
}

Tree apply_tree(const Automorphism& a, const Tree& t) {
  Tree out;
  out.terminals.reserve(t.terminals.size());
  for (VertexId v : t.terminals) out.terminals.push_back(apply(a, v));
  out.edges.reserve(t.edges.size());
  for (const Edge& e : t.edges) {
    out.edges.push_back(make_edge(apply(a, e.u), apply(a, e.v)));
  }
  out.normalize();
  return out;
}

Automorphism compose(const Automorphism& a, const Automorphism& b) {
  check_same_order(a, b);
  std::vector<VertexId> images;
  for (VertexId img : b.unit_images()) images.push_back(a.linear(img));
  return Automorphism::from_images(a.order(), std::move(images),
                                   a.linear(b.offset()) ^ a.offset());
}

Automorphism inverse(const Automorphism& a) {
  const int n = a.order();
  // L permutes the generators, so L^-1 is read off from L's action on them.
  std::vector<VertexId> images(static_cast<std::size_t>(n));
  auto place = [&](VertexId source) {
    const VertexId image = a.linear(source);
    if (image == all_ones(n)) return;
    const int i = n - std::countr_zero(image.value);
    images[static_cast<std::size_t>(i - 1)] = source;
  };
  for (int i = 1; i <= n; ++i) place(VertexId{digit_mask(i, n)});
  place(all_ones(n));
  auto inv_linear = Automorphism::from_images(n, images, VertexId{0});
  return Automorphism::from_images(n, std::move(images),
                                   inv_linear.linear(a.offset()));
}

bool preserves_adjacency(const Automorphism& a) {
  const int n = a.order();
  const std::uint32_t count = std::uint32_t{1} << n;
  for (std::uint32_t u = 0; u < count; ++u) {
    for (VertexId w : neighbors(VertexId{u}, n)) {
      if (!adjacent(a(VertexId{u}), a(w), n)) return false;
    }
  }
  return true;
}

}  // namespace fqtree
