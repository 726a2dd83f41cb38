#pragma once

// Affine automorphisms of FQ_n: v -> L(v) xor c, where the GF(2)-linear part
// L permutes the generator set {E_1, ..., E_n, 1...1}.

#include <span>
#include <vector>

#include "fqtree/topology.hpp"
#include "fqtree/tree.hpp"

namespace fqtree {

class Automorphism {
 public:
  static Automorphism identity(int n);
  /// Validates that `unit_images[i-1]` (the image of E_i) are distinct
  /// generators; that is enough for L to be a bijection preserving FQ_n.
  static Automorphism from_images(int n, std::vector<VertexId> unit_images,
                                  VertexId offset);

  int order() const { return n_; }
  VertexId offset() const { return offset_; }
  const std::vector<VertexId>& unit_images() const { return images_; }

  VertexId linear(VertexId v) const;
  VertexId operator()(VertexId v) const { return linear(v) ^ offset_; }

  friend bool operator==(const Automorphism&, const Automorphism&) = default;

 private:
  Automorphism(int n, std::vector<VertexId> images, VertexId offset)
      : n_(n), images_(std::move(images)), offset_(offset) {}

  int n_;
  std::vector<VertexId> images_;
  VertexId offset_;
};

Automorphism xor_translate(VertexId c, int n);
/// `perm[i-1]` is the digit position that digit i moves to (1-based).
Automorphism coord_perm(std::span<const int> perm, int n);
Automorphism swap_digits(int a, int b, int n);
/// The linear involution exchanging E_d and the all-ones vector.
Automorphism dim_complement_swap(int d, int n);

VertexId apply(const Automorphism& a, VertexId v);
Path apply_path(const Automorphism& a, const Path& p);
Tree apply_tree(const Automorphism& a, const Tree& t);
/// compose(a, b) applies b first, then a.
Automorphism compose(const Automorphism& a, const Automorphism& b);
Automorphism inverse(const Automorphism& a);

/// Exhaustively checks adjacency preservation on FQ_n.
bool preserves_adjacency(const Automorphism& a);

}  // namespace fqtree
