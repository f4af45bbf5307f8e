#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "pathlen/sequence.hpp"

namespace pathlen {

// Rooted binary tree with a left/right topology. Every internal node has
// exactly two ordered children; leaves read left-to-right are v_1,...,v_n.
// Immutable value type with structural sharing; copies are O(1).
//
// Trees can be as deep as the largest path length, so every traversal here
// (including destruction and comparison) uses an explicit worklist instead
// of recursion.
class BinTree {
 public:
  BinTree() = default;  // a single leaf

  static BinTree leaf() { return BinTree(); }
  static BinTree internal(BinTree left, BinTree right);

  bool is_leaf() const { return node_ == nullptr; }
  const BinTree& left() const;
  const BinTree& right() const;
  std::size_t leaf_count() const;

  BinTree(const BinTree&) = default;
  BinTree(BinTree&&) noexcept = default;
  // Assignment funnels the displaced tree through the destructor so its
  // teardown is iterative too.
  BinTree& operator=(const BinTree& other);
  BinTree& operator=(BinTree&& other) noexcept;
  ~BinTree();

  friend bool operator==(const BinTree& a, const BinTree& b);

 private:
  struct Node;
  std::shared_ptr<Node> node_;  // null means leaf
};

// A codeword is the 0/1 root-to-leaf path of one leaf (left = 0,
// right = 1); the root itself yields the empty codeword.
using Codeword = std::string;

// Leaf depths in left-to-right order; the sequence determines the tree.
LengthSeq path_lengths(const BinTree& tree);

// Codewords in left-to-right leaf order. Codeword k has exactly l_k bits
// and the codewords are prefix-free and strictly increasing.
std::vector<Codeword> codewords(const BinTree& tree);

// Number of distinct depth-`level` ancestors of the leaves v_i,...,v_j
// (a node counts as its own ancestor). Throws std::domain_error when the
// leaf range is out of bounds or some leaf in it is shallower than level.
std::size_t ancestors_at_level(const BinTree& tree, std::uint32_t level,
                               const Segment& leaves);

}  // namespace pathlen
