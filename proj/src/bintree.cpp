#include "pathlen/bintree.hpp"

#include <stdexcept>
#include <utility>

namespace pathlen {

struct BinTree::Node {
  BinTree left;
  BinTree right;
  std::size_t n_leaves;
};

BinTree BinTree::internal(BinTree left, BinTree right) {
  BinTree t;
  std::size_t n = left.leaf_count() + right.leaf_count();
  t.node_ = std::make_shared<Node>(Node{std::move(left), std::move(right), n});
  return t;
}

const BinTree& BinTree::left() const {
  if (!node_) throw std::logic_error("leaf has no children");
  return node_->left;
}

const BinTree& BinTree::right() const {
  if (!node_) throw std::logic_error("leaf has no children");
  return node_->right;
}

std::size_t BinTree::leaf_count() const {
  return node_ ? node_->n_leaves : 1;
}

BinTree& BinTree::operator=(const BinTree& other) {
  BinTree keep(other);  // taken first so self-assignment stays safe
  BinTree displaced(std::move(*this));
  node_ = std::move(keep.node_);
  return *this;  // displaced dismantles the old tree on scope exit
}

BinTree& BinTree::operator=(BinTree&& other) noexcept {
  if (this != &other) {
    BinTree displaced(std::move(*this));
    node_ = std::move(other.node_);
  }
  return *this;
}

BinTree::~BinTree() {
  if (!node_ || node_.use_count() > 1) {
    return;
  }
  // Sole owner: dismantle iteratively, stealing children from each node we
  // are about to release so the Node destructor never recurses down a
  // vine-shaped tree.
  std::vector<std::shared_ptr<Node>> pending;
  pending.push_back(std::move(node_));
  while (!pending.empty()) {
    std::shared_ptr<Node> cur = std::move(pending.back());
    pending.pop_back();
    if (cur.use_count() == 1) {
      if (cur->left.node_) pending.push_back(std::move(cur->left.node_));
      if (cur->right.node_) pending.push_back(std::move(cur->right.node_));
    }
  }
}

bool operator==(const BinTree& a, const BinTree& b) {
  std::vector<std::pair<const BinTree*, const BinTree*>> work{{&a, &b}};
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    if (x->node_ == y->node_) continue;  // shared structure or both leaves
    if (x->is_leaf() != y->is_leaf()) return false;
    if (x->is_leaf()) continue;
    if (x->leaf_count() != y->leaf_count()) return false;
    work.emplace_back(&x->left(), &y->left());
    work.emplace_back(&x->right(), &y->right());
  }
  return true;
}

LengthSeq path_lengths(const BinTree& tree) {
  std::vector<std::uint32_t> depths;
  depths.reserve(tree.leaf_count());
  std::vector<std::pair<const BinTree*, std::uint32_t>> work{{&tree, 0}};
  while (!work.empty()) {
    auto [node, depth] = work.back();
    work.pop_back();
    if (node->is_leaf()) {
      depths.push_back(depth);
    } else {
      work.emplace_back(&node->right(), depth + 1);
      work.emplace_back(&node->left(), depth + 1);
    }
  }
  return LengthSeq(std::move(depths));
}

std::vector<Codeword> codewords(const BinTree& tree) {
  std::vector<Codeword> out;
  out.reserve(tree.leaf_count());
  // Frames carry the node and which edge of it we are entering next; bits
  // holds the path to the current node.
  struct Frame {
    const BinTree* node;
    int stage;  // 0: enter left, 1: enter right, 2: leave
  };
  std::string bits;
  std::vector<Frame> work{{&tree, 0}};
  while (!work.empty()) {
    Frame& f = work.back();
    if (f.node->is_leaf()) {
      out.push_back(bits);
      work.pop_back();
      if (!bits.empty()) bits.pop_back();
      continue;
    }
    if (f.stage == 0) {
      f.stage = 1;
      bits.push_back('0');
      work.push_back(Frame{&f.node->left(), 0});
    } else if (f.stage == 1) {
      f.stage = 2;
      bits.push_back('1');
      work.push_back(Frame{&f.node->right(), 0});
    } else {
      work.pop_back();
      if (!bits.empty()) bits.pop_back();
    }
  }
  return out;
}

std::size_t ancestors_at_level(const BinTree& tree, std::uint32_t level,
                               const Segment& leaves) {
  const std::size_t n = tree.leaf_count();
  if (leaves.lo < 1 || leaves.lo > leaves.hi || leaves.hi > n) {
    throw std::domain_error("leaf range " + to_string(leaves) +
                            " out of range for a tree with " + std::to_string(n) +
                            " leaves");
  }
  std::size_t count = 0;
  std::size_t cursor = 1;  // index of the next leaf to the left of the walk
  std::vector<std::pair<const BinTree*, std::uint32_t>> work{{&tree, 0}};
  while (!work.empty()) {
    auto [node, depth] = work.back();
    work.pop_back();
    const std::size_t first = cursor;
    const std::size_t last = cursor + node->leaf_count() - 1;
    if (first > leaves.hi) break;  // everything further right is outside
    if (depth == level) {
      if (last >= leaves.lo) ++count;
      cursor = last + 1;
      continue;
    }
    if (node->is_leaf()) {
      // Shallower than the requested level; only an error if it is one of
      // the leaves whose ancestors we are counting.
      if (first >= leaves.lo && first <= leaves.hi) {
        throw std::domain_error("leaf v_" + std::to_string(first) +
                                " is shallower than level " + std::to_string(level));
      }
      cursor = last + 1;
      continue;
    }
    work.emplace_back(&node->right(), depth + 1);
    work.emplace_back(&node->left(), depth + 1);
  }
  return count;
}

}  // namespace pathlen
