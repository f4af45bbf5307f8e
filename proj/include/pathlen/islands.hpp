#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "pathlen/dyadic.hpp"
#include "pathlen/sequence.hpp"

namespace pathlen {

// An interval [i,j] is a full segment (an island) when its neighborhood
// maximin is strictly below its minimum: m[i,j] < min(l_i,...,l_j).
// Equivalently, every immediately adjacent value (where one exists) is
// strictly below the minimum inside, and [1,n] is an island iff min(l) > 0.
// Islands are pairwise disjoint or nested, so they form a laminar family.
bool is_full_segment(const LengthSeq& seq, const Segment& seg);

// Reference detector: tests every one of the O(n^2) segments directly
// against the island condition. Output in (lo, hi) lexicographic order.
std::vector<Segment> find_islands_naive(const LengthSeq& seq);

// Operation counter for the fast detector, used to pin its amortized
// linear bound in tests: ops <= MAX_OPS_PER_ELEMENT * n.
struct SweepStats {
  std::size_t ops = 0;
};
inline constexpr std::size_t MAX_OPS_PER_ELEMENT = 8;

// Single-pass monotonic-stack sweep. The stack holds open runs (level,
// start) with strictly increasing levels; a strict descent pops every
// higher level and each pop emits one island, equal levels merge into the
// open run. Produces exactly the segments of find_islands_naive, in the
// same (lo, hi) lexicographic order, in O(n) amortized time and O(n) space.
std::vector<Segment> find_islands_fast(const LengthSeq& seq, SweepStats* stats = nullptr);

// An island together with its annotations and its place in the laminar
// nesting: m < seg_min always holds, kraft is the partial Kraft sum K(S),
// and the parent is the smallest island properly containing this one.
struct IslandNode {
  Segment seg;
  std::uint32_t seg_min = 0;
  std::uint32_t m = 0;
  Dyadic kraft;
  std::size_t parent = NO_PARENT;           // index into the forest's nodes
  std::vector<std::size_t> children;        // left-to-right, same indexing

  static constexpr std::size_t NO_PARENT = static_cast<std::size_t>(-1);
};

// Every island of a sequence, annotated and parent-linked. Nodes are stored
// in (lo, hi) lexicographic order. There may be zero or several roots: the
// family is a single tree rooted at [1,n] only when [1,n] itself is an
// island.
class IslandForest {
 public:
  IslandForest() = default;
  explicit IslandForest(const LengthSeq& seq);

  std::size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }
  const IslandNode& node(std::size_t idx) const { return nodes_[idx]; }
  const std::vector<IslandNode>& nodes() const { return nodes_; }
  const std::vector<std::size_t>& roots() const { return roots_; }

 private:
  std::vector<IslandNode> nodes_;
  std::vector<std::size_t> roots_;
};

// The tree of full segments, rooted at [1,n].
class IslandTree {
 public:
  explicit IslandTree(IslandForest forest) : forest_(std::move(forest)) {}

  const IslandForest& forest() const { return forest_; }
  std::size_t root_index() const { return forest_.roots().front(); }
  const IslandNode& root() const { return forest_.node(root_index()); }

 private:
  IslandForest forest_;
};

// Absent when [1,n] is not an island (only possible when min(l) = 0).
std::optional<IslandTree> island_tree(const LengthSeq& seq);

// Leaves of the island tree, left-to-right. These are the minimal islands,
// and each one covers a constant run of the sequence.
std::vector<Segment> minimal_islands(const IslandTree& tree);

// Leaves of an arbitrary laminar island list (as produced by the
// detectors), left-to-right.
std::vector<Segment> minimal_segments(const std::vector<Segment>& lex_islands);

}  // namespace pathlen
