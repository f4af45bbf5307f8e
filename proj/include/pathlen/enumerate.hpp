#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pathlen/bintree.hpp"
#include "pathlen/dyadic.hpp"
#include "pathlen/sequence.hpp"

namespace pathlen {

// Lazy stream of all topological binary trees with a fixed number of
// leaves, each exactly once: Catalan(n_leaves - 1) trees in total, ordered
// by left-subtree size ascending, then recursively by the same order on
// the left and right subtrees.
class TreeFamily {
 public:
  explicit TreeFamily(std::size_t n_leaves);  // throws std::domain_error if < 1

  std::size_t n_leaves() const { return n_; }
  std::optional<BinTree> next();

 private:
  std::size_t n_;
  bool started_ = false;
  std::optional<BinTree> current_;
};

// Lazy stream of every sequence with 1 <= n <= max_len, values in
// [0, max_value] and Kraft sum exactly 1, in lexicographic order, each
// exactly once. Depth-first search over the remaining Kraft mass with
// exact dyadic bookkeeping.
class KraftOneFamily {
 public:
  KraftOneFamily(std::size_t max_len, std::uint32_t max_value);

  std::optional<LengthSeq> next();

 private:
  bool backtrack(std::uint32_t& candidate);

  std::size_t max_len_;
  std::uint32_t max_value_;
  std::vector<std::uint32_t> prefix_;
  Dyadic remaining_;
  bool exhausted_ = false;
  bool emitted_ = false;  // the prefix currently holds an emitted sequence
};

// Outcome of checking, exhaustively at small scale, that validate accepts
// exactly the path-length sequences of enumerated trees.
struct CrosscheckReport {
  std::size_t max_len = 0;
  std::uint32_t max_value = 0;
  bool pass = false;
  std::size_t accepted_count = 0;          // Kraft-one sequences that validate
  std::vector<std::size_t> tree_counts;    // per n = 1..max_len, value-capped
  std::vector<LengthSeq> only_validated;   // accepted but matching no tree
  std::vector<LengthSeq> only_trees;       // tree sequences not accepted

  // e.g. "n≤3: 4 valid sequences, 1+1+2 trees"
  std::string summary() const;
};

// Both sides computed independently: the accepted set comes from
// KraftOneFamily + validate, the tree set from TreeFamily + path_lengths
// (keeping only trees whose depths respect the value cap).
CrosscheckReport theorem_crosscheck(std::size_t max_len, std::uint32_t max_value);

}  // namespace pathlen
