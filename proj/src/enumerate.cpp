#include "pathlen/enumerate.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <utility>

#include "pathlen/validate.hpp"

namespace pathlen {

namespace {

// Smallest tree in the enumeration order: left subtree of size 1 at every
// level, i.e. the right-leaning vine with path lengths (1, 2, ..., n-1, n-1).
BinTree first_tree(std::size_t n) {
  BinTree t = BinTree::leaf();
  for (std::size_t i = 1; i < n; ++i) {
    t = BinTree::internal(BinTree::leaf(), std::move(t));
  }
  return t;
}

// Next tree with the same number of leaves: advance the right subtree,
// then the left (resetting the right), then grow the left-size split.
std::optional<BinTree> successor(const BinTree& t) {
  if (t.is_leaf()) {
    return std::nullopt;
  }
  const std::size_t n = t.leaf_count();
  const std::size_t k = t.left().leaf_count();
  if (auto r = successor(t.right())) {
    return BinTree::internal(t.left(), std::move(*r));
  }
  if (auto l = successor(t.left())) {
    return BinTree::internal(std::move(*l), first_tree(n - k));
  }
  if (k + 1 <= n - 1) {
    return BinTree::internal(first_tree(k + 1), first_tree(n - k - 1));
  }
  return std::nullopt;
}

std::size_t popcount_big(BigInt x) {
  std::size_t count = 0;
  while (x != 0) {
    x &= x - 1;
    ++count;
  }
  return count;
}

}  // namespace

TreeFamily::TreeFamily(std::size_t n_leaves) : n_(n_leaves) {
  if (n_leaves < 1) {
    throw std::domain_error("tree enumeration needs n_leaves >= 1");
  }
}

std::optional<BinTree> TreeFamily::next() {
  if (!started_) {
    started_ = true;
    current_ = first_tree(n_);
  } else if (current_) {
    current_ = successor(*current_);
  }
  return current_;
}

KraftOneFamily::KraftOneFamily(std::size_t max_len, std::uint32_t max_value)
    : max_len_(max_len), max_value_(max_value), remaining_(Dyadic::one()) {
  if (max_len < 1) {
    throw std::domain_error("sequence enumeration needs max_len >= 1");
  }
}

// Undo the deepest choice and report the next candidate value for that
// level. Returns false when the whole search space is exhausted.
bool KraftOneFamily::backtrack(std::uint32_t& candidate) {
  if (prefix_.empty()) {
    exhausted_ = true;
    return false;
  }
  const std::uint32_t v = prefix_.back();
  prefix_.pop_back();
  remaining_ += Dyadic::pow2_neg(v);
  if (v == max_value_) {
    return backtrack(candidate);
  }
  candidate = v + 1;
  return true;
}

std::optional<LengthSeq> KraftOneFamily::next() {
  if (exhausted_) {
    return std::nullopt;
  }
  std::uint32_t candidate = 0;
  if (emitted_) {
    emitted_ = false;
    if (!backtrack(candidate)) {
      return std::nullopt;
    }
  }
  for (;;) {
    // Candidates must not exceed the remaining mass: 2^-v <= p/2^e means
    // v >= e - msb(p).
    const std::uint32_t e = remaining_.exponent();
    const std::uint32_t msb =
        static_cast<std::uint32_t>(boost::multiprecision::msb(remaining_.numerator()));
    candidate = std::max(candidate, e - msb);

    bool placed = false;
    for (std::uint32_t v = candidate; v <= max_value_; ++v) {
      Dyadic rest = remaining_ - Dyadic::pow2_neg(v);
      if (rest.is_zero()) {
        prefix_.push_back(v);
        remaining_ = Dyadic::zero();
        emitted_ = true;
        return LengthSeq(prefix_);
      }
      // Closing the rest needs one term per binary digit at least, each of
      // them no smaller than 2^-max_value.
      const std::size_t slots = max_len_ - prefix_.size() - 1;
      if (slots == 0 || rest.exponent() > max_value_ ||
          popcount_big(rest.numerator()) > slots) {
        continue;
      }
      prefix_.push_back(v);
      remaining_ = std::move(rest);
      placed = true;
      break;
    }
    if (placed) {
      candidate = 0;
      continue;
    }
    if (!backtrack(candidate)) {
      return std::nullopt;
    }
  }
}

std::string CrosscheckReport::summary() const {
  std::string trees;
  for (std::size_t n = 0; n < tree_counts.size(); ++n) {
    if (n > 0) trees += "+";
    trees += std::to_string(tree_counts[n]);
  }
  return "n≤" + std::to_string(max_len) + ": " + std::to_string(accepted_count) +
         " valid sequences, " + trees + " trees";
}

CrosscheckReport theorem_crosscheck(std::size_t max_len, std::uint32_t max_value) {
  CrosscheckReport report;
  report.max_len = max_len;
  report.max_value = max_value;

  std::vector<LengthSeq> accepted;
  KraftOneFamily seqs(max_len, max_value);
  while (auto seq = seqs.next()) {
    if (validate(*seq).valid) {
      accepted.push_back(std::move(*seq));
    }
  }
  report.accepted_count = accepted.size();

  std::vector<LengthSeq> from_trees;
  report.tree_counts.assign(max_len, 0);
  for (std::size_t n = 1; n <= max_len; ++n) {
    TreeFamily family(n);
    while (auto tree = family.next()) {
      LengthSeq lengths = path_lengths(*tree);
      const auto& v = lengths.values();
      if (*std::max_element(v.begin(), v.end()) <= max_value) {
        ++report.tree_counts[n - 1];
        from_trees.push_back(std::move(lengths));
      }
    }
  }

  // The enumeration emits in lexicographic order; the tree side must be
  // sorted. Duplicates on the tree side would themselves be a failure
  // (two trees sharing a path-length sequence), caught by the mismatch.
  std::sort(from_trees.begin(), from_trees.end());

  std::set_difference(accepted.begin(), accepted.end(), from_trees.begin(),
                      from_trees.end(), std::back_inserter(report.only_validated));
  std::set_difference(from_trees.begin(), from_trees.end(), accepted.begin(),
                      accepted.end(), std::back_inserter(report.only_trees));
  report.pass = report.only_validated.empty() && report.only_trees.empty() &&
                std::adjacent_find(from_trees.begin(), from_trees.end()) ==
                    from_trees.end();
  return report;
}

}  // namespace pathlen
