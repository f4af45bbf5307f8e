#include "pathlen/treebuild.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pathlen {

namespace {

// Repetition count 2^m * K for a constant run of `count` values v, checked
// for integrality. K = count * 2^-v, so r = count >> (v - m) when v - m
// divides evenly.
std::size_t run_repetitions(std::size_t count, std::uint32_t v, std::uint32_t m,
                            const Segment& seg, const Dyadic& kraft) {
  std::uint32_t d = v - m;  // island condition guarantees m < v
  if (d >= 64 || (count & ((std::size_t{1} << d) - 1)) != 0) {
    throw ValidityError(Verdict::fail(NonIntegerScaledKraft{seg, m, kraft}));
  }
  std::size_t r = count >> d;
  assert(r >= 1);
  return r;
}

}  // namespace

ContractResult contract(const LengthSeq& seq, const Segment& seg) {
  seq.check_segment(seg);
  if (!is_full_segment(seq, seg)) {
    throw std::domain_error("segment " + to_string(seg) + " is not an island");
  }
  for (const Segment& other : find_islands_fast(seq)) {
    if (other != seg && seg.contains(other)) {
      throw std::domain_error("island " + to_string(seg) +
                              " is not minimal: contains " + to_string(other));
    }
  }
  const std::uint32_t v = seq.value(seg.lo);
  for (std::size_t pos = seg.lo; pos <= seg.hi; ++pos) {
    // Minimal islands are constant runs; a non-constant one here is a bug.
    if (seq.value(pos) != v) {
      throw std::logic_error("minimal island " + to_string(seg) + " is not constant");
    }
  }
  const std::uint32_t m = maximin(seq, seg);
  const Dyadic kraft = partial_kraft(seq, seg);
  const std::size_t r = run_repetitions(seg.length(), v, m, seg, kraft);

  std::vector<std::uint32_t> reduced;
  reduced.reserve(seq.size() - seg.length() + r);
  const auto& values = seq.values();
  reduced.insert(reduced.end(), values.begin(), values.begin() + (seg.lo - 1));
  reduced.insert(reduced.end(), r, m);
  reduced.insert(reduced.end(), values.begin() + seg.hi, values.end());
  return ContractResult{LengthSeq(std::move(reduced)), r, seg.lo};
}

Segment reindex(const Segment& seg, const Segment& contracted, std::size_t r) {
  if (seg == contracted) {
    throw std::domain_error("reindex is undefined on the contracted island itself");
  }
  if (r < 1) {
    throw std::domain_error("repetition count must be >= 1");
  }
  const std::size_t i = contracted.lo, j = contracted.hi;
  const std::size_t removed = j - i + 1;
  if (seg.hi < i) {
    return seg;
  }
  if (j < seg.lo) {
    return Segment{seg.lo - removed + r, seg.hi - removed + r};
  }
  if (!seg.contains(contracted)) {
    // Laminar family: any segment meeting the contracted island either
    // contains it or lies strictly inside, and a minimal island has no
    // proper sub-island.
    throw std::domain_error("segment " + to_string(seg) +
                            " overlaps the contracted island " + to_string(contracted));
  }
  return Segment{seg.lo, seg.hi - removed + r};
}

BinTree reconstruct(const LengthSeq& seq, ContractionOrder order) {
  Verdict verdict = validate(seq);
  if (!verdict.valid) {
    throw ValidityError(std::move(verdict));
  }

  // Working state for the induction: the current reduced sequence, where
  // every position also carries the subtree that the final tree hangs at
  // the corresponding leaf of the reduced sequence's tree. Contracting a
  // run then groups 2^(v-m) adjacent subtrees under each fresh uniform
  // skeleton, which is exactly "append uniform trees of depth v - m to the
  // r leaves at the contraction site".
  std::vector<std::uint32_t> values = seq.values();
  std::vector<BinTree> trees(values.size());

  std::size_t prev_island_count = find_islands_fast(LengthSeq(values)).size();
  while (values.size() > 1 || values[0] != 0) {
    const LengthSeq cur(values);
    const std::vector<Segment> islands = find_islands_fast(cur);
    const std::vector<Segment> leaves = minimal_segments(islands);
    assert(!leaves.empty());
    const Segment target =
        order == ContractionOrder::kLeftmost ? leaves.front() : leaves.back();

    const std::uint32_t v = values[target.lo - 1];
    const std::uint32_t m = maximin(cur, target);
    const std::size_t count = target.length();
    const std::size_t r =
        run_repetitions(count, v, m, target, partial_kraft(cur, target));
    const std::uint32_t depth = v - m;

    // Build the r replacement subtrees by folding adjacent pairs depth
    // times, then splice them (and the value m) over the contracted run.
    std::vector<BinTree> group(trees.begin() + (target.lo - 1),
                               trees.begin() + target.hi);
    for (std::uint32_t step = 0; step < depth; ++step) {
      std::vector<BinTree> next;
      next.reserve(group.size() / 2);
      for (std::size_t q = 0; q + 1 < group.size(); q += 2) {
        next.push_back(BinTree::internal(std::move(group[q]), std::move(group[q + 1])));
      }
      group = std::move(next);
    }
    assert(group.size() == r);

    values.erase(values.begin() + (target.lo - 1), values.begin() + target.hi);
    values.insert(values.begin() + (target.lo - 1), r, m);
    trees.erase(trees.begin() + (target.lo - 1), trees.begin() + target.hi);
    trees.insert(trees.begin() + (target.lo - 1),
                 std::make_move_iterator(group.begin()),
                 std::make_move_iterator(group.end()));

    // Each contraction clips exactly one node off the tree of islands.
    const std::size_t island_count = find_islands_fast(LengthSeq(values)).size();
    assert(island_count < prev_island_count);
    prev_island_count = island_count;
  }

  return std::move(trees.front());
}

}  // namespace pathlen
