#include "pathlen/islands.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace pathlen {

bool is_full_segment(const LengthSeq& seq, const Segment& seg) {
  seq.check_segment(seg);
  return maximin(seq, seg) < segment_min(seq, seg);
}

std::vector<Segment> find_islands_naive(const LengthSeq& seq) {
  const auto& v = seq.values();
  const std::size_t n = v.size();
  std::vector<Segment> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t run_min = v[i];
    for (std::size_t j = i; j < n; ++j) {
      run_min = std::min(run_min, v[j]);
      // Island condition spelled out per segment: each existing neighbor
      // strictly below the inner minimum; for [1,n] the maximin is 0.
      bool island;
      if (i == 0 && j == n - 1) {
        island = run_min > 0;
      } else {
        bool left_ok = (i == 0) || v[i - 1] < run_min;
        bool right_ok = (j == n - 1) || v[j + 1] < run_min;
        island = left_ok && right_ok;
      }
      if (island) {
        out.push_back(Segment{i + 1, j + 1});
      }
    }
  }
  return out;  // loop order is already (lo, hi) lexicographic
}

namespace {

struct OpenRun {
  std::uint32_t level;
  std::size_t start;  // 1-based
};

}  // namespace

std::vector<Segment> find_islands_fast(const LengthSeq& seq, SweepStats* stats) {
  const auto& v = seq.values();
  const std::size_t n = v.size();
  std::size_t ops = 0;

  std::vector<OpenRun> stack;
  stack.reserve(64);
  // Islands bucketed by lo; within one lo they are emitted with ascending
  // hi, so concatenating buckets yields (lo, hi) lexicographic order
  // without a comparison sort.
  std::vector<std::vector<Segment>> by_lo(n + 1);
  std::size_t emitted = 0;

  for (std::size_t k = 1; k <= n; ++k) {
    ++ops;
    const std::uint32_t x = v[k - 1];
    std::size_t start = k;
    while (!stack.empty() && stack.back().level > x) {
      ++ops;
      const OpenRun run = stack.back();
      stack.pop_back();
      by_lo[run.start].push_back(Segment{run.start, k - 1});
      ++emitted;
      ++ops;
      start = run.start;
    }
    if (!stack.empty() && stack.back().level == x) {
      continue;  // equal level: the open run absorbs this position
    }
    ++ops;
    stack.push_back(OpenRun{x, start});
  }

  // Drain: every remaining run reaches the right edge. The bottom run is
  // [1,n] itself, an island only when its level (the global minimum) is
  // positive.
  while (!stack.empty()) {
    ++ops;
    const OpenRun run = stack.back();
    stack.pop_back();
    if (stack.empty() && run.level == 0) {
      break;
    }
    by_lo[run.start].push_back(Segment{run.start, n});
    ++emitted;
  }

  std::vector<Segment> out;
  out.reserve(emitted);
  for (std::size_t lo = 1; lo <= n; ++lo) {
    ++ops;
    for (const Segment& s : by_lo[lo]) {
      ++ops;
      out.push_back(s);
    }
  }

  if (stats) {
    stats->ops = ops;
  }
  assert(ops <= MAX_OPS_PER_ELEMENT * n);
  return out;
}

IslandForest::IslandForest(const LengthSeq& seq) {
  const std::vector<Segment> segs = find_islands_fast(seq);
  const std::size_t k = segs.size();
  nodes_.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    nodes_[i].seg = segs[i];
    nodes_[i].seg_min = segment_min(seq, segs[i]);
    nodes_[i].m = maximin(seq, segs[i]);
  }

  // Nesting pass in (lo asc, hi desc) order: with that ordering a stack
  // scan links every island to the smallest island properly containing it.
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (segs[a].lo != segs[b].lo) return segs[a].lo < segs[b].lo;
    return segs[a].hi > segs[b].hi;
  });
  std::vector<std::size_t> open;
  for (std::size_t idx : order) {
    while (!open.empty() && !nodes_[open.back()].seg.contains(segs[idx])) {
      open.pop_back();
    }
    if (open.empty()) {
      roots_.push_back(idx);
    } else {
      nodes_[idx].parent = open.back();
      nodes_[open.back()].children.push_back(idx);
    }
    open.push_back(idx);
  }

  // Partial Kraft sums bottom-up: each node adds the positions not covered
  // by a child plus the children's sums, so every position enters exactly
  // one direct sum and every node total is added to its parent once.
  std::vector<std::size_t> by_length(order);
  std::sort(by_length.begin(), by_length.end(), [&](std::size_t a, std::size_t b) {
    return segs[a].length() < segs[b].length();
  });
  for (std::size_t idx : by_length) {
    IslandNode& node = nodes_[idx];
    Dyadic sum;
    std::size_t pos = node.seg.lo;
    for (std::size_t child : node.children) {
      const Segment& cs = nodes_[child].seg;
      for (; pos < cs.lo; ++pos) {
        sum += Dyadic::pow2_neg(seq.value(pos));
      }
      sum += nodes_[child].kraft;
      pos = cs.hi + 1;
    }
    for (; pos <= node.seg.hi; ++pos) {
      sum += Dyadic::pow2_neg(seq.value(pos));
    }
    node.kraft = std::move(sum);
  }
}

std::optional<IslandTree> island_tree(const LengthSeq& seq) {
  IslandForest forest(seq);
  if (forest.roots().size() != 1) {
    return std::nullopt;
  }
  const Segment root_seg = forest.node(forest.roots().front()).seg;
  if (root_seg != seq.full_segment()) {
    return std::nullopt;
  }
  return IslandTree(std::move(forest));
}

std::vector<Segment> minimal_islands(const IslandTree& tree) {
  std::vector<Segment> out;
  for (const IslandNode& node : tree.forest().nodes()) {
    if (node.children.empty()) {
      out.push_back(node.seg);  // storage is lex order; leaves are disjoint
    }
  }
  return out;
}

std::vector<Segment> minimal_segments(const std::vector<Segment>& lex_islands) {
  // In (lo asc, hi desc) order every descendant of a laminar island
  // directly follows it, so an island is minimal iff its successor in that
  // order is not nested inside it.
  std::vector<Segment> order(lex_islands);
  std::sort(order.begin(), order.end(), [](const Segment& a, const Segment& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.hi > b.hi;
  });
  std::vector<Segment> out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    bool has_inner = i + 1 < order.size() && order[i].contains(order[i + 1]);
    if (!has_inner) {
      out.push_back(order[i]);  // leaves are disjoint, so this is lo-ascending
    }
  }
  return out;
}

}  // namespace pathlen
