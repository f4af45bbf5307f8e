#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "pathlen/bintree.hpp"
#include "pathlen/sequence.hpp"

namespace pathlen::testing {

inline std::string dump(const LengthSeq& seq) {
  std::string out;
  for (std::uint32_t v : seq.values()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

// Literal definition of the neighborhood maximin: the maximum over all
// proper superintervals of the minimum on the interval, 0 for [1,n].
// Deliberately independent of the closed form used by the library.
inline std::uint32_t literal_maximin(const LengthSeq& seq, const Segment& seg) {
  const auto& v = seq.values();
  const std::size_t n = v.size();
  if (seg.lo == 1 && seg.hi == n) return 0;
  std::uint32_t best = 0;
  bool found = false;
  for (std::size_t h = 1; h <= seg.lo; ++h) {
    for (std::size_t k = seg.hi; k <= n; ++k) {
      if (h == seg.lo && k == seg.hi) continue;  // proper containment only
      std::uint32_t m = v[h - 1];
      for (std::size_t t = h; t < k; ++t) m = std::min(m, v[t]);
      best = found ? std::max(best, m) : m;
      found = true;
    }
  }
  return best;
}

// Calls fn with every sequence of length 1..max_len over values
// 0..max_value, in odometer order.
inline void for_all_sequences(std::size_t max_len, std::uint32_t max_value,
                              const std::function<void(const LengthSeq&)>& fn) {
  for (std::size_t n = 1; n <= max_len; ++n) {
    std::vector<std::uint32_t> values(n, 0);
    for (;;) {
      fn(LengthSeq(values));
      std::size_t pos = n;
      while (pos > 0 && values[pos - 1] == max_value) {
        values[pos - 1] = 0;
        --pos;
      }
      if (pos == 0) break;
      ++values[pos - 1];
    }
  }
}

inline LengthSeq random_sequence(std::mt19937_64& rng, std::size_t max_len,
                                 std::uint32_t max_value) {
  const std::size_t n = 1 + rng() % max_len;
  std::vector<std::uint32_t> values(n);
  for (auto& v : values) v = static_cast<std::uint32_t>(rng() % (max_value + 1));
  return LengthSeq(std::move(values));
}

// Grows a tree by splitting random leaves; not uniform over shapes, just a
// source of valid sequences of controlled size.
inline BinTree random_tree(std::mt19937_64& rng, std::size_t n_leaves) {
  struct Builder {
    bool leaf = true;
    std::size_t left = 0, right = 0;
  };
  std::vector<Builder> nodes{Builder{}};
  std::vector<std::size_t> leaves{0};
  while (leaves.size() < n_leaves) {
    const std::size_t pick = rng() % leaves.size();
    const std::size_t idx = leaves[pick];
    nodes[idx].leaf = false;
    nodes[idx].left = nodes.size();
    nodes.push_back(Builder{});
    nodes[idx].right = nodes.size();
    nodes.push_back(Builder{});
    leaves[pick] = nodes[idx].left;
    leaves.push_back(nodes[idx].right);
  }
  // Assemble bottom-up: children have larger indices than their parent.
  std::vector<BinTree> built(nodes.size());
  for (std::size_t i = nodes.size(); i-- > 0;) {
    if (!nodes[i].leaf) {
      built[i] = BinTree::internal(std::move(built[nodes[i].left]),
                                   std::move(built[nodes[i].right]));
    }
  }
  return std::move(built[0]);
}

}  // namespace pathlen::testing
