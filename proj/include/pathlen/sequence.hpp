#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pathlen/dyadic.hpp"

namespace pathlen {

// Closed index interval [lo, hi], 1-based, within some sequence of length n.
// All public interfaces and printed forms use 1-based positions; only the
// private storage of LengthSeq is 0-based.
struct Segment {
  std::size_t lo = 0;
  std::size_t hi = 0;

  std::size_t length() const { return hi - lo + 1; }
  bool contains(const Segment& other) const {
    return lo <= other.lo && other.hi <= hi;
  }
  bool operator==(const Segment&) const = default;
  auto operator<=>(const Segment&) const = default;  // (lo, hi) lexicographic
};

std::string to_string(const Segment& seg);  // "[lo,hi]"

// A finite sequence of n >= 1 non-negative integer path lengths.
class LengthSeq {
 public:
  explicit LengthSeq(std::vector<std::uint32_t> values);
  LengthSeq(std::initializer_list<std::uint32_t> values);

  std::size_t size() const { return values_.size(); }
  const std::vector<std::uint32_t>& values() const { return values_; }

  // 1-based access, matching Segment indices.
  std::uint32_t value(std::size_t pos) const { return values_[pos - 1]; }

  Segment full_segment() const { return Segment{1, values_.size()}; }

  // Throws std::domain_error unless 1 <= lo <= hi <= n.
  void check_segment(const Segment& seg) const;

  bool operator==(const LengthSeq&) const = default;
  auto operator<=>(const LengthSeq&) const = default;

 private:
  std::vector<std::uint32_t> values_;
};

// Kraft sum of the whole sequence: sum of 2^-l_k over all positions.
Dyadic kraft_sum(const LengthSeq& seq);

// Partial Kraft sum K[i,j] = 2^-l_i + ... + 2^-l_j.
Dyadic partial_kraft(const LengthSeq& seq, const Segment& seg);

// Minimum value over the segment.
std::uint32_t segment_min(const LengthSeq& seq, const Segment& seg);

// Neighborhood maximin m[i,j]: the maximum, over all intervals [h,k]
// properly containing [i,j], of min(l_h,...,l_k); 0 when [i,j] = [1,n].
//
// Computed by the neighbor closed form
//     min(segment_min, max(l_{i-1}, l_{j+1}))
// with absent neighbors dropped. The literal max-of-mins definition is kept
// as a test oracle and the two are checked against each other exhaustively
// on small sequences.
std::uint32_t maximin(const LengthSeq& seq, const Segment& seg);

}  // namespace pathlen
