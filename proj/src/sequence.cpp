#include "pathlen/sequence.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace pathlen {

std::string to_string(const Segment& seg) {
  return "[" + std::to_string(seg.lo) + "," + std::to_string(seg.hi) + "]";
}

LengthSeq::LengthSeq(std::vector<std::uint32_t> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw std::domain_error("length sequence must have n >= 1");
  }
}

LengthSeq::LengthSeq(std::initializer_list<std::uint32_t> values)
    : LengthSeq(std::vector<std::uint32_t>(values)) {}

void LengthSeq::check_segment(const Segment& seg) const {
  if (seg.lo < 1 || seg.lo > seg.hi || seg.hi > values_.size()) {
    throw std::domain_error("segment " + to_string(seg) + " out of range for n=" +
                            std::to_string(values_.size()));
  }
}

Dyadic kraft_sum(const LengthSeq& seq) {
  return partial_kraft(seq, seq.full_segment());
}

Dyadic partial_kraft(const LengthSeq& seq, const Segment& seg) {
  seq.check_segment(seg);
  Dyadic sum;
  for (std::size_t pos = seg.lo; pos <= seg.hi; ++pos) {
    sum += Dyadic::pow2_neg(seq.value(pos));
  }
  return sum;
}

std::uint32_t segment_min(const LengthSeq& seq, const Segment& seg) {
  seq.check_segment(seg);
  std::uint32_t m = seq.value(seg.lo);
  for (std::size_t pos = seg.lo + 1; pos <= seg.hi; ++pos) {
    m = std::min(m, seq.value(pos));
  }
  return m;
}

std::uint32_t maximin(const LengthSeq& seq, const Segment& seg) {
  seq.check_segment(seg);
  if (seg.lo == 1 && seg.hi == seq.size()) {
    return 0;
  }
  // Any proper superinterval includes a neighbor, and extending beyond the
  // nearest neighbor can only lower the interval minimum, so the best
  // candidates are [lo-1, hi] and [lo, hi+1].
  std::int64_t best_neighbor = -1;
  if (seg.lo > 1) {
    best_neighbor = seq.value(seg.lo - 1);
  }
  if (seg.hi < seq.size()) {
    best_neighbor = std::max<std::int64_t>(best_neighbor, seq.value(seg.hi + 1));
  }
  std::uint32_t inner = segment_min(seq, seg);
  return static_cast<std::uint32_t>(std::min<std::int64_t>(inner, best_neighbor));
}

}  // namespace pathlen
