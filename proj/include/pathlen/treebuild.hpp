#pragma once

#include <cstddef>
#include <cstdint>

#include "pathlen/bintree.hpp"
#include "pathlen/islands.hpp"
#include "pathlen/sequence.hpp"
#include "pathlen/validate.hpp"

namespace pathlen {

// Result of contracting a minimal island [i,j]: the constant run is
// replaced by r = 2^m(S) * K(S) copies of m(S).
struct ContractResult {
  LengthSeq reduced;
  std::size_t r = 0;     // repetition count, always >= 1
  std::size_t site = 0;  // 1-based index where the replacement run begins
};

// Contract the minimal island seg of seq. Throws std::domain_error when
// seg is not an island or not minimal, and ValidityError (with the
// NonIntegerScaledKraft witness) when 2^m * K(seg) is not an integer.
ContractResult contract(const LengthSeq& seq, const Segment& seg);

// The index bijection f between islands of the original sequence (with the
// contracted island removed) and islands of the reduced sequence:
//   [h,k]            stays put              when k < i
//   shift by r-(j-i+1) on both ends         when j < h
//   shift by r-(j-i+1) on the right end     otherwise (seg contains [i,j])
// Throws std::domain_error when seg equals the contracted island or
// overlaps it in a non-laminar way.
Segment reindex(const Segment& seg, const Segment& contracted, std::size_t r);

enum class ContractionOrder {
  kLeftmost,   // always contract the leftmost minimal island
  kRightmost,  // always contract the rightmost; must yield the same tree
};

// Rebuild the unique binary tree whose leaf-depth sequence is seq:
// validate, then repeatedly contract a minimal island, and grow the tree
// back by hanging uniform (perfect) subtrees of depth l_i - m(S) where each
// contraction happened. Throws ValidityError on invalid input.
BinTree reconstruct(const LengthSeq& seq,
                    ContractionOrder order = ContractionOrder::kLeftmost);

}  // namespace pathlen
