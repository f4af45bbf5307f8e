#include "pathlen/validate.hpp"

namespace pathlen {

std::string Verdict::describe() const {
  if (valid) return "valid";
  if (const auto* k = std::get_if<KraftSumNotOne>(&*witness)) {
    return "kraft sum = " + k->actual.str() + " ≠ 1";
  }
  const auto& w = std::get<NonIntegerScaledKraft>(*witness);
  return "island " + to_string(w.seg) + ": 2^" + std::to_string(w.m) +
         "·K = " + w.kraft.scaled_pow2(w.m).str() + " not an integer";
}

Verdict validate(const LengthSeq& seq) {
  Dyadic total = kraft_sum(seq);
  if (!total.is_one()) {
    return Verdict::fail(KraftSumNotOne{std::move(total)});
  }
  // Nodes of the forest are stored in (lo, hi) lexicographic order, so the
  // first offender found is the witness the contract asks for.
  IslandForest forest(seq);
  for (const IslandNode& node : forest.nodes()) {
    if (!node.kraft.scaled_is_integer(node.m)) {
      return Verdict::fail(NonIntegerScaledKraft{node.seg, node.m, node.kraft});
    }
  }
  return Verdict::ok();
}

bool validate_prefix_alignment(const LengthSeq& seq) {
  Dyadic prefix;
  for (std::uint32_t l : seq.values()) {
    // The k-th leaf's interval must start on a multiple of its own width.
    if (!prefix.scaled_is_integer(l)) {
      return false;
    }
    prefix += Dyadic::pow2_neg(l);
  }
  return prefix.is_one();
}

}  // namespace pathlen
