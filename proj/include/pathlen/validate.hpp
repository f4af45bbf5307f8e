#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "pathlen/dyadic.hpp"
#include "pathlen/islands.hpp"
#include "pathlen/sequence.hpp"

namespace pathlen {

struct KraftSumNotOne {
  Dyadic actual;
};

struct NonIntegerScaledKraft {
  Segment seg;
  std::uint32_t m = 0;
  Dyadic kraft;
};

using Witness = std::variant<KraftSumNotOne, NonIntegerScaledKraft>;

// Outcome of validation: valid exactly when no witness is present. The
// witness pinpoints either the Kraft-sum hypothesis failing or the first
// island (in (lo, hi) lexicographic order) whose scaled Kraft sum
// 2^m(S) * K(S) is not an integer.
struct Verdict {
  bool valid = false;
  std::optional<Witness> witness;

  static Verdict ok() { return Verdict{true, std::nullopt}; }
  static Verdict fail(Witness w) { return Verdict{false, std::move(w)}; }

  // One-line description: "valid", "kraft sum = p/q ≠ 1" or
  // "island [i,j]: 2^m·K = p/q not an integer".
  std::string describe() const;
};

class ValidityError : public std::runtime_error {
 public:
  explicit ValidityError(Verdict verdict)
      : std::runtime_error(verdict.describe()), verdict_(std::move(verdict)) {}
  const Verdict& verdict() const { return verdict_; }

 private:
  Verdict verdict_;
};

// Decides whether seq is the left-to-right leaf-depth sequence of some
// binary tree: the Kraft sum must be exactly 1 and every island S must have
// an integer scaled Kraft sum 2^m(S) * K(S). The Kraft-sum hypothesis is
// checked first and reported separately.
Verdict validate(const LengthSeq& seq);

// Independent oracle for the same predicate, with no island machinery:
// valid iff the Kraft sum is 1 and every prefix sum a_k = sum_{t<k} 2^-l_t
// is an integer multiple of 2^-l_k (each codeword interval starts on its
// own dyadic grid). Agreement with validate() is enforced by tests, never
// assumed.
bool validate_prefix_alignment(const LengthSeq& seq);

}  // namespace pathlen
