#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace pathlen {

using BigInt = boost::multiprecision::cpp_int;

// Exact dyadic rational p / 2^e with p >= 0. Canonical form keeps p odd,
// except for zero which is stored as 0 / 2^0. All arithmetic is exact;
// there is no rounding path anywhere in this class.
//
// Kraft sums of length sequences live here: a sequence with maximum value
// L produces numerators of at most L + log2(n) bits, so the numerator must
// be arbitrary precision.
class Dyadic {
 public:
  Dyadic() : num_(0), exp_(0) {}

  // value = numerator / 2^exponent, canonicalized on construction.
  Dyadic(BigInt numerator, std::uint32_t exponent);

  static Dyadic zero() { return Dyadic(); }
  static Dyadic one() { return Dyadic(BigInt(1), 0); }

  // 2^-l, the Kraft mass of a single codeword of length l.
  static Dyadic pow2_neg(std::uint32_t l) { return Dyadic(BigInt(1), l); }

  static Dyadic from_integer(BigInt value) { return Dyadic(std::move(value), 0); }

  const BigInt& numerator() const { return num_; }
  std::uint32_t exponent() const { return exp_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return exp_ == 0; }
  bool is_one() const { return exp_ == 0 && num_ == 1; }

  // True iff value * 2^m is an integer, i.e. the exponent does not exceed m.
  bool scaled_is_integer(std::uint32_t m) const { return exp_ <= m; }

  // value * 2^m, exact.
  Dyadic scaled_pow2(std::uint32_t m) const;

  // Integer value; requires is_integer().
  const BigInt& as_integer() const;

  Dyadic operator+(const Dyadic& rhs) const;
  Dyadic& operator+=(const Dyadic& rhs);

  // Exact difference; throws std::domain_error if rhs > *this (values are
  // non-negative by invariant).
  Dyadic operator-(const Dyadic& rhs) const;

  bool operator==(const Dyadic& rhs) const {
    return num_ == rhs.num_ && exp_ == rhs.exp_;
  }
  std::strong_ordering operator<=>(const Dyadic& rhs) const;

  // "p" when integral, "p/2^e evaluated" otherwise, e.g. "1", "3/8".
  std::string str() const;

 private:
  void canonicalize();

  BigInt num_;
  std::uint32_t exp_;
};

}  // namespace pathlen
