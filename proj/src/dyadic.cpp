#include "pathlen/dyadic.hpp"

#include <utility>

namespace pathlen {

Dyadic::Dyadic(BigInt numerator, std::uint32_t exponent)
    : num_(std::move(numerator)), exp_(exponent) {
  if (num_ < 0) {
    throw std::domain_error("dyadic numerator must be non-negative");
  }
  canonicalize();
}

void Dyadic::canonicalize() {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  if (exp_ > 0 && !boost::multiprecision::bit_test(num_, 0)) {
    // Strip all shared factors of two in one shift.
    std::uint32_t tz = static_cast<std::uint32_t>(boost::multiprecision::lsb(num_));
    std::uint32_t shift = tz < exp_ ? tz : exp_;
    num_ >>= shift;
    exp_ -= shift;
  }
}

Dyadic Dyadic::scaled_pow2(std::uint32_t m) const {
  if (num_ == 0) return Dyadic();
  if (m >= exp_) {
    return Dyadic(num_ << (m - exp_), 0);
  }
  return Dyadic(num_, exp_ - m);
}

const BigInt& Dyadic::as_integer() const {
  if (exp_ != 0) {
    throw std::domain_error("dyadic is not an integer");
  }
  return num_;
}

Dyadic Dyadic::operator+(const Dyadic& rhs) const {
  Dyadic out(*this);
  out += rhs;
  return out;
}

Dyadic& Dyadic::operator+=(const Dyadic& rhs) {
  // Align to the common exponent, add numerators, then re-canonicalize.
  std::uint32_t e = exp_ > rhs.exp_ ? exp_ : rhs.exp_;
  num_ <<= (e - exp_);
  num_ += rhs.num_ << (e - rhs.exp_);
  exp_ = e;
  canonicalize();
  return *this;
}

Dyadic Dyadic::operator-(const Dyadic& rhs) const {
  std::uint32_t e = exp_ > rhs.exp_ ? exp_ : rhs.exp_;
  BigInt a = num_ << (e - exp_);
  BigInt b = rhs.num_ << (e - rhs.exp_);
  if (a < b) {
    throw std::domain_error("dyadic subtraction underflow");
  }
  return Dyadic(a - b, e);
}

std::strong_ordering Dyadic::operator<=>(const Dyadic& rhs) const {
  std::uint32_t e = exp_ > rhs.exp_ ? exp_ : rhs.exp_;
  BigInt a = num_ << (e - exp_);
  BigInt b = rhs.num_ << (e - rhs.exp_);
  if (a < b) return std::strong_ordering::less;
  if (a > b) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Dyadic::str() const {
  if (exp_ == 0) return num_.str();
  BigInt denom = BigInt(1) << exp_;
  return num_.str() + "/" + denom.str();
}

}  // namespace pathlen
