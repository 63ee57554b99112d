#pragma once

// Exact nonnegative dyadic rationals p/2^k. Normal form: odd numerator, or
// 0/2^0. No floating point anywhere in the measure computations.

#include <compare>
#include <cstdint>
#include <string>

namespace ob {

class Dyadic {
 public:
  Dyadic() = default;  // zero
  Dyadic(std::uint64_t numerator, unsigned exponent);

  static Dyadic zero() { return Dyadic(); }
  static Dyadic one() { return Dyadic(1, 0); }
  // 1/2^k.
  static Dyadic half_power(unsigned k) { return Dyadic(1, k); }

  std::uint64_t numerator() const { return num_; }
  unsigned exponent() const { return exp_; }
  bool is_zero() const { return num_ == 0; }

  Dyadic doubled() const;

  // Rendered as "p/2^k" in normal form.
  std::string str() const;

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  // Throws on a negative result.
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);

  std::strong_ordering operator<=>(const Dyadic& other) const;
  bool operator==(const Dyadic& other) const;

 private:
  void normalize();

  std::uint64_t num_ = 0;
  unsigned exp_ = 0;
};

}  // namespace ob
