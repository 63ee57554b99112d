#include "ob/dyadic.hpp"

#include <utility>

#include "ob/errors.hpp"

namespace ob {

namespace {

constexpr unsigned kMaxExponent = 62;

std::uint64_t checked_shift(std::uint64_t value, unsigned by) {
  if (by != 0 && (value >> (64 - by)) != 0)
    throw Error(Errc::InvalidInput, "dyadic numerator overflow");
  return value << by;
}

// Aligns both values to a common exponent and returns the scaled numerators.
std::pair<std::uint64_t, std::uint64_t> aligned(const Dyadic& a,
                                                const Dyadic& b,
                                                unsigned& exponent) {
  exponent = a.exponent() > b.exponent() ? a.exponent() : b.exponent();
  return {checked_shift(a.numerator(), exponent - a.exponent()),
          checked_shift(b.numerator(), exponent - b.exponent())};
}

}  // namespace

Dyadic::Dyadic(std::uint64_t numerator, unsigned exponent)
    : num_(numerator), exp_(exponent) {
  if (exp_ > kMaxExponent)
    throw Error(Errc::InvalidInput,
                "dyadic exponent " + std::to_string(exp_) + " beyond budget");
  normalize();
}

void Dyadic::normalize() {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  while ((num_ & 1u) == 0 && exp_ > 0) {
    num_ >>= 1;
    --exp_;
  }
}

Dyadic Dyadic::doubled() const {
  if (num_ == 0) return *this;
  if (exp_ > 0) return Dyadic(num_, exp_ - 1);
  return Dyadic(num_ * 2, 0);
}

std::string Dyadic::str() const {
  return std::to_string(num_) + "/2^" + std::to_string(exp_);
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  unsigned e = 0;
  auto [na, nb] = aligned(a, b, e);
  if (na > UINT64_MAX - nb)
    throw Error(Errc::InvalidInput, "dyadic sum overflow");
  return Dyadic(na + nb, e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) {
  unsigned e = 0;
  auto [na, nb] = aligned(a, b, e);
  if (na < nb)
    throw Error(Errc::InvalidInput,
                "dyadic subtraction " + a.str() + " - " + b.str() +
                    " is negative");
  return Dyadic(na - nb, e);
}

std::strong_ordering Dyadic::operator<=>(const Dyadic& other) const {
  unsigned e = 0;
  auto [na, nb] = aligned(*this, other, e);
  return na <=> nb;
}

bool Dyadic::operator==(const Dyadic& other) const {
  return num_ == other.num_ && exp_ == other.exp_;
}

}  // namespace ob
