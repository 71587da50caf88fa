#pragma once

#include <cstdint>
#include <stdexcept>

namespace tanglegcd {

// All desk-scale arithmetic in this library fits comfortably in 64 bits, but
// every operation that could leave the range is checked rather than assumed.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in addition");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in subtraction");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in multiplication");
  return r;
}

inline std::int64_t checked_neg(std::int64_t a) {
  return checked_sub(0, a);
}

inline std::int64_t checked_abs(std::int64_t a) {
  return a < 0 ? checked_neg(a) : a;
}

}  // namespace tanglegcd
