#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cubic27 {

/// Thrown when an exact integer operation would leave the int64 range.
class OverflowError : public std::overflow_error {
public:
  explicit OverflowError(const std::string &what) : std::overflow_error(what) {}
};

inline int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 overflow in addition");
  return r;
}

inline int64_t checked_sub(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("int64 overflow in subtraction");
  return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 overflow in multiplication");
  return r;
}

// a + q*b
inline int64_t checked_axpy(int64_t a, int64_t q, int64_t b) {
  return checked_add(a, checked_mul(q, b));
}

inline int64_t checked_neg(int64_t a) { return checked_sub(0, a); }

inline int64_t abs_value(int64_t a) { return a < 0 ? checked_neg(a) : a; }

/// Floor division for b > 0.
inline int64_t floor_div(int64_t a, int64_t b) {
  int64_t q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

inline int64_t gcd64(int64_t a, int64_t b) {
  a = abs_value(a);
  b = abs_value(b);
  while (b != 0) {
    int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

} // namespace cubic27
