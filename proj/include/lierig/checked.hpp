#pragma once

#include <cstdint>

#include "lierig/error.hpp"

// Overflow-checked integer helpers. Multiplicities and tensor coefficients
// are small at the scales we run, so wraparound is treated as a hard error.
namespace lierig::checked {

template <typename T>
inline T add(T a, T b) {
  T r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::Overflow, "integer addition");
  return r;
}

template <typename T>
inline T sub(T a, T b) {
  T r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(Errc::Overflow, "integer subtraction");
  return r;
}

template <typename T>
inline T mul(T a, T b) {
  T r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::Overflow, "integer multiplication");
  return r;
}

}  // namespace lierig::checked
