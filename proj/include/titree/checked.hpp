#pragma once

#include <cstdint>
#include <string_view>

#include "titree/error.hpp"

namespace titree::checked {

inline std::int64_t add(std::int64_t a, std::int64_t b, std::string_view what = "addition") {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw Error(Errc::Overflow, std::string(what));
  return out;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b, std::string_view what = "subtraction") {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(a, b, &out)) throw Error(Errc::Overflow, std::string(what));
  return out;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b, std::string_view what = "multiplication") {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(Errc::Overflow, std::string(what));
  return out;
}

/// Exact division; a remainder is reported, never truncated.
inline std::int64_t div_exact(std::int64_t num, std::int64_t den, std::string_view what) {
  if (den == 0 || num % den != 0) {
    throw Error(Errc::NonIntegerResult, std::string(what) + " is not an integer");
  }
  return num / den;
}

}  // namespace titree::checked
