#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace nwsp {

// Edge weights are 64-bit on input but internal transforms (scaling by 4n,
// by n^2, subtracting n^3*L, accumulated potentials) need more headroom, so
// all internal weights and distances are 128-bit.
using i128 = __int128;
using i64 = std::int64_t;
using u64 = std::uint64_t;

// Distance sentinel for "unreachable". Kept far away from any value that
// legal transforms can produce, and never used in arithmetic.
inline constexpr i128 kInfDist = (i128(1) << 126);

inline bool is_inf(i128 x) { return x == kInfDist; }

struct OverflowError : std::overflow_error {
  OverflowError() : std::overflow_error("128-bit arithmetic overflow") {}
};

inline i128 checked_add(i128 a, i128 b) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError();
  return r;
}

inline i128 checked_sub(i128 a, i128 b) {
  i128 r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError();
  return r;
}

inline i128 checked_mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError();
  return r;
}

// ceil(a / b) for b > 0.
inline i128 ceil_div(i128 a, i128 b) {
  i128 q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

// floor(a / b) for b > 0.
inline i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

std::string to_string(i128 v);

// Narrow to int64, throwing on overflow. Used at API boundaries.
inline i64 to_i64(i128 v) {
  if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min())
    throw OverflowError();
  return static_cast<i64>(v);
}

}  // namespace nwsp
