#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "powcol/error.hpp"

namespace powcol {

struct BoundParams {
  int delta = 3;  // maximum degree of the forest
  int m = 1;      // power
};

namespace detail {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw DomainError("bound evaluation overflows 64-bit integers");
  return out;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw DomainError("bound evaluation overflows 64-bit integers");
  return out;
}

inline void require_closed_form(const BoundParams& b) {
  if (b.m < 1) throw DomainError("bounds need m >= 1, got m = " + std::to_string(b.m));
  if (b.delta < 3) {
    throw DomainError("closed-form bounds need delta >= 3, got delta = " + std::to_string(b.delta) +
                      "; use geometric_bound() for delta = 2");
  }
}

}  // namespace detail

// sum_{k=0}^{m-1} (delta-1)^k: marked vertices within distance m on the ancestor side.
inline std::int64_t ancestor_bound(const BoundParams& b) {
  if (b.m < 1 || b.delta < 2) throw DomainError("ancestor_bound needs delta >= 2 and m >= 1");
  std::int64_t sum = 0;
  std::int64_t term = 1;
  for (int k = 0; k < b.m; ++k) {
    sum = detail::checked_add(sum, term);
    if (k + 1 < b.m) term = detail::checked_mul(term, b.delta - 1);
  }
  return sum;
}

// 2^m - 1: active vertices within distance m below an unmarked vertex.
inline std::int64_t child_bound(int m) {
  if (m < 1) throw DomainError("child_bound needs m >= 1");
  if (m > 62) throw DomainError("bound evaluation overflows 64-bit integers");
  return (std::int64_t{1} << m) - 1;
}

// Ceiling on marked m<=-neighbours of an unmarked vertex after each refined-strategy move.
inline std::int64_t bound_mm(const BoundParams& b) {
  detail::require_closed_form(b);
  return detail::checked_add(ancestor_bound(b), child_bound(b.m));
}

// ((delta-1)^m - 1) / (delta-2) + 2^m + 1
inline std::int64_t bound_thm2(const BoundParams& b) { return detail::checked_add(bound_mm(b), 2); }

// 2((delta-1)^m - 1) / (delta-2) + 2
inline std::int64_t bound_thm1(const BoundParams& b) {
  detail::require_closed_form(b);
  return detail::checked_add(detail::checked_mul(2, ancestor_bound(b)), 2);
}

// The improved bound evaluated through its geometric sum, which stays meaningful at delta = 2.
inline std::int64_t geometric_bound(const BoundParams& b) {
  return detail::checked_add(detail::checked_add(ancestor_bound(b), child_bound(b.m)), 2);
}

}  // namespace powcol
