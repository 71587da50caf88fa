#pragma once

// Formal fractions [p,q]: integer pairs modulo a global sign, never reduced by
// common factors (2/4 != 1/2, but 1/2 == -1/-2). Addition always uses the
// product of denominators: [p,q] + [r,s] = [p*s + q*r, q*s].

#include <cstdint>
#include <numeric>
#include <string>

#include "tanglegcd/checked_int.hpp"

namespace tanglegcd {

struct FormalFraction {
  // Canonical representative: q > 0, or q == 0 and p >= 0.
  std::int64_t p = 0;
  std::int64_t q = 1;

  constexpr FormalFraction() = default;

  FormalFraction(std::int64_t num, std::int64_t den) : p(num), q(den) {
    if (q < 0 || (q == 0 && p < 0)) {
      p = checked_neg(p);
      q = checked_neg(q);
    }
  }

  friend bool operator==(const FormalFraction&, const FormalFraction&) = default;

  friend FormalFraction operator+(const FormalFraction& a, const FormalFraction& b) {
    return FormalFraction(checked_add(checked_mul(a.p, b.q), checked_mul(a.q, b.p)),
                          checked_mul(a.q, b.q));
  }

  FormalFraction& operator+=(const FormalFraction& b) { return *this = *this + b; }
};

// Quarter-turn: [p,q]* = [-q,p]. Applying it twice flips the global sign,
// which is the identity on equivalence classes.
inline FormalFraction star(const FormalFraction& a) {
  return FormalFraction(checked_neg(a.q), a.p);
}

inline FormalFraction reflected(const FormalFraction& a) {
  return FormalFraction(checked_neg(a.p), a.q);
}

// reflect(star(a)) = [q,p].
inline FormalFraction reciprocal(const FormalFraction& a) {
  return FormalFraction(a.q, a.p);
}

// gcd(|p|,|q|) with gcd(0,0) = 0.
inline std::int64_t content_gcd(const FormalFraction& a) {
  return std::gcd(checked_abs(a.p), checked_abs(a.q));
}

inline std::string to_string(const FormalFraction& a) {
  return std::to_string(a.p) + "/" + std::to_string(a.q);
}

}  // namespace tanglegcd
