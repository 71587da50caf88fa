#pragma once

// Exact arithmetic in Z[A]/(A^4 + 1), the ring of eighth-cyclotomic integers.
// A stands for e^{i*pi/4}; the eight units are {±1, ±A, ±A^2, ±A^3} and the
// Kauffman-bracket loop factor -A^2 - A^{-2} is exactly zero here.

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "tanglegcd/checked_int.hpp"

namespace tanglegcd {

struct CycInt {
  // Coefficients of 1, A, A^2, A^3.
  std::array<std::int64_t, 4> c{0, 0, 0, 0};

  constexpr CycInt() = default;
  constexpr CycInt(std::int64_t c0, std::int64_t c1, std::int64_t c2, std::int64_t c3)
      : c{c0, c1, c2, c3} {}

  static constexpr CycInt integer(std::int64_t n) { return CycInt(n, 0, 0, 0); }

  bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0; }

  friend bool operator==(const CycInt&, const CycInt&) = default;

  friend CycInt operator+(const CycInt& a, const CycInt& b) {
    CycInt r;
    for (int i = 0; i < 4; ++i) r.c[i] = checked_add(a.c[i], b.c[i]);
    return r;
  }

  friend CycInt operator-(const CycInt& a, const CycInt& b) {
    CycInt r;
    for (int i = 0; i < 4; ++i) r.c[i] = checked_sub(a.c[i], b.c[i]);
    return r;
  }

  friend CycInt operator-(const CycInt& a) {
    CycInt r;
    for (int i = 0; i < 4; ++i) r.c[i] = checked_neg(a.c[i]);
    return r;
  }

  // Polynomial product reduced by A^4 = -1.
  friend CycInt operator*(const CycInt& a, const CycInt& b) {
    CycInt r;
    for (int i = 0; i < 4; ++i) {
      if (a.c[i] == 0) continue;
      for (int j = 0; j < 4; ++j) {
        if (b.c[j] == 0) continue;
        std::int64_t term = checked_mul(a.c[i], b.c[j]);
        int k = i + j;
        if (k >= 4) {
          k -= 4;
          term = checked_neg(term);
        }
        r.c[k] = checked_add(r.c[k], term);
      }
    }
    return r;
  }

  CycInt& operator+=(const CycInt& b) { return *this = *this + b; }
  CycInt& operator*=(const CycInt& b) { return *this = *this * b; }
};

// A^(k mod 8); A^4 = -1, so negative and large exponents wrap with sign.
inline CycInt unit_pow(std::int64_t k) {
  int m = static_cast<int>(((k % 8) + 8) % 8);
  CycInt r;
  r.c[m % 4] = (m < 4) ? 1 : -1;
  return r;
}

// Ring automorphism A -> A^{-1} = -A^3, i.e. complex conjugation on Z[A].
// On the basis: 1 -> 1, A -> -A^3, A^2 -> -A^2, A^3 -> -A.
inline CycInt conj(const CycInt& a) {
  return CycInt(a.c[0], checked_neg(a.c[3]), checked_neg(a.c[2]), checked_neg(a.c[1]));
}

struct UnitMultiple {
  std::int64_t magnitude;  // >= 0
  int power;               // 0..7; value = magnitude * A^power

  friend bool operator==(const UnitMultiple&, const UnitMultiple&) = default;
};

// Decomposes a = p * A^k with p >= 0 when a lies on one of the eight unit rays;
// zero decomposes as (0, 0). Elements with two or more independent nonzero
// coordinates are not of this form and yield nullopt.
inline std::optional<UnitMultiple> as_unit_multiple(const CycInt& a) {
  if (a.is_zero()) return UnitMultiple{0, 0};
  int idx = -1;
  for (int i = 0; i < 4; ++i) {
    if (a.c[i] == 0) continue;
    if (idx >= 0) return std::nullopt;
    idx = i;
  }
  std::int64_t v = a.c[idx];
  if (v > 0) return UnitMultiple{v, idx};
  return UnitMultiple{checked_neg(v), idx + 4};
}

// The integer c0 iff the A, A^2, A^3 coordinates vanish.
inline std::optional<std::int64_t> as_integer(const CycInt& a) {
  if (a.c[1] != 0 || a.c[2] != 0 || a.c[3] != 0) return std::nullopt;
  return a.c[0];
}

inline std::string to_string(const CycInt& a) {
  static const char* const kPow[4] = {"", "A", "A^2", "A^3"};
  std::string out;
  for (int i = 0; i < 4; ++i) {
    std::int64_t v = a.c[i];
    if (v == 0) continue;
    if (out.empty()) {
      if (v < 0) out += "-";
    } else {
      out += (v < 0) ? " - " : " + ";
    }
    std::int64_t m = v < 0 ? checked_neg(v) : v;
    if (m != 1 || i == 0) out += std::to_string(m);
    out += kPow[i];
  }
  return out.empty() ? "0" : out;
}

}  // namespace tanglegcd
