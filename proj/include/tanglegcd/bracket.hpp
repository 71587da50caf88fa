#pragma once

// State-sum evaluation of the Kauffman bracket at A = e^{i*pi/4}.
//
// At this evaluation point the loop factor -A^2 - A^{-2} vanishes, so only
// states without spare loops contribute: monocyclic states for a link, and
// loop-free (acyclic) states for a tangle. A tangle's compositional state is
// the pair (<n(T)>, <d(T)>) of its two closure brackets; vertical states feed
// the numerator component, horizontal states the denominator component.
//
// State enumeration is an exact 2^c sum. Partial sums over disjoint state
// ranges are plain CycInt additions, so the sum may be partitioned freely;
// the single-threaded loop below is well within the intended scale (cap 30).

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "tanglegcd/diagram.hpp"
#include "tanglegcd/fraction.hpp"
#include "tanglegcd/ring.hpp"

namespace tanglegcd {

inline constexpr int kDefaultCrossingCap = 30;

// (<n(T)>, <d(T)>) for a tangle T.
struct BracketVector {
  CycInt num;
  CycInt den;

  friend bool operator==(const BracketVector&, const BracketVector&) = default;
};

namespace detail {

inline void check_cap(std::size_t crossings, int cap) {
  if (cap < 0 || cap > 62) throw std::invalid_argument("crossing cap must be in 0..62");
  if (crossings > static_cast<std::size_t>(cap))
    throw std::invalid_argument("diagram has " + std::to_string(crossings) +
                                " crossings, over the state-sum cap of " + std::to_string(cap) +
                                " (raise the cap to proceed)");
}

// A^(a-b) where a/b count A/B smoothings in the state.
inline CycInt state_weight(std::size_t crossings, SmoothingState state) {
  int b = std::popcount(state);
  return unit_pow(static_cast<std::int64_t>(crossings) - 2 * b);
}

}  // namespace detail

// Sum of A^(a-b) over monocyclic states. A single crossing-free circle is the
// unit of normalization: its bracket is 1.
inline CycInt bracket_link(const LinkDiagram& l, int cap = kDefaultCrossingCap) {
  validate(l);
  detail::check_cap(l.crossings.size(), cap);
  const std::size_t c = l.crossings.size();
  if (c == 0) {
    if (l.closed_loops == 0)
      throw std::invalid_argument("bracket of the empty diagram is undefined");
    return l.closed_loops == 1 ? CycInt::integer(1) : CycInt{};
  }
  if (l.closed_loops > 0) return CycInt{};  // every state carries the spare circles

  CycInt total;
  UnionFind uf(l.edge_count());
  const SmoothingState end = SmoothingState{1} << c;
  for (SmoothingState s = 0; s < end; ++s) {
    uf.reset();
    int loops = detail::smooth_unions(l.crossings, s, uf, /*give_up_at=*/2);
    if (loops == 1) total += detail::state_weight(c, s);
  }
  return total;
}

// Loop-free states only; vertical ones sum into <n(T)>, horizontal ones into
// <d(T)>. A diagram with crossing-free circles has the zero vector.
inline BracketVector bracket_vector(const TangleDiagram& t, int cap = kDefaultCrossingCap) {
  validate(t);
  detail::check_cap(t.crossings.size(), cap);
  if (t.closed_loops > 0) return BracketVector{};

  const std::size_t c = t.crossings.size();
  BracketVector out;
  UnionFind uf(t.edge_count());
  const SmoothingState end = SmoothingState{1} << c;
  for (SmoothingState s = 0; s < end; ++s) {
    uf.reset();
    if (detail::smooth_unions(t.crossings, s, uf, /*give_up_at=*/1) > 0) continue;
    switch (detail::corner_pairing(uf, t.boundary)) {
      case Pairing::Vertical: out.num += detail::state_weight(c, s); break;
      case Pairing::Horizontal: out.den += detail::state_weight(c, s); break;
      case Pairing::Crossed: break;  // cannot arise from a planar diagram
    }
  }
  return out;
}

// |<L>|. The bracket of any planar link diagram is an integer multiple of a
// unit; anything else is a malformed (non-planar) input.
inline std::int64_t determinant(const LinkDiagram& l, int cap = kDefaultCrossingCap) {
  CycInt b = bracket_link(l, cap);
  auto um = as_unit_multiple(b);
  if (!um)
    throw std::runtime_error("link bracket " + to_string(b) +
                             " is not a unit multiple; input is not a planar diagram");
  return um->magnitude;
}

// ---- compositional calculus on bracket vectors ---------------------------

// Vector of t + t': (N*D' + D*N', D*D').
inline BracketVector compose(const BracketVector& v, const BracketVector& w) {
  return BracketVector{v.num * w.den + v.den * w.num, v.den * w.den};
}

inline BracketVector rotated(const BracketVector& v) { return BracketVector{v.den, v.num}; }

inline BracketVector reflected(const BracketVector& v) {
  return BracketVector{conj(v.num), conj(v.den)};
}

inline const BracketVector& twist_vector(int sign) {
  static const BracketVector pos{unit_pow(1), unit_pow(-1)};  // T_1: (A, A^{-1})
  static const BracketVector neg{unit_pow(-1), unit_pow(1)};
  return sign > 0 ? pos : neg;
}

inline BracketVector zero_tangle_vector() {
  return BracketVector{CycInt{}, CycInt::integer(1)};  // T_0: (0, 1)
}

// ---- invariant extraction -------------------------------------------------

// Finds a unit u with u*<n(T)> and u*i*<d(T)> both integers and returns the
// class [p,q]. Some unit always works for vectors coming from planar
// diagrams; the eight candidates are tried in a fixed order, and any hit
// yields the same class.
inline FormalFraction invariant(const BracketVector& v) {
  if (v.num.is_zero() && v.den.is_zero()) return FormalFraction(0, 0);
  const CycInt i = unit_pow(2);
  for (int k = 0; k < 8; ++k) {
    CycInt u = unit_pow(k);
    auto p = as_integer(u * v.num);
    auto q = as_integer(u * i * v.den);
    if (p && q) return FormalFraction(*p, *q);
  }
  throw std::runtime_error("bracket vector (" + to_string(v.num) + ", " + to_string(v.den) +
                           ") admits no integral unit normalization; input is not a planar "
                           "diagram");
}

inline FormalFraction invariant(const TangleDiagram& t, int cap = kDefaultCrossingCap) {
  return invariant(bracket_vector(t, cap));
}

// ---- the gcd obstruction ---------------------------------------------------

struct ObstructionReport {
  FormalFraction tangle_fraction;
  std::int64_t gcd = 0;
  std::int64_t link_determinant = 0;
  bool divides = false;  // false proves the embedding impossible

  friend bool operator==(const ObstructionReport&, const ObstructionReport&) = default;
};

// Divisibility with the gcd conventions: 0 divides only 0, 1 divides all.
inline bool gcd_divides(std::int64_t g, std::int64_t n) {
  return g == 0 ? n == 0 : n % g == 0;
}

inline ObstructionReport obstruct(const FormalFraction& tangle_fraction,
                                  std::int64_t link_determinant) {
  if (link_determinant < 0)
    throw std::invalid_argument("link determinant must be non-negative");
  std::int64_t g = content_gcd(tangle_fraction);
  return ObstructionReport{tangle_fraction, g, link_determinant,
                           gcd_divides(g, link_determinant)};
}

inline ObstructionReport obstruct(const TangleDiagram& t, const LinkDiagram& l,
                                  int cap = kDefaultCrossingCap) {
  return obstruct(invariant(t, cap), determinant(l, cap));
}

}  // namespace tanglegcd
