#pragma once

// Combinatorial planar-diagram (PD) codes for 4-tangles and links.
//
// Conventions, fixed once for the whole library:
//   * A crossing stores its four incident edges (e0,e1,e2,e3) in counterclockwise
//     cyclic order; the over-strand occupies the (e0,e2) diagonal.
//   * A-smoothing joins e0-e1 and e2-e3; B-smoothing joins e1-e2 and e3-e0.
//   * A tangle's four boundary points are the corners NW, SW (left face) and
//     NE, SE (right face). The numerator closure n(T) adds external arcs
//     NW-NE and SW-SE; the denominator closure d(T) adds NW-SW and NE-SE.
//   * T_1 is the one-crossing tangle with record (SE,NE,NW,SW); under the rules
//     above its bracket vector is (<n(T_1)>, <d(T_1)>) = (A, A^{-1}), which is
//     the calibration anchor for every sign in the engine.
//
// Edge labels must be 0..E-1, each label occurring exactly twice across all
// crossing slots and boundary slots. A label may occupy two boundary corners
// (a crossing-free strand); crossing-free circles are kept as a count.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "tanglegcd/union_find.hpp"

namespace tanglegcd {

using EdgeId = std::uint32_t;

struct Crossing {
  std::array<EdgeId, 4> e{};

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

enum class Corner : int { NW = 0, SW = 1, NE = 2, SE = 3 };

enum class Pairing { Horizontal, Vertical, Crossed };

inline const char* to_string(Pairing p) {
  switch (p) {
    case Pairing::Horizontal: return "horizontal";
    case Pairing::Vertical: return "vertical";
    case Pairing::Crossed: return "crossed";
  }
  return "?";
}

// A smoothing state over all crossings: bit i = 0 picks the A-smoothing of
// crossing i, bit i = 1 the B-smoothing.
using SmoothingState = std::uint64_t;

// A crossing-free tangle: one of the three perfect matchings of the corners,
// plus a count of closed loops.
struct FlatTangle {
  Pairing pairing;
  int loops = 0;

  friend bool operator==(const FlatTangle&, const FlatTangle&) = default;
};

struct TangleDiagram {
  std::vector<Crossing> crossings;
  std::array<EdgeId, 4> boundary{};  // indexed by Corner
  int closed_loops = 0;

  EdgeId at(Corner c) const { return boundary[static_cast<int>(c)]; }
  std::size_t edge_count() const { return 2 * crossings.size() + 2; }

  friend bool operator==(const TangleDiagram&, const TangleDiagram&) = default;
};

struct LinkDiagram {
  std::vector<Crossing> crossings;
  int closed_loops = 0;

  std::size_t edge_count() const { return 2 * crossings.size(); }

  friend bool operator==(const LinkDiagram&, const LinkDiagram&) = default;
};

struct Connectivity {
  Pairing pairing;
  bool has_loops = false;

  friend bool operator==(const Connectivity&, const Connectivity&) = default;
};

namespace detail {

inline void check_degree(std::size_t edge_count, const std::vector<Crossing>& crossings,
                         const EdgeId* boundary, std::size_t boundary_len) {
  std::vector<int> uses(edge_count, 0);
  auto touch = [&](EdgeId e) {
    if (e >= edge_count)
      throw std::invalid_argument("malformed diagram: edge label " + std::to_string(e) +
                                  " out of range (labels must be 0.." +
                                  std::to_string(edge_count ? edge_count - 1 : 0) + ")");
    ++uses[e];
  };
  for (const Crossing& x : crossings)
    for (EdgeId e : x.e) touch(e);
  for (std::size_t i = 0; i < boundary_len; ++i) touch(boundary[i]);
  for (std::size_t e = 0; e < edge_count; ++e)
    if (uses[e] != 2)
      throw std::invalid_argument("malformed diagram: edge label " + std::to_string(e) +
                                  " occurs " + std::to_string(uses[e]) + " times, expected 2");
}

// Applies one state's smoothings; returns the number of cycles closed (loops,
// not counting the diagram's crossing-free circles). uf must be reset and
// sized to the diagram's edge count. Bails out once the loop count reaches
// give_up_at, at which point the caller only needs ">= give_up_at".
inline int smooth_unions(const std::vector<Crossing>& crossings, SmoothingState state,
                         UnionFind& uf, int give_up_at = 1 << 30) {
  int loops = 0;
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    const auto& e = crossings[i].e;
    if ((state >> i) & 1) {
      loops += !uf.unite(e[1], e[2]);
      loops += !uf.unite(e[3], e[0]);
    } else {
      loops += !uf.unite(e[0], e[1]);
      loops += !uf.unite(e[2], e[3]);
    }
    if (loops >= give_up_at) return loops;
  }
  return loops;
}

// Classifies how an equivalence relation on edges pairs up the four corners.
inline Pairing corner_pairing(UnionFind& uf, const std::array<EdgeId, 4>& boundary) {
  std::uint32_t nw = uf.find(boundary[0]);
  std::uint32_t sw = uf.find(boundary[1]);
  std::uint32_t ne = uf.find(boundary[2]);
  std::uint32_t se = uf.find(boundary[3]);
  if (nw == ne && sw == se && nw != sw) return Pairing::Horizontal;
  if (nw == sw && ne == se && nw != ne) return Pairing::Vertical;
  if (nw == se && sw == ne && nw != sw) return Pairing::Crossed;
  throw std::invalid_argument("malformed diagram: boundary strands do not pair the corners");
}

}  // namespace detail

inline void validate(const TangleDiagram& t) {
  if (t.closed_loops < 0) throw std::invalid_argument("malformed diagram: negative loop count");
  detail::check_degree(t.edge_count(), t.crossings, t.boundary.data(), 4);
}

inline void validate(const LinkDiagram& l) {
  if (l.closed_loops < 0) throw std::invalid_argument("malformed diagram: negative loop count");
  detail::check_degree(l.edge_count(), l.crossings, nullptr, 0);
}

// ---- builders ----------------------------------------------------------

// The identity tangle: two horizontal strands NW-NE and SW-SE.
inline TangleDiagram tangle_zero() {
  TangleDiagram t;
  t.boundary = {0, 1, 0, 1};
  return t;
}

// One-crossing twist. sign=+1 gives T_1 (bracket vector (A, A^{-1})),
// sign=-1 its mirror T_{-1}.
inline TangleDiagram tangle_twist(int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("tangle_twist: sign must be +1 or -1");
  TangleDiagram t;
  t.boundary = {0, 1, 2, 3};  // NW, SW, NE, SE
  if (sign > 0)
    t.crossings.push_back(Crossing{{3, 2, 0, 1}});
  else
    t.crossings.push_back(Crossing{{2, 0, 1, 3}});
  return t;
}

inline TangleDiagram with_extra_loops(TangleDiagram t, int k) {
  t.closed_loops += k;
  return t;
}

// ---- smoothing and connectivity ----------------------------------------

inline FlatTangle smooth(const TangleDiagram& t, SmoothingState state) {
  validate(t);
  if (t.crossings.size() < 64 && state >> t.crossings.size())
    throw std::invalid_argument("smoothing state has more bits than crossings");
  UnionFind uf(t.edge_count());
  int loops = detail::smooth_unions(t.crossings, state, uf);
  return FlatTangle{detail::corner_pairing(uf, t.boundary), loops + t.closed_loops};
}

// Follows strands through crossings (the over/under data is irrelevant):
// opposite slots at each crossing belong to the same strand.
inline Connectivity connectivity(const TangleDiagram& t) {
  validate(t);
  UnionFind uf(t.edge_count());
  for (const Crossing& x : t.crossings) {
    uf.unite(x.e[0], x.e[2]);
    uf.unite(x.e[1], x.e[3]);
  }
  Pairing pairing = detail::corner_pairing(uf, t.boundary);
  bool loops = t.closed_loops > 0;
  if (!loops) {
    std::uint32_t arc0 = uf.find(t.boundary[0]);
    std::uint32_t arc1 = uf.find(t.boundary[1]);
    for (EdgeId e = 0; e < t.edge_count() && !loops; ++e) {
      std::uint32_t r = uf.find(e);
      loops = (r != arc0 && r != arc1);
    }
  }
  return Connectivity{pairing, loops};
}

// Number of strand-following components plus crossing-free circles.
inline int component_count(const LinkDiagram& l) {
  validate(l);
  UnionFind uf(l.edge_count());
  int merges = 0;
  for (const Crossing& x : l.crossings) {
    merges += uf.unite(x.e[0], x.e[2]);
    merges += uf.unite(x.e[1], x.e[3]);
  }
  return static_cast<int>(l.edge_count()) - merges + l.closed_loops;
}

// ---- closures and the tangle monoid -------------------------------------

namespace detail {

// Glues pairs of edges (used by closures and by tangle addition), then
// compacts the surviving edge labels. Classes whose slot occurrences are all
// consumed by the gluing become crossing-free circles.
struct GlueResult {
  std::vector<Crossing> crossings;
  std::vector<std::uint32_t> relabel;  // old edge -> new edge (or circle, unused)
  int new_circles = 0;
  std::size_t new_edge_count = 0;
};

inline GlueResult glue(std::size_t edge_count, std::vector<Crossing> crossings,
                       const std::vector<std::pair<EdgeId, EdgeId>>& joins,
                       const std::vector<EdgeId>& surviving_slots) {
  UnionFind uf(edge_count);
  int redundant = 0;
  for (auto [a, b] : joins) redundant += !uf.unite(a, b);

  // A representative survives if any of its occurrences is still a real slot.
  std::vector<char> root_survives(edge_count, 0);
  for (const Crossing& x : crossings)
    for (EdgeId e : x.e) root_survives[uf.find(e)] = 1;
  for (EdgeId e : surviving_slots) root_survives[uf.find(e)] = 1;

  GlueResult out;
  out.relabel.assign(edge_count, 0);
  std::vector<std::uint32_t> root_label(edge_count, UINT32_MAX);
  std::uint32_t next = 0;
  for (EdgeId e = 0; e < edge_count; ++e) {
    std::uint32_t r = uf.find(e);
    if (!root_survives[r]) continue;
    if (root_label[r] == UINT32_MAX) root_label[r] = next++;
    out.relabel[e] = root_label[r];
  }
  for (Crossing& x : crossings)
    for (EdgeId& e : x.e) e = out.relabel[e];
  out.crossings = std::move(crossings);
  out.new_edge_count = next;
  out.new_circles = redundant;
  return out;
}

}  // namespace detail

inline LinkDiagram closure_numerator(const TangleDiagram& t) {
  validate(t);
  auto glued = detail::glue(t.edge_count(), t.crossings,
                            {{t.at(Corner::NW), t.at(Corner::NE)},
                             {t.at(Corner::SW), t.at(Corner::SE)}},
                            {});
  return LinkDiagram{std::move(glued.crossings), t.closed_loops + glued.new_circles};
}

inline LinkDiagram closure_denominator(const TangleDiagram& t) {
  validate(t);
  auto glued = detail::glue(t.edge_count(), t.crossings,
                            {{t.at(Corner::NW), t.at(Corner::SW)},
                             {t.at(Corner::NE), t.at(Corner::SE)}},
                            {});
  return LinkDiagram{std::move(glued.crossings), t.closed_loops + glued.new_circles};
}

// Horizontal concatenation: t's NE/SE boundary is identified with u's NW/SW;
// the result keeps t's west pair and u's east pair.
inline TangleDiagram sum(const TangleDiagram& t, const TangleDiagram& u) {
  validate(t);
  validate(u);
  const auto offset = static_cast<EdgeId>(t.edge_count());
  std::vector<Crossing> all = t.crossings;
  for (Crossing x : u.crossings) {
    for (EdgeId& e : x.e) e += offset;
    all.push_back(x);
  }
  std::array<EdgeId, 4> ub{};
  for (int i = 0; i < 4; ++i) ub[i] = u.boundary[i] + offset;

  std::vector<EdgeId> surviving = {t.at(Corner::NW), t.at(Corner::SW),
                                   ub[static_cast<int>(Corner::NE)],
                                   ub[static_cast<int>(Corner::SE)]};
  auto glued = detail::glue(t.edge_count() + u.edge_count(), std::move(all),
                            {{t.at(Corner::NE), ub[static_cast<int>(Corner::NW)]},
                             {t.at(Corner::SE), ub[static_cast<int>(Corner::SW)]}},
                            surviving);

  TangleDiagram out;
  out.crossings = std::move(glued.crossings);
  out.boundary = {glued.relabel[t.at(Corner::NW)], glued.relabel[t.at(Corner::SW)],
                  glued.relabel[ub[static_cast<int>(Corner::NE)]],
                  glued.relabel[ub[static_cast<int>(Corner::SE)]]};
  out.closed_loops = t.closed_loops + u.closed_loops + glued.new_circles;
  return out;
}

// Quarter turn counterclockwise: only the boundary corners move.
inline TangleDiagram rotated(const TangleDiagram& t) {
  TangleDiagram out = t;
  out.boundary = {t.at(Corner::NE), t.at(Corner::NW), t.at(Corner::SE), t.at(Corner::SW)};
  return out;
}

// Mirror through the projection plane: every crossing's over-strand diagonal
// switches from (e0,e2) to (e1,e3); the boundary is unchanged.
inline TangleDiagram reflected(const TangleDiagram& t) {
  TangleDiagram out = t;
  for (Crossing& x : out.crossings) x.e = {x.e[1], x.e[2], x.e[3], x.e[0]};
  return out;
}

}  // namespace tanglegcd
