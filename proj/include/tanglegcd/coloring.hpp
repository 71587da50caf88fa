#pragma once

// Fox p-colorings over prime moduli. Arcs are maximal over-strand segments;
// each crossing imposes 2*(over) - (under_in) - (under_out) = 0 mod p. A
// coloring is nontrivial when not all arcs receive the same residue, which
// happens exactly when the solution space is larger than the constants line.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tanglegcd/bracket.hpp"
#include "tanglegcd/diagram.hpp"
#include "tanglegcd/union_find.hpp"

namespace tanglegcd {

struct ArcSet {
  struct Relation {
    int over, under_in, under_out;  // arc indices
  };
  int arc_count = 0;  // includes one arc per crossing-free circle
  std::vector<Relation> relations;
  std::vector<int> boundary_arcs;  // tangle only: arc of each corner (NW,SW,NE,SE)
};

using Coloring = std::vector<int>;  // arc index -> residue mod p

namespace detail {

// Arcs continue through the over side of each crossing (slots e0 and e2) and
// break where the strand dives under.
inline ArcSet arcs_from(std::size_t edge_count, const std::vector<Crossing>& crossings,
                        int closed_loops, const std::array<EdgeId, 4>* boundary) {
  UnionFind uf(edge_count);
  for (const Crossing& x : crossings) uf.unite(x.e[0], x.e[2]);

  std::vector<int> arc_of(edge_count, -1);
  int next = 0;
  for (EdgeId e = 0; e < edge_count; ++e) {
    std::uint32_t r = uf.find(e);
    if (arc_of[r] < 0) arc_of[r] = next++;
    arc_of[e] = arc_of[r];
  }

  ArcSet arcs;
  arcs.relations.reserve(crossings.size());
  for (const Crossing& x : crossings)
    arcs.relations.push_back({arc_of[x.e[0]], arc_of[x.e[1]], arc_of[x.e[3]]});
  if (boundary)
    for (EdgeId e : *boundary) arcs.boundary_arcs.push_back(arc_of[e]);
  arcs.arc_count = next + closed_loops;  // circles are relation-free arcs
  return arcs;
}

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline int mod_inverse(int a, int p) {  // p prime, a != 0 mod p
  int r = 1, base = ((a % p) + p) % p, e = p - 2;
  while (e > 0) {
    if (e & 1) r = static_cast<int>(static_cast<std::int64_t>(r) * base % p);
    base = static_cast<int>(static_cast<std::int64_t>(base) * base % p);
    e >>= 1;
  }
  return r;
}

}  // namespace detail

inline ArcSet arcs_of(const LinkDiagram& l) {
  validate(l);
  return detail::arcs_from(l.edge_count(), l.crossings, l.closed_loops, nullptr);
}

inline ArcSet arcs_of(const TangleDiagram& t) {
  validate(t);
  return detail::arcs_from(t.edge_count(), t.crossings, t.closed_loops, &t.boundary);
}

// Gaussian elimination mod p over the crossing relations (plus, for tangles
// with same_boundary, equations equating the four corner arcs). Returns a
// nontrivial coloring iff the nullspace is larger than the constants line.
inline std::optional<Coloring> find_coloring(const ArcSet& arcs, int p,
                                             bool same_boundary = false) {
  if (!detail::is_prime(p)) throw std::invalid_argument("coloring modulus must be prime");
  if (same_boundary && arcs.boundary_arcs.empty())
    throw std::invalid_argument("same-boundary coloring requires a tangle arc set");

  const int n = arcs.arc_count;
  std::vector<std::vector<int>> rows;
  auto add_row = [&](std::initializer_list<std::pair<int, int>> entries) {
    std::vector<int> row(n, 0);
    for (auto [arc, coeff] : entries) row[arc] = ((row[arc] + coeff) % p + p) % p;
    rows.push_back(std::move(row));
  };
  for (const auto& rel : arcs.relations)
    add_row({{rel.over, 2}, {rel.under_in, -1}, {rel.under_out, -1}});
  if (same_boundary)
    for (int i = 1; i < 4; ++i)
      add_row({{arcs.boundary_arcs[0], 1}, {arcs.boundary_arcs[i], -1}});

  // Row reduction to echelon form.
  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    int inv = detail::mod_inverse(rows[rank][col], p);
    for (int j = col; j < n; ++j)
      rows[rank][j] = static_cast<int>(static_cast<std::int64_t>(rows[rank][j]) * inv % p);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      int f = rows[r][col];
      for (int j = col; j < n; ++j)
        rows[r][j] = static_cast<int>(((rows[r][j] - static_cast<std::int64_t>(f) * rows[rank][j]) % p + p) % p);
    }
    pivot_col.push_back(col);
    ++rank;
  }

  if (n - rank < 2) return std::nullopt;  // nullspace is just the constants

  // Nullspace basis vector for the second free column; with two or more free
  // columns such a vector is never constant.
  std::vector<char> is_pivot(n, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  int free_seen = 0, chosen = -1;
  for (int col = 0; col < n; ++col) {
    if (is_pivot[col]) continue;
    if (++free_seen == 2) {
      chosen = col;
      break;
    }
  }
  Coloring v(n, 0);
  v[chosen] = 1;
  for (int r = 0; r < rank; ++r) {
    int c = pivot_col[r];
    v[c] = ((-rows[r][chosen]) % p + p) % p;
  }

  for (const auto& rel : arcs.relations) {
    int s = (2 * v[rel.over] - v[rel.under_in] - v[rel.under_out]) % p;
    if ((s + p) % p != 0) throw std::runtime_error("coloring solver produced an invalid coloring");
  }
  return v;
}

inline std::optional<Coloring> find_coloring(const LinkDiagram& l, int p) {
  return find_coloring(arcs_of(l), p, false);
}

inline std::optional<Coloring> find_coloring(const TangleDiagram& t, int p,
                                             bool same_boundary) {
  return find_coloring(arcs_of(t), p, same_boundary);
}

// Cross-validation oracle for knots: a nontrivial p-coloring should exist
// exactly when p divides the determinant. Returns whether the two independent
// computations agree.
inline bool colorability_check(const LinkDiagram& knot, int p, int cap = kDefaultCrossingCap) {
  if (component_count(knot) != 1)
    throw std::invalid_argument("colorability_check expects a knot (one component)");
  bool colorable = find_coloring(knot, p).has_value();
  bool det_divisible = determinant(knot, cap) % p == 0;
  return colorable == det_divisible;
}

}  // namespace tanglegcd
