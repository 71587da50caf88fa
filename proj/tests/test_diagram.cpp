#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "generators.hpp"
#include "oracle.hpp"
#include "tanglegcd/algebra.hpp"
#include "tanglegcd/diagram.hpp"

using namespace tanglegcd;

namespace {

TangleDiagram square_tangle() { return to_diagram(parse("3* + -3*")); }

}  // namespace

TEST_CASE("smoothing the trivial and one-crossing tangles", "[diagram]") {
  CHECK(smooth(tangle_zero(), 0) == FlatTangle{Pairing::Horizontal, 0});

  // T_1: the A-state is the vertical pairing, the B-state the horizontal one.
  TangleDiagram t1 = tangle_twist(1);
  CHECK(smooth(t1, 0b0) == FlatTangle{Pairing::Vertical, 0});
  CHECK(smooth(t1, 0b1) == FlatTangle{Pairing::Horizontal, 0});

  TangleDiagram tm1 = tangle_twist(-1);
  CHECK(smooth(tm1, 0b0) == FlatTangle{Pairing::Horizontal, 0});
  CHECK(smooth(tm1, 0b1) == FlatTangle{Pairing::Vertical, 0});
}

TEST_CASE("smoothing the square tangle", "[diagram]") {
  TangleDiagram sq = square_tangle();
  REQUIRE(sq.crossings.size() == 6);

  // All-A state: the two middle twist pairs close up into circles.
  CHECK(smooth(sq, 0) == FlatTangle{Pairing::Vertical, 2});

  SECTION("every state agrees with the slot-walking oracle") {
    for (std::uint64_t s = 0; s < 64; ++s) {
      FlatTangle got = smooth(sq, s);
      oracle::SmoothedTangle want = oracle::smooth_tangle(sq, s);
      CHECK(got.loops == want.loops);
      CHECK(got.pairing == oracle::pairing_of(want));
    }
  }
}

TEST_CASE("smoothing rejects bad input", "[diagram]") {
  TangleDiagram t1 = tangle_twist(1);
  CHECK_THROWS_AS(smooth(t1, 0b10), std::invalid_argument);  // more bits than crossings

  TangleDiagram bad = t1;
  bad.crossings[0].e[3] = 2;  // edge 2 now occurs three times, edge 1 once
  CHECK_THROWS_AS(smooth(bad, 0), std::invalid_argument);
  CHECK_THROWS_AS(connectivity(bad), std::invalid_argument);

  TangleDiagram out_of_range = t1;
  out_of_range.crossings[0].e[0] = 99;
  CHECK_THROWS_AS(validate(out_of_range), std::invalid_argument);
}

TEST_CASE("numerator and denominator closures of the generators", "[diagram]") {
  LinkDiagram n0 = closure_numerator(tangle_zero());
  CHECK(n0.crossings.empty());
  CHECK(n0.closed_loops == 2);  // two-component unlink

  LinkDiagram d0 = closure_denominator(tangle_zero());
  CHECK(d0.crossings.empty());
  CHECK(d0.closed_loops == 1);  // unknot

  LinkDiagram n1 = closure_numerator(tangle_twist(1));
  CHECK(n1.crossings.size() == 1);
  CHECK(n1.closed_loops == 0);
  CHECK(component_count(n1) == 1);

  LinkDiagram d1 = closure_denominator(tangle_twist(1));
  CHECK(d1.crossings.size() == 1);
  CHECK(component_count(d1) == 1);
}

TEST_CASE("strand connectivity", "[diagram]") {
  CHECK(connectivity(tangle_zero()) == Connectivity{Pairing::Horizontal, false});
  CHECK(connectivity(rotated(tangle_zero())) == Connectivity{Pairing::Vertical, false});
  CHECK(connectivity(tangle_twist(1)) == Connectivity{Pairing::Crossed, false});
  CHECK(connectivity(square_tangle()) == Connectivity{Pairing::Horizontal, false});
  CHECK(connectivity(with_extra_loops(tangle_zero(), 1)) ==
        Connectivity{Pairing::Horizontal, true});

  // 0* + 0*: the two middle strands close into a circle.
  TangleDiagram ring = to_diagram(parse("0* + 0*"));
  CHECK(ring.closed_loops == 1);
  CHECK(connectivity(ring) == Connectivity{Pairing::Vertical, true});
}

TEST_CASE("tangle addition", "[diagram]") {
  TangleDiagram two = sum(tangle_twist(1), tangle_twist(1));
  CHECK(two.crossings.size() == 2);
  CHECK(connectivity(two).pairing == Pairing::Horizontal);

  SECTION("the trivial tangle is an identity up to relabeling") {
    TangleDiagram sq = square_tangle();
    TangleDiagram right = sum(sq, tangle_zero());
    TangleDiagram left = sum(tangle_zero(), sq);
    CHECK(right.crossings.size() == sq.crossings.size());
    CHECK(left.crossings.size() == sq.crossings.size());
    CHECK(connectivity(right) == connectivity(sq));
    CHECK(connectivity(left) == connectivity(sq));
  }

  SECTION("degenerate gluings create closed circles") {
    TangleDiagram v = rotated(tangle_zero());
    TangleDiagram vv = sum(v, v);
    CHECK(vv.crossings.empty());
    CHECK(vv.closed_loops == 1);
  }
}

TEST_CASE("rotation and reflection are diagram symmetries", "[diagram]") {
  TangleDiagram sq = square_tangle();
  CHECK(rotated(rotated(rotated(rotated(sq)))) == sq);
  CHECK(reflected(reflected(sq)) == sq);
  CHECK(connectivity(rotated(sq)).pairing == Pairing::Vertical);

  // Reflection switches the over-strand diagonal but not the shadow.
  CHECK(reflected(tangle_twist(1)).crossings[0] == Crossing{{2, 0, 1, 3}});
  CHECK(reflected(tangle_twist(1)) == tangle_twist(-1));
}

TEST_CASE("acyclic states of planar diagrams are never crossed", "[diagram]") {
  gen::Rng rng(101);
  for (int trial = 0; trial < 50; ++trial) {
    TangleDiagram t = to_diagram(gen::random_expr(rng, 8));
    if (t.crossings.size() > 10) continue;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << t.crossings.size()); ++s) {
      FlatTangle flat = smooth(t, s);
      if (flat.loops == 0) CHECK(flat.pairing != Pairing::Crossed);
    }
  }
}

TEST_CASE("smoothing matches the oracle on random diagrams", "[diagram]") {
  gen::Rng rng(103);
  for (int trial = 0; trial < 40; ++trial) {
    TangleDiagram t = to_diagram(gen::random_expr(rng, 7));
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << t.crossings.size()); ++s) {
      FlatTangle got = smooth(t, s);
      oracle::SmoothedTangle want = oracle::smooth_tangle(t, s);
      CHECK(got.loops == want.loops);
      CHECK(got.pairing == oracle::pairing_of(want));
    }
  }
}
