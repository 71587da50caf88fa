#include <catch2/catch_amalgamated.hpp>

#include <variant>

#include "generators.hpp"
#include "tanglegcd/algebra.hpp"
#include "tanglegcd/pd_io.hpp"

using namespace tanglegcd;

TEST_CASE("reading a tangle PD file", "[pd]") {
  const std::string text =
      "# one-crossing twist\n"
      "tangle\n"
      "boundary NW=10 SW=11 NE=12 SE=13\n"
      "X 13 12 10 11\n";
  TangleDiagram t = read_tangle_pd(text);
  CHECK(t == tangle_twist(1));  // labels renumber in first-seen order
}

TEST_CASE("reading a link PD file", "[pd]") {
  LinkDiagram unlink = read_link_pd("link\nloops 2\n");
  CHECK(unlink.crossings.empty());
  CHECK(unlink.closed_loops == 2);

  LinkDiagram kink = read_link_pd("link\nX 0 0 1 1\n");
  CHECK(kink.crossings.size() == 1);
}

TEST_CASE("PD errors carry line numbers", "[pd]") {
  auto line_of = [](const std::string& text) {
    try {
      read_pd(text);
    } catch (const PdError& e) {
      return e.line;
    }
    return -1;
  };
  CHECK(line_of("flink\n") == 1);
  CHECK(line_of("link\nboundary NW=0 SW=0 NE=1 SE=1\n") == 2);
  CHECK(line_of("tangle\nboundary NW=0 SW=0 NE=1\n") == 2);
  CHECK(line_of("tangle\nboundary NW=0 SW=0 NE=1 NE=1\n") == 2);
  CHECK(line_of("link\nX 1 2 3\n") == 2);
  CHECK(line_of("link\nX 1 2 3 x\n") == 2);
  CHECK(line_of("link\nloops -2\n") == 2);
  CHECK(line_of("tangle\nX 0 1 2 3\n") > 0);   // missing boundary
  CHECK(line_of("link\nX 0 1 2 2\n") > 0);     // degree condition violated
  CHECK(line_of("") == 0);

  CHECK_THROWS_AS(read_tangle_pd("link\nloops 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(read_link_pd("tangle\nboundary NW=0 SW=1 NE=0 SE=1\n"),
                  std::invalid_argument);
}

TEST_CASE("write/read round trip", "[pd]") {
  // Reading renumbers labels in first-seen order, so one write/read pass
  // canonicalizes; after that the round trip is exact, and the diagram it
  // yields is the same tangle (same bracket data).
  gen::Rng rng(211);
  for (int trial = 0; trial < 30; ++trial) {
    TangleDiagram t = to_diagram(gen::random_expr(rng, 6));
    TangleDiagram canon = read_tangle_pd(to_pd_string(t));
    CHECK(read_tangle_pd(to_pd_string(canon)) == canon);
    CHECK(canon.crossings.size() == t.crossings.size());
    CHECK(canon.closed_loops == t.closed_loops);
    CHECK(bracket_vector(canon) == bracket_vector(t));

    LinkDiagram l = closure_numerator(t);
    LinkDiagram lcanon = read_link_pd(to_pd_string(l));
    CHECK(read_link_pd(to_pd_string(lcanon)) == lcanon);
    CHECK(bracket_link(lcanon) == bracket_link(l));
  }
}
