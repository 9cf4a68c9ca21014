// SPDX-License-Identifier: MIT
// Longer checks, labelled "slow" in ctest.
#include "doctest.h"
#include "flg/gadgets.hpp"
#include "flg/optimize.hpp"
#include "flg/preimage.hpp"
#include "support.hpp"

using namespace flg;
using namespace flg::test;

TEST_CASE("G_F of an unsatisfiable formula has no preimage") {
  // All eight sign patterns over three variables.
  CnfFormula f;
  f.variable_count = 3;
  for (int signs = 0; signs < 8; ++signs) {
    f.clauses.push_back({Literal{1, bool(signs & 1)}, Literal{2, bool(signs & 2)}, Literal{3, bool(signs & 4)}});
  }
  LabeledGraph gf = assemble_GF(f);
  PreimageDecision d = has_preimage(gf.graph);
  MESSAGE("search steps: " << d.steps);
  CHECK(d.answer == Answer::No);
}

TEST_CASE("stable sets match subset enumeration up to 16 nodes") {
  Rng rng(61);
  std::uniform_int_distribution<int> num(-3, 20), den(1, 5);
  for (int it = 0; it < 400; ++it) {
    const int n = 12 + it % 5;
    UGraph g = random_ugraph(rng, n, 0.1 + 0.05 * (it % 8));
    if (it % 2) {
      for (int v = 0; v < n; ++v) g.set_weight(v, Rational(num(rng), den(rng)));
    }
    StableSet s = max_stable_set(g);
    REQUIRE(is_stable(g, s.nodes));
    REQUIRE(s.weight == naive_max_weight_stable(g));
  }
}

TEST_CASE("variable gadget orientation for longer chains") {
  for (int m = 2; m <= 4; ++m) {
    Gad1Report r = verify_gad1(m);
    CHECK(r.status == SearchStatus::Complete);
    CHECK(r.mixed == 0);
    CHECK(r.preimages == 2);
  }
}

TEST_CASE("raw clause gadget enumeration agrees with the normalized one") {
  LabeledGraph g = build_gad2(1);
  PreimageOptions raw;
  raw.dedup = false;
  PreimageSet r = enumerate_preimages(g.graph, raw);
  PreimageSet d = enumerate_preimages(g.graph);
  CHECK(r.status == SearchStatus::Complete);
  CHECK(r.members.size() >= d.members.size());
  for (const Preimage& p : r.members) REQUIRE(check_certificate(g.graph, p.digraph, p.cert));
}
