#include <doctest.h>

#include <algorithm>

#include "eslab/generate.hpp"
#include "eslab/labelling.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace eslab;

namespace {

Labelling by_names(const EventStructure& es,
                   const std::vector<std::pair<std::string, std::string>>& assignment) {
  std::vector<std::string> raw(es.size());
  for (const auto& [event, symbol] : assignment) raw[es.id_of(event)] = symbol;
  return canonical_labelling(raw);
}

}  // namespace

TEST_CASE("verify_nice") {
  const EventStructure fork = build_event_structure(fixtures::fork());
  const Labelling good =
      by_names(fork, {{"r", "A"}, {"x", "A"}, {"y", "B"}, {"u", "A"}, {"v", "B"}});
  CHECK(verify_nice(fork, good).empty());

  const EventStructure conf = build_event_structure(fixtures::pair_conf());
  Labelling constant;
  constant.alphabet = {"A"};
  constant.assign = {0, 0};
  const auto violations = verify_nice(conf, constant);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0] == std::pair<EventId, EventId>{0, 1});

  const EventStructure chain = build_event_structure(fixtures::chain3());
  Labelling all_a;
  all_a.alphabet = {"A"};
  all_a.assign = {0, 0, 0};
  CHECK(verify_nice(chain, all_a).empty());

  SUBCASE("partial labelling") {
    Labelling partial;
    partial.alphabet = {"A"};
    partial.assign = {0, -1};
    CHECK_THROWS_WITH_AS(verify_nice(conf, partial), doctest::Contains("PartialLabelling"), Error);
  }
}

TEST_CASE("skewness") {
  const EventStructure fig1 = build_event_structure(fixtures::fig1());
  // orthogonal pair 1-8 spans heights 0 and 2; nothing spans more
  CHECK(skewness(fig1, strata_by_height(fig1)) == 2);

  const EventStructure chain = build_event_structure(fixtures::chain3());
  CHECK(skewness(chain, strata_by_height(chain)) == 0);
  const EventStructure conc = build_event_structure(fixtures::pair_conc());
  CHECK(skewness(conc, strata_by_height(conc)) == 0);

  SUBCASE("matches a direct maximum over orthogonal pairs") {
    for (const auto& spec : {fixtures::fork(), fixtures::fig1()}) {
      const EventStructure es = build_event_structure(spec);
      for (const auto& strata : {strata_by_height(es), strata_by_below_count(es)}) {
        int expected = 0;
        for (EventId x = 0; x < es.size(); ++x) {
          for (EventId y = 0; y < es.size(); ++y) {
            if (es.orthogonal(x, y)) expected = std::max(expected, std::abs(strata[x] - strata[y]));
          }
        }
        CHECK(skewness(es, strata) == expected);
      }
    }
  }

  SUBCASE("level sets must be antichains") {
    std::vector<int> flat(chain.size(), 0);
    CHECK_THROWS_WITH_AS(skewness(chain, flat), doctest::Contains("NotStratifying"), Error);
  }
}

TEST_CASE("stratified labelling") {
  const EventStructure fig1 = build_event_structure(fixtures::fig1());
  const Labelling fig1_lab = label_stratified(fig1, strata_by_height(fig1));
  CHECK(verify_nice(fig1, fig1_lab).empty());
  CHECK(fig1_lab.symbols_used() == 7);
  CHECK(fig1_lab.symbols_used() <= 3 * (skewness(fig1, strata_by_height(fig1)) + 1));
  CHECK(fig1_lab.symbols_used() <= 3 * (fig1.height() + 1));

  const EventStructure chain = build_event_structure(fixtures::chain3());
  CHECK(label_stratified(chain, strata_by_height(chain)).symbols_used() == 1);

  // a degree-3 antichain stays within one 3-colorable level
  const EventStructure tri =
      build_event_structure({{"a", "b", "c"}, {}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}});
  const Labelling tri_lab = label_stratified(tri, strata_by_height(tri));
  CHECK(tri_lab.symbols_used() <= 3);
  CHECK(verify_nice(tri, tri_lab).empty());
}

TEST_CASE("dilworth labelling") {
  const EventStructure chain = build_event_structure(fixtures::chain3());
  CHECK(label_dilworth(chain).symbols_used() == 1);

  const EventStructure conc = build_event_structure(fixtures::pair_conc());
  CHECK(label_dilworth(conc).symbols_used() == 2);

  // width of fig1 is 5 (antichain {4,6,7,8,9})
  const EventStructure fig1 = build_event_structure(fixtures::fig1());
  const Labelling fig1_lab = label_dilworth(fig1);
  CHECK(fig1_lab.symbols_used() == 5);
  CHECK(verify_nice(fig1, fig1_lab).empty());

  SUBCASE("optimal on conflict-free structures") {
    for (std::uint64_t seed = 200; seed < 220; ++seed) {
      GenParams params;
      params.event_count = 9;
      params.conflict_density = 0.0;
      params.seed = seed;
      const EventStructureSpec spec = generate_spec(params);
      const EventStructure es = build_event_structure(spec);
      const oracle::Tables t = oracle::derive(spec);
      const Labelling lab = label_dilworth(es);
      CHECK(verify_nice(es, lab).empty());
      CHECK(lab.symbols_used() == oracle::max_antichain(t.leq));
      CHECK(lab.symbols_used() == oracle::chromatic(t.ortho));
    }
  }
}

TEST_CASE("quotient graph") {
  const EventStructure fig1 = build_event_structure(fixtures::fig1());

  SUBCASE("singleton partition is isomorphic to the graph") {
    Partition singletons;
    for (EventId x = 0; x < fig1.size(); ++x) singletons.push_back({x});
    const OrthoGraph quotient = quotient_graph(fig1, singletons);
    for (EventId x = 0; x < fig1.size(); ++x) {
      for (EventId y = 0; y < fig1.size(); ++y) {
        CHECK(quotient.adjacent(x, y) == fig1.orthogonal(x, y));
      }
    }
  }

  SUBCASE("one class gives an edgeless point") {
    Partition whole(1);
    for (EventId x = 0; x < fig1.size(); ++x) whole[0].push_back(x);
    const OrthoGraph quotient = quotient_graph(fig1, whole);
    CHECK(quotient.size() == 1);
    CHECK(quotient.edge_count() == 0);
  }

  SUBCASE("invalid partitions") {
    CHECK_THROWS_WITH_AS(quotient_graph(fig1, Partition{{0, 1}}),
                         doctest::Contains("InvalidPartition"), Error);
    Partition duplicated;
    for (EventId x = 0; x < fig1.size(); ++x) duplicated.push_back({x});
    duplicated.push_back({0});
    CHECK_THROWS_WITH_AS(quotient_graph(fig1, duplicated),
                         doctest::Contains("InvalidPartition"), Error);
    CHECK_THROWS_WITH_AS(quotient_graph(fig1, Partition{}),
                         doctest::Contains("InvalidPartition"), Error);
  }
}

TEST_CASE("quotient labelling") {
  const EventStructure conc = build_event_structure(fixtures::pair_conc());
  const Partition split{{0}, {1}};

  SUBCASE("two singleton classes on a concurrent pair") {
    const std::vector<Coloring> classes{Coloring{{0}, 1}, Coloring{{0}, 1}};
    const Labelling lab = label_quotient(conc, split, classes, Coloring{{0, 1}, 2});
    CHECK(lab.symbols_used() == 2);
    CHECK(verify_nice(conc, lab).empty());
  }

  SUBCASE("improper quotient coloring") {
    const std::vector<Coloring> classes{Coloring{{0}, 1}, Coloring{{0}, 1}};
    CHECK_THROWS_WITH_AS(label_quotient(conc, split, classes, Coloring{{0, 0}, 1}),
                         doctest::Contains("ImproperQuotientColoring"), Error);
  }

  SUBCASE("improper class coloring") {
    const Partition whole{{0, 1}};
    const std::vector<Coloring> classes{Coloring{{0, 0}, 1}};
    CHECK_THROWS_WITH_AS(label_quotient(conc, whole, classes, Coloring{{0}, 1}),
                         doctest::Contains("ImproperClassColoring"), Error);
  }

  SUBCASE("singleton partition with an exact coloring reproduces it") {
    const EventStructure fig1 = build_event_structure(fixtures::fig1());
    Partition singletons;
    std::vector<Coloring> classes;
    for (EventId x = 0; x < fig1.size(); ++x) {
      singletons.push_back({x});
      classes.push_back(Coloring{{0}, 1});
    }
    const auto [chi, exact] = chromatic_number(ortho_graph(fig1));
    const Labelling lab = label_quotient(fig1, singletons, classes, exact);
    CHECK(lab.symbols_used() == chi);
    for (EventId x = 0; x < fig1.size(); ++x) {
      for (EventId y = 0; y < fig1.size(); ++y) {
        CHECK((lab.assign[x] == lab.assign[y]) == (exact.color[x] == exact.color[y]));
      }
    }
  }
}

TEST_CASE("degree-2 labelling") {
  const EventStructure fork = build_event_structure(fixtures::fork());
  const Labelling fork_lab = label_degree2(fork);
  CHECK(fork_lab.symbols_used() == 2);
  CHECK(verify_nice(fork, fork_lab).empty());

  CHECK(label_degree2(build_event_structure(fixtures::pair_conf())).symbols_used() == 2);
  CHECK(label_degree2(build_event_structure(fixtures::chain3())).symbols_used() == 1);

  CHECK_THROWS_WITH_AS(label_degree2(build_event_structure(fixtures::fig1())),
                       doctest::Contains("DegreeTooHigh"), Error);
}

TEST_CASE("exact labelling") {
  const EventStructure fig1 = build_event_structure(fixtures::fig1());
  const Labelling fig1_lab = label_exact(fig1);
  CHECK(fig1_lab.symbols_used() == 4);
  CHECK(verify_nice(fig1, fig1_lab).empty());

  CHECK(label_exact(build_event_structure(fixtures::fork())).symbols_used() == 2);
  CHECK(label_exact(build_event_structure(fixtures::chain3())).symbols_used() == 1);
}

TEST_CASE("strategies are deterministic") {
  const EventStructure fig1 = build_event_structure(fixtures::fig1());
  CHECK(label_exact(fig1) == label_exact(fig1));
  CHECK(label_dilworth(fig1) == label_dilworth(fig1));
  CHECK(label_stratified(fig1, strata_by_height(fig1)) ==
        label_stratified(fig1, strata_by_height(fig1)));
  CHECK(label_simple12(fig1) == label_simple12(fig1));
}
