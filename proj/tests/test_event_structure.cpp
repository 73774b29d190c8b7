#include <doctest.h>

#include <algorithm>
#include <set>

#include "eslab/event_structure.hpp"
#include "eslab/generate.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace eslab;

namespace {

std::vector<std::string> names_of(const EventStructure& es, const std::vector<EventId>& ids) {
  std::vector<std::string> names;
  for (EventId x : ids) names.push_back(es.name_of(x));
  return names;
}

void check_tables_against_oracle(const EventStructureSpec& spec) {
  const EventStructure es = build_event_structure(spec);
  const oracle::Tables t = oracle::derive(spec);
  REQUIRE(es.size() == t.n);
  for (int x = 0; x < t.n; ++x) {
    for (int y = 0; y < t.n; ++y) {
      CAPTURE(x);
      CAPTURE(y);
      CHECK(es.leq(x, y) == t.leq[x][y]);
      CHECK(es.conflict(x, y) == t.conflict[x][y]);
      CHECK(es.concurrent(x, y) == t.concurrent[x][y]);
      CHECK(es.weak_concurrent(x, y) == t.weak[x][y]);
      CHECK(es.minimal_conflict(x, y) == t.minimal[x][y]);
      CHECK(es.orthogonal(x, y) == t.ortho[x][y]);
      // property (1): the cached table matches the three-clause definition
      CHECK(es.orthogonal(x, y) == oracle::ortho_three_clause(t, x, y));
    }
  }
}

}  // namespace

TEST_CASE("pair fixtures build with the expected relations") {
  const EventStructure conf = build_event_structure(fixtures::pair_conf());
  CHECK(conf.relation(Relation::Conflict, "a", "b"));
  CHECK(conf.relation(Relation::MinimalConflict, "a", "b"));
  CHECK_FALSE(conf.relation(Relation::Concurrent, "a", "b"));
  CHECK(conf.relation(Relation::Orthogonal, "a", "b"));

  const EventStructure conc = build_event_structure(fixtures::pair_conc());
  CHECK(conc.relation(Relation::Concurrent, "a", "b"));
  CHECK_FALSE(conc.relation(Relation::Conflict, "a", "b"));
}

TEST_CASE("fig1 conflict closure") {
  const EventStructure es = build_event_structure(fixtures::fig1());
  const std::set<std::pair<std::string, std::string>> expected = {
      {"6", "7"}, {"8", "9"}, {"3", "5"}, {"3", "8"}, {"3", "9"}, {"5", "6"},
      {"5", "7"}, {"6", "8"}, {"6", "9"}, {"7", "8"}, {"7", "9"}};
  std::set<std::pair<std::string, std::string>> actual;
  for (EventId x = 0; x < es.size(); ++x) {
    for (EventId y = x + 1; y < es.size(); ++y) {
      if (es.conflict(x, y)) actual.emplace(es.name_of(x), es.name_of(y));
    }
  }
  CHECK(actual == expected);

  // closure idempotence: closing the closed set adds nothing
  EventStructureSpec reclosed = fixtures::fig1();
  reclosed.conflicts.clear();
  for (const auto& [a, b] : actual) reclosed.conflicts.emplace_back(a, b);
  const EventStructure es2 = build_event_structure(reclosed);
  for (EventId x = 0; x < es.size(); ++x) {
    for (EventId y = 0; y < es.size(); ++y) {
      CHECK(es.conflict(x, y) == es2.conflict(x, y));
    }
  }
}

TEST_CASE("fig1 relation queries") {
  const EventStructure es = build_event_structure(fixtures::fig1());
  CHECK(es.relation(Relation::MinimalConflict, "3", "5"));
  CHECK_FALSE(es.relation(Relation::MinimalConflict, "6", "8"));
  CHECK(es.relation(Relation::Concurrent, "4", "6"));
  CHECK(es.relation(Relation::Leq, "1", "6"));
  CHECK(es.relation(Relation::Covers, "3", "6"));
  CHECK_FALSE(es.relation(Relation::Covers, "1", "6"));
  CHECK_THROWS_AS((void)es.relation(Relation::Leq, "1", "zz"), Error);
}

TEST_CASE("chain has no orthogonal pairs") {
  const EventStructure es = build_event_structure(fixtures::chain3());
  CHECK_FALSE(es.relation(Relation::Orthogonal, "a", "c"));
  CHECK(es.relation(Relation::WeakConcurrent, "a", "c"));
  CHECK(es.height(es.id_of("c")) == 2);
}

TEST_CASE("build rejects bad specs") {
  SUBCASE("conflict on a comparable pair") {
    EventStructureSpec spec{{"a", "b"}, {{"a", "b"}}, {{"a", "b"}}};
    CHECK_THROWS_WITH_AS(build_event_structure(spec),
                         doctest::Contains("ConflictOnComparablePair"), Error);
  }
  SUBCASE("conflict forced onto a comparable pair by heredity") {
    // c sits above both sides of the base conflict
    EventStructureSpec spec{{"a", "b", "c"}, {{"a", "c"}, {"b", "c"}}, {{"a", "b"}}};
    CHECK_THROWS_AS(build_event_structure(spec), Error);
  }
  SUBCASE("self conflict") {
    EventStructureSpec spec{{"a"}, {}, {{"a", "a"}}};
    CHECK_THROWS_WITH_AS(build_event_structure(spec), doctest::Contains("SelfConflict"), Error);
  }
  SUBCASE("cycle in covers") {
    EventStructureSpec spec{{"a", "b"}, {{"a", "b"}, {"b", "a"}}, {}};
    CHECK_THROWS_WITH_AS(build_event_structure(spec), doctest::Contains("CycleInCovers"), Error);
  }
  SUBCASE("unknown event") {
    EventStructureSpec spec{{"a"}, {{"a", "b"}}, {}};
    CHECK_THROWS_WITH_AS(build_event_structure(spec), doctest::Contains("UnknownEvent"), Error);
  }
  SUBCASE("duplicate event") {
    EventStructureSpec spec{{"a", "a"}, {}, {}};
    CHECK_THROWS_WITH_AS(build_event_structure(spec), doctest::Contains("DuplicateEvent"), Error);
  }
}

TEST_CASE("transitive cover lines are reduced") {
  EventStructureSpec spec{{"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}, {}};
  const EventStructure es = build_event_structure(spec);
  CHECK(es.relation(Relation::Covers, "a", "b"));
  CHECK(es.relation(Relation::Covers, "b", "c"));
  CHECK_FALSE(es.relation(Relation::Covers, "a", "c"));
  CHECK(es.relation(Relation::Leq, "a", "c"));
}

TEST_CASE("derived tables match the definitional oracle") {
  check_tables_against_oracle(fixtures::pair_conc());
  check_tables_against_oracle(fixtures::pair_conf());
  check_tables_against_oracle(fixtures::chain3());
  check_tables_against_oracle(fixtures::fork());
  check_tables_against_oracle(fixtures::fig1());
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    GenParams params;
    params.event_count = 12;
    params.conflict_density = 0.25;
    params.seed = seed;
    check_tables_against_oracle(generate_spec(params));
  }
}

TEST_CASE("structural report") {
  const StructuralReport fig1 = structural_report(build_event_structure(fixtures::fig1()));
  CHECK(fig1.degree == 3);
  CHECK(fig1.is_simple);
  CHECK(fig1.is_graded);
  CHECK_FALSE(fig1.is_forest);  // event 4 has two lower covers
  CHECK(fig1.height == 2);
  CHECK(fig1.e0 == 2);
  CHECK(fig1.e1 == 6);
  CHECK(fig1.e2 == 1);
  CHECK(fig1.e3 == 0);
  // the largest antichain is {4,6,7,8,9}
  CHECK(fig1.width == 5);

  const StructuralReport fork = structural_report(build_event_structure(fixtures::fork()));
  CHECK(fork.is_forest);
  CHECK(fork.degree == 2);

  const StructuralReport chain = structural_report(build_event_structure(fixtures::chain3()));
  CHECK(chain.width == 1);
  CHECK(chain.degree == 1);
  CHECK(chain.height == 2);

  const StructuralReport empty = structural_report(build_event_structure({}));
  CHECK(empty.degree == 0);
  CHECK(empty.width == 0);
  CHECK(empty.is_forest);
}

TEST_CASE("width equals the exact maximum antichain") {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    GenParams params;
    params.event_count = 10;
    params.conflict_density = 0.2;
    params.seed = seed;
    const EventStructureSpec spec = generate_spec(params);
    const EventStructure es = build_event_structure(spec);
    const oracle::Tables t = oracle::derive(spec);
    CHECK(structural_report(es).width == oracle::max_antichain(t.leq));

    const auto chains = min_chain_partition(es);
    std::vector<char> seen(es.size(), 0);
    for (const auto& chain : chains) {
      for (std::size_t i = 0; i < chain.size(); ++i) {
        CHECK_FALSE(seen[chain[i]]);
        seen[chain[i]] = 1;
        if (i + 1 < chain.size()) CHECK(es.lt(chain[i], chain[i + 1]));
      }
    }
    CHECK(std::count(seen.begin(), seen.end(), 1) == es.size());
  }
}

TEST_CASE("brothers") {
  const EventStructure fork = build_event_structure(fixtures::fork());
  CHECK(names_of(fork, fork.brothers(fork.id_of("u"))) == std::vector<std::string>{"v"});

  const EventStructure fig1 = build_event_structure(fixtures::fig1());
  CHECK(fig1.brothers(fig1.id_of("4")).empty());
  CHECK(names_of(fig1, fig1.brothers(fig1.id_of("6"))) == std::vector<std::string>{"7"});
  // minimal events share the empty cover set
  CHECK(names_of(fig1, fig1.brothers(fig1.id_of("1"))) == std::vector<std::string>{"2"});

  const EventStructure lifted = lift_bottom(fork);
  CHECK(names_of(lifted, lifted.brothers(lifted.id_of("x"))) == std::vector<std::string>{"y"});

  // brothers are pairwise orthogonal
  for (EventId x = 0; x < fig1.size(); ++x) {
    for (EventId y : fig1.brothers(x)) CHECK(fig1.orthogonal(x, y));
  }
}

TEST_CASE("society and family") {
  const EventStructure fork = build_event_structure(fixtures::fork());
  CHECK(fork.society(fork.id_of("x")).empty());

  const EventStructure fig1 = build_event_structure(fixtures::fig1());
  CHECK(names_of(fig1, fig1.society(fig1.id_of("6"))) == std::vector<std::string>{"2", "4"});
  CHECK(names_of(fig1, fig1.family(fig1.id_of("6"))) == std::vector<std::string>{"7"});

  const EventStructure chain = build_event_structure(fixtures::chain3());
  for (EventId x = 0; x < chain.size(); ++x) CHECK(chain.society(x).empty());
}

TEST_CASE("lift_bottom") {
  const EventStructure conc = lift_bottom(build_event_structure(fixtures::pair_conc()));
  CHECK(conc.size() == 3);
  for (EventId x = 1; x < conc.size(); ++x) {
    CHECK(conc.lt(0, x));
    CHECK_FALSE(conc.orthogonal(0, x));
  }

  const EventStructure fork = lift_bottom(build_event_structure(fixtures::fork()));
  CHECK(fork.lower_covers(fork.id_of("r")) == std::vector<EventId>{0});
  CHECK(fork.lower_covers(fork.id_of("x")) == std::vector<EventId>{fork.id_of("r")});

  // fresh name dodges collisions
  const EventStructure taken = lift_bottom(build_event_structure({{"bot"}, {}, {}}));
  CHECK(taken.size() == 2);
  CHECK(taken.name_of(0) == "bot_");
}

TEST_CASE("star substructure") {
  const EventStructure fig1 = build_event_structure(fixtures::fig1());
  const EventStructure star = star_substructure(fig1, fig1.id_of("4"));
  CHECK(star.event_names() == std::vector<std::string>{"3", "5", "6", "7", "8", "9"});
  // induced edges are exactly 3-5, 6-7, 8-9
  std::set<std::pair<std::string, std::string>> edges;
  for (EventId x = 0; x < star.size(); ++x) {
    for (EventId y = x + 1; y < star.size(); ++y) {
      if (star.orthogonal(x, y)) edges.emplace(star.name_of(x), star.name_of(y));
    }
  }
  CHECK(edges == std::set<std::pair<std::string, std::string>>{
                     {"3", "5"}, {"6", "7"}, {"8", "9"}});

  const EventStructure fork = build_event_structure(fixtures::fork());
  const EventStructure star_u = star_substructure(fork, fork.id_of("u"));
  CHECK(star_u.event_names() == std::vector<std::string>{"v"});

  const EventStructure conc = build_event_structure(fixtures::pair_conc());
  CHECK(star_substructure(conc, 0).event_names() == std::vector<std::string>{"b"});

  CHECK_THROWS_AS(star_substructure(fig1, 99), Error);
}

TEST_CASE("star substructure induces the ambient graph edges") {
  for (std::uint64_t seed = 300; seed < 320; ++seed) {
    GenParams params;
    params.event_count = 14;
    params.conflict_density = 0.3;
    params.seed = seed;
    const EventStructure es = generate(params);
    for (EventId x = 0; x < es.size(); ++x) {
      const EventStructure star = star_substructure(es, x);
      for (int i = 0; i < star.size(); ++i) {
        for (int j = 0; j < star.size(); ++j) {
          EventId a = es.id_of(star.name_of(i));
          EventId b = es.id_of(star.name_of(j));
          CHECK(star.orthogonal(i, j) == es.orthogonal(a, b));
        }
      }
    }
  }
}
