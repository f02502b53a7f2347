#include <doctest.h>

#include "georw/errors.hpp"
#include "georw/oracle.hpp"
#include "support.hpp"

using namespace georw;
using namespace georw::test;

TEST_SUITE("oracle") {
  TEST_CASE("closure of the empty word") {
    auto fg = system_fixture("free_group.rws");
    auto c  = class_closure({}, fg, OracleCaps{2, 1000});
    CHECK(c.complete());
    auto m = c.sorted_members();
    CHECK(m.size() == 5);
    CHECK(m.front().empty());
    CHECK(c.contains(w(fg, "a A")));
    CHECK(c.contains(w(fg, "B b")));
  }

  TEST_CASE("closure through a longer word") {
    auto graph = system_fixture("z2_graph.rws");
    auto c     = class_closure(w(graph, "a b A"), graph, OracleCaps{4, 100'000});
    CHECK(c.complete());
    CHECK(c.contains(w(graph, "b")));
    auto g = oracle_geodesics(w(graph, "a b A"), graph, OracleCaps{8, 2'000'000}, 4);
    CHECK(g.certified);
    CHECK(g.geodesics == std::vector<Word>{w(graph, "b")});
  }

  TEST_CASE("caps make the closure incomplete") {
    auto graph = system_fixture("z2_graph.rws");
    auto c     = class_closure(w(graph, "a"), graph, OracleCaps{1, 10});
    CHECK(c.complete());
    c = class_closure(w(graph, "a b a b"), graph, OracleCaps{8, 10});
    CHECK_FALSE(c.complete());
    CHECK(c.members().size() <= 10);
  }

  TEST_CASE("paths replay") {
    Rng rng(61);
    for (auto name : {"z2_graph.rws", "tits_d3.rws", "gpex.rws", "z2z2.rws"}) {
      auto sys = system_fixture(name);
      for (int i = 0; i < 10; ++i) {
        auto seed = random_word(rng, sys.alphabet().size(), 4);
        auto c    = class_closure(seed, sys, OracleCaps{6, 50'000});
        for (int k = 0; k < 100; ++k) {
          auto const& m = c.members()[uniform(rng, 0, c.members().size() - 1)];
          CHECK(replay_path(seed, c.path_to(m)) == m);
        }
      }
    }
  }

  TEST_CASE("larger caps never lose members") {
    Rng rng(62);
    for (int i = 0; i < 50; ++i) {
      auto sys   = random_system(rng, 3, 4);
      auto seed  = random_word(rng, 3, 4);
      auto small = class_closure(seed, sys, OracleCaps{5, 100'000});
      auto large = class_closure(seed, sys, OracleCaps{7, 400'000});
      for (auto const& m : small.members()) {
        CHECK(large.contains(m));
      }
    }
  }

  TEST_CASE("word problem verdicts") {
    auto tits = system_fixture("tits_d3.rws");
    CHECK(oracle_wp(w(tits, "a b a"), w(tits, "b a b"), tits, OracleCaps{6, 1000})
          == OracleVerdict::Equal);
    auto fg = system_fixture("free_group.rws");
    CHECK(oracle_wp(w(fg, "a"), w(fg, "b"), fg, OracleCaps{5, 1'000'000})
          == OracleVerdict::Distinct);
    CHECK(oracle_wp(w(fg, "a"), w(fg, "b"), fg, OracleCaps{5, 3}) == OracleVerdict::Unknown);
  }

  TEST_CASE("geodesics") {
    auto fg = system_fixture("free_group.rws");
    auto g  = oracle_geodesics(w(fg, "a b"), fg, OracleCaps{10, 1'000'000});
    CHECK(g.certified);
    CHECK(g.geodesics == std::vector<Word>{w(fg, "a b")});
    g = oracle_geodesics(w(fg, "a b"), fg, OracleCaps{4, 1'000'000});
    CHECK_FALSE(g.certified);

    auto s = system_fixture("geoper_S.rws");
    g      = oracle_geodesics(w(s, "a d d"), s, OracleCaps{13, 2'000'000});
    CHECK(g.certified);
    CHECK(g.geodesics == std::vector<Word>{w(s, "a b"), w(s, "a c")});
  }

  TEST_CASE("quotient counts") {
    auto tits = system_fixture("tits_d3.rws");
    auto q    = enumerate_quotient(tits, 6, OracleCaps{10, 1'000'000});
    CHECK(q.classes == 6);
    CHECK(q.complete);
    CHECK_THROWS_AS(enumerate_quotient(tits, 6, OracleCaps{5, 1000}), PreconditionError);
  }
}
