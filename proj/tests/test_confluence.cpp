#include <doctest.h>

#include <map>

#include "georw/confluence.hpp"
#include "georw/errors.hpp"
#include "georw/oracle.hpp"
#include "georw/reduction.hpp"
#include "support.hpp"

using namespace georw;
using namespace georw::test;

namespace {

  bool has_pair(std::vector<CriticalPair> const& ps, RewriteSystem const& sys, char const* z,
                char const* x, char const* y) {
    for (auto const& p : ps) {
      if (str(sys, p.z) == z
          && ((str(sys, p.x) == x && str(sys, p.y) == y)
              || (str(sys, p.x) == y && str(sys, p.y) == x))) {
        return true;
      }
    }
    return false;
  }

  std::set<BrutePair> normalized(std::vector<CriticalPair> const& ps) {
    std::set<BrutePair> out;
    for (auto const& p : ps) {
      out.insert(BrutePair{p.z, std::min(p.x, p.y), std::max(p.x, p.y)});
    }
    return out;
  }

}  // namespace

TEST_SUITE("confluence") {
  TEST_CASE("critical pair examples") {
    auto fg = system_fixture("free_group.rws");
    auto ps = critical_pairs(fg);
    CHECK(has_pair(ps, fg, "a A a", "a", "a"));

    auto s = system_fixture("geoper_S.rws");
    ps     = critical_pairs(s);
    CHECK(has_pair(ps, s, "a d d", "a b", "a c"));

    auto tits = system_fixture("tits_d3.rws");
    ps        = critical_pairs(tits);
    CHECK(has_pair(ps, tits, "a a b a", "b a", "a b a b"));
  }

  TEST_CASE("critical pairs replay") {
    Rng rng(21);
    for (int i = 0; i < 200; ++i) {
      auto sys = random_system(rng, 3, 6);
      for (auto self : {SelfOverlaps::Include, SelfOverlaps::Exclude}) {
        for (auto const& p : critical_pairs(sys, self)) {
          CHECK(p.rule1.part == RuleKind::Reducing);
          CHECK(apply_rule(p.z, sys.rule(p.rule1), p.pos1) == p.x);
          CHECK(apply_rule(p.z, sys.rule(p.rule2), p.pos2) == p.y);
        }
      }
    }
  }

  TEST_CASE("critical pairs match a brute-force scan") {
    Rng rng(22);
    for (int i = 0; i < 150; ++i) {
      auto sys = random_system(rng, i % 2 == 0 ? 2 : 3, 6);
      CHECK(normalized(critical_pairs(sys, SelfOverlaps::Include))
            == brute_critical_pairs(sys, true));
      CHECK(normalized(critical_pairs(sys, SelfOverlaps::Exclude))
            == brute_critical_pairs(sys, false));
    }
  }

  TEST_CASE("critical pair order is deterministic and deduplicated") {
    auto graph = system_fixture("z2_graph.rws");
    auto a     = critical_pairs(graph);
    CHECK(a == critical_pairs(graph));
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = i + 1; j < a.size(); ++j) {
        bool same = a[i].x == a[j].x && a[i].y == a[j].y && a[i].z == a[j].z
                    && a[i].rule1 == a[j].rule1 && a[i].rule2 == a[j].rule2;
        CHECK_FALSE(same);
      }
    }
  }

  TEST_CASE("sp equivalence") {
    auto tits = system_fixture("tits_d3.rws");
    CHECK(sp_equivalent(w(tits, "a b a"), w(tits, "b a b"), tits));
    CHECK(sp_equivalent(w(tits, "a"), w(tits, "a"), tits));
    CHECK_FALSE(sp_equivalent(w(tits, "a"), w(tits, "a b"), tits));

    auto three = parse_system(
        "alphabet a A b B c C\ninverse a A\ninverse b B\ninverse c C\n"
        "rule a A -> .\nrule A a -> .\nrule b B -> .\nrule B b -> .\n"
        "rule c C -> .\nrule C c -> .\nrule a b <-> b a\n");
    CHECK(sp_equivalent(w(three, "a b c"), w(three, "b a c"), three));
    CHECK_FALSE(sp_equivalent(w(three, "c a"), w(three, "a c"), three));
    CHECK(str(three, sp_canonical(w(three, "b a c"), three)) == "a b c");
  }

  TEST_CASE("sp equivalence hits its cap honestly") {
    auto graph = system_fixture("z2_graph.rws");
    auto big   = w(graph, "a b a b a b a b a b a b");
    CHECK_THROWS_AS(sp_equivalent(big, w(graph, "b b b b b b a a a a a a"), graph,
                                  SearchCaps{10}),
                    ResourceError);
    CHECK(sp_equivalent(big, w(graph, "b b b b b b a a a a a a"), graph));
  }

  TEST_CASE("descendants and closures") {
    auto fg = system_fixture("free_group.rws");
    CHECK(descendant_closure({}, fg) == std::vector<Word>{Word{}});
    auto c = descendant_closure(w(fg, "a A"), fg);
    CHECK(c == std::vector<Word>{Word{}, w(fg, "a A")});

    auto tits = system_fixture("tits_d3.rws");
    auto d    = descendant_closure(w(tits, "a b a b"), tits);
    CHECK(std::find(d.begin(), d.end(), w(tits, "b a")) != d.end());
    CHECK(reducing_descendants(w(tits, "a b a b"), tits).size() == 1);
  }

  TEST_CASE("preperfect word problem and geodesics") {
    auto tits = system_fixture("tits_d3.rws");
    CHECK(preperfect_wp(w(tits, "a b a"), w(tits, "b a b"), tits));
    CHECK_FALSE(preperfect_wp(w(tits, "a"), w(tits, "b"), tits));
    CHECK(preperfect_wp(w(tits, "a b"), w(tits, "a b"), tits));

    auto g = geodesics_of(w(tits, "a b a b"), tits);
    REQUIRE_FALSE(g.empty());
    for (auto const& x : g) {
      CHECK(x.size() == 2);
    }
    CHECK(std::find(g.begin(), g.end(), w(tits, "b a")) != g.end());
    auto og = oracle_geodesics(w(tits, "a b a b"), tits, OracleCaps{16, 2'000'000});
    CHECK(og.certified);
    CHECK(og.geodesics == g);

    auto fg = system_fixture("free_group.rws");
    CHECK(geodesics_of(w(fg, "a A"), fg) == std::vector<Word>{Word{}});

    auto graph = system_fixture("z2_graph.rws");
    CHECK(geodesics_of(w(graph, "a b"), graph)
          == std::vector<Word>{w(graph, "a b"), w(graph, "b a")});
  }

  TEST_CASE("geodesics are irreducible and of one length") {
    for (auto name : {"tits_d3.rws", "z2_graph.rws", "free_group.rws", "geoper_T.rws"}) {
      auto sys = system_fixture(name);
      Rng  rng(23);
      for (int i = 0; i < 100; ++i) {
        auto word = random_word(rng, sys.alphabet().size(), 7);
        auto g    = geodesics_of(word, sys);
        REQUIRE_FALSE(g.empty());
        for (auto const& x : g) {
          CHECK(x.size() == g.front().size());
          CHECK_FALSE(reducible(x, sys));
        }
      }
    }
  }

  TEST_CASE("preperfect word problem agrees with the oracle") {
    for (auto name : {"tits_d3.rws", "z2_graph.rws", "free_group.rws"}) {
      auto sys   = system_fixture(name);
      auto words = all_words_up_to(sys.alphabet().size(), 5);
      // One closure per class; complete closures are whole components.
      std::map<Word, std::size_t> class_of;
      std::size_t                 classes = 0;
      for (auto const& u : words) {
        if (class_of.contains(u)) {
          continue;
        }
        auto c = class_closure(u, sys, OracleCaps{9, 1'000'000});
        REQUIRE(c.complete());
        for (auto const& m : c.members()) {
          if (m.size() <= 5) {
            class_of[m] = classes;
          }
        }
        ++classes;
      }
      for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i; j < words.size(); ++j) {
          CHECK(preperfect_wp(words[i], words[j], sys)
                == (class_of[words[i]] == class_of[words[j]]));
        }
      }
    }
  }

  TEST_CASE("geodesically perfect examples") {
    for (auto self : {SelfOverlaps::Include, SelfOverlaps::Exclude}) {
      GpOptions opts{{}, self};
      auto      t = system_fixture("geoper_T.rws");
      CHECK(check_geodesically_perfect(t, opts).holds);

      auto graph = system_fixture("z2_graph.rws");
      auto v     = check_geodesically_perfect(graph, opts);
      CHECK_FALSE(v.holds);
      REQUIRE(v.witness);
      auto const& p = v.witness->pair;
      CHECK(apply_rule(p.z, graph.rule(p.rule1), p.pos1) == p.x);
      CHECK(apply_rule(p.z, graph.rule(p.rule2), p.pos2) == p.y);
      CHECK_FALSE(brute_joinable(p.x, p.y, graph));
    }
    // ddd rewrites to fd and to df, two geodesics with no length-preserving
    // rule between them. Only the reading without shifted self-overlaps
    // accepts this system.
    auto gpex = system_fixture("gpex.rws");
    CHECK(check_geodesically_perfect(gpex, {{}, SelfOverlaps::Exclude}).holds);
    auto v = check_geodesically_perfect(gpex, {{}, SelfOverlaps::Include});
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness);
    CHECK(str(gpex, v.witness->pair.z) == "d d d");
    auto og = oracle_geodesics(w(gpex, "d d d"), gpex, OracleCaps{13, 2'000'000});
    CHECK(og.certified);
    CHECK(og.geodesics == std::vector<Word>{w(gpex, "d f"), w(gpex, "f d")});
  }

  TEST_CASE("verdicts agree with a direct pairwise check") {
    Rng rng(24);
    for (int i = 0; i < 150; ++i) {
      auto sys = random_system(rng, 3, 5);
      for (auto self : {SelfOverlaps::Include, SelfOverlaps::Exclude}) {
        auto v   = check_geodesically_perfect_serial(sys, {{}, self});
        bool ref = true;
        for (auto const& p : brute_critical_pairs(sys, self == SelfOverlaps::Include)) {
          if (!brute_joinable(p.x, p.y, sys)) {
            ref = false;
            break;
          }
        }
        CHECK(v.holds == ref);
        CHECK(v.witness.has_value() == !v.holds);
      }
    }
  }

  TEST_CASE("serial and parallel checkers agree") {
    Rng rng(25);
    for (int i = 0; i < 200; ++i) {
      auto sys = random_system(rng, 3, 7);
      auto a   = check_geodesically_perfect(sys);
      auto b   = check_geodesically_perfect_serial(sys);
      CHECK(a.holds == b.holds);
      CHECK(a.pairs_checked == b.pairs_checked);
      CHECK(a.witness.has_value() == b.witness.has_value());
      if (a.witness && b.witness) {
        CHECK(a.witness->pair == b.witness->pair);
        CHECK(a.witness->x_descendants == b.witness->x_descendants);
      }
    }
  }

  TEST_CASE("geodesically perfect systems behave geodesically") {
    Rng rng(26);
    int checked = 0;
    for (int i = 0; i < 300 && checked < 40; ++i) {
      auto sys = random_system(rng, 2, 4);
      if (!check_geodesically_perfect(sys).holds) {
        continue;
      }
      ++checked;
      for (int j = 0; j < 30; ++j) {
        auto word = random_word(rng, 2, 8);
        auto x    = random_reduce(word, sys, rng);
        auto y    = random_reduce(word, sys, rng);
        CHECK(x.size() == y.size());
        CHECK(sp_connected(x, y, sys));
      }
      auto c = geodesic_bounded_check(sys, 4, OracleCaps{10, 200'000});
      CHECK(c.status != GeodesicCheckStatus::Counterexample);
    }
    CHECK(checked > 5);
  }

  TEST_CASE("fixture systems behave geodesically") {
    for (auto name : {"geoper_T.rws", "free_group.rws"}) {
      auto sys = system_fixture(name);
      REQUIRE(check_geodesically_perfect(sys).holds);
      Rng rng(27);
      for (int j = 0; j < 500; ++j) {
        auto word = random_word(rng, sys.alphabet().size(), 8);
        auto x    = random_reduce(word, sys, rng);
        auto y    = random_reduce(word, sys, rng);
        CHECK(x.size() == y.size());
        CHECK(sp_equivalent(x, y, sys));
      }
    }
  }

  TEST_CASE("bounded geodesic check") {
    auto fg = system_fixture("free_group.rws");
    auto c  = geodesic_bounded_check(fg, 4, OracleCaps{12, 1'000'000});
    CHECK(c.status == GeodesicCheckStatus::ConsistentUpTo);
    CHECK(c.max_len == 4);

    auto s = system_fixture("geoper_S.rws");
    c      = geodesic_bounded_check(s, 4, OracleCaps{10, 1'000'000});
    CHECK(c.status == GeodesicCheckStatus::ConsistentUpTo);

    auto ng = system_fixture("not_geodesic.rws");
    c       = geodesic_bounded_check(ng, 4, OracleCaps{8, 1'000'000});
    REQUIRE(c.status == GeodesicCheckStatus::Counterexample);
    CHECK(str(ng, *c.word) == "a c");
    CHECK(str(ng, *c.shorter) == "a");
    CHECK(oracle_wp(*c.word, *c.shorter, ng, OracleCaps{4, 1000}) == OracleVerdict::Equal);

    // {aA -> 1} alone is the bicyclic monoid; Aa is not equal to 1 there.
    auto bicyclic = parse_system("alphabet a A\nrule a A -> .\n");
    c             = geodesic_bounded_check(bicyclic, 4, OracleCaps{10, 1'000'000});
    CHECK(c.status == GeodesicCheckStatus::ConsistentUpTo);

    c = geodesic_bounded_check(fg, 4, OracleCaps{12, 5});
    CHECK(c.status == GeodesicCheckStatus::Undecided);
  }
}
