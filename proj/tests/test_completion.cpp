#include <doctest.h>

#include "georw/completion.hpp"
#include "georw/oracle.hpp"
#include "georw/reduction.hpp"
#include "support.hpp"

using namespace georw;
using namespace georw::test;

namespace {

  CriticalPair find_pair(RewriteSystem const& sys, std::string const& x, std::string const& y) {
    for (auto const& p : critical_pairs(sys)) {
      if (str(sys, p.x) == x && str(sys, p.y) == y) {
        return p;
      }
    }
    FAIL("pair not found: " << x << " / " << y);
    return {};
  }

  // Same oracle classes on all words up to length n.
  void check_same_classes(RewriteSystem const& a, RewriteSystem const& b, std::size_t n,
                          std::size_t cap) {
    for_each_word_up_to(a.alphabet().size(), n, [&](Word const& u) {
      auto ca = class_closure(u, a, OracleCaps{cap, 2'000'000});
      auto cb = class_closure(u, b, OracleCaps{cap, 2'000'000});
      if (!ca.complete() || !cb.complete()) {
        return;
      }
      for (auto const& v : ca.members()) {
        if (v.size() <= n) {
          CHECK(cb.contains(v));
        }
      }
      for (auto const& v : cb.members()) {
        if (v.size() <= n) {
          CHECK(ca.contains(v));
        }
      }
    });
  }

}  // namespace

TEST_SUITE("completion") {
  TEST_CASE("resolve pair") {
    auto s = system_fixture("geoper_S.rws");
    auto r = resolve_pair(find_pair(s, "a b", "a c"), s);
    CHECK(r.kind == ResolutionKind::AddPreserving);
    REQUIRE(r.rule);
    CHECK(str(s, r.rule->lhs) == "a b");
    CHECK(str(s, r.rule->rhs) == "a c");
    CHECK(replay_derivation(r.rule->lhs, s, r.derivation) == r.rule->rhs);

    auto fg = system_fixture("free_group.rws");
    r       = resolve_pair(find_pair(fg, "a", "a"), fg);
    CHECK(r.kind == ResolutionKind::AlreadyJoinable);
    CHECK_FALSE(r.rule);

    auto graph = system_fixture("z2_graph.rws");
    auto p     = find_pair(graph, "b", "a b A");
    CHECK(str(graph, p.z) == "b a A");
    r = resolve_pair(p, graph);
    CHECK(r.kind == ResolutionKind::AddReducing);
    REQUIRE(r.rule);
    CHECK(str(graph, r.rule->lhs) == "a b A");
    CHECK(str(graph, r.rule->rhs) == "b");
    CHECK(replay_derivation(r.rule->lhs, graph, r.derivation) == r.rule->rhs);
  }

  TEST_CASE("resolution certificates replay on random systems") {
    Rng rng(31);
    for (int i = 0; i < 200; ++i) {
      auto sys = random_system(rng, 3, 5);
      for (auto const& p : critical_pairs(sys)) {
        auto r = resolve_pair(p, sys);
        if (r.rule) {
          CHECK(replay_derivation(r.rule->lhs, sys, r.derivation) == r.rule->rhs);
          CHECK(r.rule->lhs.size() >= r.rule->rhs.size());
          CHECK_FALSE(reducible(r.rule->lhs, sys));
          CHECK_FALSE(reducible(r.rule->rhs, sys));
        }
      }
    }
  }

  TEST_CASE("Z/2 * Z/2 completes") {
    auto sys = parse_system("alphabet a b\nrule a a -> .\nrule b b -> .\n");
    auto r   = kb_complete(sys);
    CHECK(r.status == CompletionStatus::Completed);
    CHECK(r.phases.size() <= 2);
    CHECK(check_geodesically_perfect(r.system).holds);

    auto z = system_fixture("z2z2.rws");
    r      = kb_complete(z);
    REQUIRE(r.status == CompletionStatus::Completed);
    CHECK(r.phases.size() == 3);
    CHECK(r.phases.back().added_reducing.empty());
    CHECK(r.phases.back().added_preserving.empty());
    CHECK(check_geodesically_perfect(r.system).holds);
    CHECK(check_geodesically_perfect(r.system, {{}, SelfOverlaps::Exclude}).holds);
    CHECK_FALSE(verify_completion(z, r));
    CHECK(r.system.contains(Rule{w(z, "A A"), {}}));
    CHECK(r.system.contains(Rule{w(z, "a"), w(z, "A")}));
    check_same_classes(z, r.system, 4, 7);
  }

  TEST_CASE("honest non-termination") {
    for (auto name : {"geoper_S.rws", "z2_graph.rws"}) {
      auto              sys = system_fixture(name);
      CompletionOptions opts;
      opts.max_phases = 6;
      auto r          = kb_complete(sys, opts);
      CHECK(r.status == CompletionStatus::PhaseLimitReached);
      REQUIRE(r.phases.size() == 6);
      std::size_t prev = sys.size();
      for (auto const& p : r.phases) {
        CHECK(p.rules_after > prev);
        prev = p.rules_after;
      }
      CHECK_FALSE(verify_completion(sys, r));
    }
    auto              s = system_fixture("geoper_S.rws");
    CompletionOptions opts;
    opts.max_phases = 8;
    CHECK(kb_complete(s, opts).status == CompletionStatus::PhaseLimitReached);
  }

  TEST_CASE("rule budget and caps surface as resource errors") {
    auto              graph = system_fixture("z2_graph.rws");
    CompletionOptions opts;
    opts.max_rules = 30;
    auto r         = kb_complete(graph, opts);
    CHECK(r.status == CompletionStatus::ResourceError);
    CHECK_FALSE(r.message.empty());
  }

  TEST_CASE("serial and parallel completion agree") {
    Rng rng(32);
    for (int i = 0; i < 60; ++i) {
      auto              sys = random_system(rng, 3, 4);
      CompletionOptions a;
      a.max_phases = 4;
      a.max_rules  = 400;
      auto b       = a;
      b.parallel   = false;
      auto ra      = kb_complete(sys, a);
      auto rb      = kb_complete(sys, b);
      CHECK(ra.status == rb.status);
      CHECK(ra.system == rb.system);
      CHECK(ra.phases.size() == rb.phases.size());
    }
  }

  TEST_CASE("completed random systems are perfect and keep their congruence") {
    Rng rng(33);
    int completed = 0;
    for (int i = 0; i < 120; ++i) {
      auto              sys = random_system(rng, 2, 4);
      CompletionOptions opts;
      opts.max_phases = 6;
      opts.max_rules  = 200;
      auto r          = kb_complete(sys, opts);
      CHECK_FALSE(verify_completion(sys, r));
      // Monotone growth.
      for (auto const& rule : sys.rules()) {
        CHECK(r.system.contains(rule));
      }
      if (r.status != CompletionStatus::Completed) {
        continue;
      }
      ++completed;
      CHECK(check_geodesically_perfect(r.system).holds);
      check_same_classes(sys, r.system, 4, 8);
    }
    CHECK(completed > 20);
  }
}
