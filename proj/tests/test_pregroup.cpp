#include <doctest.h>

#include <map>
#include <numeric>

#include "georw/confluence.hpp"
#include "georw/errors.hpp"
#include "georw/oracle.hpp"
#include "georw/triangular.hpp"
#include "support.hpp"

using namespace georw;
using namespace georw::test;

namespace {

  using E = Pregroup::Element;

  PSequence seq(Pregroup const& p, std::string_view text) {
    return parse_sequence(p, text);
  }

  // The same pregroup with elements renamed by a permutation.
  Pregroup relabel(Pregroup const& p, std::vector<E> const& perm) {
    std::vector<std::string> names(p.size());
    std::vector<E>           inv(p.size());
    for (E a = 0; a < p.size(); ++a) {
      names[perm[a]] = p.name(a);
      inv[perm[a]]   = perm[p.inv(a)];
    }
    std::vector<Pregroup::Product> products;
    for (auto [a, b, c] : p.products()) {
      products.emplace_back(perm[a], perm[b], perm[c]);
    }
    return Pregroup(names, perm[p.eps()], inv, products);
  }

}  // namespace

TEST_SUITE("pregroup") {
  TEST_CASE("free pregroup") {
    auto p = free_pregroup(2);
    CHECK(check_axioms(p).all_hold());
    CHECK(p.domain_size() == 5 + 5 + 4 - 1);
    auto sp = universal_system_prime(p);
    CHECK(sp.reducing().size() == 4);
    CHECK(check_geodesically_perfect(sp).holds);
    auto s = universal_system(p);
    CHECK(s.contains(Rule{Word{Symbol{0}}, {}}));
    CHECK(check_geodesically_perfect(s).holds);
    // a a^-1 -> eps -> 1 takes two steps in S(P).
    CHECK(s.contains(Rule{Word{Symbol{1}, Symbol{2}}, Word{Symbol{0}}}));
  }

  TEST_CASE("amalgam pregroup") {
    auto d = amalgam_fixture();
    auto p = build_amalgam_pregroup(d);
    CHECK(p.size() == 8);
    CHECK(check_axioms(p).all_hold());
    CHECK(p.name(p.eps()) == "1");

    auto s = universal_system(p);
    // a b <-> [a h][h^-1 b] with h = a2 (= b3).
    auto a = p.at("a"), b = p.at("b"), h = p.at("a2");
    Rule mixed{Word{Symbol{a}, Symbol{b}},
               Word{Symbol{*p.mult(a, h)}, Symbol{*p.mult(p.inv(h), b)}}};
    CHECK(s.contains(mixed));
    for (auto self : {SelfOverlaps::Include, SelfOverlaps::Exclude}) {
      CHECK(check_geodesically_perfect(s, {{}, self}).holds);
      CHECK(check_geodesically_perfect(universal_system_prime(p), {{}, self}).holds);
    }
    CHECK(classify_triangular(universal_system_prime(p).reducing_part()).kind
          == TriangularKind::Triangular);
  }

  TEST_CASE("mutated tables fail the axioms") {
    auto p = build_amalgam_pregroup(amalgam_fixture());
    Rng  rng(41);
    int  mutated = 0;
    for (auto [a, b, c] : p.products()) {
      if (a == p.eps() || b == p.eps() || a == p.inv(b)) {
        continue;
      }
      auto q = p;
      q.set_product(a, b, std::nullopt);
      auto r = check_axioms(q);
      CHECK_FALSE(r.all_hold());
      CHECK((!r.axioms[3].holds || !r.axioms[0].holds || !r.axioms[2].holds));
      for (auto const& ax : r.axioms) {
        CHECK(ax.holds == ax.counterexample.empty());
      }
      CHECK_FALSE(r.describe(q).empty());
      CHECK_THROWS_AS(universal_system(q), AxiomError);
      ++mutated;
    }
    CHECK(mutated > 0);
    // A wrong value instead of a missing one.
    auto q = p;
    q.set_product(p.at("a"), p.at("a"), p.at("a3"));
    CHECK_FALSE(check_axioms(q).all_hold());
  }

  TEST_CASE("axioms are invariant under relabeling") {
    Rng rng(42);
    for (auto const& p : {build_amalgam_pregroup(amalgam_fixture()), free_pregroup(2)}) {
      std::vector<Pregroup> cases{p};
      for (auto [a, b, c] : p.products()) {
        if (a != p.eps() && b != p.eps() && a != p.inv(b)) {
          auto bad = p;
          bad.set_product(a, b, std::nullopt);
          cases.push_back(bad);
          break;
        }
      }
      for (auto const& q : cases) {
        auto ref = check_axioms(q);
        for (int i = 0; i < 20; ++i) {
          std::vector<E> perm(q.size());
          std::iota(perm.begin(), perm.end(), 0);
          std::shuffle(perm.begin(), perm.end(), rng);
          auto got = check_axioms(relabel(q, perm));
          for (std::size_t k = 0; k < 5; ++k) {
            CHECK(got.axioms[k].holds == ref.axioms[k].holds);
          }
        }
      }
    }
  }

  TEST_CASE("reduction") {
    auto p = build_amalgam_pregroup(amalgam_fixture());
    CHECK(p_reduce(seq(p, "a a3"), p).empty());
    CHECK(format_sequence(p, p_reduce(seq(p, "a a"), p)) == "a2");
    CHECK(format_sequence(p, p_reduce(seq(p, "a b"), p)) == "a b");
    CHECK(is_reduced(seq(p, "a b"), p));
    CHECK_FALSE(is_reduced(seq(p, "a a2"), p));
    CHECK_THROWS_AS(p_reduce(PSequence{p.eps()}, p), PreconditionError);
    CHECK_THROWS(parse_sequence(p, "1"));
  }

  TEST_CASE("interleaving") {
    auto p = build_amalgam_pregroup(amalgam_fixture());
    auto s = seq(p, "a b");
    CHECK(interleave_equivalent(s, s, p));
    CHECK(interleave_equivalent(s, seq(p, "a3 b4"), p));
    CHECK_FALSE(interleave_equivalent(s, seq(p, "b a"), p));
    CHECK_FALSE(interleave_equivalent(s, seq(p, "a"), p));
    CHECK_THROWS_AS(interleave_equivalent(seq(p, "a a"), s, p), PreconditionError);

    CHECK(up_wp(seq(p, "a a3 b"), seq(p, "b"), p));
    CHECK(up_wp(seq(p, "a b"), seq(p, "a3 b4"), p));
    CHECK_FALSE(up_wp(seq(p, "a"), {}, p));
  }

  TEST_CASE("embedding of the carrier") {
    for (auto const& p : {build_amalgam_pregroup(amalgam_fixture()), free_pregroup(2)}) {
      for (E a = 0; a < p.size(); ++a) {
        if (a == p.eps()) {
          continue;
        }
        CHECK_FALSE(up_wp({a}, {}, p));
        for (E b = a + 1; b < p.size(); ++b) {
          if (b != p.eps()) {
            CHECK_FALSE(up_wp({a}, {b}, p));
          }
        }
      }
    }
  }

  TEST_CASE("reduction length is strategy independent") {
    Rng  rng(43);
    auto p = build_amalgam_pregroup(amalgam_fixture());
    for (int i = 0; i < 300; ++i) {
      auto s    = random_sequence(rng, p, 8);
      auto base = p_reduce(s, p);
      CHECK(is_reduced(base, p));
      for (int t = 0; t < 5; ++t) {
        auto r = random_p_reduce(s, p, rng);
        CHECK(r.size() == base.size());
        CHECK(interleave_equivalent(r, base, p));
      }
    }
  }

  TEST_CASE("up_wp agrees with the joinability of S(P) words") {
    auto p     = build_amalgam_pregroup(amalgam_fixture());
    auto s     = universal_system(p);
    auto sp    = universal_system_prime(p);
    // All sequences up to length 3 over P \ {eps}; classes by canonical form.
    std::vector<PSequence> all;
    std::vector<E>         gamma;
    for (E a = 0; a < p.size(); ++a) {
      if (a != p.eps()) {
        gamma.push_back(a);
      }
    }
    for_each_word_up_to(gamma.size(), 3, [&](Word const& ix) {
      PSequence q;
      for (auto i : ix) {
        q.push_back(gamma[i.id]);
      }
      all.push_back(q);
    });
    std::map<PSequence, std::vector<std::size_t>> by_key;
    for (std::size_t i = 0; i < all.size(); ++i) {
      by_key[up_canonical(all[i], p)].push_back(i);
    }
    Rng rng(44);
    for (auto const& [key, members] : by_key) {
      auto u = p_word(all[members.front()]);
      for (auto m : members) {
        CHECK(preperfect_wp(u, p_word(all[m]), s));
        CHECK(up_wp(all[members.front()], all[m], p));
        CHECK(preperfect_wp(gamma_word(p, all[members.front()]), gamma_word(p, all[m]), sp));
      }
    }
    for (int i = 0; i < 3000; ++i) {
      auto a = uniform(rng, 0, all.size() - 1);
      auto b = uniform(rng, 0, all.size() - 1);
      bool same = up_canonical(all[a], p) == up_canonical(all[b], p);
      CHECK(up_wp(all[a], all[b], p) == same);
      CHECK(preperfect_wp(p_word(all[a]), p_word(all[b]), s) == same);
    }
  }

  TEST_CASE("pregroup files round-trip") {
    auto p    = build_amalgam_pregroup(amalgam_fixture());
    auto text = serialize(p);
    auto back = parse_pregroup(text);
    CHECK(back == p);
    CHECK(serialize(back) == text);
    CHECK(load_pregroup(fixture("amalgam.pregroup")) == p);
    CHECK(load_pregroup(fixture("hnn.pregroup")) == build_hnn_pregroup(hnn_fixture()));
    CHECK_THROWS_AS(parse_pregroup("elements e a\neps e\ninv a a\nmult a a = z\n"), ParseError);
    CHECK_THROWS(parse_pregroup("elements e a\neps e\ninv a e\n"));
  }
}
