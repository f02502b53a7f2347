#pragma once

// Test-side helpers: fixture loading, random generators and brute-force
// references that do not go through the code under test.

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "georw/builders.hpp"
#include "georw/finite_group.hpp"
#include "georw/pregroup.hpp"
#include "georw/rules.hpp"
#include "georw/system_io.hpp"
#include "georw/word.hpp"

namespace georw::test {

  inline std::string fixture(std::string const& name) {
    return std::string(GEORW_FIXTURES) + "/" + name;
  }

  inline RewriteSystem system_fixture(std::string const& name) {
    return load_system(fixture(name));
  }

  inline Word w(RewriteSystem const& sys, std::string_view text) {
    return sys.alphabet().parse(text);
  }

  inline std::string str(RewriteSystem const& sys, Word const& word) {
    return sys.alphabet().format(word);
  }

  using Rng = std::mt19937_64;

  inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  }

  inline Word random_word(Rng& rng, std::size_t k, std::size_t max_len) {
    Word out(uniform(rng, 0, max_len));
    for (auto& s : out) {
      s = Symbol{static_cast<std::uint32_t>(uniform(rng, 0, k - 1))};
    }
    return out;
  }

  inline std::vector<std::size_t> occurrences(Word const& w, Word const& pattern) {
    std::vector<std::size_t> out;
    if (pattern.size() > w.size()) {
      return out;
    }
    for (std::size_t i = 0; i + pattern.size() <= w.size(); ++i) {
      if (std::equal(pattern.begin(), pattern.end(), w.begin() + i)) {
        out.push_back(i);
      }
    }
    return out;
  }

  inline Word rewrite_at(Word const& w, Rule const& r, std::size_t pos) {
    Word out(w.begin(), w.begin() + pos);
    out.insert(out.end(), r.rhs.begin(), r.rhs.end());
    out.insert(out.end(), w.begin() + pos + r.lhs.size(), w.end());
    return out;
  }

  // Applies a uniformly chosen reducing step until none applies.
  inline Word random_reduce(Word word, RewriteSystem const& sys, Rng& rng) {
    for (;;) {
      std::vector<std::pair<std::size_t, std::size_t>> sites;
      for (std::size_t i = 0; i < sys.reducing().size(); ++i) {
        for (auto p : occurrences(word, sys.reducing()[i].lhs)) {
          sites.emplace_back(i, p);
        }
      }
      if (sites.empty()) {
        return word;
      }
      auto [i, p] = sites[uniform(rng, 0, sites.size() - 1)];
      word        = rewrite_at(word, sys.reducing()[i], p);
    }
  }

  inline bool reducible(Word const& word, RewriteSystem const& sys) {
    for (auto const& r : sys.reducing()) {
      if (!occurrences(word, r.lhs).empty()) {
        return true;
      }
    }
    return false;
  }

  // Breadth-first closure under a rule list, both sides kept as given.
  inline std::set<Word> closure(Word const& start, std::vector<Rule> const& rules) {
    std::set<Word>   seen{start};
    std::deque<Word> queue{start};
    while (!queue.empty()) {
      auto cur = queue.front();
      queue.pop_front();
      for (auto const& r : rules) {
        for (auto p : occurrences(cur, r.lhs)) {
          auto next = rewrite_at(cur, r, p);
          if (seen.insert(next).second) {
            queue.push_back(next);
          }
        }
      }
    }
    return seen;
  }

  inline std::vector<Rule> preserving_rules(RewriteSystem const& sys) {
    return {sys.preserving().begin(), sys.preserving().end()};
  }

  inline std::vector<Rule> reducing_rules(RewriteSystem const& sys) {
    return {sys.reducing().begin(), sys.reducing().end()};
  }

  inline bool sp_connected(Word const& u, Word const& v, RewriteSystem const& sys) {
    return closure(u, preserving_rules(sys)).contains(v);
  }

  // The geodesically-perfect criterion for one pair, computed directly.
  inline bool brute_joinable(Word const& x, Word const& y, RewriteSystem const& sys) {
    auto xs = closure(x, reducing_rules(sys));
    auto ys = closure(y, reducing_rules(sys));
    for (auto const& a : xs) {
      auto cls = closure(a, preserving_rules(sys));
      for (auto const& b : ys) {
        if (a.size() == b.size() && cls.contains(b)) {
          return true;
        }
      }
    }
    return false;
  }

  struct BrutePair {
    Word z, x, y;
    auto operator<=>(BrutePair const&) const = default;
  };

  // Every z covered by two overlapping applications (first one reducing),
  // found by scanning all short words. Pairs are unordered.
  inline std::set<BrutePair> brute_critical_pairs(RewriteSystem const& sys, bool self_shifted) {
    std::size_t max_lhs = 0;
    auto        rules   = sys.rules();
    for (auto const& r : rules) {
      max_lhs = std::max(max_lhs, r.lhs.size());
    }
    std::set<BrutePair> out;
    for_each_word_up_to(sys.alphabet().size(), 2 * max_lhs, [&](Word const& z) {
      for (std::size_t i = 0; i < sys.reducing().size(); ++i) {
        auto const& r1 = sys.reducing()[i];
        for (auto p1 : occurrences(z, r1.lhs)) {
          for (std::size_t j = 0; j < rules.size(); ++j) {
            auto const& r2 = rules[j];
            for (auto p2 : occurrences(z, r2.lhs)) {
              bool same_rule = r1 == r2;
              if (same_rule && p1 == p2) {
                continue;
              }
              if (same_rule && !self_shifted) {
                continue;
              }
              auto lo = std::min(p1, p2);
              auto hi = std::max(p1 + r1.lhs.size(), p2 + r2.lhs.size());
              if (lo != 0 || hi != z.size()) {
                continue;
              }
              // The two occurrences must share a letter.
              if (p1 + r1.lhs.size() <= p2 || p2 + r2.lhs.size() <= p1) {
                continue;
              }
              auto x = rewrite_at(z, r1, p1);
              auto y = rewrite_at(z, r2, p2);
              out.insert(BrutePair{z, std::min(x, y), std::max(x, y)});
            }
          }
        }
      }
    });
    return out;
  }

  // Small random Thue systems over k letters: a few reducing rules and a
  // few symmetric pairs.
  inline RewriteSystem random_system(Rng& rng, std::size_t k, std::size_t max_rules,
                                     std::size_t max_lhs = 3) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i) {
      names.push_back(std::string(1, char('a' + i)));
    }
    std::vector<Rule> rules;
    auto              n = uniform(rng, 1, max_rules);
    for (std::size_t i = 0; i < n; ++i) {
      auto len = uniform(rng, 1, max_lhs);
      Word lhs(len);
      for (auto& s : lhs) {
        s = Symbol{static_cast<std::uint32_t>(uniform(rng, 0, k - 1))};
      }
      bool preserving = len >= 2 && uniform(rng, 0, 2) == 0;
      Word rhs(preserving ? len : uniform(rng, 0, len - 1));
      for (auto& s : rhs) {
        s = Symbol{static_cast<std::uint32_t>(uniform(rng, 0, k - 1))};
      }
      if (lhs != rhs) {
        rules.push_back(Rule{lhs, rhs});
        if (preserving) {
          rules.push_back(Rule{rhs, lhs});
        }
      }
    }
    return RewriteSystem(Alphabet(names), rules);
  }

  // Fixture groups and the pregroups built from them.
  inline AmalgamData amalgam_fixture() {
    AmalgamData d;
    d.a      = load_group(fixture("z4.group"));
    d.b      = load_group(fixture("z6.group"));
    d.h_in_a = load_embedding(fixture("h_in_z4.embed"), d.a);
    d.h_in_b = load_embedding(fixture("h_in_z6.embed"), d.b);
    return d;
  }

  inline HnnData hnn_fixture(std::string const& b_embed = "s12_in_s3.embed") {
    HnnData d;
    d.g   = load_group(fixture("s3.group"));
    d.a   = load_embedding(fixture("s12_in_s3.embed"), d.g);
    d.b   = load_embedding(fixture(b_embed), d.g);
    d.phi = load_map(fixture("phi_id.map"), d.a.sub, d.b.sub);
    return d;
  }

  // eps, then a1 A1 a2 A2 ... with only the trivial products.
  inline Pregroup free_pregroup(std::size_t rank) {
    std::vector<std::string>       names{"e"};
    std::vector<Pregroup::Element> inv{0};
    for (std::size_t i = 0; i < rank; ++i) {
      names.push_back(std::string(1, char('a' + i)));
      names.push_back(std::string(1, char('A' + i)));
      auto base = static_cast<Pregroup::Element>(inv.size());
      inv.push_back(base + 1);
      inv.push_back(base);
    }
    return Pregroup(names, 0, inv, {});
  }

  inline PSequence random_sequence(Rng& rng, Pregroup const& p, std::size_t max_len) {
    PSequence s(uniform(rng, 0, max_len));
    for (auto& e : s) {
      do {
        e = static_cast<Pregroup::Element>(uniform(rng, 0, p.size() - 1));
      } while (e == p.eps());
    }
    return s;
  }

  // Multiplies a uniformly chosen defined adjacent pair until none is left.
  inline PSequence random_p_reduce(PSequence s, Pregroup const& p, Rng& rng) {
    for (;;) {
      std::vector<std::size_t> sites;
      for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        if (p.defined(s[i], s[i + 1])) {
          sites.push_back(i);
        }
      }
      if (sites.empty()) {
        return s;
      }
      auto i = sites[uniform(rng, 0, sites.size() - 1)];
      auto c = *p.mult(s[i], s[i + 1]);
      s.erase(s.begin() + i + 1);
      if (c == p.eps()) {
        s.erase(s.begin() + i);
      } else {
        s[i] = c;
      }
    }
  }

}  // namespace georw::test
