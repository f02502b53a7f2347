#include "georw/rules.hpp"

#include <algorithm>
#include <unordered_set>

#include "georw/errors.hpp"

namespace georw {

  namespace {
    struct RuleHash {
      std::size_t operator()(Rule const& r) const noexcept {
        WordHash h;
        return h(r.lhs) * 31 + h(r.rhs);
      }
    };
  }  // namespace

  Rule make_rule(Word lhs, Word rhs) {
    if (lhs.empty()) {
      throw StructureError("rule with empty left-hand side");
    }
    if (rhs.size() > lhs.size()) {
      throw StructureError("length-increasing rule in a Thue system");
    }
    return Rule{std::move(lhs), std::move(rhs)};
  }

  ////////////////////////////////////////////////////////////////////////
  // InversePairing
  ////////////////////////////////////////////////////////////////////////

  InversePairing::InversePairing(std::vector<Symbol> image)
      : _image(std::move(image)) {
    for (std::size_t i = 0; i < _image.size(); ++i) {
      auto j = _image[i].id;
      if (j >= _image.size() || _image[j].id != i) {
        throw StructureError("inverse pairing is not an involution");
      }
    }
  }

  Word InversePairing::invert(Word const& w) const {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      out.push_back((*this)(*it));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // PatternIndex
  ////////////////////////////////////////////////////////////////////////

  PatternIndex::PatternIndex(std::span<Word const> patterns,
                             std::size_t           alphabet_size)
      : _k(alphabet_size) {
    for (auto* t : {&_forward, &_reversed}) {
      t->children.assign(_k, none);
      t->terminal.emplace_back();
      t->best.push_back(none);
    }
    for (std::uint32_t i = 0; i < patterns.size(); ++i) {
      auto const& p = patterns[i];
      if (p.empty()) {
        throw StructureError("empty pattern");
      }
      for (auto s : p) {
        if (s.id >= _k) {
          throw AlphabetError("pattern symbol outside the alphabet");
        }
      }
      _max_length = std::max(_max_length, p.size());
      insert(_forward, p, false, i);
      insert(_reversed, p, true, i);
    }
  }

  void PatternIndex::insert(Trie&                   t,
                            std::span<Symbol const> pattern,
                            bool                    reversed,
                            std::uint32_t           index) {
    std::uint32_t node = 0;
    for (std::size_t j = 0; j < pattern.size(); ++j) {
      Symbol s    = reversed ? pattern[pattern.size() - 1 - j] : pattern[j];
      auto   slot = std::size_t(node) * _k + s.id;
      if (t.children[slot] == none) {
        auto fresh = static_cast<std::uint32_t>(t.terminal.size());
        t.children[slot] = fresh;
        t.children.resize(t.children.size() + _k, none);
        t.terminal.emplace_back();
        t.best.push_back(none);
      }
      node = t.children[slot];
    }
    t.terminal[node].push_back(index);
    t.best[node] = std::min(t.best[node], index);
  }

  std::optional<std::uint32_t>
  PatternIndex::match_suffix(std::span<Symbol const> w) const {
    std::uint32_t node = 0;
    std::uint32_t best = none;
    for (std::size_t j = 0; j < w.size() && j < _max_length; ++j) {
      node = child(_reversed, node, w[w.size() - 1 - j]);
      if (node == none) {
        break;
      }
      best = std::min(best, _reversed.best[node]);
    }
    if (best == none) {
      return std::nullopt;
    }
    return best;
  }

  ////////////////////////////////////////////////////////////////////////
  // RewriteSystem
  ////////////////////////////////////////////////////////////////////////

  RewriteSystem::RewriteSystem(Alphabet                      alphabet,
                               std::vector<Rule>             rules,
                               std::optional<InversePairing> inverse)
      : _alphabet(std::make_shared<Alphabet const>(std::move(alphabet))),
        _inverse(std::move(inverse)) {
    std::unordered_set<Rule, RuleHash> seen;
    auto add = [&](Rule r, std::vector<Rule>& into) {
      if (seen.insert(r).second) {
        into.push_back(std::move(r));
      }
    };
    for (auto& r : rules) {
      if (r.lhs.empty()) {
        throw StructureError("rule with empty left-hand side");
      }
      if (r.rhs.size() > r.lhs.size()) {
        throw StructureError("length-increasing rule in a Thue system");
      }
      _alphabet->validate(r.lhs);
      _alphabet->validate(r.rhs);
      if (r.kind() == RuleKind::Reducing) {
        add(std::move(r), _reducing);
      } else if (r.lhs != r.rhs) {
        Rule mirror{r.rhs, r.lhs};
        add(std::move(r), _preserving);
        add(std::move(mirror), _preserving);
      }
    }
    if (_inverse) {
      if (_inverse->size() != _alphabet->size()) {
        throw StructureError("inverse pairing does not cover the alphabet");
      }
      for (std::size_t i = 0; i < _alphabet->size(); ++i) {
        Symbol x{static_cast<std::uint32_t>(i)};
        Rule   cancel{Word{x, (*_inverse)(x)}, Word{}};
        if (!seen.contains(cancel)) {
          throw StructureError("group system lacks the rule "
                               + _alphabet->format(cancel.lhs) + " -> .");
        }
      }
    }
    std::vector<Word> lhs;
    lhs.reserve(_reducing.size());
    for (auto const& r : _reducing) {
      lhs.push_back(r.lhs);
    }
    _reducing_index = std::make_shared<PatternIndex const>(lhs, _alphabet->size());
    lhs.clear();
    for (auto const& r : _preserving) {
      lhs.push_back(r.lhs);
    }
    _preserving_index
        = std::make_shared<PatternIndex const>(lhs, _alphabet->size());
  }

  bool RewriteSystem::contains(Rule const& r) const {
    auto const& part
        = r.kind() == RuleKind::Reducing ? _reducing : _preserving;
    return std::find(part.begin(), part.end(), r) != part.end();
  }

  std::vector<Rule> RewriteSystem::rules() const {
    std::vector<Rule> out(_reducing.begin(), _reducing.end());
    out.insert(out.end(), _preserving.begin(), _preserving.end());
    return out;
  }

  RewriteSystem RewriteSystem::with_rules(std::vector<Rule> const& extra) const {
    auto all = rules();
    all.insert(all.end(), extra.begin(), extra.end());
    return RewriteSystem(*_alphabet, std::move(all), _inverse);
  }

  RewriteSystem RewriteSystem::reducing_part() const {
    return RewriteSystem(*_alphabet, _reducing, _inverse);
  }

  RewriteSystem thue_resolution(Presentation const& p) {
    std::vector<Rule> rules;
    for (auto const& rel : p.relations) {
      if (rel.lhs.size() > rel.rhs.size()) {
        rules.push_back(Rule{rel.lhs, rel.rhs});
      } else if (rel.lhs.size() < rel.rhs.size()) {
        if (rel.symmetric) {
          throw StructureError("symmetric rule with sides of different length");
        }
        rules.push_back(Rule{rel.rhs, rel.lhs});
      } else if (rel.lhs != rel.rhs) {
        rules.push_back(Rule{rel.lhs, rel.rhs});
      }
    }
    return RewriteSystem(p.alphabet, std::move(rules), p.inverse);
  }

  Presentation to_presentation(RewriteSystem const& sys) {
    Presentation p{sys.alphabet(), {}, sys.inverse()};
    for (auto const& r : sys.reducing()) {
      p.relations.push_back(Relation{r.lhs, r.rhs, false});
    }
    std::unordered_set<Rule, RuleHash> emitted;
    for (auto const& r : sys.preserving()) {
      if (emitted.contains(Rule{r.rhs, r.lhs})) {
        continue;
      }
      emitted.insert(r);
      p.relations.push_back(Relation{r.lhs, r.rhs, true});
    }
    return p;
  }

  bool standard_order_less(Rule const& a, Rule const& b) noexcept {
    if (a.lhs != b.lhs) {
      return shortlex_less(a.lhs, b.lhs);
    }
    return shortlex_less(a.rhs, b.rhs);
  }

  std::vector<Rule> FiniteRuleSource::rules_up_to(std::size_t n) const {
    std::vector<Rule> out;
    for (auto const& r : _sys.rules()) {
      if (r.lhs.size() <= n) {
        out.push_back(r);
      }
    }
    std::sort(out.begin(), out.end(), standard_order_less);
    return out;
  }

}  // namespace georw
