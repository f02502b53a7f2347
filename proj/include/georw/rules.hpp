#pragma once

// Rules, Thue systems and the index structures used to match left-hand
// sides.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "georw/word.hpp"

namespace georw {

  enum class RuleKind : std::uint8_t { Reducing, Preserving };

  // A non-length-increasing rule lhs -> rhs with nonempty lhs.
  struct Rule {
    Word lhs;
    Word rhs;

    RuleKind kind() const noexcept {
      return lhs.size() > rhs.size() ? RuleKind::Reducing : RuleKind::Preserving;
    }

    friend bool operator==(Rule const&, Rule const&) = default;
  };

  // Throws StructureError unless lhs is nonempty and |lhs| >= |rhs|.
  Rule make_rule(Word lhs, Word rhs);

  // An arbitrary relation as read from a file, possibly length increasing.
  struct Relation {
    Word lhs;
    Word rhs;
    // Written as `<->` rather than `->`.
    bool symmetric = false;

    friend bool operator==(Relation const&, Relation const&) = default;
  };

  // x -> x^-1 on an alphabet; always an involution.
  class InversePairing {
   public:
    InversePairing() = default;
    // Throws StructureError unless `image` is an involution of
    // {0, ..., image.size() - 1}.
    explicit InversePairing(std::vector<Symbol> image);

    Symbol operator()(Symbol s) const {
      return _image.at(s.id);
    }
    std::size_t size() const noexcept {
      return _image.size();
    }
    std::vector<Symbol> const& image() const noexcept {
      return _image;
    }
    Word invert(Word const& w) const;

    friend bool operator==(InversePairing const&, InversePairing const&) = default;

   private:
    std::vector<Symbol> _image;
  };

  // Raw presentation: what a system file says before Thue resolution.
  struct Presentation {
    Alphabet                      alphabet;
    std::vector<Relation>         relations;
    std::optional<InversePairing> inverse;
  };

  // Matches a fixed list of nonempty patterns. Built as a forward trie (for
  // occurrences starting at a position) and a reversed trie (for patterns
  // ending at the end of a word), both with dense child tables.
  class PatternIndex {
   public:
    PatternIndex() = default;
    PatternIndex(std::span<Word const> patterns, std::size_t alphabet_size);

    std::size_t max_length() const noexcept {
      return _max_length;
    }

    // Smallest pattern index among the patterns that are suffixes of `w`.
    std::optional<std::uint32_t> match_suffix(std::span<Symbol const> w) const;

    // Calls f(pattern index) for every pattern occurring in w at `pos`, in
    // increasing pattern index order within each pattern length.
    template <typename F>
    void for_each_match_at(std::span<Symbol const> w, std::size_t pos, F&& f) const {
      std::uint32_t node = 0;
      for (std::size_t i = pos; i < w.size(); ++i) {
        node = child(_forward, node, w[i]);
        if (node == none) {
          return;
        }
        for (auto p : _forward.terminal[node]) {
          f(p);
        }
      }
    }

   private:
    static constexpr std::uint32_t none = UINT32_MAX;

    struct Trie {
      std::vector<std::uint32_t>              children;  // node * k + letter
      std::vector<std::vector<std::uint32_t>> terminal;
      std::vector<std::uint32_t>              best;  // min terminal or none
    };

    std::uint32_t child(Trie const& t, std::uint32_t node, Symbol s) const noexcept {
      if (s.id >= _k) {
        return none;
      }
      return t.children[std::size_t(node) * _k + s.id];
    }
    void insert(Trie& t, std::span<Symbol const> pattern, bool reversed,
                std::uint32_t index);

    std::size_t _k          = 0;
    std::size_t _max_length = 0;
    Trie        _forward;
    Trie        _reversed;
  };

  // Identifies a rule inside a RewriteSystem: which part, and the position
  // inside that part.
  struct RuleRef {
    RuleKind      part  = RuleKind::Reducing;
    std::uint32_t index = 0;

    friend auto operator<=>(RuleRef const&, RuleRef const&) = default;
  };

  // A Thue system S = S_R u S_P. S_P is kept symmetric: the constructor adds
  // the mirror of every length-preserving rule that lacks one. Duplicate
  // rules are dropped, keeping first occurrences, so rule order is
  // deterministic.
  class RewriteSystem {
   public:
    RewriteSystem() = default;
    RewriteSystem(Alphabet                      alphabet,
                  std::vector<Rule>             rules,
                  std::optional<InversePairing> inverse = std::nullopt);

    Alphabet const& alphabet() const noexcept {
      return *_alphabet;
    }
    std::span<Rule const> reducing() const noexcept {
      return _reducing;
    }
    std::span<Rule const> preserving() const noexcept {
      return _preserving;
    }
    std::optional<InversePairing> const& inverse() const noexcept {
      return _inverse;
    }
    std::size_t size() const noexcept {
      return _reducing.size() + _preserving.size();
    }

    Rule const& rule(RuleRef r) const {
      return r.part == RuleKind::Reducing ? _reducing.at(r.index)
                                          : _preserving.at(r.index);
    }

    PatternIndex const& reducing_index() const noexcept {
      return *_reducing_index;
    }
    PatternIndex const& preserving_index() const noexcept {
      return *_preserving_index;
    }

    bool contains(Rule const& r) const;

    // All rules, S_R first then S_P, in rule order.
    std::vector<Rule> rules() const;

    // A copy with extra rules appended (duplicates skipped).
    RewriteSystem with_rules(std::vector<Rule> const& extra) const;

    // The same alphabet and pairing with only S_R.
    RewriteSystem reducing_part() const;

    friend bool operator==(RewriteSystem const& a, RewriteSystem const& b) {
      return a.alphabet() == b.alphabet() && a._reducing == b._reducing
             && a._preserving == b._preserving && a._inverse == b._inverse;
    }

   private:
    std::shared_ptr<Alphabet const>     _alphabet = std::make_shared<Alphabet const>();
    std::vector<Rule>                   _reducing;
    std::vector<Rule>                   _preserving;
    std::optional<InversePairing>       _inverse;
    std::shared_ptr<PatternIndex const> _reducing_index = std::make_shared<PatternIndex const>();
    std::shared_ptr<PatternIndex const> _preserving_index
        = std::make_shared<PatternIndex const>();
  };

  // Symmetrize, then drop strictly length-increasing rules.
  RewriteSystem thue_resolution(Presentation const& p);

  // The presentation whose Thue resolution is `sys` (reducing rules as `->`,
  // each preserving pair once as `<->`).
  Presentation to_presentation(RewriteSystem const& sys);

  // A possibly infinite rule set accessed through bounded enumeration.
  class RuleSource {
   public:
    virtual ~RuleSource() = default;
    // All rules with |lhs| <= n, sorted by shortlex on lhs then rhs.
    virtual std::vector<Rule> rules_up_to(std::size_t n) const = 0;
  };

  class FiniteRuleSource final : public RuleSource {
   public:
    explicit FiniteRuleSource(RewriteSystem sys) : _sys(std::move(sys)) {}
    std::vector<Rule> rules_up_to(std::size_t n) const override;

   private:
    RewriteSystem _sys;
  };

  // Shortlex on lhs, ties broken by shortlex on rhs.
  bool standard_order_less(Rule const& a, Rule const& b) noexcept;

}  // namespace georw
