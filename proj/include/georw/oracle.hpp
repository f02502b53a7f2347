#pragma once

// Brute-force ground truth for <->*_S by bounded breadth-first search. Rules
// are applied in both directions, so reducing rules may be run backwards
// (length increasing) up to the length cap. Every answer is three-valued or
// carries a completeness flag; nothing here guesses.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "georw/rules.hpp"
#include "georw/word.hpp"

namespace georw {

  struct OracleCaps {
    std::size_t max_length = 8;
    std::size_t max_nodes  = 1'000'000;
  };

  // One <-> step: lhs -> rhs at `position`, or rhs -> lhs when `reversed`.
  struct ClosureStep {
    Rule        rule;
    std::size_t position = 0;
    bool        reversed = false;
  };

  class ClassClosure {
   public:
    Word const& seed() const noexcept {
      return _members.front();
    }
    // Breadth-first order; the seed comes first.
    std::vector<Word> const& members() const noexcept {
      return _members;
    }
    bool complete() const noexcept {
      return _complete;
    }
    OracleCaps const& caps() const noexcept {
      return _caps;
    }
    bool contains(Word const& w) const {
      return _index.contains(w);
    }
    std::vector<Word> sorted_members() const;

    // A <-> path from the seed to `member`.
    std::vector<ClosureStep> path_to(Word const& member) const;

   private:
    friend ClassClosure class_closure(Word const&, RewriteSystem const&, OracleCaps const&);

    struct Parent {
      std::uint32_t node     = 0;
      std::uint32_t rule     = 0;
      std::uint32_t position = 0;
      bool          reversed = false;
    };

    std::vector<Word>                                 _members;
    std::vector<Parent>                               _parents;
    std::unordered_map<Word, std::uint32_t, WordHash> _index;
    std::vector<Rule>                                 _rules;
    OracleCaps                                        _caps;
    bool                                              _complete = true;
  };

  // Throws PreconditionError if a step does not apply.
  Word replay_path(Word const& from, std::vector<ClosureStep> const& path);

  ClassClosure class_closure(Word const& w, RewriteSystem const& sys, OracleCaps const& caps);

  enum class OracleVerdict { Equal, Distinct, Unknown };

  // Equal if v is found in the closure of u; Distinct only when both
  // closures are complete and disjoint.
  OracleVerdict oracle_wp(Word const& u, Word const& v, RewriteSystem const& sys,
                          OracleCaps const& caps);

  struct OracleGeodesics {
    std::vector<Word> geodesics;  // shortlex sorted
    bool              certified = false;
  };

  // Minimal-length members of the closure. Certified when the closure is
  // complete and the length cap leaves at least `slack` letters of room
  // above |w| (default 2|w| + 4).
  OracleGeodesics oracle_geodesics(Word const& w, RewriteSystem const& sys,
                                   OracleCaps const&          caps,
                                   std::optional<std::size_t> slack = std::nullopt);

  struct QuotientCount {
    std::size_t classes  = 0;
    bool        complete = false;
  };

  // Partitions all words of length <= max_word_length into oracle classes.
  // Complete when every closure was complete and the count equals the count
  // for max_word_length - 1.
  QuotientCount enumerate_quotient(RewriteSystem const& sys,
                                   std::size_t          max_word_length,
                                   OracleCaps const&    caps);

}  // namespace georw
