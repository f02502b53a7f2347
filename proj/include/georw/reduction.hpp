#pragma once

// One-step rewriting, the linear-time reducer for length-reducing rules,
// and the Dehn-system word problem.

#include <cstddef>
#include <span>
#include <vector>

#include "georw/rules.hpp"
#include "georw/word.hpp"

namespace georw {

  struct RewriteStep {
    RuleRef     rule;
    std::size_t position = 0;

    friend bool operator==(RewriteStep const&, RewriteStep const&) = default;
  };

  // Applies lhs -> rhs at `pos`; throws PreconditionError if lhs does not
  // occur there.
  Word apply_rule(Word const& w, Rule const& r, std::size_t pos);

  // All words p.r.q with w = p.l.q and l -> r in S_R u S_P. Deduplicated,
  // ordered by rule (S_R before S_P) and then by position.
  std::vector<Word> successors(Word const& w, RewriteSystem const& sys);

  // An S_R-irreducible descendant of w. Keeps a configuration (u, v) with u
  // irreducible and shifts one letter at a time; when some lhs becomes a
  // suffix of u the rule with the smallest index among those matching is
  // applied and its rhs is pushed back onto v. Linear in |w| for a fixed
  // system.
  Word reduce_lr(Word const& w, RewriteSystem const& sys);

  struct TracedReduction {
    Word                     result;
    std::vector<RewriteStep> steps;  // positions in the word being rewritten
  };

  TracedReduction reduce_lr_traced(Word const& w, RewriteSystem const& sys);

  // Replays `steps` from w; throws PreconditionError if a step does not
  // apply.
  Word replay(Word const& w, RewriteSystem const& sys,
              std::span<RewriteStep const> steps);

  // Reduction through a bounded rule source: only rules with |lhs| <= |w|
  // are materialised, and the length-reducing ones are used.
  Word reduce_lr(Word const& w, RuleSource const& source, Alphabet const& alphabet);

  bool is_irreducible(Word const& w, std::span<Rule const> rules);

  struct DehnVerdict {
    bool trivial = false;
    // S_P was nonempty and has been ignored.
    bool preserving_ignored = false;
  };

  // Reduces w with S_R and reports whether the result is empty. Only
  // meaningful when S_R is a Dehn system.
  DehnVerdict dehn_wp(Word const& w, RewriteSystem const& sys);

}  // namespace georw
