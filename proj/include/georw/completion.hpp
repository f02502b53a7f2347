#pragma once

// Knuth-Bendix style completion towards a geodesically perfect system.
// Each phase collects the critical pairs not seen before, resolves them all
// against the system as it was when the phase started, and adds the new
// rules at the end of the phase.

#include <cstddef>
#include <optional>
#include <vector>

#include "georw/confluence.hpp"
#include "georw/rules.hpp"

namespace georw {

  enum class ResolutionKind { AlreadyJoinable, AddReducing, AddPreserving };

  // One <-> step: lhs -> rhs of `rule` at `position`, or rhs -> lhs when
  // `reversed`.
  struct DerivationStep {
    RuleRef     rule;
    std::size_t position = 0;
    bool        reversed = false;

    friend bool operator==(DerivationStep const&, DerivationStep const&) = default;
  };

  struct Resolution {
    ResolutionKind kind = ResolutionKind::AlreadyJoinable;
    // The rule to add (lhs -> rhs; for AddPreserving its mirror is implied).
    std::optional<Rule> rule;
    // lhs <->* rhs in the system the pair was resolved against.
    std::vector<DerivationStep> derivation;
  };

  Resolution resolve_pair(CriticalPair const& p, RewriteSystem const& sys,
                          SearchCaps const& caps = {});

  // Applies `steps` to `from`; throws PreconditionError when a step does not
  // apply.
  Word replay_derivation(Word const& from, RewriteSystem const& sys,
                         std::vector<DerivationStep> const& steps);

  struct AddedRule {
    Rule                        rule;
    std::vector<DerivationStep> derivation;  // valid in the phase-start system
  };

  struct CompletionPhase {
    std::size_t            index = 0;  // 1-based
    std::size_t            pairs_examined = 0;
    std::vector<AddedRule> added_reducing;
    std::vector<AddedRule> added_preserving;  // one entry per symmetric pair
    std::size_t            rules_after = 0;   // |S_R| + |S_P| at phase end
  };

  enum class CompletionStatus { Completed, PhaseLimitReached, ResourceError };

  struct CompletionResult {
    RewriteSystem                system;
    std::vector<CompletionPhase> phases;
    CompletionStatus             status = CompletionStatus::Completed;
    std::string                  message;  // set for ResourceError
  };

  struct CompletionOptions {
    std::size_t  max_phases = 32;
    std::size_t  max_rules  = 10'000;
    SearchCaps   caps;
    SelfOverlaps self_overlaps = SelfOverlaps::Include;
    bool         parallel      = true;
  };

  CompletionResult kb_complete(RewriteSystem const& sys, CompletionOptions const& opts = {});

  // Re-runs every phase's certificates against the system the phase started
  // from, and checks S_i is contained in S_{i+1}. Returns the first problem,
  // or nothing.
  std::optional<std::string> verify_completion(RewriteSystem const&    input,
                                               CompletionResult const& result);

}  // namespace georw
