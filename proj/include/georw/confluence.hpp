#pragma once

// Critical pairs, S_P-equivalence, descendant closures and the
// geodesically-perfect test for finite Thue systems.

#include <cstddef>
#include <optional>
#include <vector>

#include "georw/oracle.hpp"
#include "georw/rules.hpp"
#include "georw/word.hpp"

namespace georw {

  // Node limit for the exhaustive searches below. Hitting it raises
  // ResourceError; no answer is ever guessed.
  struct SearchCaps {
    std::size_t max_nodes = 1'000'000;
  };

  // Inclusion: one lhs is a factor of the other.
  // RightOverlap: lhs2 overlaps the right end of lhs1 (z = lhs1 u = v lhs2).
  // LeftOverlap: lhs2 overlaps the left end of lhs1 (z = lhs2 u = v lhs1).
  enum class OverlapKind { LeftOverlap, RightOverlap, Inclusion };

  // Whether a reducing rule overlapping itself at a shifted position yields
  // a critical pair.
  enum class SelfOverlaps { Include, Exclude };

  struct CriticalPair {
    Word        x;  // z rewritten by rule1 at pos1
    Word        y;  // z rewritten by rule2 at pos2
    Word        z;
    RuleRef     rule1;  // always reducing
    RuleRef     rule2;
    std::size_t pos1 = 0;
    std::size_t pos2 = 0;
    OverlapKind kind = OverlapKind::Inclusion;

    friend bool operator==(CriticalPair const&, CriticalPair const&) = default;
  };

  // Ordered by rule1, then rule2 in S_R-then-S_P order, then by overlap.
  std::vector<CriticalPair> critical_pairs(RewriteSystem const& sys,
                                           SelfOverlaps self = SelfOverlaps::Include);

  bool sp_equivalent(Word const& u, Word const& v, RewriteSystem const& sys,
                     SearchCaps const& caps = {});

  // Shortlex-least word of the S_P-class of w.
  Word sp_canonical(Word const& w, RewriteSystem const& sys, SearchCaps const& caps = {});

  // Everything reachable from w by S_R steps, w included; shortlex sorted.
  std::vector<Word> reducing_descendants(Word const& w, RewriteSystem const& sys,
                                         SearchCaps const& caps = {});

  // Everything reachable from w by S_R u S_P steps; shortlex sorted.
  std::vector<Word> descendant_closure(Word const& w, RewriteSystem const& sys,
                                       SearchCaps const& caps = {});

  // Joinability of u and v. Equals the word problem when sys is
  // preperfect; that is not checked.
  bool preperfect_wp(Word const& u, Word const& v, RewriteSystem const& sys,
                     SearchCaps const& caps = {});

  // Minimal-length words of descendant_closure(w); shortlex sorted.
  std::vector<Word> geodesics_of(Word const& w, RewriteSystem const& sys,
                                 SearchCaps const& caps = {});

  // Some x' reachable from x and y' reachable from y by S_R steps have equal
  // length and are S_P-equivalent.
  bool pair_joinable(CriticalPair const& p, RewriteSystem const& sys,
                     SearchCaps const& caps = {});

  struct GpWitness {
    CriticalPair      pair;
    std::vector<Word> x_descendants;
    std::vector<Word> y_descendants;
  };

  struct GpVerdict {
    bool                     holds = true;
    std::optional<GpWitness> witness;
    std::size_t              pairs_checked = 0;
  };

  struct GpOptions {
    SearchCaps   caps;
    SelfOverlaps self_overlaps = SelfOverlaps::Include;
  };

  // Pairs are checked in parallel; the witness is the first failing pair in
  // critical_pairs order, and a ResourceError is raised only if the first
  // pair that failed or could not be decided is the one that hit the cap.
  GpVerdict check_geodesically_perfect(RewriteSystem const& sys, GpOptions const& opts = {});

  // Single-threaded reference with identical results.
  GpVerdict check_geodesically_perfect_serial(RewriteSystem const& sys,
                                              GpOptions const&     opts = {});

  enum class GeodesicCheckStatus { ConsistentUpTo, Counterexample, Undecided };

  struct GeodesicCheck {
    GeodesicCheckStatus status = GeodesicCheckStatus::ConsistentUpTo;
    std::size_t         max_len = 0;
    // The counterexample or the undecided word.
    std::optional<Word> word;
    // For a counterexample: a shorter word in the same class.
    std::optional<Word> shorter;
  };

  // Every S_R-irreducible word of length <= max_len is checked to be
  // geodesic with the oracle. Words are visited in shortlex order.
  GeodesicCheck geodesic_bounded_check(RewriteSystem const& sys, std::size_t max_len,
                                       OracleCaps const& caps);

}  // namespace georw
