#include "georw/completion.hpp"

#include <algorithm>
#include <exception>
#include <set>
#include <tuple>

#include "georw/errors.hpp"
#include "georw/reduction.hpp"

namespace georw {

  namespace {
    std::vector<DerivationStep> inverse(std::vector<DerivationStep> steps) {
      std::reverse(steps.begin(), steps.end());
      for (auto& s : steps) {
        s.reversed = !s.reversed;
      }
      return steps;
    }

    using Signature
        = std::tuple<Word, Word, Word, std::size_t, Word, Word, std::size_t>;

    Signature signature(CriticalPair const& p, RewriteSystem const& sys) {
      auto const& a = sys.rule(p.rule1);
      auto const& b = sys.rule(p.rule2);
      return {p.z, a.lhs, a.rhs, p.pos1, b.lhs, b.rhs, p.pos2};
    }

    struct Attempt {
      Resolution         res;
      std::exception_ptr error;
    };
  }  // namespace

  Resolution resolve_pair(CriticalPair const& p, RewriteSystem const& sys,
                          SearchCaps const& caps) {
    auto tx = reduce_lr_traced(p.x, sys);
    auto ty = reduce_lr_traced(p.y, sys);

    // x^ <-* x <- z -> y ->* y^
    std::vector<DerivationStep> path;
    for (auto it = tx.steps.rbegin(); it != tx.steps.rend(); ++it) {
      path.push_back({it->rule, it->position, true});
    }
    path.push_back({p.rule1, p.pos1, true});
    path.push_back({p.rule2, p.pos2, false});
    for (auto const& s : ty.steps) {
      path.push_back({s.rule, s.position, false});
    }

    Resolution out;
    if (tx.result.size() > ty.result.size()) {
      out.kind       = ResolutionKind::AddReducing;
      out.rule       = Rule{tx.result, ty.result};
      out.derivation = std::move(path);
    } else if (ty.result.size() > tx.result.size()) {
      out.kind       = ResolutionKind::AddReducing;
      out.rule       = Rule{ty.result, tx.result};
      out.derivation = inverse(std::move(path));
    } else if (!sp_equivalent(tx.result, ty.result, sys, caps)) {
      out.kind       = ResolutionKind::AddPreserving;
      out.rule       = Rule{tx.result, ty.result};
      out.derivation = std::move(path);
    }
    return out;
  }

  Word replay_derivation(Word const& from, RewriteSystem const& sys,
                         std::vector<DerivationStep> const& steps) {
    Word current = from;
    for (auto const& s : steps) {
      auto const& r           = sys.rule(s.rule);
      auto const& pattern     = s.reversed ? r.rhs : r.lhs;
      auto const& replacement = s.reversed ? r.lhs : r.rhs;
      if (!occurs_at(current, pattern, s.position)) {
        throw PreconditionError("derivation step does not apply");
      }
      current = splice(current, s.position, pattern.size(), replacement);
    }
    return current;
  }

  CompletionResult kb_complete(RewriteSystem const& sys, CompletionOptions const& opts) {
    CompletionResult    result;
    RewriteSystem       current = sys;
    std::set<Signature> considered;

    for (std::size_t phase = 1; phase <= opts.max_phases; ++phase) {
      std::vector<CriticalPair> fresh;
      for (auto& p : critical_pairs(current, opts.self_overlaps)) {
        if (considered.insert(signature(p, current)).second) {
          fresh.push_back(std::move(p));
        }
      }

      std::vector<Attempt> attempts(fresh.size());
      auto const           n = static_cast<std::ptrdiff_t>(fresh.size());
#pragma omp parallel for schedule(dynamic) if (opts.parallel)
      for (std::ptrdiff_t k = 0; k < n; ++k) {
        try {
          attempts[k].res = resolve_pair(fresh[k], current, opts.caps);
        } catch (...) {
          attempts[k].error = std::current_exception();
        }
      }

      CompletionPhase record;
      record.index          = phase;
      record.pairs_examined = fresh.size();
      std::vector<Rule> added;
      auto              known = [&](Rule const& r) {
        return current.contains(r)
               || std::find(added.begin(), added.end(), r) != added.end();
      };
      for (auto& a : attempts) {
        if (a.error) {
          try {
            std::rethrow_exception(a.error);
          } catch (ResourceError const& e) {
            result.system  = current;
            result.status  = CompletionStatus::ResourceError;
            result.message = e.what();
            return result;
          }
        }
        if (!a.res.rule) {
          continue;
        }
        Rule const& r = *a.res.rule;
        if (a.res.kind == ResolutionKind::AddReducing) {
          if (!known(r)) {
            added.push_back(r);
            record.added_reducing.push_back({r, std::move(a.res.derivation)});
          }
        } else {
          Rule mirror{r.rhs, r.lhs};
          if (!known(r) && !known(mirror)) {
            added.push_back(r);
            added.push_back(mirror);
            record.added_preserving.push_back({r, std::move(a.res.derivation)});
          }
        }
      }

      RewriteSystem next = added.empty() ? current : current.with_rules(added);
      record.rules_after = next.size();
      result.phases.push_back(std::move(record));
      if (added.empty()) {
        result.system = std::move(current);
        result.status = CompletionStatus::Completed;
        return result;
      }
      current = std::move(next);
      if (current.size() > opts.max_rules) {
        result.system  = std::move(current);
        result.status  = CompletionStatus::ResourceError;
        result.message = "rule budget of " + std::to_string(opts.max_rules) + " exceeded";
        return result;
      }
    }
    result.system = std::move(current);
    result.status = CompletionStatus::PhaseLimitReached;
    return result;
  }

  std::optional<std::string> verify_completion(RewriteSystem const&    input,
                                               CompletionResult const& result) {
    RewriteSystem current = input;
    for (auto const& phase : result.phases) {
      std::vector<Rule> added;
      auto check = [&](AddedRule const& a) -> std::optional<std::string> {
        Word end;
        try {
          end = replay_derivation(a.rule.lhs, current, a.derivation);
        } catch (PreconditionError const& e) {
          return "phase " + std::to_string(phase.index) + ": " + e.what();
        }
        if (end != a.rule.rhs) {
          return "phase " + std::to_string(phase.index)
                 + ": derivation ends at the wrong word";
        }
        return std::nullopt;
      };
      for (auto const& a : phase.added_reducing) {
        if (auto e = check(a)) {
          return e;
        }
        added.push_back(a.rule);
      }
      for (auto const& a : phase.added_preserving) {
        if (auto e = check(a)) {
          return e;
        }
        added.push_back(a.rule);
        added.push_back(Rule{a.rule.rhs, a.rule.lhs});
      }
      auto next = added.empty() ? current : current.with_rules(added);
      for (auto const& r : current.rules()) {
        if (!next.contains(r)) {
          return "phase " + std::to_string(phase.index) + " lost a rule";
        }
      }
      if (next.size() != phase.rules_after) {
        return "phase " + std::to_string(phase.index) + ": rule count mismatch";
      }
      current = std::move(next);
    }
    if (!(current == result.system)) {
      return "final system differs from the replayed phases";
    }
    return std::nullopt;
  }

}  // namespace georw
