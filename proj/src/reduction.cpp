#include "georw/reduction.hpp"

#include <algorithm>
#include <tuple>
#include <unordered_set>

#include "georw/errors.hpp"

namespace georw {

  Word apply_rule(Word const& w, Rule const& r, std::size_t pos) {
    if (!occurs_at(w, r.lhs, pos)) {
      throw PreconditionError("rule does not apply at the given position");
    }
    return splice(w, pos, r.lhs.size(), r.rhs);
  }

  std::vector<Word> successors(Word const& w, RewriteSystem const& sys) {
    sys.alphabet().validate(w);
    std::vector<std::tuple<RuleKind, std::uint32_t, std::size_t>> hits;
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      sys.reducing_index().for_each_match_at(w, pos, [&](std::uint32_t i) {
        hits.emplace_back(RuleKind::Reducing, i, pos);
      });
      sys.preserving_index().for_each_match_at(w, pos, [&](std::uint32_t i) {
        hits.emplace_back(RuleKind::Preserving, i, pos);
      });
    }
    std::sort(hits.begin(), hits.end());
    std::vector<Word>                        out;
    std::unordered_set<Word, WordHash> seen;
    for (auto const& [part, index, pos] : hits) {
      auto const& r    = sys.rule(RuleRef{part, index});
      Word        next = splice(w, pos, r.lhs.size(), r.rhs);
      if (seen.insert(next).second) {
        out.push_back(std::move(next));
      }
    }
    return out;
  }

  namespace {
    template <bool Trace>
    Word reduce_impl(Word const&               w,
                     RewriteSystem const&      sys,
                     std::vector<RewriteStep>* steps) {
      auto const& index = sys.reducing_index();
      auto const& rules = sys.reducing();
      Word        u;
      u.reserve(w.size());
      // v is the suffix still to be read: pending (top = back) in front of
      // the unread tail of w.
      std::vector<Symbol> pending;
      std::size_t         next = 0;
      while (true) {
        Symbol a;
        if (!pending.empty()) {
          a = pending.back();
          pending.pop_back();
        } else if (next < w.size()) {
          a = w[next++];
        } else {
          break;
        }
        u.push_back(a);
        if (auto hit = index.match_suffix(u)) {
          auto const& r = rules[*hit];
          u.resize(u.size() - r.lhs.size());
          if constexpr (Trace) {
            steps->push_back(RewriteStep{RuleRef{RuleKind::Reducing, *hit}, u.size()});
          }
          pending.insert(pending.end(), r.rhs.rbegin(), r.rhs.rend());
        }
      }
      return u;
    }
  }  // namespace

  Word reduce_lr(Word const& w, RewriteSystem const& sys) {
    sys.alphabet().validate(w);
    return reduce_impl<false>(w, sys, nullptr);
  }

  TracedReduction reduce_lr_traced(Word const& w, RewriteSystem const& sys) {
    sys.alphabet().validate(w);
    TracedReduction out;
    out.result = reduce_impl<true>(w, sys, &out.steps);
    return out;
  }

  Word replay(Word const&                  w,
              RewriteSystem const&         sys,
              std::span<RewriteStep const> steps) {
    Word current = w;
    for (auto const& s : steps) {
      current = apply_rule(current, sys.rule(s.rule), s.position);
    }
    return current;
  }

  Word reduce_lr(Word const& w, RuleSource const& source, Alphabet const& alphabet) {
    alphabet.validate(w);
    std::vector<Rule> reducing;
    for (auto& r : source.rules_up_to(w.size())) {
      if (r.kind() == RuleKind::Reducing) {
        reducing.push_back(std::move(r));
      }
    }
    return reduce_lr(w, RewriteSystem(alphabet, std::move(reducing)));
  }

  bool is_irreducible(Word const& w, std::span<Rule const> rules) {
    for (auto const& r : rules) {
      if (std::search(w.begin(), w.end(), r.lhs.begin(), r.lhs.end()) != w.end()) {
        return false;
      }
    }
    return true;
  }

  DehnVerdict dehn_wp(Word const& w, RewriteSystem const& sys) {
    return DehnVerdict{reduce_lr(w, sys).empty(), !sys.preserving().empty()};
  }

}  // namespace georw
