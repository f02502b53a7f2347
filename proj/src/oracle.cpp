#include "georw/oracle.hpp"

#include <algorithm>

#include "georw/errors.hpp"

namespace georw {

  std::vector<Word> ClassClosure::sorted_members() const {
    auto out = _members;
    std::sort(out.begin(), out.end(), shortlex_less);
    return out;
  }

  std::vector<ClosureStep> ClassClosure::path_to(Word const& member) const {
    auto it = _index.find(member);
    if (it == _index.end()) {
      throw PreconditionError("word is not in the closure");
    }
    std::vector<ClosureStep> path;
    for (auto node = it->second; node != 0; node = _parents[node].node) {
      auto const& p = _parents[node];
      path.push_back(ClosureStep{_rules[p.rule], p.position, p.reversed});
    }
    std::reverse(path.begin(), path.end());
    return path;
  }

  Word replay_path(Word const& from, std::vector<ClosureStep> const& path) {
    Word current = from;
    for (auto const& s : path) {
      auto const& pattern     = s.reversed ? s.rule.rhs : s.rule.lhs;
      auto const& replacement = s.reversed ? s.rule.lhs : s.rule.rhs;
      if (!occurs_at(current, pattern, s.position)) {
        throw PreconditionError("closure step does not apply");
      }
      current = splice(current, s.position, pattern.size(), replacement);
    }
    return current;
  }

  ClassClosure class_closure(Word const& w, RewriteSystem const& sys, OracleCaps const& caps) {
    sys.alphabet().validate(w);
    ClassClosure c;
    c._caps  = caps;
    c._rules = sys.rules();

    // Patterns for reverse application (nonempty rhs); empty rhs means
    // insertion anywhere.
    std::vector<Word>          rhs_patterns;
    std::vector<std::uint32_t> rhs_rule;
    std::vector<std::uint32_t> insertions;
    for (std::uint32_t i = 0; i < c._rules.size(); ++i) {
      if (c._rules[i].rhs.empty()) {
        insertions.push_back(i);
      } else {
        rhs_patterns.push_back(c._rules[i].rhs);
        rhs_rule.push_back(i);
      }
    }
    std::vector<Word> lhs_patterns;
    for (auto const& r : c._rules) {
      lhs_patterns.push_back(r.lhs);
    }
    PatternIndex forward(lhs_patterns, sys.alphabet().size());
    PatternIndex backward(rhs_patterns, sys.alphabet().size());

    c._members.push_back(w);
    c._parents.push_back({});
    c._index.emplace(w, 0);

    auto visit = [&](std::uint32_t from, Word next, std::uint32_t rule,
                     std::size_t pos, bool reversed) {
      if (next.size() > caps.max_length || c._index.contains(next)) {
        return;
      }
      if (c._members.size() >= caps.max_nodes) {
        c._complete = false;
        return;
      }
      auto id = static_cast<std::uint32_t>(c._members.size());
      c._index.emplace(next, id);
      c._members.push_back(std::move(next));
      c._parents.push_back({from, rule, static_cast<std::uint32_t>(pos), reversed});
    };

    for (std::uint32_t head = 0; head < c._members.size() && c._complete; ++head) {
      Word const current = c._members[head];
      for (std::size_t pos = 0; pos <= current.size(); ++pos) {
        forward.for_each_match_at(current, pos, [&](std::uint32_t i) {
          auto const& r = c._rules[i];
          visit(head, splice(current, pos, r.lhs.size(), r.rhs), i, pos, false);
        });
        backward.for_each_match_at(current, pos, [&](std::uint32_t j) {
          auto const& r = c._rules[rhs_rule[j]];
          visit(head, splice(current, pos, r.rhs.size(), r.lhs), rhs_rule[j], pos, true);
        });
        for (auto i : insertions) {
          auto const& r = c._rules[i];
          if (current.size() + r.lhs.size() <= caps.max_length) {
            visit(head, splice(current, pos, 0, r.lhs), i, pos, true);
          }
        }
      }
    }
    return c;
  }

  OracleVerdict oracle_wp(Word const& u, Word const& v, RewriteSystem const& sys,
                          OracleCaps const& caps) {
    auto cu = class_closure(u, sys, caps);
    if (cu.contains(v)) {
      return OracleVerdict::Equal;
    }
    if (!cu.complete()) {
      return OracleVerdict::Unknown;
    }
    auto cv = class_closure(v, sys, caps);
    if (!cv.complete()) {
      return OracleVerdict::Unknown;
    }
    // Both complete: the closures are the <->-components of u and v inside
    // the length cap, hence equal or disjoint.
    return cv.contains(u) ? OracleVerdict::Equal : OracleVerdict::Distinct;
  }

  OracleGeodesics oracle_geodesics(Word const& w, RewriteSystem const& sys,
                                   OracleCaps const&          caps,
                                   std::optional<std::size_t> slack) {
    auto        closure = class_closure(w, sys, caps);
    std::size_t best    = w.size();
    for (auto const& m : closure.members()) {
      best = std::min(best, m.size());
    }
    OracleGeodesics out;
    for (auto const& m : closure.members()) {
      if (m.size() == best) {
        out.geodesics.push_back(m);
      }
    }
    std::sort(out.geodesics.begin(), out.geodesics.end(), shortlex_less);
    std::size_t room = slack.value_or(2 * w.size() + 4);
    out.certified    = closure.complete() && caps.max_length >= w.size() + room;
    return out;
  }

  QuotientCount enumerate_quotient(RewriteSystem const& sys,
                                   std::size_t          max_word_length,
                                   OracleCaps const&    caps) {
    if (caps.max_length < max_word_length) {
      throw PreconditionError("oracle length cap below the enumeration length");
    }
    auto const  words = all_words_up_to(sys.alphabet().size(), max_word_length);
    std::unordered_map<Word, std::size_t, WordHash> class_of;
    std::vector<std::size_t>                        shortest;  // per class
    bool                                            complete = true;
    for (auto const& w : words) {
      if (class_of.contains(w)) {
        continue;
      }
      auto closure = class_closure(w, sys, caps);
      complete     = complete && closure.complete();
      auto id      = shortest.size();
      shortest.push_back(w.size());
      for (auto const& m : closure.members()) {
        if (m.size() <= max_word_length) {
          class_of.emplace(m, id);
        }
      }
    }
    std::size_t below = 0;
    for (auto len : shortest) {
      if (max_word_length > 0 && len + 1 <= max_word_length) {
        ++below;
      }
    }
    QuotientCount out;
    out.classes  = shortest.size();
    out.complete = complete && max_word_length > 0 && below == out.classes;
    return out;
  }

}  // namespace georw
