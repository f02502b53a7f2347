#include "georw/confluence.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <set>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "georw/errors.hpp"
#include "georw/reduction.hpp"

namespace georw {

  namespace {
    using WordSet = std::unordered_set<Word, WordHash>;

    template <typename F>
    void for_each_step(Word const& w, PatternIndex const& index,
                       std::span<Rule const> rules, F&& f) {
      for (std::size_t pos = 0; pos < w.size(); ++pos) {
        index.for_each_match_at(w, pos, [&](std::uint32_t i) {
          auto const& r = rules[i];
          f(splice(w, pos, r.lhs.size(), r.rhs));
        });
      }
    }

    // Breadth-first closure of w under the given step generator.
    template <typename Steps>
    std::vector<Word> closure(Word const& w, SearchCaps const& caps, char const* what,
                              Steps&& steps) {
      std::vector<Word> order{w};
      WordSet           seen{w};
      for (std::size_t head = 0; head < order.size(); ++head) {
        Word const current = order[head];
        steps(current, [&](Word next) {
          if (seen.contains(next)) {
            return;
          }
          if (order.size() >= caps.max_nodes) {
            throw ResourceError(std::string(what) + ": node cap of "
                                + std::to_string(caps.max_nodes) + " exceeded");
          }
          seen.insert(next);
          order.push_back(std::move(next));
        });
      }
      return order;
    }

    std::vector<Word> sp_class(Word const& w, RewriteSystem const& sys,
                               SearchCaps const& caps) {
      return closure(w, caps, "S_P closure", [&](Word const& cur, auto&& emit) {
        for_each_step(cur, sys.preserving_index(), sys.preserving(), emit);
      });
    }

    std::vector<Word> sorted(std::vector<Word> v) {
      std::sort(v.begin(), v.end(), shortlex_less);
      return v;
    }

    // Memoises S_P-class representatives for one thread.
    class CanonicalCache {
     public:
      CanonicalCache(RewriteSystem const& sys, SearchCaps const& caps)
          : _sys(sys), _caps(caps) {}

      Word const& operator()(Word const& w) {
        if (auto it = _rep.find(w); it != _rep.end()) {
          return it->second;
        }
        auto cls  = sp_class(w, _sys, _caps);
        Word best = *std::min_element(cls.begin(), cls.end(), shortlex_less);
        for (auto& m : cls) {
          _rep.emplace(std::move(m), best);
        }
        return _rep.at(w);
      }

     private:
      RewriteSystem const&                   _sys;
      SearchCaps                             _caps;
      std::unordered_map<Word, Word, WordHash> _rep;
    };

    bool joinable(std::vector<Word> const& dx, std::vector<Word> const& dy,
                  RewriteSystem const& sys, CanonicalCache& canon) {
      WordSet xs(dx.begin(), dx.end());
      for (auto const& w : dy) {
        if (xs.contains(w)) {
          return true;
        }
      }
      if (sys.preserving().empty()) {
        return false;
      }
      std::set<std::size_t> y_lengths;
      for (auto const& w : dy) {
        y_lengths.insert(w.size());
      }
      std::unordered_set<Word, WordHash> x_reps;
      for (auto const& w : dx) {
        if (y_lengths.contains(w.size())) {
          x_reps.insert(canon(w));
        }
      }
      for (auto const& w : dy) {
        if (x_reps.contains(canon(w))) {
          return true;
        }
      }
      return false;
    }

    struct PairOutcome {
      bool                         ok = true;
      std::vector<Word>            dx, dy;
      std::exception_ptr           error;
    };

    PairOutcome check_pair(CriticalPair const& p, RewriteSystem const& sys,
                           SearchCaps const& caps, CanonicalCache& canon) {
      PairOutcome out;
      try {
        out.dx = reducing_descendants(p.x, sys, caps);
        out.dy = reducing_descendants(p.y, sys, caps);
        out.ok = joinable(out.dx, out.dy, sys, canon);
      } catch (...) {
        out.error = std::current_exception();
      }
      return out;
    }

    GpVerdict verdict_from(std::vector<CriticalPair> const& pairs,
                           std::vector<PairOutcome>&        outcomes,
                           std::size_t                      first_bad) {
      GpVerdict v;
      v.pairs_checked = pairs.size();
      if (first_bad == pairs.size()) {
        return v;
      }
      auto& o = outcomes[first_bad];
      if (o.error) {
        std::rethrow_exception(o.error);
      }
      v.holds         = false;
      v.pairs_checked = first_bad + 1;
      v.witness       = GpWitness{pairs[first_bad], std::move(o.dx), std::move(o.dy)};
      return v;
    }
  }  // namespace

  std::vector<CriticalPair> critical_pairs(RewriteSystem const& sys, SelfOverlaps self) {
    std::vector<RuleRef> all;
    for (std::uint32_t i = 0; i < sys.reducing().size(); ++i) {
      all.push_back({RuleKind::Reducing, i});
    }
    for (std::uint32_t i = 0; i < sys.preserving().size(); ++i) {
      all.push_back({RuleKind::Preserving, i});
    }

    std::vector<CriticalPair> out;
    std::set<std::tuple<Word, Word, Word, RuleRef, RuleRef>> seen;
    auto emit = [&](RuleRef r1, RuleRef r2, Word z, std::size_t p1, std::size_t p2,
                    OverlapKind kind) {
      auto const& a = sys.rule(r1);
      auto const& b = sys.rule(r2);
      CriticalPair cp{apply_rule(z, a, p1), apply_rule(z, b, p2), std::move(z),
                      r1, r2, p1, p2, kind};
      if (seen.emplace(cp.x, cp.y, cp.z, r1, r2).second) {
        out.push_back(std::move(cp));
      }
    };

    for (std::uint32_t i = 0; i < sys.reducing().size(); ++i) {
      RuleRef const r1{RuleKind::Reducing, i};
      Word const&   l1 = sys.reducing()[i].lhs;
      for (auto r2 : all) {
        bool const same = r2 == r1;
        if (r2.part == RuleKind::Reducing && r2.index < i) {
          continue;  // already produced with the roles swapped
        }
        Word const& l2 = sys.rule(r2).lhs;
        // l2 a factor of l1.
        if (!same && l2.size() <= l1.size()) {
          for (std::size_t p = 0; p + l2.size() <= l1.size(); ++p) {
            if (occurs_at(l1, l2, p)) {
              emit(r1, r2, l1, 0, p, OverlapKind::Inclusion);
            }
          }
        }
        // l1 a proper factor of l2.
        if (l2.size() > l1.size()) {
          for (std::size_t p = 0; p + l1.size() <= l2.size(); ++p) {
            if (occurs_at(l2, l1, p)) {
              emit(r1, r2, l2, p, 0, OverlapKind::Inclusion);
            }
          }
        }
        if (same && self == SelfOverlaps::Exclude) {
          continue;
        }
        // l2 overlapping the right end of l1.
        for (std::size_t p = 1; p < l1.size(); ++p) {
          std::size_t const shared = l1.size() - p;
          if (shared >= l2.size()) {
            continue;  // inclusion, handled above
          }
          if (std::equal(l1.begin() + p, l1.end(), l2.begin())) {
            Word z = l1;
            z.insert(z.end(), l2.begin() + shared, l2.end());
            emit(r1, r2, std::move(z), 0, p, OverlapKind::RightOverlap);
          }
        }
        if (same) {
          continue;  // the mirrored self-overlap is the same set of words
        }
        // l2 overlapping the left end of l1.
        for (std::size_t p = 1; p < l2.size(); ++p) {
          std::size_t const shared = l2.size() - p;
          if (shared >= l1.size()) {
            continue;
          }
          if (std::equal(l2.begin() + p, l2.end(), l1.begin())) {
            Word z = l2;
            z.insert(z.end(), l1.begin() + shared, l1.end());
            emit(r1, r2, std::move(z), p, 0, OverlapKind::LeftOverlap);
          }
        }
      }
    }
    return out;
  }

  std::vector<Word> reducing_descendants(Word const& w, RewriteSystem const& sys,
                                         SearchCaps const& caps) {
    sys.alphabet().validate(w);
    return sorted(closure(w, caps, "S_R descendants", [&](Word const& cur, auto&& emit) {
      for_each_step(cur, sys.reducing_index(), sys.reducing(), emit);
    }));
  }

  std::vector<Word> descendant_closure(Word const& w, RewriteSystem const& sys,
                                       SearchCaps const& caps) {
    sys.alphabet().validate(w);
    return sorted(closure(w, caps, "descendant closure", [&](Word const& cur, auto&& emit) {
      for_each_step(cur, sys.reducing_index(), sys.reducing(), emit);
      for_each_step(cur, sys.preserving_index(), sys.preserving(), emit);
    }));
  }

  bool sp_equivalent(Word const& u, Word const& v, RewriteSystem const& sys,
                     SearchCaps const& caps) {
    sys.alphabet().validate(u);
    sys.alphabet().validate(v);
    if (u.size() != v.size()) {
      return false;
    }
    if (u == v) {
      return true;
    }
    auto cls = sp_class(u, sys, caps);
    return std::find(cls.begin(), cls.end(), v) != cls.end();
  }

  Word sp_canonical(Word const& w, RewriteSystem const& sys, SearchCaps const& caps) {
    sys.alphabet().validate(w);
    auto cls = sp_class(w, sys, caps);
    return *std::min_element(cls.begin(), cls.end(), shortlex_less);
  }

  bool preperfect_wp(Word const& u, Word const& v, RewriteSystem const& sys,
                     SearchCaps const& caps) {
    auto    cu = descendant_closure(u, sys, caps);
    WordSet su(cu.begin(), cu.end());
    if (su.contains(v)) {
      return true;
    }
    for (auto const& w : descendant_closure(v, sys, caps)) {
      if (su.contains(w)) {
        return true;
      }
    }
    return false;
  }

  std::vector<Word> geodesics_of(Word const& w, RewriteSystem const& sys,
                                 SearchCaps const& caps) {
    auto        cl   = descendant_closure(w, sys, caps);
    std::size_t best = cl.front().size();  // shortlex sorted
    std::vector<Word> out;
    for (auto& m : cl) {
      if (m.size() == best) {
        out.push_back(std::move(m));
      }
    }
    return out;
  }

  bool pair_joinable(CriticalPair const& p, RewriteSystem const& sys, SearchCaps const& caps) {
    CanonicalCache canon(sys, caps);
    return joinable(reducing_descendants(p.x, sys, caps),
                    reducing_descendants(p.y, sys, caps), sys, canon);
  }

  GpVerdict check_geodesically_perfect_serial(RewriteSystem const& sys,
                                              GpOptions const&     opts) {
    auto const               pairs = critical_pairs(sys, opts.self_overlaps);
    std::vector<PairOutcome> outcomes(pairs.size());
    CanonicalCache           canon(sys, opts.caps);
    std::size_t              first_bad = pairs.size();
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      outcomes[k] = check_pair(pairs[k], sys, opts.caps, canon);
      if (!outcomes[k].ok || outcomes[k].error) {
        first_bad = k;
        break;
      }
    }
    return verdict_from(pairs, outcomes, first_bad);
  }

  GpVerdict check_geodesically_perfect(RewriteSystem const& sys, GpOptions const& opts) {
    auto const               pairs = critical_pairs(sys, opts.self_overlaps);
    std::vector<PairOutcome> outcomes(pairs.size());
    auto const               n = static_cast<std::ptrdiff_t>(pairs.size());
    std::atomic<std::ptrdiff_t> first_bad{n};

#pragma omp parallel
    {
      CanonicalCache canon(sys, opts.caps);
#pragma omp for schedule(dynamic)
      for (std::ptrdiff_t k = 0; k < n; ++k) {
        if (k > first_bad.load(std::memory_order_relaxed)) {
          continue;  // a smaller index already decided the verdict
        }
        outcomes[k] = check_pair(pairs[k], sys, opts.caps, canon);
        if (!outcomes[k].ok || outcomes[k].error) {
          auto cur = first_bad.load();
          while (k < cur && !first_bad.compare_exchange_weak(cur, k)) {
          }
        }
      }
    }
    return verdict_from(pairs, outcomes, static_cast<std::size_t>(first_bad.load()));
  }

  GeodesicCheck geodesic_bounded_check(RewriteSystem const& sys, std::size_t max_len,
                                       OracleCaps const& caps) {
    GeodesicCheck out;
    out.max_len = max_len;
    auto const words = all_words_up_to(sys.alphabet().size(), max_len);
    for (auto const& w : words) {
      if (!is_irreducible(w, sys.reducing())) {
        continue;
      }
      auto cl = class_closure(w, sys, caps);
      for (auto const& m : cl.members()) {
        if (m.size() < w.size()) {
          out.status  = GeodesicCheckStatus::Counterexample;
          out.word    = w;
          out.shorter = m;
          return out;
        }
      }
      if (!cl.complete()) {
        out.status = GeodesicCheckStatus::Undecided;
        out.word   = w;
        return out;
      }
    }
    return out;
  }

}  // namespace georw
