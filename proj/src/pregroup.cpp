#include "georw/pregroup.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

#include "georw/errors.hpp"

namespace georw {

  Pregroup::Pregroup(std::vector<std::string> names,
                     Element                  eps,
                     std::vector<Element>     inv,
                     std::vector<Product> const& products,
                     bool                     materialize)
      : _names(std::move(names)), _eps(eps), _inv(std::move(inv)) {
    std::size_t const n = _names.size();
    if (n == 0) {
      throw StructureError("a pregroup needs at least eps");
    }
    std::set<std::string> seen;
    for (auto const& s : _names) {
      if (s.empty() || !seen.insert(s).second) {
        throw StructureError("empty or duplicate element name '" + s + "'");
      }
    }
    if (_eps >= n) {
      throw StructureError("eps is not an element");
    }
    if (_inv.size() != n) {
      throw StructureError("inversion must be total");
    }
    for (Element a = 0; a < n; ++a) {
      if (_inv[a] >= n || _inv[_inv[a]] != a) {
        throw StructureError("inversion is not an involution at '" + _names[a] + "'");
      }
    }
    if (_inv[_eps] != _eps) {
      throw StructureError("eps must be its own inverse");
    }
    _table.assign(n * n, none);
    auto put = [&](Element a, Element b, Element c) {
      if (a >= n || b >= n || c >= n) {
        throw StructureError("product outside the carrier");
      }
      auto& slot = _table[std::size_t(a) * n + b];
      if (slot != none && slot != c) {
        throw StructureError("conflicting products for (" + _names[a] + ", " + _names[b]
                             + ")");
      }
      slot = c;
    };
    for (auto const& [a, b, c] : products) {
      put(a, b, c);
    }
    if (materialize) {
      for (Element a = 0; a < n; ++a) {
        put(a, _eps, a);
        put(_eps, a, a);
        put(a, _inv[a], _eps);
        put(_inv[a], a, _eps);
      }
    }
  }

  std::optional<Pregroup::Element> Pregroup::find(std::string_view name) const {
    for (Element a = 0; a < _names.size(); ++a) {
      if (_names[a] == name) {
        return a;
      }
    }
    return std::nullopt;
  }

  Pregroup::Element Pregroup::at(std::string_view name) const {
    auto a = find(name);
    if (!a) {
      throw AlphabetError("unknown element '" + std::string(name) + "'");
    }
    return *a;
  }

  std::vector<Pregroup::Product> Pregroup::products() const {
    std::vector<Product> out;
    for (Element a = 0; a < size(); ++a) {
      for (Element b = 0; b < size(); ++b) {
        if (auto c = mult(a, b)) {
          out.emplace_back(a, b, *c);
        }
      }
    }
    return out;
  }

  std::size_t Pregroup::domain_size() const {
    return static_cast<std::size_t>(
        std::count_if(_table.begin(), _table.end(), [](Element c) { return c != none; }));
  }

  void Pregroup::set_product(Element a, Element b, std::optional<Element> c) {
    if (a >= size() || b >= size() || (c && *c >= size())) {
      throw StructureError("product outside the carrier");
    }
    _table[std::size_t(a) * size() + b] = c.value_or(none);
  }

  std::string AxiomReport::describe(Pregroup const& p) const {
    std::string out;
    for (std::size_t i = 0; i < axioms.size(); ++i) {
      if (axioms[i].holds) {
        continue;
      }
      if (!out.empty()) {
        out += "; ";
      }
      out += "P" + std::to_string(i + 1) + " fails at (";
      for (std::size_t j = 0; j < axioms[i].counterexample.size(); ++j) {
        out += (j ? ", " : "") + p.name(axioms[i].counterexample[j]);
      }
      out += ")";
    }
    return out;
  }

  AxiomReport check_axioms(Pregroup const& p) {
    using E = Pregroup::Element;
    AxiomReport r;
    auto        fail = [&](std::size_t axiom, std::vector<E> tuple) {
      if (r.axioms[axiom].holds) {
        r.axioms[axiom] = AxiomResult{false, std::move(tuple)};
      }
    };
    E const n   = static_cast<E>(p.size());
    E const eps = p.eps();

    for (E a = 0; a < n; ++a) {
      if (p.mult(a, eps) != a || p.mult(eps, a) != a) {
        fail(0, {a});
      }
      if (p.mult(p.inv(a), a) != eps || p.mult(a, p.inv(a)) != eps) {
        fail(1, {a});
      }
    }
    for (E a = 0; a < n; ++a) {
      for (E b = 0; b < n; ++b) {
        auto ab = p.mult(a, b);
        if (ab && p.mult(p.inv(b), p.inv(a)) != p.inv(*ab)) {
          fail(2, {a, b});
        }
      }
    }
    // "abc is defined" when either association is.
    auto triple = [&](E a, E b, E c) {
      auto ab = p.mult(a, b);
      auto bc = p.mult(b, c);
      return (ab && p.defined(*ab, c)) || (bc && p.defined(a, *bc));
    };
    for (E a = 0; a < n; ++a) {
      for (E b = 0; b < n; ++b) {
        auto ab = p.mult(a, b);
        if (!ab) {
          continue;
        }
        for (E c = 0; c < n; ++c) {
          auto bc = p.mult(b, c);
          if (!bc) {
            continue;
          }
          auto left  = p.mult(*ab, c);
          auto right = p.mult(a, *bc);
          if (left.has_value() != right.has_value() || left != right) {
            fail(3, {a, b, c});
          }
          if (r.axioms[4].holds) {
            for (E d = 0; d < n; ++d) {
              if (p.defined(c, d) && !triple(a, b, c) && !triple(b, c, d)) {
                fail(4, {a, b, c, d});
                break;
              }
            }
          }
        }
      }
    }
    return r;
  }

  void require_pregroup(Pregroup const& p) {
    auto report = check_axioms(p);
    if (!report.all_hold()) {
      auto what = report.describe(p);
      throw AxiomError(std::move(report), "not a pregroup: " + what);
    }
  }

  namespace {
    Alphabet alphabet_of(Pregroup const& p, bool with_eps) {
      Alphabet a;
      for (Pregroup::Element e = 0; e < p.size(); ++e) {
        if (with_eps || e != p.eps()) {
          a.add(p.name(e));
        }
      }
      return a;
    }

    // ab <-> [ac][c^-1 b] over P, in the order (a, b, c).
    template <typename F>
    void for_each_interleaving(Pregroup const& p, F&& f) {
      using E = Pregroup::Element;
      E const n = static_cast<E>(p.size());
      for (E a = 0; a < n; ++a) {
        for (E b = 0; b < n; ++b) {
          for (E c = 0; c < n; ++c) {
            auto ac = p.mult(a, c);
            auto cb = p.mult(p.inv(c), b);
            if (ac && cb && !(*ac == a && *cb == b)) {
              f(a, b, *ac, *cb);
            }
          }
        }
      }
    }
  }  // namespace

  RewriteSystem universal_system(Pregroup const& p) {
    require_pregroup(p);
    auto              sym = [](Pregroup::Element e) { return Symbol{e}; };
    std::vector<Rule> rules;
    rules.push_back(Rule{{sym(p.eps())}, {}});
    for (auto const& [a, b, c] : p.products()) {
      rules.push_back(Rule{{sym(a), sym(b)}, {sym(c)}});
    }
    for_each_interleaving(p, [&](auto a, auto b, auto x, auto y) {
      rules.push_back(Rule{{sym(a), sym(b)}, {sym(x), sym(y)}});
    });
    return RewriteSystem(alphabet_of(p, true), std::move(rules));
  }

  Symbol gamma_symbol(Pregroup const& p, Pregroup::Element a) {
    if (a == p.eps() || a >= p.size()) {
      throw PreconditionError("eps has no letter in Gamma");
    }
    return Symbol{a < p.eps() ? a : a - 1};
  }

  Pregroup::Element gamma_element(Pregroup const& p, Symbol s) {
    return s.id < p.eps() ? s.id : s.id + 1;
  }

  Word gamma_word(Pregroup const& p, PSequence const& s) {
    Word w;
    for (auto a : s) {
      w.push_back(gamma_symbol(p, a));
    }
    return w;
  }

  Word p_word(PSequence const& s) {
    Word w;
    for (auto a : s) {
      w.push_back(Symbol{a});
    }
    return w;
  }

  RewriteSystem universal_system_prime(Pregroup const& p) {
    require_pregroup(p);
    auto const        eps = p.eps();
    auto              g   = [&](Pregroup::Element e) { return gamma_symbol(p, e); };
    std::vector<Rule> rules;
    std::vector<Symbol> image;
    for (Pregroup::Element a = 0; a < p.size(); ++a) {
      if (a != eps) {
        rules.push_back(Rule{{g(a), g(p.inv(a))}, {}});
        image.push_back(g(p.inv(a)));
      }
    }
    for (auto const& [a, b, c] : p.products()) {
      if (a != eps && b != eps && a != p.inv(b) && c != eps) {
        rules.push_back(Rule{{g(a), g(b)}, {g(c)}});
      }
    }
    for_each_interleaving(p, [&](auto a, auto b, auto x, auto y) {
      if (a != eps && b != eps && x != eps && y != eps) {
        rules.push_back(Rule{{g(a), g(b)}, {g(x), g(y)}});
      }
    });
    return RewriteSystem(alphabet_of(p, false), std::move(rules),
                         InversePairing(std::move(image)));
  }

  bool is_reduced(PSequence const& s, Pregroup const& p) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == p.eps() || s[i] >= p.size()) {
        return false;
      }
      if (i + 1 < s.size() && p.defined(s[i], s[i + 1])) {
        return false;
      }
    }
    return true;
  }

  PSequence p_reduce(PSequence const& s, Pregroup const& p) {
    PSequence out;
    for (auto a : s) {
      if (a >= p.size()) {
        throw PreconditionError("sequence entry outside the carrier");
      }
      if (a == p.eps()) {
        throw PreconditionError("sequence entries must differ from eps");
      }
      // `out` is reduced, so the leftmost defined pair is always at its end.
      auto x = a;
      while (!out.empty()) {
        auto c = p.mult(out.back(), x);
        if (!c) {
          break;
        }
        out.pop_back();
        if (*c == p.eps()) {
          x = p.eps();
          break;
        }
        x = *c;
      }
      if (x != p.eps()) {
        out.push_back(x);
      }
    }
    return out;
  }

  namespace {
    struct SeqHash {
      std::size_t operator()(PSequence const& s) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto a : s) {
          h = (h ^ a) * 1099511628211ull;
        }
        return h;
      }
    };

    template <typename F>
    void interleaving_class(PSequence const& s, Pregroup const& p, SearchCaps const& caps,
                            F&& visit) {
      std::vector<PSequence>                   order{s};
      std::unordered_set<PSequence, SeqHash>   seen{s};
      using E = Pregroup::Element;
      for (std::size_t head = 0; head < order.size(); ++head) {
        PSequence const cur = order[head];
        if (visit(cur)) {
          return;
        }
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
          for (E c = 0; c < p.size(); ++c) {
            auto x = p.mult(cur[i], c);
            auto y = p.mult(p.inv(c), cur[i + 1]);
            if (!x || !y || *x == p.eps() || *y == p.eps()) {
              continue;
            }
            PSequence next = cur;
            next[i]        = *x;
            next[i + 1]    = *y;
            if (seen.insert(next).second) {
              if (order.size() >= caps.max_nodes) {
                throw ResourceError("interleaving closure: node cap exceeded");
              }
              order.push_back(std::move(next));
            }
          }
        }
      }
    }
  }  // namespace

  bool interleave_equivalent(PSequence const& s, PSequence const& t, Pregroup const& p,
                             SearchCaps const& caps) {
    if (!is_reduced(s, p) || !is_reduced(t, p)) {
      throw PreconditionError("interleaving needs reduced sequences");
    }
    if (s.size() != t.size()) {
      return false;
    }
    bool found = false;
    interleaving_class(s, p, caps, [&](PSequence const& u) { return found = u == t; });
    return found;
  }

  PSequence up_canonical(PSequence const& s, Pregroup const& p, SearchCaps const& caps) {
    auto      r    = p_reduce(s, p);
    PSequence best = r;
    interleaving_class(r, p, caps, [&](PSequence const& u) {
      best = std::min(best, u);
      return false;
    });
    return best;
  }

  bool up_wp(PSequence const& s, PSequence const& t, Pregroup const& p,
             SearchCaps const& caps) {
    auto rs = p_reduce(s, p);
    auto rt = p_reduce(t, p);
    return rs.size() == rt.size() && interleave_equivalent(rs, rt, p, caps);
  }

  PSequence parse_sequence(Pregroup const& p, std::string_view text) {
    PSequence out;
    std::size_t i = 0;
    while (i < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) {
        ++j;
      }
      auto tok = text.substr(i, j - i);
      i        = j;
      if (tok == ".") {
        continue;
      }
      auto a = p.at(tok);
      if (a == p.eps()) {
        throw PreconditionError("eps is not allowed in a sequence");
      }
      out.push_back(a);
    }
    return out;
  }

  std::string format_sequence(Pregroup const& p, PSequence const& s) {
    if (s.empty()) {
      return ".";
    }
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
      out += (i ? " " : "") + p.name(s[i]);
    }
    return out;
  }

}  // namespace georw
