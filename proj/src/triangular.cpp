#include "georw/triangular.hpp"

#include <map>

#include "georw/errors.hpp"
#include "georw/reduction.hpp"

namespace georw {

  TriangularClassification classify_triangular(RewriteSystem const& sys) {
    TriangularClassification out;
    out.group_system = sys.inverse().has_value();
    bool shaped      = true;
    for (auto const& r : sys.rules()) {
      if (r.lhs.size() == 1 && r.rhs.empty()) {
        out.trivial_rules.push_back(r);
      } else if (r.lhs.size() != 2 || r.rhs.size() > 1) {
        shaped = false;
      }
    }
    if (!shaped) {
      out.kind = TriangularKind::Neither;
    } else if (out.trivial_rules.empty()) {
      out.kind = TriangularKind::Triangular;
    } else {
      out.kind = TriangularKind::AlmostTriangular;
    }
    return out;
  }

  LetterClasses letter_classes(RewriteSystem const& sys) {
    if (!sys.inverse()) {
      throw PreconditionError("letter classes need an inverse pairing");
    }
    auto const&       inv = *sys.inverse();
    std::size_t const k   = sys.alphabet().size();
    // Index 0 stands for 1, index i + 1 for letter i.
    std::size_t const m = k + 1;
    std::vector<char> rel(m * m, 0);
    auto              word_of = [](std::size_t i) {
      return i == 0 ? Word{} : Word{Symbol{static_cast<std::uint32_t>(i - 1)}};
    };
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        Word w = concat(word_of(i), inv.invert(word_of(j)));
        rel[i * m + j] = reduce_lr(w, sys).empty();
      }
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (!rel[i * m + i]) {
        throw StructureError("letter relation is not reflexive");
      }
      for (std::size_t j = 0; j < m; ++j) {
        if (rel[i * m + j] != rel[j * m + i]) {
          throw StructureError("letter relation is not symmetric");
        }
        if (!rel[i * m + j]) {
          continue;
        }
        for (std::size_t l = 0; l < m; ++l) {
          if (rel[j * m + l] && !rel[i * m + l]) {
            throw StructureError("letter relation is not transitive");
          }
        }
      }
    }

    LetterClasses out;
    std::vector<std::size_t> cls(m, SIZE_MAX);
    for (std::size_t i = 0; i < m; ++i) {
      if (cls[i] != SIZE_MAX) {
        continue;
      }
      std::size_t id = out.classes.size();
      out.classes.emplace_back();
      for (std::size_t j = i; j < m; ++j) {
        if (rel[i * m + j]) {
          cls[j] = id;
          if (j > 0) {
            out.classes[id].push_back(Symbol{static_cast<std::uint32_t>(j - 1)});
          }
        }
      }
    }
    out.eps_class = cls[0];
    out.class_of.assign(cls.begin() + 1, cls.end());

    // Inversion must act on classes.
    for (auto const& c : out.classes) {
      for (auto x : c) {
        if (out.class_of[inv(x).id] != out.class_of[inv(c.front()).id]) {
          throw StructureError("inversion does not respect letter classes");
        }
      }
    }
    return out;
  }

  Pregroup pregroup_from_system(RewriteSystem const& sys) {
    auto cl = classify_triangular(sys);
    if (cl.kind == TriangularKind::Neither || !cl.group_system) {
      throw PreconditionError("P_S needs a (almost) triangular group system");
    }
    auto const  classes = letter_classes(sys);
    auto const& inv     = *sys.inverse();
    auto const& alpha   = sys.alphabet();
    using E             = Pregroup::Element;

    std::vector<std::string> names;
    for (std::size_t c = 0; c < classes.classes.size(); ++c) {
      if (!classes.classes[c].empty()) {
        names.push_back(alpha.name(classes.classes[c].front()));
      } else {
        std::string n = "1";
        while (alpha.find(n)) {
          n += "'";
        }
        names.push_back(n);
      }
    }
    E const        eps = static_cast<E>(classes.eps_class);
    std::vector<E> inverse(names.size());
    for (std::size_t c = 0; c < classes.classes.size(); ++c) {
      inverse[c] = c == eps ? eps
                            : static_cast<E>(classes.class_of[inv(classes.classes[c].front()).id]);
    }

    auto class_of_word = [&](Word const& z) -> E {
      return z.empty() ? eps : static_cast<E>(classes.class_of[z.front().id]);
    };
    std::map<std::pair<E, E>, E> table;
    for (auto const& r : sys.rules()) {
      if (r.lhs.size() != 2) {
        continue;
      }
      E p = class_of_word({r.lhs[0]});
      E q = class_of_word({r.lhs[1]});
      E z = class_of_word(r.rhs);
      if ((p == eps && z != q) || (q == eps && z != p)) {
        throw StructureError("rule " + alpha.format(r.lhs) + " -> " + alpha.format(r.rhs)
                             + " contradicts the class of 1");
      }
      auto [it, fresh] = table.emplace(std::pair{p, q}, z);
      if (!fresh && it->second != z) {
        throw StructureError("product of classes '" + names[p] + "' and '" + names[q]
                             + "' is not well defined");
      }
    }
    std::vector<Pregroup::Product> products;
    for (auto const& [pq, z] : table) {
      if (pq.first != eps && pq.second != eps) {
        products.emplace_back(pq.first, pq.second, z);
      }
    }
    Pregroup out;
    try {
      out = Pregroup(std::move(names), eps, std::move(inverse), products, true);
    } catch (StructureError const& e) {
      throw StructureError(std::string("P_S is not well defined: ") + e.what());
    }
    require_pregroup(out);
    return out;
  }

  std::optional<std::string> isomorphism_mismatch(Pregroup const&                       p,
                                                  Pregroup const&                       q,
                                                  std::vector<Pregroup::Element> const& map) {
    using E = Pregroup::Element;
    if (p.size() != q.size() || map.size() != p.size()) {
      return "carrier sizes differ";
    }
    std::vector<char> hit(q.size(), 0);
    for (auto x : map) {
      if (x >= q.size() || hit[x]) {
        return "map is not a bijection";
      }
      hit[x] = 1;
    }
    if (map[p.eps()] != q.eps()) {
      return "eps is not preserved";
    }
    for (E a = 0; a < p.size(); ++a) {
      if (map[p.inv(a)] != q.inv(map[a])) {
        return "inversion differs at '" + p.name(a) + "'";
      }
      for (E b = 0; b < p.size(); ++b) {
        auto lhs = p.mult(a, b);
        auto rhs = q.mult(map[a], map[b]);
        if (lhs.has_value() != rhs.has_value() || (lhs && map[*lhs] != *rhs)) {
          return "product differs at (" + p.name(a) + ", " + p.name(b) + ")";
        }
      }
    }
    return std::nullopt;
  }

  std::vector<Pregroup::Element> roundtrip_map(Pregroup const& p, LetterClasses const& classes) {
    std::vector<Pregroup::Element> out(p.size());
    for (Pregroup::Element a = 0; a < p.size(); ++a) {
      out[a] = a == p.eps()
                   ? static_cast<Pregroup::Element>(classes.eps_class)
                   : static_cast<Pregroup::Element>(classes.class_of[gamma_symbol(p, a).id]);
    }
    return out;
  }

}  // namespace georw
