#pragma once

// Rewriting systems and pregroups for graph groups, Coxeter groups,
// amalgamated products and HNN-extensions over finite groups.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "georw/finite_group.hpp"
#include "georw/pregroup.hpp"
#include "georw/rules.hpp"

namespace georw {

  // A string rewriting program whose rules may increase length. Used for
  // the convergent HNN and amalgam systems, which are not Thue systems.
  class DirectedSystem {
   public:
    struct DirectedRule {
      Word lhs;
      Word rhs;
      friend bool operator==(DirectedRule const&, DirectedRule const&) = default;
    };
    struct Redex {
      std::uint32_t rule     = 0;
      std::size_t   position = 0;
    };

    DirectedSystem() = default;
    DirectedSystem(Alphabet alphabet, std::vector<DirectedRule> rules);

    Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }
    std::vector<DirectedRule> const& rules() const noexcept {
      return _rules;
    }

    // Ordered by position, then rule index.
    std::vector<Redex> redexes(Word const& w) const;
    Word               apply(Word const& w, Redex r) const;
    bool               is_irreducible(Word const& w) const;

    // Rewrites the leftmost redex (smallest rule index there) until none is
    // left. Throws ResourceError after max_steps steps.
    Word normal_form(Word const& w, std::size_t max_steps = 1'000'000) const;

   private:
    Alphabet                  _alphabet;
    std::vector<DirectedRule> _rules;
    PatternIndex              _index;
  };

  struct CommutationGraph {
    std::vector<std::string>                         vertices;
    std::vector<std::pair<std::string, std::string>> edges;
  };

  // "a" -> "A" for a single lowercase letter, otherwise name + "^-1".
  std::string inverse_name(std::string const& name);

  // Alphabet a, a^-1, b, b^-1, ... with cancellation rules and ab <-> ba for
  // every sign combination of every edge.
  RewriteSystem build_graph_group(CommutationGraph const& g);

  // Graph files: `vertices a b c` and `edge a b` lines.
  CommutationGraph parse_graph(std::string_view text, std::string const& source = "<input>");
  CommutationGraph load_graph(std::string const& path);

  struct CoxeterMatrix {
    std::vector<std::string>              generators;
    std::vector<std::vector<unsigned>>    m;  // 0 means no relation
  };

  RewriteSystem build_tits_system(CoxeterMatrix const& c);

  // Coxeter files: `generators a b c` and `m a b 3` lines; absent pairs
  // default to 0.
  CoxeterMatrix parse_coxeter(std::string_view text, std::string const& source = "<input>");
  CoxeterMatrix load_coxeter(std::string const& path);

  // ---------------------------------------------------------------------------
  // Amalgamated products A *_H B.

  struct AmalgamData {
    FiniteGroup       a;
    FiniteGroup       b;
    SubgroupEmbedding h_in_a;
    SubgroupEmbedding h_in_b;  // same subgroup H as h_in_a
  };

  // Letters for (A u B) \ {1}: A's non-identity elements, then B's elements
  // outside H. H is named as in A; a B name already taken gets a prime.
  struct AmalgamLetters {
    Alphabet                           alphabet;
    std::vector<std::optional<Symbol>> of_a;  // nothing for the identity
    std::vector<std::optional<Symbol>> of_b;
  };

  void           validate_amalgam(AmalgamData const& d);
  AmalgamLetters amalgam_letters(AmalgamData const& d);

  // Group multiplication inside A and inside B, and the mixed rules
  // ab -> [ah] y and ba -> [bh] x for a in A \ H, b in B \ H, loaded by Thue
  // resolution (so the mixed rules become symmetric).
  RewriteSystem build_amalgam_system(AmalgamData const& d);

  // The same rules with the mixed ones kept directed.
  DirectedSystem build_amalgam_directed(AmalgamData const& d);

  // Carrier A u B (elements of A first, then B \ H), D = A x A u B x B.
  Pregroup build_amalgam_pregroup(AmalgamData const& d);

  // ---------------------------------------------------------------------------
  // HNN-extensions HNN(G; A, B, phi) with t^-1 a t = phi(a).

  struct HnnData {
    FiniteGroup                       g;
    SubgroupEmbedding                 a;
    SubgroupEmbedding                 b;
    std::vector<FiniteGroup::Element> phi;  // elements of a.sub -> elements of b.sub
  };

  void validate_hnn(HnnData const& d);

  // G's non-identity elements, then t and its inverse T.
  struct HnnLetters {
    Alphabet                           alphabet;
    std::vector<std::optional<Symbol>> of_g;
    Symbol                             t;
    Symbol                             t_inv;
  };

  HnnLetters hnn_letters(HnnData const& d);

  // Right transversals X of A and Y of B in G.
  std::vector<FiniteGroup::Element> hnn_x(HnnData const& d);
  std::vector<FiniteGroup::Element> hnn_y(HnnData const& d);

  // T t -> 1, t T -> 1, gh -> [gh], t g -> a t y, T g -> b T x.
  DirectedSystem build_hnn_system(HnnData const& d);

  // T t -> 1, t T -> 1, gh -> [gh], T a t -> phi(a), t b T -> phi^-1(b).
  RewriteSystem build_britton_system(HnnData const& d);

  // Carrier G, then g.t.y (g in G, y in Y), then g.T.x (g in G, x in X).
  Pregroup build_hnn_pregroup(HnnData const& d);

}  // namespace georw
