#pragma once

// Triangular group systems (every rule ab -> c with |c| <= 1) and the
// pregroup P_S of letter classes they induce.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "georw/pregroup.hpp"
#include "georw/rules.hpp"

namespace georw {

  enum class TriangularKind { Triangular, AlmostTriangular, Neither };

  struct TriangularClassification {
    TriangularKind    kind = TriangularKind::Neither;
    std::vector<Rule> trivial_rules;  // a -> 1
    bool              group_system = false;
  };

  // Looks at every rule of sys, S_P included.
  TriangularClassification classify_triangular(RewriteSystem const& sys);

  struct LetterClasses {
    // classes[0] is the class of 1 and lists the letters equal to 1.
    std::vector<std::vector<Symbol>> classes;
    std::vector<std::size_t>         class_of;  // by symbol id
    std::size_t                      eps_class = 0;
  };

  // x and y share a class iff reduce_lr(x y^-1) is empty; x is in the class
  // of 1 iff reduce_lr(x) is empty. Only meaningful for geodesic group
  // systems. Throws PreconditionError without an inverse pairing and
  // StructureError if the relation is not an equivalence compatible with
  // inversion.
  LetterClasses letter_classes(RewriteSystem const& sys);

  // P_S: the carrier is the set of letter classes. Products come from the
  // rules xy -> z; conflicting rules or failed axioms raise StructureError
  // (or AxiomError), either of which means sys was not geodesic.
  Pregroup pregroup_from_system(RewriteSystem const& sys);

  // Checks that `map` (indexed by elements of p) is a bijection onto q
  // preserving eps, inversion and the partial product. Returns the first
  // mismatch.
  std::optional<std::string> isomorphism_mismatch(Pregroup const&                       p,
                                                  Pregroup const&                       q,
                                                  std::vector<Pregroup::Element> const& map);

  // The map P -> P_S sending a to the class of its letter in S'(P).
  std::vector<Pregroup::Element> roundtrip_map(Pregroup const& p, LetterClasses const& classes);

}  // namespace georw
