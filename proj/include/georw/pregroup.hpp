#pragma once

// Finite pregroups (Stallings), their axioms, reduced sequences, the
// interleaving equivalence and the rewriting systems S(P) and S'(P) for the
// universal group.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "georw/confluence.hpp"
#include "georw/errors.hpp"
#include "georw/rules.hpp"

namespace georw {

  class Pregroup {
   public:
    using Element = std::uint32_t;
    using Product = std::tuple<Element, Element, Element>;  // a b = c

    Pregroup() = default;

    // Throws StructureError for bad names, a bad involution, products
    // outside the carrier or conflicting products. With `materialize`, the
    // products a.eps, eps.a, a.a^-1 and a^-1.a are added.
    Pregroup(std::vector<std::string> names,
             Element                  eps,
             std::vector<Element>     inv,
             std::vector<Product> const& products,
             bool                     materialize = true);

    std::size_t size() const noexcept {
      return _names.size();
    }
    Element eps() const noexcept {
      return _eps;
    }
    Element inv(Element a) const {
      return _inv.at(a);
    }
    std::string const& name(Element a) const {
      return _names.at(a);
    }
    std::vector<std::string> const& names() const noexcept {
      return _names;
    }
    std::optional<Element> find(std::string_view name) const;
    Element                at(std::string_view name) const;

    std::optional<Element> mult(Element a, Element b) const {
      auto c = _table[std::size_t(a) * size() + b];
      return c == none ? std::nullopt : std::optional<Element>(c);
    }
    bool defined(Element a, Element b) const {
      return _table[std::size_t(a) * size() + b] != none;
    }

    // All defined products, ordered by (a, b).
    std::vector<Product> products() const;
    std::size_t          domain_size() const;

    // Overwrites or removes one entry with no validation beyond range
    // checks; for mutation tests.
    void set_product(Element a, Element b, std::optional<Element> c);

    friend bool operator==(Pregroup const&, Pregroup const&) = default;

   private:
    static constexpr Element none = UINT32_MAX;

    std::vector<std::string> _names;
    Element                  _eps = 0;
    std::vector<Element>     _inv;
    std::vector<Element>     _table;  // a * size + b
  };

  using PSequence = std::vector<Pregroup::Element>;

  struct AxiomResult {
    bool                                holds = true;
    std::vector<Pregroup::Element> counterexample;
  };

  struct AxiomReport {
    std::array<AxiomResult, 5> axioms;  // P1 .. P5

    bool all_hold() const noexcept {
      for (auto const& a : axioms) {
        if (!a.holds) {
          return false;
        }
      }
      return true;
    }
    // "P4 fails at (a, b, c)", or empty when everything holds.
    std::string describe(Pregroup const& p) const;
  };

  AxiomReport check_axioms(Pregroup const& p);

  // Raised by the constructions that need a valid pregroup.
  class AxiomError : public StructureError {
   public:
    AxiomError(AxiomReport report, std::string const& what)
        : StructureError(what), _report(std::move(report)) {}
    AxiomReport const& report() const noexcept {
      return _report;
    }

   private:
    AxiomReport _report;
  };

  void require_pregroup(Pregroup const& p);

  // S(P) over the alphabet P (eps is a letter, symbol id = element).
  RewriteSystem universal_system(Pregroup const& p);

  // S'(P) over Gamma = P \ {eps}, with the inverse pairing.
  RewriteSystem universal_system_prime(Pregroup const& p);

  // Symbols of S'(P) and elements of Gamma in both directions.
  Symbol                 gamma_symbol(Pregroup const& p, Pregroup::Element a);
  Pregroup::Element      gamma_element(Pregroup const& p, Symbol s);
  Word                   gamma_word(Pregroup const& p, PSequence const& s);
  Word                   p_word(PSequence const& s);  // over the S(P) alphabet

  bool is_reduced(PSequence const& s, Pregroup const& p);

  // Multiplies the leftmost defined adjacent pair until none is left; eps
  // results vanish. Throws PreconditionError if s contains eps.
  PSequence p_reduce(PSequence const& s, Pregroup const& p);

  // Decides s ~ t under the interleaving moves
  // (.., a, b, ..) -> (.., [ac], [c^-1 b], ..). Both inputs must be reduced.
  bool interleave_equivalent(PSequence const& s, PSequence const& t, Pregroup const& p,
                             SearchCaps const& caps = {});

  // Lexicographically least member of the interleaving class of the
  // reduction of s; two sequences name the same element of U(P) iff their
  // canonical forms agree.
  PSequence up_canonical(PSequence const& s, Pregroup const& p, SearchCaps const& caps = {});

  bool up_wp(PSequence const& s, PSequence const& t, Pregroup const& p,
             SearchCaps const& caps = {});

  // Pregroup files:
  //   elements e a A
  //   eps e
  //   inv a A
  //   mult a a = A
  Pregroup    parse_pregroup(std::string_view text, std::string const& source = "<input>");
  Pregroup    load_pregroup(std::string const& path);
  std::string serialize(Pregroup const& p);

  PSequence   parse_sequence(Pregroup const& p, std::string_view text);
  std::string format_sequence(Pregroup const& p, PSequence const& s);

}  // namespace georw
