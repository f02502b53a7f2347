#pragma once

// Finite groups given by Cayley tables, subgroup embeddings and coset
// transversals.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace georw {

  class FiniteGroup {
   public:
    using Element = std::uint32_t;

    FiniteGroup() = default;
    // table[a * n + b] = ab. Throws StructureError unless this is a group
    // with the given identity.
    FiniteGroup(std::vector<std::string> names, Element identity, std::vector<Element> table);

    std::size_t size() const noexcept {
      return _names.size();
    }
    Element identity() const noexcept {
      return _identity;
    }
    Element mult(Element a, Element b) const {
      return _table[std::size_t(a) * size() + b];
    }
    Element inverse(Element a) const {
      return _inverse.at(a);
    }
    std::string const& name(Element a) const {
      return _names.at(a);
    }
    std::vector<std::string> const& names() const noexcept {
      return _names;
    }
    std::vector<Element> const& table() const noexcept {
      return _table;
    }
    std::optional<Element> find(std::string_view name) const;
    Element                at(std::string_view name) const;

    friend bool operator==(FiniteGroup const&, FiniteGroup const&) = default;

   private:
    std::vector<std::string> _names;
    Element                  _identity = 0;
    std::vector<Element>     _table;
    std::vector<Element>     _inverse;
  };

  // names[i] is g^i.
  FiniteGroup cyclic_group(std::vector<std::string> names);

  // Permutations of {1..n} named by their images, e.g. "213"; composition
  // applies the left factor first. n <= 9.
  FiniteGroup symmetric_group(std::size_t n);

  // An injective homomorphism sub -> into, map indexed by elements of sub.
  struct SubgroupEmbedding {
    FiniteGroup                       sub;
    std::vector<FiniteGroup::Element> map;
  };

  // Throws StructureError unless e.map is an injective homomorphism.
  void validate_embedding(SubgroupEmbedding const& e, FiniteGroup const& into);

  // The subgroup formed by `elements` (which must be closed), with the names
  // and table inherited from g.
  SubgroupEmbedding subgroup_of(FiniteGroup const& g, std::vector<FiniteGroup::Element> elements);

  std::vector<FiniteGroup::Element> image(SubgroupEmbedding const& e);

  enum class CosetSide { Left, Right };

  // One representative per coset (Hg for Right, gH for Left): the first in
  // declaration order, except that H itself is represented by the identity.
  // Sorted by declaration order.
  std::vector<FiniteGroup::Element> transversal(FiniteGroup const&       g,
                                                SubgroupEmbedding const& h,
                                                CosetSide                side);

  // Group files:
  //   group
  //   elements 1 a a2 a3
  //   identity 1
  //   mult a a = a2
  //   ...
  // The table must be total. Embedding files add `map <x> -> <y>` lines
  // from the file's group into `into`.
  FiniteGroup       parse_group(std::string_view text, std::string const& source = "<input>");
  FiniteGroup       load_group(std::string const& path);
  SubgroupEmbedding parse_embedding(std::string_view text, FiniteGroup const& into,
                                    std::string const& source = "<input>");
  SubgroupEmbedding load_embedding(std::string const& path, FiniteGroup const& into);

  // `map <x> -> <y>` lines only; the map must be total on `from`.
  std::vector<FiniteGroup::Element> parse_map(std::string_view text, FiniteGroup const& from,
                                              FiniteGroup const& to,
                                              std::string const& source = "<input>");
  std::vector<FiniteGroup::Element> load_map(std::string const& path, FiniteGroup const& from,
                                             FiniteGroup const& to);

  std::string serialize(FiniteGroup const& g);

}  // namespace georw
