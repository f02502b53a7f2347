#pragma once

// Symbols, alphabets and words over a finite alphabet.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace georw {

  // An interned letter. Ids are dense indices into the owning Alphabet and
  // their order is the fixed total order used for shortlex comparisons.
  struct Symbol {
    std::uint32_t id = 0;

    friend constexpr auto operator<=>(Symbol, Symbol) = default;
  };

  // The empty word is the identity.
  using Word = std::vector<Symbol>;

  struct WordHash {
    std::size_t operator()(Word const& w) const noexcept;
  };

  // Length first, then lexicographic on symbol ids.
  bool shortlex_less(Word const& u, Word const& v) noexcept;

  struct ShortlexLess {
    bool operator()(Word const& u, Word const& v) const noexcept {
      return shortlex_less(u, v);
    }
  };

  Word concat(Word const& u, Word const& v);

  // True iff `pattern` occurs in `w` starting at `pos`.
  bool occurs_at(std::span<Symbol const> w,
                 std::span<Symbol const> pattern,
                 std::size_t                pos) noexcept;

  // w[0, pos) + replacement + w[pos + erase_len, |w|)
  Word splice(std::span<Symbol const> w,
              std::size_t             pos,
              std::size_t             erase_len,
              std::span<Symbol const> replacement);

  class Alphabet {
   public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names);

    // Appends a new symbol; throws AlphabetError on a duplicate or
    // unprintable name.
    Symbol add(std::string name);

    std::optional<Symbol> find(std::string_view name) const;
    Symbol                at(std::string_view name) const;

    std::string const& name(Symbol s) const;

    std::size_t size() const noexcept {
      return _names.size();
    }
    bool empty() const noexcept {
      return _names.empty();
    }
    bool contains(Symbol s) const noexcept {
      return s.id < _names.size();
    }
    std::vector<std::string> const& names() const noexcept {
      return _names;
    }
    Symbol symbol(std::size_t i) const noexcept {
      return Symbol{static_cast<std::uint32_t>(i)};
    }

    // Whitespace separated symbol names; "." (or blank text) is the empty
    // word.
    Word        parse(std::string_view text) const;
    std::string format(Word const& w) const;

    // Throws AlphabetError if some symbol of `w` is not in this alphabet.
    void validate(std::span<Symbol const> w) const;

    friend bool operator==(Alphabet const& a, Alphabet const& b) {
      return a._names == b._names;
    }

   private:
    std::vector<std::string>                     _names;
    std::unordered_map<std::string, std::size_t> _index;
  };

  // Calls f on every word over an alphabet of size k with length at most n,
  // in shortlex order.
  void for_each_word_up_to(std::size_t                            k,
                           std::size_t                            n,
                           std::function<void(Word const&)> const& f);

  std::vector<Word> all_words_up_to(std::size_t k, std::size_t n);

}  // namespace georw
