#include "georw/word.hpp"

#include <algorithm>
#include <cctype>

#include "georw/errors.hpp"

namespace georw {

  std::size_t WordHash::operator()(Word const& w) const noexcept {
    // FNV-1a over the ids.
    std::uint64_t h = 1469598103934665603ULL;
    for (auto s : w) {
      h ^= s.id + 0x9e3779b9U;
      h *= 1099511628211ULL;
    }
    h ^= w.size();
    return static_cast<std::size_t>(h);
  }

  bool shortlex_less(Word const& u, Word const& v) noexcept {
    if (u.size() != v.size()) {
      return u.size() < v.size();
    }
    return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end());
  }

  Word concat(Word const& u, Word const& v) {
    Word result;
    result.reserve(u.size() + v.size());
    result.insert(result.end(), u.begin(), u.end());
    result.insert(result.end(), v.begin(), v.end());
    return result;
  }

  bool occurs_at(std::span<Symbol const> w,
                 std::span<Symbol const> pattern,
                 std::size_t             pos) noexcept {
    if (pos > w.size() || pattern.size() > w.size() - pos) {
      return false;
    }
    return std::equal(pattern.begin(), pattern.end(), w.begin() + pos);
  }

  Word splice(std::span<Symbol const> w,
              std::size_t             pos,
              std::size_t             erase_len,
              std::span<Symbol const> replacement) {
    Word result;
    result.reserve(w.size() - erase_len + replacement.size());
    result.insert(result.end(), w.begin(), w.begin() + pos);
    result.insert(result.end(), replacement.begin(), replacement.end());
    result.insert(result.end(), w.begin() + pos + erase_len, w.end());
    return result;
  }

  Alphabet::Alphabet(std::vector<std::string> names) {
    for (auto& n : names) {
      add(std::move(n));
    }
  }

  Symbol Alphabet::add(std::string name) {
    if (name.empty() || name == "." || name == "->" || name == "<->"
        || name == "=") {
      throw AlphabetError("invalid symbol name '" + name + "'");
    }
    for (unsigned char c : name) {
      if (std::isspace(c) || c == '#') {
        throw AlphabetError("invalid symbol name '" + name + "'");
      }
    }
    if (_index.contains(name)) {
      throw AlphabetError("duplicate symbol name '" + name + "'");
    }
    Symbol s{static_cast<std::uint32_t>(_names.size())};
    _index.emplace(name, _names.size());
    _names.push_back(std::move(name));
    return s;
  }

  std::optional<Symbol> Alphabet::find(std::string_view name) const {
    auto it = _index.find(std::string(name));
    if (it == _index.end()) {
      return std::nullopt;
    }
    return Symbol{static_cast<std::uint32_t>(it->second)};
  }

  Symbol Alphabet::at(std::string_view name) const {
    auto s = find(name);
    if (!s) {
      throw AlphabetError("unknown symbol '" + std::string(name) + "'");
    }
    return *s;
  }

  std::string const& Alphabet::name(Symbol s) const {
    if (!contains(s)) {
      throw AlphabetError("symbol id " + std::to_string(s.id)
                          + " is not in the alphabet");
    }
    return _names[s.id];
  }

  Word Alphabet::parse(std::string_view text) const {
    Word        result;
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
      std::size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) {
        ++j;
      }
      if (j > i) {
        auto token = text.substr(i, j - i);
        if (token != ".") {
          result.push_back(at(token));
        }
      }
      i = j;
    }
    return result;
  }

  std::string Alphabet::format(Word const& w) const {
    if (w.empty()) {
      return ".";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        out += ' ';
      }
      out += name(w[i]);
    }
    return out;
  }

  void Alphabet::validate(std::span<Symbol const> w) const {
    for (auto s : w) {
      if (!contains(s)) {
        throw AlphabetError("symbol id " + std::to_string(s.id)
                            + " is not in the alphabet");
      }
    }
  }

  void for_each_word_up_to(std::size_t                             k,
                           std::size_t                             n,
                           std::function<void(Word const&)> const& f) {
    Word w;
    f(w);
    if (k == 0) {
      return;
    }
    for (std::size_t len = 1; len <= n; ++len) {
      w.assign(len, Symbol{0});
      while (true) {
        f(w);
        std::size_t i = len;
        while (i > 0 && w[i - 1].id + 1 == k) {
          w[i - 1].id = 0;
          --i;
        }
        if (i == 0) {
          break;
        }
        ++w[i - 1].id;
      }
    }
  }

  std::vector<Word> all_words_up_to(std::size_t k, std::size_t n) {
    std::vector<Word> out;
    for_each_word_up_to(k, n, [&out](Word const& w) { out.push_back(w); });
    return out;
  }

}  // namespace georw
