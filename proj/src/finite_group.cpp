#include "georw/finite_group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "georw/errors.hpp"
#include "georw/system_io.hpp"

namespace georw {

  using E = FiniteGroup::Element;

  FiniteGroup::FiniteGroup(std::vector<std::string> names, Element identity,
                           std::vector<Element> table)
      : _names(std::move(names)), _identity(identity), _table(std::move(table)) {
    std::size_t const n = _names.size();
    if (n == 0 || identity >= n) {
      throw StructureError("a group needs an identity element");
    }
    std::set<std::string> seen;
    for (auto const& s : _names) {
      if (s.empty() || !seen.insert(s).second) {
        throw StructureError("empty or duplicate element name '" + s + "'");
      }
    }
    if (_table.size() != n * n) {
      throw StructureError("multiplication table must be total");
    }
    for (auto c : _table) {
      if (c >= n) {
        throw StructureError("product outside the group");
      }
    }
    for (E a = 0; a < n; ++a) {
      if (mult(a, identity) != a || mult(identity, a) != a) {
        throw StructureError("'" + _names[identity] + "' is not an identity");
      }
    }
    _inverse.assign(n, n);
    for (E a = 0; a < n; ++a) {
      for (E b = 0; b < n; ++b) {
        if (mult(a, b) == identity && mult(b, a) == identity) {
          _inverse[a] = b;
        }
      }
      if (_inverse[a] == n) {
        throw StructureError("'" + _names[a] + "' has no inverse");
      }
    }
    for (E a = 0; a < n; ++a) {
      for (E b = 0; b < n; ++b) {
        for (E c = 0; c < n; ++c) {
          if (mult(mult(a, b), c) != mult(a, mult(b, c))) {
            throw StructureError("not associative at (" + _names[a] + ", " + _names[b] + ", "
                                 + _names[c] + ")");
          }
        }
      }
    }
  }

  std::optional<E> FiniteGroup::find(std::string_view name) const {
    for (E a = 0; a < _names.size(); ++a) {
      if (_names[a] == name) {
        return a;
      }
    }
    return std::nullopt;
  }

  E FiniteGroup::at(std::string_view name) const {
    auto a = find(name);
    if (!a) {
      throw AlphabetError("unknown group element '" + std::string(name) + "'");
    }
    return *a;
  }

  FiniteGroup cyclic_group(std::vector<std::string> names) {
    std::size_t const n = names.size();
    std::vector<E>    table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        table[a * n + b] = static_cast<E>((a + b) % n);
      }
    }
    return FiniteGroup(std::move(names), 0, std::move(table));
  }

  FiniteGroup symmetric_group(std::size_t n) {
    if (n == 0 || n > 9) {
      throw PreconditionError("symmetric_group needs 1 <= n <= 9");
    }
    std::vector<std::vector<int>> perms;
    std::vector<int>              p(n);
    std::iota(p.begin(), p.end(), 1);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::vector<std::string> names;
    for (auto const& q : perms) {
      std::string s;
      for (int x : q) {
        s += static_cast<char>('0' + x);
      }
      names.push_back(s);
    }
    std::size_t const m = perms.size();
    std::vector<E>    table(m * m);
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        // i -> a(i) -> b(a(i))
        std::vector<int> c(n);
        for (std::size_t i = 0; i < n; ++i) {
          c[i] = perms[b][perms[a][i] - 1];
        }
        table[a * m + b] = static_cast<E>(std::find(perms.begin(), perms.end(), c) - perms.begin());
      }
    }
    return FiniteGroup(std::move(names), 0, std::move(table));
  }

  void validate_embedding(SubgroupEmbedding const& e, FiniteGroup const& into) {
    auto const& s = e.sub;
    if (e.map.size() != s.size()) {
      throw StructureError("embedding must be total");
    }
    std::set<E> hit;
    for (auto y : e.map) {
      if (y >= into.size() || !hit.insert(y).second) {
        throw StructureError("embedding is not injective");
      }
    }
    for (E a = 0; a < s.size(); ++a) {
      for (E b = 0; b < s.size(); ++b) {
        if (e.map[s.mult(a, b)] != into.mult(e.map[a], e.map[b])) {
          throw StructureError("embedding is not a homomorphism at (" + s.name(a) + ", "
                               + s.name(b) + ")");
        }
      }
    }
  }

  SubgroupEmbedding subgroup_of(FiniteGroup const& g, std::vector<E> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    std::size_t const n = elements.size();
    auto              index_of = [&](E x) -> E {
      auto it = std::lower_bound(elements.begin(), elements.end(), x);
      if (it == elements.end() || *it != x) {
        throw StructureError("subset is not closed under multiplication");
      }
      return static_cast<E>(it - elements.begin());
    };
    std::vector<std::string> names;
    for (auto x : elements) {
      names.push_back(g.name(x));
    }
    std::vector<E> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        table[a * n + b] = index_of(g.mult(elements[a], elements[b]));
      }
    }
    SubgroupEmbedding out{FiniteGroup(std::move(names), index_of(g.identity()), std::move(table)),
                          elements};
    validate_embedding(out, g);
    return out;
  }

  std::vector<E> image(SubgroupEmbedding const& e) {
    return e.map;
  }

  std::vector<E> transversal(FiniteGroup const& g, SubgroupEmbedding const& h, CosetSide side) {
    validate_embedding(h, g);
    std::vector<E> coset_of(g.size(), UINT32_MAX);
    std::vector<E> reps;
    auto           assign = [&](E rep) {
      for (auto x : h.map) {
        E member = side == CosetSide::Right ? g.mult(x, rep) : g.mult(rep, x);
        coset_of[member] = rep;
      }
      reps.push_back(rep);
    };
    assign(g.identity());
    for (E a = 0; a < g.size(); ++a) {
      if (coset_of[a] == UINT32_MAX) {
        assign(a);
      }
    }
    std::sort(reps.begin(), reps.end());
    return reps;
  }

  namespace {
    // Parses group directives; `map` lines are collected when allowed.
    FiniteGroup parse_group_lines(std::string_view text, std::string const& source,
                                  bool allow_maps, bool need_group,
                                  std::vector<std::tuple<std::string, std::string, std::size_t,
                                                         std::size_t>>* maps) {
      std::vector<std::string>                   names;
      std::optional<E>                           identity;
      std::vector<std::tuple<E, E, E>>           rows;
      bool                                       header = false;
      std::istringstream                         in{std::string(text)};
      std::string                                line;
      std::size_t                                line_no = 0;
      auto lookup = [&](Token const& t) -> E {
        auto it = std::find(names.begin(), names.end(), t.text);
        if (it == names.end()) {
          throw ParseError(source, line_no, t.column,
                           "unknown element '" + std::string(t.text) + "'");
        }
        return static_cast<E>(it - names.begin());
      };
      while (std::getline(in, line)) {
        ++line_no;
        auto tokens = tokenize_line(line);
        if (tokens.empty()) {
          continue;
        }
        auto const& head = tokens.front();
        if (head.text == "group") {
          header = true;
        } else if (head.text == "elements") {
          for (std::size_t i = 1; i < tokens.size(); ++i) {
            std::string name(tokens[i].text);
            if (name == "=" || name == "->"
                || std::find(names.begin(), names.end(), name) != names.end()) {
              throw ParseError(source, line_no, tokens[i].column,
                               "bad or duplicate element '" + name + "'");
            }
            names.push_back(name);
          }
        } else if (head.text == "identity") {
          if (tokens.size() != 2) {
            throw ParseError(source, line_no, head.column, "expected 'identity <e>'");
          }
          identity = lookup(tokens[1]);
        } else if (head.text == "mult") {
          if (tokens.size() != 5 || tokens[3].text != "=") {
            throw ParseError(source, line_no, head.column, "expected 'mult <a> <b> = <c>'");
          }
          rows.emplace_back(lookup(tokens[1]), lookup(tokens[2]), lookup(tokens[4]));
        } else if (head.text == "map" && allow_maps) {
          if (tokens.size() != 4 || tokens[2].text != "->") {
            throw ParseError(source, line_no, head.column, "expected 'map <x> -> <y>'");
          }
          maps->emplace_back(std::string(tokens[1].text), std::string(tokens[3].text), line_no,
                             tokens[1].column);
        } else {
          throw ParseError(source, line_no, head.column,
                           "unknown directive '" + std::string(head.text) + "'");
        }
      }
      if (!need_group) {
        return {};
      }
      if (!header) {
        throw ParseError(source, 1, 1, "missing 'group' header");
      }
      if (!identity) {
        throw ParseError(source, line_no, 1, "missing 'identity' line");
      }
      std::size_t const n = names.size();
      std::vector<E>    table(n * n, UINT32_MAX);
      for (auto const& [a, b, c] : rows) {
        auto& slot = table[std::size_t(a) * n + b];
        if (slot != UINT32_MAX && slot != c) {
          throw ParseError(source, line_no, 1,
                           "conflicting products for (" + names[a] + ", " + names[b] + ")");
        }
        slot = c;
      }
      for (std::size_t i = 0; i < table.size(); ++i) {
        if (table[i] == UINT32_MAX) {
          throw ParseError(source, line_no, 1,
                           "missing product (" + names[i / n] + ", " + names[i % n] + ")");
        }
      }
      try {
        return FiniteGroup(std::move(names), *identity, std::move(table));
      } catch (StructureError const& e) {
        throw ParseError(source, line_no, 1, e.what());
      }
    }

    std::vector<E> resolve_map(
        std::vector<std::tuple<std::string, std::string, std::size_t, std::size_t>> const& maps,
        FiniteGroup const& from, FiniteGroup const& to, std::string const& source) {
      std::vector<E> out(from.size(), UINT32_MAX);
      for (auto const& [x, y, line, column] : maps) {
        auto a = from.find(x);
        auto b = to.find(y);
        if (!a || !b) {
          throw ParseError(source, line, column, "unknown element in '" + x + " -> " + y + "'");
        }
        if (out[*a] != UINT32_MAX && out[*a] != *b) {
          throw ParseError(source, line, column, "conflicting image for '" + x + "'");
        }
        out[*a] = *b;
      }
      for (E a = 0; a < out.size(); ++a) {
        if (out[a] == UINT32_MAX) {
          throw ParseError(source, 1, 1, "no image for '" + from.name(a) + "'");
        }
      }
      return out;
    }
  }  // namespace

  FiniteGroup parse_group(std::string_view text, std::string const& source) {
    return parse_group_lines(text, source, false, true, nullptr);
  }

  FiniteGroup load_group(std::string const& path) {
    return parse_group(read_text_file(path), path);
  }

  SubgroupEmbedding parse_embedding(std::string_view text, FiniteGroup const& into,
                                    std::string const& source) {
    std::vector<std::tuple<std::string, std::string, std::size_t, std::size_t>> maps;
    auto sub = parse_group_lines(text, source, true, true, &maps);
    SubgroupEmbedding e{sub, resolve_map(maps, sub, into, source)};
    try {
      validate_embedding(e, into);
    } catch (StructureError const& err) {
      throw ParseError(source, 1, 1, err.what());
    }
    return e;
  }

  SubgroupEmbedding load_embedding(std::string const& path, FiniteGroup const& into) {
    return parse_embedding(read_text_file(path), into, path);
  }

  std::vector<E> parse_map(std::string_view text, FiniteGroup const& from, FiniteGroup const& to,
                           std::string const& source) {
    std::vector<std::tuple<std::string, std::string, std::size_t, std::size_t>> maps;
    parse_group_lines(text, source, true, false, &maps);
    return resolve_map(maps, from, to, source);
  }

  std::vector<E> load_map(std::string const& path, FiniteGroup const& from,
                          FiniteGroup const& to) {
    return parse_map(read_text_file(path), from, to, path);
  }

  std::string serialize(FiniteGroup const& g) {
    std::string out = "group\nelements";
    for (auto const& n : g.names()) {
      out += " " + n;
    }
    out += "\nidentity " + g.name(g.identity()) + "\n";
    for (E a = 0; a < g.size(); ++a) {
      for (E b = 0; b < g.size(); ++b) {
        out += "mult " + g.name(a) + " " + g.name(b) + " = " + g.name(g.mult(a, b)) + "\n";
      }
    }
    return out;
  }

}  // namespace georw
