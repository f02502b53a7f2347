#include <sstream>

#include "georw/errors.hpp"
#include "georw/pregroup.hpp"
#include "georw/system_io.hpp"

namespace georw {

  Pregroup parse_pregroup(std::string_view text, std::string const& source) {
    using E = Pregroup::Element;
    std::vector<std::string>          names;
    std::optional<E>                  eps;
    std::vector<std::pair<E, E>>      inverses;
    std::vector<Pregroup::Product>    products;
    std::unordered_map<std::string, E> index;

    auto lookup = [&](Token const& t, std::size_t line) {
      auto it = index.find(std::string(t.text));
      if (it == index.end()) {
        throw ParseError(source, line, t.column,
                         "unknown element '" + std::string(t.text) + "'");
      }
      return it->second;
    };

    std::istringstream in{std::string(text)};
    std::string        line;
    std::size_t        line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      auto tokens = tokenize_line(line);
      if (tokens.empty()) {
        continue;
      }
      auto const& head = tokens.front();
      if (head.text == "elements") {
        for (std::size_t i = 1; i < tokens.size(); ++i) {
          std::string name(tokens[i].text);
          if (name == "." || name == "=" || index.contains(name)) {
            throw ParseError(source, line_no, tokens[i].column,
                             "bad or duplicate element '" + name + "'");
          }
          index.emplace(name, static_cast<E>(names.size()));
          names.push_back(name);
        }
      } else if (head.text == "eps") {
        if (tokens.size() != 2) {
          throw ParseError(source, line_no, head.column, "expected 'eps <e>'");
        }
        eps = lookup(tokens[1], line_no);
      } else if (head.text == "inv") {
        if (tokens.size() != 3) {
          throw ParseError(source, line_no, head.column, "expected 'inv <x> <y>'");
        }
        inverses.emplace_back(lookup(tokens[1], line_no), lookup(tokens[2], line_no));
      } else if (head.text == "mult") {
        if (tokens.size() != 5 || tokens[3].text != "=") {
          throw ParseError(source, line_no, head.column, "expected 'mult <a> <b> = <c>'");
        }
        products.emplace_back(lookup(tokens[1], line_no), lookup(tokens[2], line_no),
                              lookup(tokens[4], line_no));
      } else {
        throw ParseError(source, line_no, head.column,
                         "unknown directive '" + std::string(head.text) + "'");
      }
    }
    if (!eps) {
      throw ParseError(source, line_no, 1, "missing 'eps' line");
    }
    std::vector<E> inv(names.size(), UINT32_MAX);
    inv[*eps] = *eps;
    for (auto [x, y] : inverses) {
      if ((inv[x] != UINT32_MAX && inv[x] != y) || (inv[y] != UINT32_MAX && inv[y] != x)) {
        throw ParseError(source, line_no, 1, "conflicting inverse for '" + names[x] + "'");
      }
      inv[x] = y;
      inv[y] = x;
    }
    for (E a = 0; a < names.size(); ++a) {
      if (inv[a] == UINT32_MAX) {
        throw ParseError(source, line_no, 1, "element '" + names[a] + "' has no inverse");
      }
    }
    return Pregroup(std::move(names), *eps, std::move(inv), products, true);
  }

  Pregroup load_pregroup(std::string const& path) {
    return parse_pregroup(read_text_file(path), path);
  }

  std::string serialize(Pregroup const& p) {
    using E         = Pregroup::Element;
    std::string out = "elements";
    for (auto const& n : p.names()) {
      out += " " + n;
    }
    out += "\neps " + p.name(p.eps()) + "\n";
    for (E a = 0; a < p.size(); ++a) {
      if (a != p.eps() && a <= p.inv(a)) {
        out += "inv " + p.name(a) + " " + p.name(p.inv(a)) + "\n";
      }
    }
    for (auto const& [a, b, c] : p.products()) {
      bool implied = a == p.eps() || b == p.eps() || b == p.inv(a);
      if (!implied) {
        out += "mult " + p.name(a) + " " + p.name(b) + " = " + p.name(c) + "\n";
      }
    }
    return out;
  }

}  // namespace georw
