#include "georw/system_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "georw/errors.hpp"

namespace georw {

  std::vector<Token> tokenize_line(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::vector<Token> out;
    std::size_t        i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) {
        ++j;
      }
      out.push_back(Token{line.substr(i, j - i), i + 1});
      i = j;
    }
    return out;
  }

  std::string read_text_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  namespace {
    Word parse_side(Alphabet const&         alphabet,
                    std::span<Token const>  tokens,
                    std::string const&      source,
                    std::size_t             line) {
      Word w;
      for (auto const& t : tokens) {
        if (t.text == ".") {
          if (tokens.size() != 1) {
            throw ParseError(source, line, t.column, "'.' must stand alone");
          }
          continue;
        }
        auto s = alphabet.find(t.text);
        if (!s) {
          throw ParseError(source, line, t.column,
                           "unknown symbol '" + std::string(t.text) + "'");
        }
        w.push_back(*s);
      }
      return w;
    }
  }  // namespace

  Presentation parse_presentation(std::string_view text, std::string const& source) {
    Presentation                         p;
    std::vector<std::pair<Symbol, Symbol>> inverse_lines;
    std::vector<std::size_t>             inverse_columns;
    std::vector<std::size_t>             inverse_line_numbers;
    std::size_t                          line_no = 0;
    std::istringstream                   in{std::string(text)};
    std::string                          line;
    while (std::getline(in, line)) {
      ++line_no;
      auto tokens = tokenize_line(line);
      if (tokens.empty()) {
        continue;
      }
      auto const& head = tokens.front();
      if (head.text == "alphabet") {
        for (std::size_t i = 1; i < tokens.size(); ++i) {
          try {
            p.alphabet.add(std::string(tokens[i].text));
          } catch (AlphabetError const& e) {
            throw ParseError(source, line_no, tokens[i].column, e.what());
          }
        }
      } else if (head.text == "inverse") {
        if (tokens.size() != 3) {
          throw ParseError(source, line_no, head.column,
                           "expected 'inverse <x> <X>'");
        }
        for (std::size_t i = 1; i < 3; ++i) {
          if (!p.alphabet.find(tokens[i].text)) {
            throw ParseError(source, line_no, tokens[i].column,
                             "unknown symbol '" + std::string(tokens[i].text) + "'");
          }
        }
        inverse_lines.emplace_back(*p.alphabet.find(tokens[1].text),
                                   *p.alphabet.find(tokens[2].text));
        inverse_columns.push_back(tokens[1].column);
        inverse_line_numbers.push_back(line_no);
      } else if (head.text == "rule") {
        std::size_t arrow = 0;
        bool        symmetric = false;
        for (std::size_t i = 1; i < tokens.size(); ++i) {
          if (tokens[i].text == "->" || tokens[i].text == "<->") {
            if (arrow != 0) {
              throw ParseError(source, line_no, tokens[i].column, "second arrow");
            }
            arrow     = i;
            symmetric = tokens[i].text == "<->";
          }
        }
        if (arrow == 0) {
          throw ParseError(source, line_no, head.column, "rule without '->' or '<->'");
        }
        std::span<Token const> all(tokens);
        auto lhs_tokens = all.subspan(1, arrow - 1);
        auto rhs_tokens = all.subspan(arrow + 1);
        if (lhs_tokens.empty() || rhs_tokens.empty()) {
          throw ParseError(source, line_no, tokens[arrow].column,
                           "missing side (use '.' for the empty word)");
        }
        Relation rel{parse_side(p.alphabet, lhs_tokens, source, line_no),
                     parse_side(p.alphabet, rhs_tokens, source, line_no),
                     symmetric};
        if (rel.lhs.empty() && rel.rhs.empty()) {
          throw ParseError(source, line_no, head.column, "trivial rule 1 -> 1");
        }
        if (symmetric && rel.lhs.size() != rel.rhs.size()) {
          throw ParseError(source, line_no, tokens[arrow].column,
                           "'<->' needs sides of equal length");
        }
        p.relations.push_back(std::move(rel));
      } else {
        throw ParseError(source, line_no, head.column,
                         "unknown directive '" + std::string(head.text) + "'");
      }
    }
    if (!inverse_lines.empty()) {
      std::vector<Symbol> image(p.alphabet.size());
      std::vector<bool>   set(p.alphabet.size(), false);
      for (std::size_t i = 0; i < inverse_lines.size(); ++i) {
        auto [x, y] = inverse_lines[i];
        if ((set[x.id] && image[x.id] != y) || (set[y.id] && image[y.id] != x)) {
          throw ParseError(source, inverse_line_numbers[i],
                           inverse_columns[i], "conflicting inverse");
        }
        image[x.id] = y;
        image[y.id] = x;
        set[x.id] = set[y.id] = true;
      }
      for (std::size_t i = 0; i < set.size(); ++i) {
        if (!set[i]) {
          throw ParseError(source, line_no, 1,
                           "symbol '" + p.alphabet.names()[i] + "' has no inverse");
        }
      }
      p.inverse = InversePairing(std::move(image));
    }
    return p;
  }

  RewriteSystem parse_system(std::string_view text, std::string const& source) {
    return thue_resolution(parse_presentation(text, source));
  }

  Presentation load_presentation(std::string const& path) {
    return parse_presentation(read_text_file(path), path);
  }

  RewriteSystem load_system(std::string const& path) {
    return parse_system(read_text_file(path), path);
  }

  std::string serialize(Presentation const& p) {
    std::string out = "alphabet";
    for (auto const& n : p.alphabet.names()) {
      out += ' ';
      out += n;
    }
    out += '\n';
    if (p.inverse) {
      for (std::size_t i = 0; i < p.alphabet.size(); ++i) {
        Symbol x = p.alphabet.symbol(i);
        Symbol y = (*p.inverse)(x);
        if (x <= y) {
          out += "inverse " + p.alphabet.name(x) + " " + p.alphabet.name(y) + "\n";
        }
      }
    }
    for (auto const& r : p.relations) {
      out += "rule " + p.alphabet.format(r.lhs) + (r.symmetric ? " <-> " : " -> ")
             + p.alphabet.format(r.rhs) + "\n";
    }
    return out;
  }

  std::string serialize(RewriteSystem const& sys) {
    return serialize(to_presentation(sys));
  }

}  // namespace georw
