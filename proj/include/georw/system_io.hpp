#pragma once

// Line-oriented system files:
//
//   # comment
//   alphabet a A b B
//   inverse a A
//   rule a A -> .
//   rule a b <-> b a
//
// `->` between equal-length sides is symmetrised on load; length-increasing
// `->` rules are reversed by Thue resolution.

#include <string>
#include <string_view>
#include <vector>

#include "georw/rules.hpp"

namespace georw {

  // A whitespace token with its 1-based column.
  struct Token {
    std::string_view text;
    std::size_t      column = 0;
  };

  std::vector<Token> tokenize_line(std::string_view line);

  std::string read_text_file(std::string const& path);

  Presentation parse_presentation(std::string_view text,
                                  std::string const& source = "<input>");
  RewriteSystem parse_system(std::string_view text,
                             std::string const& source = "<input>");

  Presentation  load_presentation(std::string const& path);
  RewriteSystem load_system(std::string const& path);

  std::string serialize(Presentation const& p);
  std::string serialize(RewriteSystem const& sys);

}  // namespace georw
