#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace georw {

  // Base class for every error thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // A word mentions a symbol that is not in the alphabet, or an alphabet is
  // malformed (duplicate names, empty).
  class AlphabetError : public Error {
   public:
    using Error::Error;
  };

  // Input data violates a structural requirement (group tables, pregroup
  // tables, rule shapes, embeddings).
  class StructureError : public Error {
   public:
    using Error::Error;
  };

  // An operation was called outside its documented domain.
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  // A search hit its configured cap. The question is undecided, never
  // answered with a guess.
  class ResourceError : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::string file, std::size_t line, std::size_t column,
               std::string const& what)
        : Error(file + ":" + std::to_string(line) + ":"
                + std::to_string(column) + ": " + what),
          _file(std::move(file)),
          _line(line),
          _column(column) {}

    std::string const& file() const noexcept {
      return _file;
    }
    std::size_t line() const noexcept {
      return _line;
    }
    std::size_t column() const noexcept {
      return _column;
    }

   private:
    std::string _file;
    std::size_t _line;
    std::size_t _column;
  };

}  // namespace georw
