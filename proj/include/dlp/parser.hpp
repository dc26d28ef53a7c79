#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "dlp/atom.hpp"

namespace dlp {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string msg, int line, int col)
      : std::runtime_error(std::move(msg) + " (line " + std::to_string(line) + ", column " +
                           std::to_string(col) + ")"),
        line(line),
        col(col) {}
  int line;
  int col;
};

// Parses the .lp text format:
//   rule        head :- lit, lit, ... .
//   constraint  :- lit, ... .
//   fact        atom.
//   negation    not atom
//   comments    % to end of line
//   atoms       name or name(c1,...,ck); constants are lower-case identifiers
//               or integers. Upper-case identifiers are variables and are
//               rejected: only ground programs are accepted.
GroundProgram parse_program(std::string_view text);

}  // namespace dlp
