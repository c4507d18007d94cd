#pragma once

#include "smtl/errors.hpp"
#include "smtl/formula.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace smtl {

struct SourceSpan {
  std::size_t start_offset = 0; ///< byte offset, inclusive
  std::size_t end_offset = 0;   ///< byte offset, exclusive
  int line = 1;
  int column = 1;
};

class ParseError : public Error {
public:
  ParseError(SourceSpan span, std::vector<std::string> expected, std::string found);

  const SourceSpan& span() const noexcept { return span_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

private:
  SourceSpan span_;
  std::vector<std::string> expected_;
  std::string found_;
};

/// Parses concrete formula syntax.
///
///   formula  := implies
///   implies  := or ("->" implies)?
///   or       := and ("|" and)*
///   and      := until ("&" until)*
///   until    := unary (("U" | "R") interval unary)*
///   unary    := "!" unary | "F" interval unary | "G" interval unary
///             | "L" nat unary | primary
///   primary  := "true" | "false" | ident | "(" formula ")"
///   interval := ("[" | "(") bound "," bound ("]" | ")")
///   bound    := nat ("." digits)? | nat "/" nat | "inf"
///
/// "#" starts a comment running to the end of the line. Throws ParseError
/// at the earliest failing position.
Formula parse(std::string_view text);

/// Canonical text with minimal parentheses; parse(pretty_print(f)) == f.
std::string pretty_print(const Formula& f);

} // namespace smtl
