#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "treechild/network.hpp"
#include "treechild/sequence.hpp"

namespace treechild {

// Syntax error with a 1-based line/column and the byte offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::size_t line, std::size_t column, std::string message);
  std::size_t offset() const { return offset_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t offset_, line_, column_;
  std::string message_;
};

struct TextPosition {
  std::size_t offset = 0;
  std::size_t line = 1;
  std::size_t column = 1;
};

// Well-formed text describing an invalid network (duplicate labels, a
// hybrid tag used other than twice, or a failed validation). Carries the
// position of the offending token when one can be singled out.
class SemanticError : public std::runtime_error {
 public:
  explicit SemanticError(std::string message, ValidationReport report = {},
                         std::optional<TextPosition> position = std::nullopt);
  const ValidationReport& report() const { return report_; }
  const std::optional<TextPosition>& position() const { return position_; }
  const std::string& message() const { return message_; }

 private:
  ValidationReport report_;
  std::optional<TextPosition> position_;
  std::string message_;
};

// Extended Newick. Reticulations carry a "#<tag>" hybrid marker that
// appears exactly twice, e.g. "((a,(b)#H1),(#H1,c));".
RootedNetwork parse_rooted(std::string_view text);
// One network per non-blank line.
std::vector<RootedNetwork> parse_rooted_document(std::string_view text);
// Deterministic: isomorphic networks serialize to identical text.
std::string serialize_rooted(const RootedNetwork& network);

// Edge list: a header line "unrooted" followed by one edge per line. A line
// with a single token declares the isolated vertex of a one-leaf network.
UnrootedNetwork parse_unrooted(std::string_view text);
std::string serialize_unrooted(const UnrootedNetwork& network);

// One item per line: "C x y" for [x,y], "R x y" for (x,y).
CherryPickingSequence parse_sequence(std::string_view text);
std::string serialize_sequence(const CherryPickingSequence& seq);

}  // namespace treechild
