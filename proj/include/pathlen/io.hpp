#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pathlen/bintree.hpp"
#include "pathlen/islands.hpp"
#include "pathlen/sequence.hpp"
#include "pathlen/validate.hpp"

namespace pathlen::io {

// Largest value the document formats accept; keeps exponent arithmetic and
// printed denominators within reason while covering any realistic code.
inline constexpr std::uint32_t MAX_DOCUMENT_VALUE = 1u << 20;

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& message)
      : std::runtime_error(message), line_(0), col_(0) {}

  ParseError(std::size_t line, std::size_t col, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", col " +
                           std::to_string(col) + ": " + message),
        line_(line),
        col_(col) {}

  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }

 private:
  std::size_t line_;
  std::size_t col_;
};

// Text form: whitespace- or comma-separated non-negative integers with
// optional '#' comments to end of line. JSON form (detected by a leading
// '{'): {"lengths": [...]}. Throws ParseError.
LengthSeq parse_sequence(std::string_view text);

std::string format_sequence(const LengthSeq& seq);  // "1 2 2"

// Tree documents: {"leaf": k} or {"left": ..., "right": ...}. Leaf indices
// are checked to be exactly 1..n left-to-right on ingest and regenerated
// on output.
BinTree parse_tree_json(std::string_view text);
std::string tree_to_json(const BinTree& tree);  // compact single line

// DOT digraph of the code tree: node ids are codeword bitstrings (root ε),
// edges carry their 0/1 label, leaves are boxes labelled with the leaf
// index and its codeword.
std::string tree_to_dot(const BinTree& tree);

// Island renderings used by the CLI. Text: one node per line, children
// indented two spaces, e.g. "[1,5] min=2 m=0 K=1 scaled=1". Both render
// the island tree; callers handle the tree-less case.
std::string island_tree_to_text(const IslandTree& tree);
std::string island_tree_to_dot(const IslandTree& tree);

// Validation report: every island in (lo, hi) lexicographic order as
// "island [i,j]: m=.. K=.. scaled=..", then "valid" or
// "invalid: <witness>".
std::string validation_report(const LengthSeq& seq, const Verdict& verdict);

}  // namespace pathlen::io
