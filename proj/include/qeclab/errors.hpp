//
// qeclab - quadratic embedding constants of graphs
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <stdexcept>
#include <string>

namespace qeclab {

// Parameters outside an operation's documented domain.
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A distance-dependent operation was handed a disconnected graph.
class DisconnectedGraph : public std::runtime_error {
public:
  DisconnectedGraph(int from, int to);

  int from() const noexcept { return from_; }
  int to() const noexcept { return to_; }

private:
  int from_;
  int to_;
};

// Eigensolver failures: non-symmetric or non-finite input, no convergence.
class NumericError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class ParseErrorKind {
  kMalformedHeader,
  kMalformedEdge,
  kEdgeCountMismatch,
  kDuplicateEdge,
  kSelfLoop,
  kIndexOutOfRange,
};

const char *to_string(ParseErrorKind kind) noexcept;

class ParseError : public std::runtime_error {
public:
  ParseError(ParseErrorKind kind, int line, const std::string &detail);

  ParseErrorKind kind() const noexcept { return kind_; }
  // 1-based line number in the input text, 0 when not tied to a line.
  int line() const noexcept { return line_; }

private:
  ParseErrorKind kind_;
  int line_;
};

} // namespace qeclab
