#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ontoquery {

enum class ErrorCode {
  UnknownPrefix,
  MalformedIri,
  SyntaxError,
  KindConflict,
  DanglingReference,
  InvalidAxiom,
  DuplicateName,
  EmptyQuery,
  NoKeywordResolved,
  IncompatibleFacet,
  UnknownRelType,
  UntranslatablePattern,
  DuplicateOntologyId,
  UnknownOntology,
  InvalidArgument,
  IoError,
};

std::string_view to_string(ErrorCode code);

// Every failure surfaced by the library. `detail` carries the offending
// token (an IRI, a prefix label, a name); line/column are 1-based and only
// set for source-position errors.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string detail, int line = 0, int column = 0);

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  ErrorCode code_;
  std::string detail_;
  int line_;
  int column_;
};

}  // namespace ontoquery
