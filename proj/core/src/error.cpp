#include "ontoquery/error.hpp"

namespace ontoquery {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownPrefix: return "UnknownPrefix";
    case ErrorCode::MalformedIri: return "MalformedIri";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::KindConflict: return "KindConflict";
    case ErrorCode::DanglingReference: return "DanglingReference";
    case ErrorCode::InvalidAxiom: return "InvalidAxiom";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::EmptyQuery: return "EmptyQuery";
    case ErrorCode::NoKeywordResolved: return "NoKeywordResolved";
    case ErrorCode::IncompatibleFacet: return "IncompatibleFacet";
    case ErrorCode::UnknownRelType: return "UnknownRelType";
    case ErrorCode::UntranslatablePattern: return "UntranslatablePattern";
    case ErrorCode::DuplicateOntologyId: return "DuplicateOntologyId";
    case ErrorCode::UnknownOntology: return "UnknownOntology";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {

std::string format_message(ErrorCode code, const std::string& detail, int line,
                           int column) {
  std::string msg(to_string(code));
  if (!detail.empty()) {
    msg += ": ";
    msg += detail;
  }
  if (line > 0) {
    msg += " (line " + std::to_string(line) + ", column " +
           std::to_string(column) + ")";
  }
  return msg;
}

}  // namespace

Error::Error(ErrorCode code, std::string detail, int line, int column)
    : std::runtime_error(format_message(code, detail, line, column)),
      code_(code),
      detail_(std::move(detail)),
      line_(line),
      column_(column) {}

}  // namespace ontoquery
