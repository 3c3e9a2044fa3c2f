#include "beit/error.hpp"

namespace beit {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParameter: return "invalid-parameter";
    case ErrorKind::InvalidGraph: return "invalid-graph";
    case ErrorKind::ParseError: return "parse-error";
    case ErrorKind::TooLarge: return "too-large";
    case ErrorKind::IncompleteTable: return "incomplete-table";
    case ErrorKind::CompleteInput: return "complete-input";
    case ErrorKind::BadOrientation: return "bad-orientation";
    case ErrorKind::InvalidDimension: return "invalid-dim";
    case ErrorKind::UnsupportedSize: return "unsupported-n";
    case ErrorKind::UnknownFormat: return "unknown-format";
  }
  return "error";
}

}  // namespace beit
