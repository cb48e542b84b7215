#include "singquandle/error.hpp"

#include <sstream>

namespace sq {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::malformed_table: return "MalformedTable";
    case ErrorKind::malformed_formula: return "MalformedFormula";
    case ErrorKind::not_a_quandle: return "NotAQuandle";
    case ErrorKind::not_a_singquandle: return "NotASingquandle";
    case ErrorKind::not_right_invertible: return "NotRightInvertible";
    case ErrorKind::not_invertible: return "NotInvertible";
    case ErrorKind::modulus_mismatch: return "ModulusMismatch";
    case ErrorKind::index_out_of_range: return "IndexOutOfRange";
    case ErrorKind::empty_seed: return "EmptySeed";
    case ErrorKind::not_a_bijection: return "NotABijection";
    case ErrorKind::not_a_subsingquandle: return "NotASubsingquandle";
    case ErrorKind::syntax_error: return "SyntaxError";
    case ErrorKind::unknown_operator: return "UnknownOperator";
    case ErrorKind::unbound_generator: return "UnboundGenerator";
    case ErrorKind::unknown_generator: return "UnknownGenerator";
    case ErrorKind::duplicate_generator: return "DuplicateGenerator";
    case ErrorKind::dangling_arc: return "DanglingArc";
    case ErrorKind::duplicate_port: return "DuplicatePort";
    case ErrorKind::unknown_id: return "UnknownId";
    case ErrorKind::io_error: return "IoError";
  }
  return "Error";
}

ErrorCategory category(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::malformed_table:
    case ErrorKind::malformed_formula:
    case ErrorKind::syntax_error:
    case ErrorKind::unknown_operator:
    case ErrorKind::unknown_generator:
    case ErrorKind::duplicate_generator:
    case ErrorKind::dangling_arc:
    case ErrorKind::duplicate_port:
    case ErrorKind::modulus_mismatch:
      return ErrorCategory::parse;
    case ErrorKind::not_a_quandle:
    case ErrorKind::not_a_singquandle:
    case ErrorKind::not_right_invertible:
    case ErrorKind::not_invertible:
    case ErrorKind::not_a_subsingquandle:
    case ErrorKind::not_a_bijection:
    case ErrorKind::unbound_generator:
      return ErrorCategory::validation;
    case ErrorKind::index_out_of_range:
    case ErrorKind::empty_seed:
    case ErrorKind::unknown_id:
    case ErrorKind::io_error:
      return ErrorCategory::usage;
  }
  return ErrorCategory::usage;
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

namespace {

std::string syntax_message(const std::string& detail, std::size_t position,
                           const std::vector<std::string>& expected, std::size_t line) {
  std::ostringstream os;
  if (line != 0) os << "line " << line << ", ";
  os << "position " << position << ": " << detail;
  if (!expected.empty()) {
    os << " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i != 0) os << (i + 1 == expected.size() ? " or " : ", ");
      os << expected[i];
    }
    os << ")";
  }
  return os.str();
}

}  // namespace

SyntaxError::SyntaxError(ErrorKind kind, std::string detail, std::size_t position,
                         std::vector<std::string> expected, std::size_t line)
    : Error(kind, syntax_message(detail, position, expected, line)),
      position_(position),
      line_(line),
      expected_(std::move(expected)) {}

}  // namespace sq
