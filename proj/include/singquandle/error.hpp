#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sq {

enum class ErrorKind {
  malformed_table,
  malformed_formula,
  not_a_quandle,
  not_a_singquandle,
  not_right_invertible,
  not_invertible,
  modulus_mismatch,
  index_out_of_range,
  empty_seed,
  not_a_bijection,
  not_a_subsingquandle,
  syntax_error,
  unknown_operator,
  unbound_generator,
  unknown_generator,
  duplicate_generator,
  dangling_arc,
  duplicate_port,
  unknown_id,
  io_error,
};

// Coarse grouping used by the CLI to pick an exit status.
enum class ErrorCategory { usage, parse, validation };

std::string_view to_string(ErrorKind kind) noexcept;
ErrorCategory category(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by the text parsers. `position` is a byte offset into the input
/// (or into the offending line when `line` is nonzero).
class SyntaxError : public Error {
 public:
  SyntaxError(ErrorKind kind, std::string detail, std::size_t position,
              std::vector<std::string> expected = {}, std::size_t line = 0);

  std::size_t position() const noexcept { return position_; }
  std::size_t line() const noexcept { return line_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::size_t line_;
  std::vector<std::string> expected_;
};

}  // namespace sq
