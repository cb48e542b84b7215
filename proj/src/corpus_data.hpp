#pragma once

#include <cstddef>

namespace sq::corpus::detail {

struct EmbeddedFile {
  const char* name;
  const char* text;
};

extern const EmbeddedFile embedded_files[];
extern const std::size_t embedded_file_count;

}  // namespace sq::corpus::detail
