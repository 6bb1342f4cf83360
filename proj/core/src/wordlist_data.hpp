#pragma once

#include <string_view>

namespace softcloud::detail {

/// Newline-separated, sorted, lowercase validation vocabulary.
extern const std::string_view embedded_word_list;

}  // namespace softcloud::detail
