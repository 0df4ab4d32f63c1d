#pragma once

#include <string>

namespace gauge5 {

/// Unicode superscript / subscript digits (with a leading minus sign if needed).
std::string superscript(long long value);
std::string subscript(long long value);

}  // namespace gauge5
