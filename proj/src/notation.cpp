#include "gauge5/notation.hpp"

namespace gauge5 {

namespace {

std::string convert(long long value, const char* const digits[10], const char* minus) {
    std::string plain = std::to_string(value);
    std::string out;
    for (char ch : plain) out += ch == '-' ? minus : digits[ch - '0'];
    return out;
}

}  // namespace

std::string superscript(long long value) {
    static const char* const digits[10] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    return convert(value, digits, "⁻");
}

std::string subscript(long long value) {
    static const char* const digits[10] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
    return convert(value, digits, "₋");
}

}  // namespace gauge5
