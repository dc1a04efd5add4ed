#include "edom/bigint.hpp"

#include <cctype>

namespace edom {

BigInt parse_decimal(std::string_view text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos == text.size())
        throw parse_error("integer literal has no digits: '" + std::string(text) + "'");
    BigInt value = 0;
    for (; pos < text.size(); ++pos) {
        unsigned char c = static_cast<unsigned char>(text[pos]);
        if (!std::isdigit(c))
            throw parse_error("unexpected character in integer literal: '" + std::string(text) + "'");
        value = value * 10 + (c - '0');
    }
    return negative ? BigInt(-value) : value;
}

std::string format_decimal(const BigInt& x) { return x.get_str(10); }

}  // namespace edom
