#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace regov {

using Bytes = std::vector<std::uint8_t>;

inline Bytes to_bytes(std::string_view s) {
    return Bytes(s.begin(), s.end());
}

inline std::string to_string(const Bytes& b) {
    return std::string(b.begin(), b.end());
}

std::string hex_encode(const Bytes& data);
std::string hex_encode(const std::uint8_t* data, std::size_t len);

// Throws Error(Err::parse) on odd length or non-hex characters.
Bytes hex_decode(std::string_view hex);

} // namespace regov
