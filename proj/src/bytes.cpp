#include "medsentry/bytes.hpp"

#include <stdexcept>

namespace medsentry {

static const char* kHexDigits = "0123456789abcdef";

std::string to_hex(std::span<const uint8_t> data) {
    std::string out;
    out.reserve(data.size() * 2);
    for (uint8_t b : data) {
        out.push_back(kHexDigits[b >> 4]);
        out.push_back(kHexDigits[b & 0x0f]);
    }
    return out;
}

static int hex_nibble(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

Bytes from_hex(std::string_view hex) {
    if (hex.size() % 2 != 0) {
        throw std::invalid_argument("from_hex: odd-length input");
    }
    Bytes out(hex.size() / 2);
    for (size_t i = 0; i < out.size(); ++i) {
        int hi = hex_nibble(hex[2 * i]);
        int lo = hex_nibble(hex[2 * i + 1]);
        if (hi < 0 || lo < 0) {
            throw std::invalid_argument("from_hex: non-hex character");
        }
        out[i] = static_cast<uint8_t>((hi << 4) | lo);
    }
    return out;
}

Bytes xor_bytes(std::span<const uint8_t> a, std::span<const uint8_t> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("xor_bytes: length mismatch");
    }
    Bytes out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] ^ b[i];
    return out;
}

void xor_inplace(std::span<uint8_t> dst, std::span<const uint8_t> mask) {
    if (mask.empty()) {
        if (dst.empty()) return;
        throw std::invalid_argument("xor_inplace: empty mask");
    }
    for (size_t i = 0; i < dst.size(); ++i) dst[i] ^= mask[i % mask.size()];
}

Bytes expand_bytes(std::span<const uint8_t> value, size_t target_len) {
    if (value.size() > target_len) {
        throw std::invalid_argument("expand_bytes: value wider than target");
    }
    if (target_len == 0) return {};
    if (value.empty()) {
        throw std::invalid_argument("expand_bytes: empty value");
    }
    Bytes out(target_len);
    for (size_t i = 0; i < target_len; ++i) out[i] = value[i % value.size()];
    return out;
}

}  // namespace medsentry
