#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace medsentry {

using Bytes = std::vector<uint8_t>;

std::string to_hex(std::span<const uint8_t> data);
Bytes from_hex(std::string_view hex);  // throws std::invalid_argument

inline void store_be32(uint32_t v, uint8_t* out) {
    out[0] = static_cast<uint8_t>(v >> 24);
    out[1] = static_cast<uint8_t>(v >> 16);
    out[2] = static_cast<uint8_t>(v >> 8);
    out[3] = static_cast<uint8_t>(v);
}

inline uint32_t load_be32(const uint8_t* in) {
    return (uint32_t(in[0]) << 24) | (uint32_t(in[1]) << 16) | (uint32_t(in[2]) << 8) |
           uint32_t(in[3]);
}

inline void store_be64(uint64_t v, uint8_t* out) {
    store_be32(static_cast<uint32_t>(v >> 32), out);
    store_be32(static_cast<uint32_t>(v), out + 4);
}

inline uint64_t load_be64(const uint8_t* in) {
    return (uint64_t(load_be32(in)) << 32) | load_be32(in + 4);
}

// XOR of equal-length buffers.
Bytes xor_bytes(std::span<const uint8_t> a, std::span<const uint8_t> b);
void xor_inplace(std::span<uint8_t> dst, std::span<const uint8_t> mask);

// Cyclic repetition of `value` to `target_len` bytes. The protocol XORs
// operands of different fixed widths; every narrower operand enters via this
// expansion. Throws std::invalid_argument if value is wider than the target
// or empty with a nonzero target.
Bytes expand_bytes(std::span<const uint8_t> value, size_t target_len);

// Deterministic RNG used everywhere randomness is needed; mt19937_64 keeps
// runs reproducible across platforms for a fixed seed.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next_u64() { return gen_(); }

    void fill(std::span<uint8_t> out) {
        size_t i = 0;
        while (i < out.size()) {
            uint64_t w = gen_();
            for (int b = 0; b < 8 && i < out.size(); ++b, ++i) {
                out[i] = static_cast<uint8_t>(w >> (8 * b));
            }
        }
    }

    Bytes bytes(size_t n) {
        Bytes out(n);
        fill(out);
        return out;
    }

    template <size_t N>
    std::array<uint8_t, N> array() {
        std::array<uint8_t, N> out{};
        fill(out);
        return out;
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace medsentry
