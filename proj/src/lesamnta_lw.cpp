#include "medsentry/lesamnta_lw.hpp"

#include <stdexcept>

#include "gf256.hpp"
#include "medsentry/bytes.hpp"

namespace medsentry {

namespace {

// One AES column: SubBytes on the four bytes of w, then MixColumns.
uint32_t q_mix(uint32_t w) {
    using detail::gf_xtime;
    uint8_t s0 = detail::sbox(static_cast<uint8_t>(w >> 24));
    uint8_t s1 = detail::sbox(static_cast<uint8_t>(w >> 16));
    uint8_t s2 = detail::sbox(static_cast<uint8_t>(w >> 8));
    uint8_t s3 = detail::sbox(static_cast<uint8_t>(w));
    uint8_t m0 = static_cast<uint8_t>(gf_xtime(s0) ^ (gf_xtime(s1) ^ s1) ^ s2 ^ s3);
    uint8_t m1 = static_cast<uint8_t>(s0 ^ gf_xtime(s1) ^ (gf_xtime(s2) ^ s2) ^ s3);
    uint8_t m2 = static_cast<uint8_t>(s0 ^ s1 ^ gf_xtime(s2) ^ (gf_xtime(s3) ^ s3));
    uint8_t m3 = static_cast<uint8_t>((gf_xtime(s0) ^ s0) ^ s1 ^ s2 ^ gf_xtime(s3));
    return (uint32_t(m0) << 24) | (uint32_t(m1) << 16) | (uint32_t(m2) << 8) | uint32_t(m3);
}

inline uint32_t round_constant(int r) {
    return static_cast<uint32_t>(r + 1) * 0x9e3779b9u;
}

// E(key128, plaintext256) -> 256 bits, kLlwRounds rounds.
void llw_cipher(const uint8_t key[16], const uint8_t pt[32], uint8_t ct[32]) {
    uint32_t k0 = load_be32(key), k1 = load_be32(key + 4);
    uint32_t k2 = load_be32(key + 8), k3 = load_be32(key + 12);
    uint64_t x0 = load_be64(pt), x1 = load_be64(pt + 8);
    uint64_t x2 = load_be64(pt + 16), x3 = load_be64(pt + 24);

    for (int r = 0; r < kLlwRounds; ++r) {
        uint32_t rk = k0;
        uint32_t kt = q_mix(k0 ^ round_constant(r));
        uint32_t nk0 = k1 ^ kt;
        k1 = k2;
        k2 = k3;
        k3 = k0;
        k0 = nk0;

        uint32_t hi = static_cast<uint32_t>(x0 >> 32);
        uint32_t lo = static_cast<uint32_t>(x0);
        uint32_t u = q_mix(hi ^ rk);
        uint32_t v = q_mix(lo ^ u);
        uint64_t g = (uint64_t(v) << 32) | u;
        uint64_t nx0 = x1 ^ g;
        x1 = x2;
        x2 = x3;
        x3 = x0;
        x0 = nx0;
    }

    store_be64(x0, ct);
    store_be64(x1, ct + 8);
    store_be64(x2, ct + 16);
    store_be64(x3, ct + 24);
}

}  // namespace

Digest256 llw_initial_chain() {
    static const uint32_t iv_words[8] = {0x6a09e667u, 0xbb67ae85u, 0x3c6ef372u, 0xa54ff53au,
                                         0x510e527fu, 0x9b05688cu, 0x1f83d9abu, 0x5be0cd19u};
    Digest256 iv{};
    for (int i = 0; i < 8; ++i) store_be32(iv_words[i], iv.data() + 4 * i);
    return iv;
}

std::vector<LlwBlock> llw_pad(std::span<const uint8_t> data) {
    // Bound: bit length must fit in the 64-bit length field.
    if (data.size() >= (uint64_t(1) << 61)) {
        throw std::length_error("llw_pad: input exceeds 2^64 - 1 bits");
    }
    std::vector<LlwBlock> blocks;
    blocks.reserve(data.size() / kLlwBlockBytes + 2);
    size_t off = 0;
    while (off < data.size()) {
        LlwBlock b{};
        size_t n = std::min(kLlwBlockBytes, data.size() - off);
        std::copy(data.begin() + long(off), data.begin() + long(off + n), b.begin());
        blocks.push_back(b);
        off += n;
    }
    LlwBlock length_block{};
    store_be64(uint64_t(data.size()) * 8, length_block.data());
    blocks.push_back(length_block);
    return blocks;
}

Digest256 llw_compress(const Digest256& chain, const LlwBlock& block) {
    uint8_t pt[32];
    std::copy(chain.begin() + 16, chain.end(), pt);
    std::copy(block.begin(), block.end(), pt + 16);
    Digest256 out{};
    llw_cipher(chain.data(), pt, out.data());
    return out;
}

Digest256 llw_hash(std::span<const uint8_t> data) {
    Digest256 chain = llw_initial_chain();
    for (const LlwBlock& b : llw_pad(data)) {
        chain = llw_compress(chain, b);
    }
    return chain;
}

}  // namespace medsentry
