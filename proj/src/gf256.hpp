#pragma once

// GF(2^8) arithmetic and the Rijndael S-box, shared by the AES cipher and the
// Lesamnta-LW mixing function. Tables are generated algebraically at first
// use rather than transcribed, and the standard-vector tests pin them down.

#include <array>
#include <cstdint>

namespace medsentry::detail {

inline uint8_t gf_xtime(uint8_t a) {
    return static_cast<uint8_t>((a << 1) ^ ((a & 0x80) ? 0x1b : 0x00));
}

inline uint8_t gf_mul(uint8_t a, uint8_t b) {
    uint8_t out = 0;
    while (b) {
        if (b & 1) out ^= a;
        a = gf_xtime(a);
        b >>= 1;
    }
    return out;
}

struct SboxTables {
    std::array<uint8_t, 256> fwd{};
    std::array<uint8_t, 256> inv{};
};

inline const SboxTables& sbox_tables() {
    static const SboxTables tables = [] {
        SboxTables t;
        // Multiplicative inverses via brute-force search (256x256 once).
        std::array<uint8_t, 256> mulinv{};
        for (int a = 1; a < 256; ++a) {
            for (int b = 1; b < 256; ++b) {
                if (gf_mul(uint8_t(a), uint8_t(b)) == 1) {
                    mulinv[size_t(a)] = uint8_t(b);
                    break;
                }
            }
        }
        auto rotl8 = [](uint8_t v, int n) {
            return static_cast<uint8_t>((v << n) | (v >> (8 - n)));
        };
        for (int i = 0; i < 256; ++i) {
            uint8_t x = mulinv[size_t(i)];
            uint8_t s = static_cast<uint8_t>(x ^ rotl8(x, 1) ^ rotl8(x, 2) ^ rotl8(x, 3) ^
                                             rotl8(x, 4) ^ 0x63);
            t.fwd[size_t(i)] = s;
            t.inv[s] = uint8_t(i);
        }
        return t;
    }();
    return tables;
}

inline uint8_t sbox(uint8_t b) { return sbox_tables().fwd[b]; }
inline uint8_t inv_sbox(uint8_t b) { return sbox_tables().inv[b]; }

}  // namespace medsentry::detail
