#pragma once

// Lesamnta-LW-256: a lightweight Merkle-Damgard hash over a 64-round
// AES-based block cipher with a 128-bit key and a 256-bit block.
//
// Cipher definition used here (LW1 mode):
//   - chaining value H (256 bits); compression key = H[0..15],
//     plaintext = H[16..31] || message block (128 bits); next chain is the
//     raw cipher output (no feed-forward).
//   - mixing function: 4-branch type-1 generalized Feistel over 64-bit
//     words, 64 rounds. Branch transform G xors the 32-bit round key into
//     the high half, then applies Q twice with half-chaining and a half
//     swap, where Q = MixColumns . SubBytes on one AES column.
//   - key schedule: 4-branch type-1 GFN over 32-bit words; round r emits the
//     current head word as the round key and injects Q(head ^ C_r), with
//     round constants C_r = (r+1) * 0x9e3779b9 (Weyl sequence).
//   - initial chaining value: the eight sqrt-based 32-bit constants
//     6a09e667 bb67ae85 3c6ef372 a54ff53a 510e527f 9b05688c 1f83d9ab 5be0cd19.
//   - padding: the data is split into 128-bit blocks (last one zero-filled);
//     one dedicated final block carries only the 64-bit big-endian bit count
//     followed by zeros. No message byte ever enters the final block.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace medsentry {

inline constexpr size_t kLlwDigestBytes = 32;
inline constexpr size_t kLlwBlockBytes = 16;
inline constexpr int kLlwRounds = 64;

using Digest256 = std::array<uint8_t, kLlwDigestBytes>;
using LlwBlock = std::array<uint8_t, kLlwBlockBytes>;

struct LlwState {
    Digest256 chain{};
    LlwBlock message_block{};
    int round_count = kLlwRounds;
};

Digest256 llw_initial_chain();

// Splits data into 128-bit blocks plus the dedicated length block.
// Throws std::length_error if the input exceeds 2^64 - 1 bits.
std::vector<LlwBlock> llw_pad(std::span<const uint8_t> data);

Digest256 llw_compress(const Digest256& chain, const LlwBlock& block);

Digest256 llw_hash(std::span<const uint8_t> data);

}  // namespace medsentry
