#pragma once

// Rijndael block cipher with 192-bit keys and a configurable round count.
// rounds = 12 is standard AES-192 (bit-compatible with the FIPS vectors);
// rounds = 10 is the reduced-round profile the protocol defaults to, whose
// key schedule is the 12-round schedule truncated to 11 round keys.
// Payload encryption is counter mode with a full-width big-endian counter,
// so ciphertext length always equals payload length.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "medsentry/bytes.hpp"

namespace medsentry {

using AesBlock = std::array<uint8_t, 16>;
using AesIv = std::array<uint8_t, 16>;

struct AesKey192 {
    std::array<uint8_t, 24> bytes{};
};

struct RoundConfig {
    int rounds = 10;  // 10 or 12
};

struct AesSchedule {
    std::vector<AesBlock> round_keys;  // rounds + 1 entries
    int rounds = 0;
};

// Throws std::invalid_argument unless cfg.rounds is 10 or 12.
AesSchedule expand_key(const AesKey192& key, RoundConfig cfg);

AesBlock encrypt_block(const AesBlock& block, const AesSchedule& schedule);
AesBlock decrypt_block(const AesBlock& block, const AesSchedule& schedule);

// CTR keystream; encryption and decryption are the same operation.
Bytes encrypt_payload(std::span<const uint8_t> data, const AesKey192& key, RoundConfig cfg,
                      const AesIv& iv);
Bytes decrypt_payload(std::span<const uint8_t> data, const AesKey192& key, RoundConfig cfg,
                      const AesIv& iv);

namespace detail {
// Exposed for the known-answer tests of the column mix.
AesBlock mix_columns_block(const AesBlock& block);
}  // namespace detail

}  // namespace medsentry
