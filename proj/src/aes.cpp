#include "medsentry/aes.hpp"

#include <stdexcept>

#include "gf256.hpp"

namespace medsentry {

namespace {

using detail::gf_mul;
using detail::gf_xtime;

// State layout follows FIPS-197: s[r][c] = input[r + 4c], a 4x4 byte matrix
// filled column by column.
struct State {
    uint8_t s[4][4];

    static State from_block(const AesBlock& b) {
        State st;
        for (int c = 0; c < 4; ++c)
            for (int r = 0; r < 4; ++r) st.s[r][c] = b[size_t(4 * c + r)];
        return st;
    }

    AesBlock to_block() const {
        AesBlock b{};
        for (int c = 0; c < 4; ++c)
            for (int r = 0; r < 4; ++r) b[size_t(4 * c + r)] = s[r][c];
        return b;
    }
};

void add_round_key(State& st, const AesBlock& rk) {
    for (int c = 0; c < 4; ++c)
        for (int r = 0; r < 4; ++r) st.s[r][c] ^= rk[size_t(4 * c + r)];
}

void sub_bytes(State& st) {
    for (auto& row : st.s)
        for (auto& b : row) b = detail::sbox(b);
}

void inv_sub_bytes(State& st) {
    for (auto& row : st.s)
        for (auto& b : row) b = detail::inv_sbox(b);
}

void shift_rows(State& st) {
    for (int r = 1; r < 4; ++r) {
        uint8_t tmp[4];
        for (int c = 0; c < 4; ++c) tmp[c] = st.s[r][(c + r) % 4];
        for (int c = 0; c < 4; ++c) st.s[r][c] = tmp[c];
    }
}

void inv_shift_rows(State& st) {
    for (int r = 1; r < 4; ++r) {
        uint8_t tmp[4];
        for (int c = 0; c < 4; ++c) tmp[(c + r) % 4] = st.s[r][c];
        for (int c = 0; c < 4; ++c) st.s[r][c] = tmp[c];
    }
}

void mix_columns(State& st) {
    for (int c = 0; c < 4; ++c) {
        uint8_t a0 = st.s[0][c], a1 = st.s[1][c], a2 = st.s[2][c], a3 = st.s[3][c];
        st.s[0][c] = uint8_t(gf_xtime(a0) ^ (gf_xtime(a1) ^ a1) ^ a2 ^ a3);
        st.s[1][c] = uint8_t(a0 ^ gf_xtime(a1) ^ (gf_xtime(a2) ^ a2) ^ a3);
        st.s[2][c] = uint8_t(a0 ^ a1 ^ gf_xtime(a2) ^ (gf_xtime(a3) ^ a3));
        st.s[3][c] = uint8_t((gf_xtime(a0) ^ a0) ^ a1 ^ a2 ^ gf_xtime(a3));
    }
}

void inv_mix_columns(State& st) {
    for (int c = 0; c < 4; ++c) {
        uint8_t a0 = st.s[0][c], a1 = st.s[1][c], a2 = st.s[2][c], a3 = st.s[3][c];
        st.s[0][c] = uint8_t(gf_mul(a0, 14) ^ gf_mul(a1, 11) ^ gf_mul(a2, 13) ^ gf_mul(a3, 9));
        st.s[1][c] = uint8_t(gf_mul(a0, 9) ^ gf_mul(a1, 14) ^ gf_mul(a2, 11) ^ gf_mul(a3, 13));
        st.s[2][c] = uint8_t(gf_mul(a0, 13) ^ gf_mul(a1, 9) ^ gf_mul(a2, 14) ^ gf_mul(a3, 11));
        st.s[3][c] = uint8_t(gf_mul(a0, 11) ^ gf_mul(a1, 13) ^ gf_mul(a2, 9) ^ gf_mul(a3, 14));
    }
}

void increment_be(AesBlock& ctr) {
    for (int i = 15; i >= 0; --i) {
        if (++ctr[size_t(i)] != 0) break;
    }
}

}  // namespace

AesSchedule expand_key(const AesKey192& key, RoundConfig cfg) {
    if (cfg.rounds != 10 && cfg.rounds != 12) {
        throw std::invalid_argument("expand_key: rounds must be 10 or 12");
    }
    // Standard AES-192 expansion: Nk = 6, 52 words for the full 12-round
    // schedule; the 10-round profile truncates it.
    constexpr int kNk = 6;
    constexpr int kFullWords = 4 * (12 + 1);
    uint32_t w[kFullWords];
    for (int i = 0; i < kNk; ++i) w[i] = load_be32(key.bytes.data() + 4 * i);
    uint8_t rcon = 0x01;
    for (int i = kNk; i < kFullWords; ++i) {
        uint32_t t = w[i - 1];
        if (i % kNk == 0) {
            t = (t << 8) | (t >> 24);  // RotWord
            uint8_t b0 = detail::sbox(uint8_t(t >> 24));
            uint8_t b1 = detail::sbox(uint8_t(t >> 16));
            uint8_t b2 = detail::sbox(uint8_t(t >> 8));
            uint8_t b3 = detail::sbox(uint8_t(t));
            t = (uint32_t(b0) << 24) | (uint32_t(b1) << 16) | (uint32_t(b2) << 8) | b3;
            t ^= uint32_t(rcon) << 24;
            rcon = gf_xtime(rcon);
        }
        w[i] = w[i - kNk] ^ t;
    }
    AesSchedule sched;
    sched.rounds = cfg.rounds;
    sched.round_keys.resize(size_t(cfg.rounds) + 1);
    for (int rk = 0; rk <= cfg.rounds; ++rk) {
        for (int j = 0; j < 4; ++j) {
            store_be32(w[4 * rk + j], sched.round_keys[size_t(rk)].data() + 4 * j);
        }
    }
    return sched;
}

AesBlock encrypt_block(const AesBlock& block, const AesSchedule& schedule) {
    State st = State::from_block(block);
    add_round_key(st, schedule.round_keys[0]);
    for (int r = 1; r < schedule.rounds; ++r) {
        sub_bytes(st);
        shift_rows(st);
        mix_columns(st);
        add_round_key(st, schedule.round_keys[size_t(r)]);
    }
    sub_bytes(st);
    shift_rows(st);
    add_round_key(st, schedule.round_keys[size_t(schedule.rounds)]);
    return st.to_block();
}

AesBlock decrypt_block(const AesBlock& block, const AesSchedule& schedule) {
    State st = State::from_block(block);
    add_round_key(st, schedule.round_keys[size_t(schedule.rounds)]);
    inv_shift_rows(st);
    inv_sub_bytes(st);
    for (int r = schedule.rounds - 1; r >= 1; --r) {
        add_round_key(st, schedule.round_keys[size_t(r)]);
        inv_mix_columns(st);
        inv_shift_rows(st);
        inv_sub_bytes(st);
    }
    add_round_key(st, schedule.round_keys[0]);
    return st.to_block();
}

Bytes encrypt_payload(std::span<const uint8_t> data, const AesKey192& key, RoundConfig cfg,
                      const AesIv& iv) {
    AesSchedule sched = expand_key(key, cfg);
    Bytes out(data.size());
    AesBlock ctr = iv;
    size_t off = 0;
    while (off < data.size()) {
        AesBlock ks = encrypt_block(ctr, sched);
        size_t n = std::min<size_t>(16, data.size() - off);
        for (size_t i = 0; i < n; ++i) out[off + i] = data[off + i] ^ ks[i];
        increment_be(ctr);
        off += n;
    }
    return out;
}

Bytes decrypt_payload(std::span<const uint8_t> data, const AesKey192& key, RoundConfig cfg,
                      const AesIv& iv) {
    return encrypt_payload(data, key, cfg, iv);
}

namespace detail {

AesBlock mix_columns_block(const AesBlock& block) {
    State st = State::from_block(block);
    mix_columns(st);
    return st.to_block();
}

}  // namespace detail

}  // namespace medsentry
