#pragma once

// ECDSA over a 256-bit prime curve with a pluggable digest (SHA-1 or
// Lesamnta-LW-256). Curve parameters are a value type so tests can swap in a
// toy curve. Signing is deterministic: the per-signature nonce is derived
// from the private key and the message digest and rejection-sampled mod q.

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "medsentry/bytes.hpp"

namespace medsentry {

using U512 = boost::multiprecision::uint512_t;

enum class DigestKind { Sha1, Llw256 };

// Counts message-digest invocations (the T_h cost unit); threaded through
// sign/verify by the protocol layer.
struct HashCounter {
    uint64_t value = 0;
};

struct CurveParams {
    U512 p;  // field prime
    U512 a, b;
    U512 gx, gy;  // base point
    U512 q;       // base point order (prime)
    unsigned cofactor = 1;
};

struct Point {
    U512 x{};
    U512 y{};
    bool infinity = true;
};

struct KeyPair {
    U512 priv;
    Point pub;
};

struct SignatureRS {
    U512 r;
    U512 s;

    std::array<uint8_t, 64> to_bytes() const;  // r || s, 32-byte big-endian each
    static SignatureRS from_bytes(std::span<const uint8_t> bytes);

    bool operator==(const SignatureRS&) const = default;
};

struct MalformedKeyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const CurveParams& p256();

bool on_curve(const CurveParams& c, const Point& pt);
Point point_add(const CurveParams& c, const Point& p1, const Point& p2);
Point scalar_mul(const CurveParams& c, const U512& k, const Point& p);

// 32-byte big-endian scalar / 65-byte uncompressed point codecs (keystore
// wire form).
std::array<uint8_t, 32> scalar_to_bytes(const U512& v);
U512 scalar_from_bytes(std::span<const uint8_t> bytes);
Bytes point_to_bytes(const Point& pt);
Point point_from_bytes(const CurveParams& c, std::span<const uint8_t> bytes);

// Deterministic keypair derivation from a 32-byte seed (all-zero seed is
// rejected). A zero scalar re-derives with a counter.
KeyPair keygen(const CurveParams& c, std::span<const uint8_t> seed);

SignatureRS sign(const CurveParams& c, const U512& priv, std::span<const uint8_t> message,
                 DigestKind digest, HashCounter* counter = nullptr);

// Returns false for invalid signatures; throws MalformedKeyError if pub is
// not on the curve (distinct from a plain verification failure).
bool verify(const CurveParams& c, const Point& pub, std::span<const uint8_t> message,
            const SignatureRS& sig, DigestKind digest, HashCounter* counter = nullptr);

Bytes digest_message(DigestKind kind, std::span<const uint8_t> message,
                     HashCounter* counter = nullptr);

}  // namespace medsentry
