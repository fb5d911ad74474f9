#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "medsentry/ecdsa.hpp"
#include "support/ec_reference.hpp"
#include "support/fixtures.hpp"

using namespace medsentry;
using namespace medsentry::testsupport;

namespace {

Bytes random_message(std::mt19937_64& rng, size_t max_len = 64) {
    Bytes m(1 + rng() % max_len);
    for (auto& b : m) b = uint8_t(rng());
    return m;
}

std::array<uint8_t, 32> random_seed(std::mt19937_64& rng) {
    std::array<uint8_t, 32> s{};
    for (auto& b : s) b = uint8_t(rng());
    if (s == std::array<uint8_t, 32>{}) s[0] = 1;
    return s;
}

U512 u512_from_hex(const std::string& h) { return U512("0x" + h); }

}  // namespace

TEST_CASE("p256 scalar multiplication matches the OpenSSL-generated fixtures") {
    const CurveParams& c = p256();
    Point g{c.gx, c.gy, false};
    for (const auto& row : load_fixture("p256_mul_vectors.txt")) {
        REQUIRE(row.size() == 3);
        U512 priv = u512_from_hex(row[0]);
        Point got = scalar_mul(c, priv, g);
        CHECK(got.x == u512_from_hex(row[1]));
        CHECK(got.y == u512_from_hex(row[2]));
    }
}

TEST_CASE("windowed multiplication agrees with the double-and-add oracle") {
    const CurveParams& c = p256();
    Point g{c.gx, c.gy, false};
    std::mt19937_64 rng(211);
    for (int i = 0; i < 8; ++i) {
        U512 k = 0;
        for (int limb = 0; limb < 4; ++limb) k = (k << 64) | rng();
        k %= c.q;
        if (k == 0) k = 1;
        Point a = scalar_mul(c, k, g);
        Point b = ref_mul(c, k, g);
        CHECK(a.x == b.x);
        CHECK(a.y == b.y);
    }
}

TEST_CASE("keygen is deterministic and lands on the curve") {
    const CurveParams& c = p256();
    std::mt19937_64 rng(223);
    auto seed = random_seed(rng);
    KeyPair k1 = keygen(c, seed);
    KeyPair k2 = keygen(c, seed);
    CHECK(k1.priv == k2.priv);
    CHECK(k1.pub.x == k2.pub.x);
    CHECK(k1.pub.y == k2.pub.y);
    for (int i = 0; i < 100; ++i) {
        KeyPair kp = keygen(c, random_seed(rng));
        CHECK(on_curve(c, kp.pub));
    }
    CHECK_THROWS_AS((void)keygen(c, std::array<uint8_t, 32>{}), std::invalid_argument);
}

TEST_CASE("keygen public key matches the independent scalar-multiplication oracle") {
    const CurveParams& c = p256();
    std::mt19937_64 rng(227);
    Point g{c.gx, c.gy, false};
    for (int i = 0; i < 4; ++i) {
        KeyPair kp = keygen(c, random_seed(rng));
        Point want = ref_mul(c, kp.priv, g);
        CHECK(kp.pub.x == want.x);
        CHECK(kp.pub.y == want.y);
    }
}

TEST_CASE("sign/verify round trip for both digests") {
    const CurveParams& c = p256();
    std::mt19937_64 rng(229);
    for (DigestKind d : {DigestKind::Llw256, DigestKind::Sha1}) {
        for (int i = 0; i < 25; ++i) {
            KeyPair kp = keygen(c, random_seed(rng));
            Bytes m = random_message(rng);
            SignatureRS sig = sign(c, kp.priv, m, d);
            CHECK(sig.r != 0);
            CHECK(sig.s != 0);
            CHECK(verify(c, kp.pub, m, sig, d));
        }
    }
}

TEST_CASE("signing twice with the same inputs is byte-identical") {
    const CurveParams& c = p256();
    std::mt19937_64 rng(233);
    KeyPair kp = keygen(c, random_seed(rng));
    Bytes m = random_message(rng);
    SignatureRS s1 = sign(c, kp.priv, m, DigestKind::Llw256);
    SignatureRS s2 = sign(c, kp.priv, m, DigestKind::Llw256);
    CHECK(s1.to_bytes() == s2.to_bytes());
}

TEST_CASE("toy-curve signature matches the brute-force oracle over all k") {
    const CurveParams& c = toy_curve();
    Point g{c.gx, c.gy, false};
    REQUIRE(point_order(c, g) == 7);

    U512 priv = 3;
    Bytes msg = {'t', 'o', 'y'};
    HashCounter hc;
    SignatureRS sig = sign(c, priv, msg, DigestKind::Llw256, &hc);
    CHECK(hc.value == 1);
    CHECK(verify(c, scalar_mul(c, priv, g), msg, sig, DigestKind::Llw256));

    // Brute force: every k in 1..q-1 yields at most one valid (r, s); the
    // implementation's output must be one of them.
    Bytes digest = digest_message(DigestKind::Llw256, msg);
    U512 e = 0;
    for (uint8_t b : digest) e = U512((e << 8) + b) % c.q;
    bool found = false;
    for (unsigned k = 1; k < 7; ++k) {
        Point rp = ref_mul(c, k, g);
        if (rp.infinity) continue;
        U512 r = U512(rp.x % c.q);
        if (r == 0) continue;
        // k^{-1} mod 7 by search
        unsigned kinv = 0;
        for (unsigned t = 1; t < 7; ++t) {
            if ((k * t) % 7 == 1) kinv = t;
        }
        U512 s = U512((U512(kinv) * (e + r * priv)) % c.q);
        if (s == 0) continue;
        if (r == sig.r && s == sig.s) found = true;
    }
    CHECK(found);
}

TEST_CASE("a single flipped message bit falsifies verification") {
    const CurveParams& c = p256();
    std::mt19937_64 rng(239);
    KeyPair kp = keygen(c, random_seed(rng));
    Bytes m(12);
    for (auto& b : m) b = uint8_t(rng());
    SignatureRS sig = sign(c, kp.priv, m, DigestKind::Llw256);
    int trials = 0;
    for (size_t byte = 0; byte < m.size() && trials < 100; ++byte) {
        for (int bit = 0; bit < 8 && trials < 100; ++bit, ++trials) {
            Bytes flipped = m;
            flipped[byte] ^= uint8_t(1u << bit);
            CHECK_FALSE(verify(c, kp.pub, flipped, sig, DigestKind::Llw256));
        }
    }
    CHECK(trials >= 96);
}

TEST_CASE("digest mismatch between sign and verify fails") {
    const CurveParams& c = p256();
    std::mt19937_64 rng(241);
    KeyPair kp = keygen(c, random_seed(rng));
    Bytes m = random_message(rng);
    SignatureRS sig = sign(c, kp.priv, m, DigestKind::Sha1);
    CHECK(verify(c, kp.pub, m, sig, DigestKind::Sha1));
    CHECK_FALSE(verify(c, kp.pub, m, sig, DigestKind::Llw256));
}

TEST_CASE("off-curve public key raises a malformed-key error, not false") {
    const CurveParams& c = p256();
    std::mt19937_64 rng(251);
    KeyPair kp = keygen(c, random_seed(rng));
    Bytes m = random_message(rng);
    SignatureRS sig = sign(c, kp.priv, m, DigestKind::Llw256);
    Point bad = kp.pub;
    bad.y = U512((bad.y + 1) % c.p);
    CHECK_THROWS_AS((void)verify(c, bad, m, sig, DigestKind::Llw256), MalformedKeyError);
}

TEST_CASE("mutating message, r, s or pub falsifies verification") {
    const CurveParams& c = p256();
    std::mt19937_64 rng(257);
    KeyPair kp = keygen(c, random_seed(rng));
    KeyPair other = keygen(c, random_seed(rng));
    for (int i = 0; i < 30; ++i) {
        Bytes m = random_message(rng);
        SignatureRS sig = sign(c, kp.priv, m, DigestKind::Llw256);
        Bytes m2 = m;
        m2[rng() % m2.size()] ^= uint8_t(1 + rng() % 255);
        CHECK_FALSE(verify(c, kp.pub, m2, sig, DigestKind::Llw256));
        SignatureRS sr = sig;
        sr.r = U512((sr.r + 1 + rng() % 5) % c.q);
        if (sr.r == 0) sr.r = 1;
        CHECK_FALSE(verify(c, kp.pub, m, sr, DigestKind::Llw256));
        SignatureRS ss = sig;
        ss.s = U512((ss.s + 1 + rng() % 5) % c.q);
        if (ss.s == 0) ss.s = 1;
        CHECK_FALSE(verify(c, kp.pub, m, ss, DigestKind::Llw256));
        CHECK_FALSE(verify(c, other.pub, m, sig, DigestKind::Llw256));
    }
}

TEST_CASE("scalar arithmetic distributes over the group (toy curve, oracle add)") {
    const CurveParams& c = toy_curve();
    Point g{c.gx, c.gy, false};
    std::mt19937_64 rng(263);
    for (int i = 0; i < 100; ++i) {
        U512 x = 1 + rng() % 6, y = 1 + rng() % 6;
        Point lhs = scalar_mul(c, U512((x + y) % c.q), g);
        Point rhs = ref_add(c, scalar_mul(c, x, g), scalar_mul(c, y, g));
        CHECK(lhs.infinity == rhs.infinity);
        if (!lhs.infinity) {
            CHECK(lhs.x == rhs.x);
            CHECK(lhs.y == rhs.y);
        }
    }
}

TEST_CASE("scalar arithmetic distributes on p256 as well") {
    const CurveParams& c = p256();
    Point g{c.gx, c.gy, false};
    std::mt19937_64 rng(269);
    for (int i = 0; i < 5; ++i) {
        U512 x = rng(), y = rng();
        Point lhs = scalar_mul(c, U512((x + y) % c.q), g);
        Point rhs = point_add(c, scalar_mul(c, x, g), scalar_mul(c, y, g));
        Point oracle = ref_add(c, ref_mul(c, x, g), ref_mul(c, y, g));
        CHECK(lhs.x == rhs.x);
        CHECK(lhs.x == oracle.x);
        CHECK(lhs.y == oracle.y);
    }
}

TEST_CASE("signature wire format round-trips") {
    const CurveParams& c = p256();
    std::mt19937_64 rng(271);
    KeyPair kp = keygen(c, random_seed(rng));
    Bytes m = random_message(rng);
    SignatureRS sig = sign(c, kp.priv, m, DigestKind::Llw256);
    auto wire = sig.to_bytes();
    CHECK(SignatureRS::from_bytes(wire) == sig);
    Bytes pub_wire = point_to_bytes(kp.pub);
    Point back = point_from_bytes(c, pub_wire);
    CHECK(back.x == kp.pub.x);
    CHECK(back.y == kp.pub.y);
}
