#include "medsentry/ecdsa.hpp"

#include <vector>

#include "medsentry/lesamnta_lw.hpp"
#include "medsentry/sha1.hpp"

namespace medsentry {

namespace {

using boost::multiprecision::int1024_t;

inline U512 addmod(const U512& x, const U512& y, const U512& m) {
    U512 r = x + y;
    if (r >= m) r -= m;
    return r;
}

inline U512 submod(const U512& x, const U512& y, const U512& m) {
    return x >= y ? U512(x - y) : U512(m - (y - x));
}

inline U512 mulmod(const U512& x, const U512& y, const U512& m) {
    // Operands stay below 2^256 so the product fits the 512-bit type.
    return U512((x * y) % m);
}

U512 invmod(const U512& x, const U512& m) {
    // Extended Euclid; m prime and x nonzero mod m.
    int1024_t a = int1024_t(x % m), b = int1024_t(m);
    int1024_t u0 = 1, u1 = 0;
    while (b != 0) {
        int1024_t qt = a / b;
        int1024_t t = a - qt * b;
        a = b;
        b = t;
        t = u0 - qt * u1;
        u0 = u1;
        u1 = t;
    }
    if (a != 1) throw std::invalid_argument("invmod: argument not invertible");
    int1024_t mm = int1024_t(m);
    u0 %= mm;
    if (u0 < 0) u0 += mm;
    return U512(u0);
}

// Jacobian coordinates; infinity is z == 0.
struct Jac {
    U512 x{}, y{}, z{};
};

Jac to_jac(const Point& p) {
    if (p.infinity) return Jac{1, 1, 0};
    return Jac{p.x, p.y, 1};
}

Point to_affine(const CurveParams& c, const Jac& j) {
    if (j.z == 0) return Point{};
    U512 zi = invmod(j.z, c.p);
    U512 zi2 = mulmod(zi, zi, c.p);
    U512 zi3 = mulmod(zi2, zi, c.p);
    Point out;
    out.infinity = false;
    out.x = mulmod(j.x, zi2, c.p);
    out.y = mulmod(j.y, zi3, c.p);
    return out;
}

Jac jac_double(const CurveParams& c, const Jac& p) {
    if (p.z == 0 || p.y == 0) return Jac{1, 1, 0};
    const U512& m = c.p;
    U512 y2 = mulmod(p.y, p.y, m);
    U512 s = mulmod(4, mulmod(p.x, y2, m), m);
    U512 z2 = mulmod(p.z, p.z, m);
    U512 z4 = mulmod(z2, z2, m);
    U512 mm = addmod(mulmod(3, mulmod(p.x, p.x, m), m), mulmod(c.a, z4, m), m);
    U512 x3 = submod(mulmod(mm, mm, m), addmod(s, s, m), m);
    U512 y4 = mulmod(y2, y2, m);
    U512 y3 = submod(mulmod(mm, submod(s, x3, m), m), mulmod(8, y4, m), m);
    U512 z3 = mulmod(2, mulmod(p.y, p.z, m), m);
    return Jac{x3, y3, z3};
}

Jac jac_add(const CurveParams& c, const Jac& p, const Jac& q) {
    if (p.z == 0) return q;
    if (q.z == 0) return p;
    const U512& m = c.p;
    U512 z1z1 = mulmod(p.z, p.z, m);
    U512 z2z2 = mulmod(q.z, q.z, m);
    U512 u1 = mulmod(p.x, z2z2, m);
    U512 u2 = mulmod(q.x, z1z1, m);
    U512 s1 = mulmod(p.y, mulmod(z2z2, q.z, m), m);
    U512 s2 = mulmod(q.y, mulmod(z1z1, p.z, m), m);
    if (u1 == u2) {
        if (s1 != s2) return Jac{1, 1, 0};
        return jac_double(c, p);
    }
    U512 h = submod(u2, u1, m);
    U512 r = submod(s2, s1, m);
    U512 h2 = mulmod(h, h, m);
    U512 h3 = mulmod(h2, h, m);
    U512 u1h2 = mulmod(u1, h2, m);
    U512 x3 = submod(submod(mulmod(r, r, m), h3, m), addmod(u1h2, u1h2, m), m);
    U512 y3 = submod(mulmod(r, submod(u1h2, x3, m), m), mulmod(s1, h3, m), m);
    U512 z3 = mulmod(h, mulmod(p.z, q.z, m), m);
    return Jac{x3, y3, z3};
}

// Left-to-right 4-bit window.
Jac jac_mul(const CurveParams& c, const U512& k, const Point& p) {
    if (k == 0 || p.infinity) return Jac{1, 1, 0};
    Jac table[16];
    table[0] = Jac{1, 1, 0};
    table[1] = to_jac(p);
    for (int i = 2; i < 16; ++i) table[i] = jac_add(c, table[i - 1], table[1]);

    unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(k)) + 1;
    unsigned windows = (bits + 3) / 4;
    Jac acc{1, 1, 0};
    for (int w = int(windows) - 1; w >= 0; --w) {
        for (int i = 0; i < 4; ++i) acc = jac_double(c, acc);
        unsigned nib = static_cast<unsigned>(U512((k >> (4 * w)) & 0xf));
        if (nib) acc = jac_add(c, acc, table[nib]);
    }
    return acc;
}

U512 be_int(std::span<const uint8_t> bytes) {
    U512 v = 0;
    for (uint8_t b : bytes) {
        v <<= 8;
        v += b;
    }
    return v;
}

// Digest bytes to an integer mod q: big-endian interpretation, shorter
// digests zero-extend on the left (the standard truncation convention).
U512 digest_to_scalar(const CurveParams& c, std::span<const uint8_t> digest) {
    return U512(be_int(digest) % c.q);
}

// Deterministic nonce / key derivation PRF. Not a protocol message digest,
// so it never touches the hash-cost counter.
U512 derive_scalar(const CurveParams& c, std::span<const uint8_t> seed_material,
                   std::span<const uint8_t> salt) {
    for (uint8_t ctr = 0;; ++ctr) {
        Bytes buf(seed_material.begin(), seed_material.end());
        buf.insert(buf.end(), salt.begin(), salt.end());
        buf.push_back(ctr);
        Digest256 d = llw_hash(buf);
        U512 v = U512(be_int(d) % c.q);
        if (v != 0) return v;
        if (ctr == 255) throw std::runtime_error("derive_scalar: exhausted counter");
    }
}

}  // namespace

std::array<uint8_t, 64> SignatureRS::to_bytes() const {
    std::array<uint8_t, 64> out{};
    auto rb = scalar_to_bytes(r);
    auto sb = scalar_to_bytes(s);
    std::copy(rb.begin(), rb.end(), out.begin());
    std::copy(sb.begin(), sb.end(), out.begin() + 32);
    return out;
}

SignatureRS SignatureRS::from_bytes(std::span<const uint8_t> bytes) {
    if (bytes.size() != 64) throw std::invalid_argument("SignatureRS: need 64 bytes");
    return SignatureRS{scalar_from_bytes(bytes.subspan(0, 32)), scalar_from_bytes(bytes.subspan(32))};
}

const CurveParams& p256() {
    static const CurveParams c = [] {
        CurveParams cp;
        cp.p = U512("0xffffffff00000001000000000000000000000000ffffffffffffffffffffffff");
        cp.a = U512("0xffffffff00000001000000000000000000000000fffffffffffffffffffffffc");
        cp.b = U512("0x5ac635d8aa3a93e7b3ebbd55769886bc651d06b0cc53b0f63bce3c3e27d2604b");
        cp.gx = U512("0x6b17d1f2e12c4247f8bce6e563a440f277037d812deb33a0f4a13945d898c296");
        cp.gy = U512("0x4fe342e2fe1a7f9b8ee7eb4a7c0f9e162bce33576b315ececbb6406837bf51f5");
        cp.q = U512("0xffffffff00000000ffffffffffffffffbce6faada7179e84f3b9cac2fc632551");
        cp.cofactor = 1;
        return cp;
    }();
    return c;
}

bool on_curve(const CurveParams& c, const Point& pt) {
    if (pt.infinity) return true;
    if (pt.x >= c.p || pt.y >= c.p) return false;
    U512 lhs = mulmod(pt.y, pt.y, c.p);
    U512 rhs = addmod(addmod(mulmod(mulmod(pt.x, pt.x, c.p), pt.x, c.p),
                             mulmod(c.a, pt.x, c.p), c.p),
                      c.b, c.p);
    return lhs == rhs;
}

Point point_add(const CurveParams& c, const Point& p1, const Point& p2) {
    return to_affine(c, jac_add(c, to_jac(p1), to_jac(p2)));
}

Point scalar_mul(const CurveParams& c, const U512& k, const Point& p) {
    return to_affine(c, jac_mul(c, U512(k % c.q), p));
}

std::array<uint8_t, 32> scalar_to_bytes(const U512& v) {
    std::array<uint8_t, 32> out{};
    U512 x = v;
    for (int i = 31; i >= 0; --i) {
        out[size_t(i)] = static_cast<uint8_t>(x & 0xff);
        x >>= 8;
    }
    return out;
}

U512 scalar_from_bytes(std::span<const uint8_t> bytes) {
    if (bytes.size() > 32) throw std::invalid_argument("scalar_from_bytes: too wide");
    return be_int(bytes);
}

Bytes point_to_bytes(const Point& pt) {
    Bytes out;
    out.reserve(65);
    out.push_back(0x04);
    auto xb = scalar_to_bytes(pt.x);
    auto yb = scalar_to_bytes(pt.y);
    out.insert(out.end(), xb.begin(), xb.end());
    out.insert(out.end(), yb.begin(), yb.end());
    return out;
}

Point point_from_bytes(const CurveParams& c, std::span<const uint8_t> bytes) {
    if (bytes.size() != 65 || bytes[0] != 0x04) {
        throw std::invalid_argument("point_from_bytes: need 65-byte uncompressed form");
    }
    Point pt;
    pt.infinity = false;
    pt.x = be_int(bytes.subspan(1, 32));
    pt.y = be_int(bytes.subspan(33, 32));
    if (!on_curve(c, pt)) throw MalformedKeyError("point_from_bytes: not on curve");
    return pt;
}

KeyPair keygen(const CurveParams& c, std::span<const uint8_t> seed) {
    bool all_zero = true;
    for (uint8_t b : seed) all_zero &= (b == 0);
    if (seed.empty() || all_zero) throw std::invalid_argument("keygen: zero seed");
    static const uint8_t tag[] = {'k', 'e', 'y'};
    U512 priv = derive_scalar(c, seed, tag);
    Point g{c.gx, c.gy, false};
    return KeyPair{priv, scalar_mul(c, priv, g)};
}

Bytes digest_message(DigestKind kind, std::span<const uint8_t> message, HashCounter* counter) {
    if (counter) ++counter->value;
    if (kind == DigestKind::Sha1) {
        Digest160 d = sha1_hash(message);
        return Bytes(d.begin(), d.end());
    }
    Digest256 d = llw_hash(message);
    return Bytes(d.begin(), d.end());
}

SignatureRS sign(const CurveParams& c, const U512& priv, std::span<const uint8_t> message,
                 DigestKind digest, HashCounter* counter) {
    if (priv == 0 || priv >= c.q) throw std::invalid_argument("sign: private key out of range");
    Bytes d = digest_message(digest, message, counter);
    U512 e = digest_to_scalar(c, d);
    Point g{c.gx, c.gy, false};
    auto priv_bytes = scalar_to_bytes(priv);

    for (uint8_t attempt = 0;; ++attempt) {
        Bytes salt(d.begin(), d.end());
        salt.push_back(attempt);
        U512 k = derive_scalar(c, priv_bytes, salt);
        Point rp = scalar_mul(c, k, g);
        if (rp.infinity) continue;
        U512 r = U512(rp.x % c.q);
        if (r == 0) continue;
        U512 s = mulmod(invmod(k, c.q), addmod(e, mulmod(r, priv, c.q), c.q), c.q);
        if (s == 0) continue;
        return SignatureRS{r, s};
    }
}

bool verify(const CurveParams& c, const Point& pub, std::span<const uint8_t> message,
            const SignatureRS& sig, DigestKind digest, HashCounter* counter) {
    if (pub.infinity || !on_curve(c, pub)) {
        throw MalformedKeyError("verify: public key not on curve");
    }
    if (sig.r == 0 || sig.r >= c.q || sig.s == 0 || sig.s >= c.q) return false;
    Bytes d = digest_message(digest, message, counter);
    U512 e = digest_to_scalar(c, d);
    U512 w = invmod(sig.s, c.q);
    U512 u1 = mulmod(e, w, c.q);
    U512 u2 = mulmod(sig.r, w, c.q);
    Point g{c.gx, c.gy, false};
    Jac x = jac_add(c, jac_mul(c, u1, g), jac_mul(c, u2, pub));
    Point xa = to_affine(c, x);
    if (xa.infinity) return false;
    return U512(xa.x % c.q) == sig.r;
}

}  // namespace medsentry
