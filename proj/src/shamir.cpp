#include "medsentry/shamir.hpp"

#include <set>

#include "medsentry/bytes.hpp"

namespace medsentry::shamir {

namespace {

FieldInt mod(const FieldInt& v, const FieldInt& p) {
    FieldInt r = v % p;
    if (r < 0) r += p;
    return r;
}

FieldInt invmod(const FieldInt& x, const FieldInt& p) {
    FieldInt a = mod(x, p), b = p, u0 = 1, u1 = 0;
    while (b != 0) {
        FieldInt q = a / b;
        FieldInt t = a - q * b;
        a = b;
        b = t;
        t = u0 - q * u1;
        u0 = u1;
        u1 = t;
    }
    if (a != 1) throw DegenerateShareError("invmod: not invertible");
    return mod(u0, p);
}

FieldInt random_element(Rng& rng, const FieldInt& p) {
    // Enough uniform bytes to make the mod-p bias negligible for any p used
    // here (tests use tiny fields where exact uniformity is not asserted).
    size_t nbytes = 1;
    FieldInt t = p;
    while (t > 0) {
        t >>= 8;
        ++nbytes;
    }
    Bytes buf = rng.bytes(nbytes + 16);
    FieldInt v = 0;
    for (uint8_t b : buf) {
        v <<= 8;
        v += b;
    }
    return mod(v, p);
}

}  // namespace

const ShamirField& production_field() {
    static const ShamirField f = [] {
        FieldInt p = FieldInt(1) << 256;
        p -= 189;
        return ShamirField{p};
    }();
    return f;
}

std::vector<Share> split(const MasterSecret& secret, int n, int t, uint64_t rng_seed,
                         const ShamirField& field) {
    if (t < 1 || t > n) throw ParameterError("split: need 1 <= t <= n");
    if (FieldInt(n) >= field.p) throw ParameterError("split: n must be below the field prime");
    if (secret.value < 0 || secret.value >= field.p) {
        throw ParameterError("split: secret out of field");
    }

    Rng rng(rng_seed);
    std::vector<FieldInt> coeffs(size_t(t));
    coeffs[0] = secret.value;
    for (int i = 1; i < t; ++i) coeffs[size_t(i)] = random_element(rng, field.p);

    std::vector<Share> shares;
    shares.reserve(size_t(n));
    for (int i = 1; i <= n; ++i) {
        FieldInt x = i;
        FieldInt y = 0;
        // Horner evaluation.
        for (int c = t - 1; c >= 0; --c) y = mod(y * x + coeffs[size_t(c)], field.p);
        shares.push_back(Share{x, y});
    }
    return shares;
}

MasterSecret reconstruct(std::span<const Share> shares, int t, const ShamirField& field) {
    if (t < 1) throw ParameterError("reconstruct: threshold must be positive");
    if (static_cast<int>(shares.size()) < t) {
        throw InsufficientSharesError("reconstruct: fewer shares than threshold");
    }
    std::set<FieldInt> xs;
    for (const Share& s : shares) {
        if (mod(s.x, field.p) == 0) throw DegenerateShareError("reconstruct: share at x = 0");
        if (!xs.insert(s.x).second) {
            throw DegenerateShareError("reconstruct: duplicate evaluation point");
        }
    }

    FieldInt secret = 0;
    for (size_t i = 0; i < shares.size(); ++i) {
        FieldInt num = 1, den = 1;
        for (size_t j = 0; j < shares.size(); ++j) {
            if (j == i) continue;
            num = mod(num * shares[j].x, field.p);
            den = mod(den * (shares[j].x - shares[i].x), field.p);
        }
        FieldInt li = mod(num * invmod(den, field.p), field.p);
        secret = mod(secret + shares[i].y * li, field.p);
    }
    return MasterSecret{secret};
}

}  // namespace medsentry::shamir
