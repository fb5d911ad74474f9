#pragma once

// Shamir threshold sharing over a prime field. The deployment field is the
// largest 256-bit prime (2^256 - 189) so that signature-derived secrets fit;
// tests use GF(17).

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace medsentry::shamir {

using FieldInt = boost::multiprecision::cpp_int;

struct ShamirField {
    FieldInt p;
};

struct Share {
    FieldInt x;
    FieldInt y;

    bool operator==(const Share&) const = default;
};

struct MasterSecret {
    FieldInt value;

    bool operator==(const MasterSecret&) const = default;
};

struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct InsufficientSharesError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DegenerateShareError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

const ShamirField& production_field();  // p = 2^256 - 189

// Random degree-(t-1) polynomial with f(0) = secret, evaluated at x = 1..n.
// Coefficients come from the seeded deterministic RNG.
std::vector<Share> split(const MasterSecret& secret, int n, int t, uint64_t rng_seed,
                         const ShamirField& field);

// Lagrange interpolation at 0 over all supplied shares.
MasterSecret reconstruct(std::span<const Share> shares, int t, const ShamirField& field);

}  // namespace medsentry::shamir
