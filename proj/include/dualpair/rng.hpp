#pragma once

#include <gmpxx.h>

#include <cstdint>

#include "dualpair/field.hpp"

namespace dualpair {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed'd0a1'0000'0001ULL;

/// Deterministic Mersenne-Twister stream (GMP's), reproducible across runs
/// and platforms for a given seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed = kDefaultSeed) : gen_(gmp_randinit_mt) {
        gen_.seed(mpz_class(static_cast<unsigned long>(seed)));
    }

    Rng(const Rng&) = delete;
    Rng& operator=(const Rng&) = delete;

    /// Uniform in [0, n). n must be positive.
    mpz_class below(const mpz_class& n) { return gen_.get_z_range(n); }

    /// Uniform in [lo, hi].
    mpz_class between(const mpz_class& lo, const mpz_class& hi) { return lo + below(hi - lo + 1); }

    Fp element(const FieldRef& f) { return f->element(below(f->modulus())); }

    Fp nonzero_element(const FieldRef& f) { return f->element(below(f->modulus() - 1) + 1); }

    bool coin() { return below(2) == 1; }

    std::uint64_t next_u64() {
        mpz_class v = gen_.get_z_bits(64);
        return static_cast<std::uint64_t>(v.get_ui());
    }

private:
    gmp_randclass gen_;
};

} // namespace dualpair
