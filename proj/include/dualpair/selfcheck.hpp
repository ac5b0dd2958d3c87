#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "dualpair/dlp.hpp"
#include "dualpair/json_io.hpp"
#include "dualpair/rng.hpp"

namespace dualpair {

struct SelfcheckOptions {
    mpz_class p_max = 13;
    int trials = 100;
    std::uint64_t seed = kDefaultSeed;
};

struct InvariantResult {
    std::string name;
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::string note;
    bool passed() const { return failures == 0; }
};

struct SelfcheckReport {
    SelfcheckOptions options;
    std::vector<Curve> curves;
    std::vector<InvariantResult> invariants;
    std::vector<ConjectureProbe> probes;
    bool passed() const;
};

/// Curves with p ≤ this bound get the exhaustive treatment.
inline constexpr long kExhaustivePrimeLimit = 13;

/// Runs the invariant suite on anomalous curves with 5 ≤ p ≤ p_max.
/// Throws BadInput if p_max < 5.
SelfcheckReport run_selfcheck(const SelfcheckOptions& opts);

json to_json(const SelfcheckReport& report);

} // namespace dualpair
