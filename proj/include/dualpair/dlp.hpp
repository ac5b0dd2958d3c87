#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "dualpair/curve.hpp"
#include "dualpair/dual_curve.hpp"
#include "dualpair/rng.hpp"

namespace dualpair {

/// Find n with Q = nP on an anomalous curve.
struct DlpInstance {
    Curve C;
    Point P;
    Point Q;
};

/// P ≠ ∞, both points on C and pP = pQ = ∞ (so Q ∈ ⟨P⟩). Throws BadInput,
/// PointNotOnCurve or NotPTorsion.
void validate_instance(const DlpInstance& inst);

enum class AttackMethod { Semaev, Rueck, Pairing, Lift };
AttackMethod parse_attack_method(std::string_view name);
std::string_view to_string(AttackMethod m);

struct AttackResult {
    mpz_class n;
    AttackMethod method;
    /// Re-drawn evaluation points (semaev) or rejected lifts (lift).
    int retries = 0;
    /// (A₁, B₁) of the lift that produced n.
    std::optional<std::pair<Fp, Fp>> lift;
};

/// n = λ(Q)/λ(P).
AttackResult attack_semaev(const DlpInstance& inst, std::uint64_t seed = kDefaultSeed);
/// n = Σm(Q)/Σm(P); no auxiliary points.
AttackResult attack_rueck(const DlpInstance& inst);
/// e_p(P, 𝒪₁) = 1 + aε, e_p(Q, 𝒪₁) = 1 + bε, n = b/a.
AttackResult attack_pairing(const DlpInstance& inst);

inline constexpr int kLiftResamples = 8;

/// Random lift with no scaling witness to the canonical one; pP̃ = 𝒪_{k_P},
/// pQ̃ = 𝒪_{k_Q}, n = k_Q/k_P. LiftDegenerate after kLiftResamples lifts
/// with k_P = 0.
AttackResult attack_lift(const DlpInstance& inst, std::uint64_t seed = kDefaultSeed);
/// The same on one given lift; LiftDegenerate if p·P̃ = 𝒪₀.
AttackResult attack_lift_with(const DlpInstance& inst, const Fp& A1, const Fp& B1);

AttackResult attack(const DlpInstance& inst, AttackMethod method, std::uint64_t seed = kDefaultSeed);

/// k with (1 + kε)⁴A = Ã and (1 + kε)⁶B = B̃, if one exists.
std::optional<Fp> scaling_witness(const DualCurve& E);

struct CanonicalTest {
    bool equivalent;
    std::optional<Fp> witness;
};

/// equivalent ⟺ the ε-part of j̃ vanishes; witness as above. Throws
/// WitnessInconsistent when the j-test and the witness disagree (always
/// the case for A = 0 with A₁ ≠ 0, or B = 0 with B₁ ≠ 0).
CanonicalTest is_canonical_equivalent(const DualCurve& E);

/// ε-part of j̃ is zero.
bool j_in_base_field(const DualCurve& E);

/// p·lift_point(P) for one generator; 𝒪_k with k = 0 iff the lift keeps
/// E(F_p) p-torsion.
Fp lift_torsion_defect(const DualCurve& E, const Point& generator);

/// Exhaustive comparison over all (A₁, B₁) ∈ F_p² of the lifts with j̃ ∈ F_p
/// against the lifts on which every rational p-torsion point stays p-torsion.
struct ConjectureProbe {
    mpz_class p;
    Fp A;
    Fp B;
    std::size_t lifts = 0;
    std::size_t j_in_fp = 0;
    std::size_t torsion_preserving = 0;
    std::size_t both = 0;
    /// Lifts in exactly one of the two sets, (A₁, B₁, j̃ ∈ F_p).
    std::vector<std::tuple<Fp, Fp, bool>> mismatches;
    bool sets_equal() const { return mismatches.empty(); }
};

inline constexpr long kProbePrimeLimit = 101;

ConjectureProbe conjecture_probe(const Curve& C);

} // namespace dualpair
