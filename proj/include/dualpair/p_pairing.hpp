#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string_view>

#include "dualpair/curve.hpp"
#include "dualpair/dual_curve.hpp"
#include "dualpair/field.hpp"
#include "dualpair/miller.hpp"
#include "dualpair/rng.hpp"

namespace dualpair {

/// 1 + aε in μ_p(F_p[ε]), stored by a. The group law is addition of a.
class PairingValue {
public:
    explicit PairingValue(const Fp& a) : a_(a) {}
    static PairingValue one(const FieldRef& f) { return PairingValue(f->zero()); }
    /// Reads 1 + aε off a dual number with real part 1.
    static PairingValue from_dual(const DualNumber& z);

    const Fp& a() const noexcept { return a_; }
    bool is_one() const noexcept { return a_.is_zero(); }
    DualNumber to_dual() const { return {a_.field()->one(), a_}; }

    PairingValue operator*(const PairingValue& o) const { return PairingValue(a_ + o.a_); }
    PairingValue inverse() const { return PairingValue(-a_); }
    PairingValue pow(const mpz_class& e) const { return PairingValue(a_ * a_.field()->element(e)); }

    friend bool operator==(const PairingValue& x, const PairingValue& y) { return x.a_ == y.a_; }
    friend bool operator!=(const PairingValue& x, const PairingValue& y) { return !(x == y); }

private:
    Fp a_;
};

std::ostream& operator<<(std::ostream& os, const PairingValue& v);

/// Semaev's (f′_P / f_P)(R), derivative taken in x along the curve.
struct LambdaValue {
    Fp v;
    friend bool operator==(const LambdaValue&, const LambdaValue&) = default;
};

/// Knobs shared by the evaluation-point methods. Unset chain means the
/// binary chain for p; unset translation means the default policy (rational
/// 2-torsion if any, otherwise a random point, re-drawn on degeneracy).
/// A translation of ∞ evaluates the untranslated divisor (P) − (∞).
struct MillerOptions {
    std::optional<AdditionChain> chain;
    std::optional<Point> translation;
    std::uint64_t seed = kDefaultSeed;
    int max_attempts = 64;
};

/// Picks R ∈ E(F_p) with R ≠ ∞ and y(R) ≠ 0.
Point choose_evaluation_point(const Curve& C, Rng& rng);

/// Π h_{i,j}(𝒪_k + R) / h_{i,j}(R), computed in F_p[ε].
PairingValue e_direct(const DualCurve& E, const Point& P, const Fp& k, const Point& R,
                      const MillerOptions& opts = {});
/// Same, with the chain given explicitly.
PairingValue e_direct(const DualCurve& E, const Point& P, const Fp& k, const Point& R, const AdditionChain& chain);

/// Σ_C (h′/h)(R) using h′(R) = (y(R − T)/y(R)) · (ℓ/v)′(R − T).
LambdaValue lambda_semaev(const Curve& C, const Point& P, const Point& R, const MillerOptions& opts = {});
LambdaValue lambda_semaev(const Curve& C, const Point& P, const Point& R, const Point& T);

/// a = −2 · y(R) · λ(P at R) · k.
PairingValue e_semaev(const DualCurve& E, const Point& P, const Fp& k, const Point& R,
                      const MillerOptions& opts = {});

/// Σ_C m_{i,j} over the binary chain for p (vertical steps contribute 0).
Fp rueck_sum(const Curve& C, const Point& P);
Fp rueck_sum(const Curve& C, const Point& P, const AdditionChain& chain);

/// Orientation of the slope-sum formula relative to the dual-number
/// definition; pinned by comparing against e_direct.
inline constexpr long kRueckSign = -1;

/// 1 + σ · (Σ_C m_{i,j}) · kε. Total: no evaluation point, no retries.
PairingValue e_rueck(const DualCurve& E, const Point& P, const Fp& k);

enum class PairingMethod { Direct, Semaev, Rueck };
PairingMethod parse_pairing_method(std::string_view name);
std::string_view to_string(PairingMethod m);

inline constexpr int kEvaluationPointDraws = 16;

/// e(P, 𝒪_k) by the chosen method; R is drawn from the seed when needed and
/// re-drawn when no translation point works for it.
PairingValue pairing(const DualCurve& E, const Point& P, const Fp& k, PairingMethod method,
                     std::uint64_t seed = kDefaultSeed);

/// Bilinear antisymmetric extension to Ẽ[p] × Ẽ[p] on the canonical lift:
/// with P̃ = P + 𝒪_k and Q̃ = Q + 𝒪_j, e_p(P̃, Q̃) = e(P, 𝒪_j) · e(Q, 𝒪_k)⁻¹.
PairingValue e_p_full(const DualCurve& E, const DualPoint& P, const DualPoint& Q);

/// Throws NotPTorsion unless pP = ∞.
void require_p_torsion(const Curve& C, const Point& P);

} // namespace dualpair
