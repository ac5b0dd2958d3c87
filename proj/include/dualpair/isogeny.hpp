#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "dualpair/curve.hpp"
#include "dualpair/dual_curve.hpp"
#include "dualpair/p_pairing.hpp"
#include "dualpair/polynomial.hpp"
#include "dualpair/rng.hpp"

namespace dualpair {

/// φ(x, y) = (r(x), y·s(x)) from `source` to `target`, with t₂∘φ = m·t₁ + O(t₁²).
struct Isogeny {
    Curve source;
    Curve target;
    RationalFunction r;
    RationalFunction s;
    mpz_class degree;
    /// The F_p-rational points of the kernel, ∞ first.
    std::vector<Point> kernel_points;
    Fp m;

    const Polynomial& r_num() const noexcept { return r.num(); }
    const Polynomial& r_den() const noexcept { return r.den(); }
    const Polynomial& s_num() const noexcept { return s.num(); }
    const Polynomial& s_den() const noexcept { return s.den(); }
};

/// Normalized (m = 1) separable isogeny with the given rational kernel.
/// Throws NotASubgroup unless the points form a subgroup containing ∞.
Isogeny velu(const Curve& C, const std::vector<Point>& kernel);

/// Odd-degree normalized isogeny whose kernel is cut out by the monic
/// polynomial ψ (one root per ±Q pair, Q ≠ ∞); degree 2·deg ψ + 1. The
/// kernel need not be rational pointwise. Throws NotASubgroup if the
/// resulting map fails the curve identity.
Isogeny velu_kernel_polynomial(const Curve& C, const Polynomial& psi);

inline constexpr int kMultByNLimit = 7;

/// [n] via division polynomials: r = x − ψ_{n−1}ψ_{n+1}/ψ_n², y-coordinate
/// ψ_{2n}/(2ψ_n⁴). Degree n², m = n. Requires 1 ≤ n ≤ kMultByNLimit.
Isogeny mult_by_n(const Curve& C, int n);

/// ψ_n as a(x) + b(x)·y with y² = x³ + Ax + B.
std::pair<Polynomial, Polynomial> division_polynomial(const Curve& C, int n);

inline constexpr long kFrobeniusPrimeLimit = 101;

/// (x, y) ↦ (x^p, y^p): inseparable, degree p, m = 0.
Isogeny frobenius(const Curve& C);

/// φ(P); kernel points and ∞ map to ∞.
Point isogeny_eval(const Isogeny& phi, const Point& P);

/// r′/s reduced as a rational function; throws BadInput if it is not a
/// constant (the map is then not an isogeny).
Fp compute_m(const Isogeny& phi);
/// r′(x)/s(x) at one abscissa; throws DivisionByZero where undefined.
Fp m_at(const Isogeny& phi, const Fp& x);

/// ψ ∘ φ. Throws BadInput unless ψ.source = φ.target.
Isogeny compose(const Isogeny& psi, const Isogeny& phi);

/// f(x)·s(x)² = r(x)³ + A′r(x) + B′ as rational functions.
bool satisfies_curve_identity(const Isogeny& phi);
bool in_kernel(const Isogeny& phi, const Point& P);

/// φ̃ on the canonical lift of the source: 𝒪_k ↦ 𝒪_{mk}; affine points off
/// the kernel by dual evaluation of r and s; kernel points through
/// φ(P̃ + T) + φ(−T) for a T outside the kernel.
DualPoint lift_isogeny_eval(const Isogeny& phi, const DualPoint& P, std::uint64_t seed = kDefaultSeed);
DualPoint lift_isogeny_eval(const Isogeny& phi, const DualPoint& P, const Point& T);

/// e_p(φ̃P̃, φ̃Q̃) = e_p(P̃, Q̃)^{deg φ}.
bool check_functoriality(const Isogeny& phi, const DualPoint& P, const DualPoint& Q);

} // namespace dualpair
