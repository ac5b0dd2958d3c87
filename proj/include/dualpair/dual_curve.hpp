#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <utility>

#include "dualpair/curve.hpp"
#include "dualpair/field.hpp"

namespace dualpair {

/// A point of Ẽ(F_p[ε]): either 𝒪_k = (kε : 1 : 0) or an affine (x, y)
/// with dual-number coordinates.
class DualPoint {
public:
    static DualPoint theta(const Fp& k) { return DualPoint(k); }
    static DualPoint affine(const DualNumber& x, const DualNumber& y) { return DualPoint(x, y); }

    bool is_theta() const noexcept { return !xy_.has_value(); }
    /// ε-coordinate of a Theta point; throws BadInput for affine points.
    const Fp& k() const;
    const DualNumber& x() const;
    const DualNumber& y() const;
    const FieldRef& field() const noexcept { return k_.field(); }

    /// Image under reduction mod ε.
    Point reduce() const;

    DualPoint operator-() const;

    friend bool operator==(const DualPoint& a, const DualPoint& b) { return a.k_ == b.k_ && a.xy_ == b.xy_; }
    friend bool operator!=(const DualPoint& a, const DualPoint& b) { return !(a == b); }

private:
    explicit DualPoint(const Fp& k) : k_(k) {}
    DualPoint(const DualNumber& x, const DualNumber& y) : k_(x.field()->zero()), xy_(std::in_place, x, y) {}

    Fp k_; // zero for affine points
    std::optional<std::pair<DualNumber, DualNumber>> xy_;
};

std::ostream& operator<<(std::ostream& os, const DualPoint& P);

/// y² = x³ + (A + A₁ε)x + (B + B₁ε). Canonical iff A₁ = B₁ = 0.
class DualCurve {
public:
    explicit DualCurve(const Curve& base);
    DualCurve(const Curve& base, const Fp& A1, const Fp& B1);

    static DualCurve canonical(const Curve& base) { return DualCurve(base); }

    const Curve& base() const noexcept { return base_; }
    const FieldRef& field() const noexcept { return base_.field(); }
    const Fp& A1() const noexcept { return A1_; }
    const Fp& B1() const noexcept { return B1_; }
    DualNumber A() const { return {base_.A(), A1_}; }
    DualNumber B() const { return {base_.B(), B1_}; }
    bool is_canonical() const noexcept { return A1_.is_zero() && B1_.is_zero(); }

    DualPoint identity() const { return DualPoint::theta(field()->zero()); }
    /// The base point with zero ε-parts (meaningful on any lift only when
    /// it satisfies the curve equation, i.e. always for the canonical lift).
    DualPoint embed(const Point& P) const;

private:
    Curve base_;
    Fp A1_;
    Fp B1_;
};

/// Membership: reduction on E and (2y₀)y₁ = (3x₀² + A)x₁ + A₁x₀ + B₁.
bool validate(const DualCurve& E, const DualPoint& P);

/// Lift of a base point with x₁ = 0 (or y₁ = 0 when y₀ = 0).
DualPoint lift_point(const DualCurve& E, const Point& P);

/// Full group law on Ẽ(F_p[ε]), including every degenerate configuration.
/// Throws InvalidPoint for inputs failing `validate`.
DualPoint dual_add(const DualCurve& E, const DualPoint& P, const DualPoint& Q);
DualPoint dual_double(const DualCurve& E, const DualPoint& P);
DualPoint dual_add_unchecked(const DualCurve& E, const DualPoint& P, const DualPoint& Q);
DualPoint dual_scalar_mul(const DualCurve& E, const mpz_class& n, const DualPoint& P);

/// Splitting on the canonical lift: P̃ = P + 𝒪_k. Theta inputs return
/// (∞, k). Throws NotCanonical for non-canonical lifts.
std::pair<Point, Fp> decompose(const DualCurve& E, const DualPoint& P);
/// Inverse of decompose: P + 𝒪_k.
DualPoint compose(const DualCurve& E, const Point& P, const Fp& k);

/// j̃ = 4Ã³ / (4Ã³ + 27B̃²).
DualNumber j_dual(const DualCurve& E);

} // namespace dualpair
