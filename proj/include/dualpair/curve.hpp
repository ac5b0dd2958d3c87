#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "dualpair/field.hpp"
#include "dualpair/rng.hpp"

namespace dualpair {

/// A point of E(F_p): the point at infinity or an affine (x, y).
class Point {
public:
    Point() = default; // infinity
    Point(const Fp& x, const Fp& y);

    static Point infinity() { return {}; }

    bool is_infinity() const noexcept { return !xy_.has_value(); }
    const Fp& x() const;
    const Fp& y() const;

    Point operator-() const;

    friend bool operator==(const Point& a, const Point& b) { return a.xy_ == b.xy_; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }

private:
    std::optional<std::pair<Fp, Fp>> xy_;
};

std::ostream& operator<<(std::ostream& os, const Point& P);

/// y² = x³ + Ax + B over F_p, p > 3 prime, 4A³ + 27B² ≠ 0.
class Curve {
public:
    Curve(const mpz_class& p, const mpz_class& A, const mpz_class& B);
    Curve(const Fp& A, const Fp& B);

    const FieldRef& field() const noexcept { return A_.field(); }
    const mpz_class& p() const noexcept { return A_.field()->modulus(); }
    const Fp& A() const noexcept { return A_; }
    const Fp& B() const noexcept { return B_; }

    /// x³ + Ax + B.
    template <class Scalar>
    Scalar rhs(const Scalar& x) const {
        return (x * x + embed_scalar<Scalar>(A_)) * x + embed_scalar<Scalar>(B_);
    }

    Fp discriminant() const { return 4L * A_ * A_ * A_ + 27L * B_ * B_; }

    bool contains(const Point& P) const;
    /// Validated affine point from integer coordinates; throws PointNotOnCurve.
    Point point(const mpz_class& x, const mpz_class& y) const;
    Fp element(const mpz_class& v) const { return field()->element(v); }

    friend bool operator==(const Curve& a, const Curve& b) {
        return a.p() == b.p() && a.A_ == b.A_ && a.B_ == b.B_;
    }
    friend bool operator!=(const Curve& a, const Curve& b) { return !(a == b); }

private:
    Fp A_;
    Fp B_;
};

std::ostream& operator<<(std::ostream& os, const Curve& C);

/// Third-point formula shared by every affine chord or tangent addition:
/// x₃ = λ² − x₁ − x₂, y₃ = λ(x₁ − x₃) − y₁.
template <class Scalar>
std::pair<Scalar, Scalar> chord_result(const Scalar& x1, const Scalar& y1, const Scalar& x2, const Scalar& lambda) {
    Scalar x3 = lambda * lambda - x1 - x2;
    Scalar y3 = lambda * (x1 - x3) - y1;
    return {std::move(x3), std::move(y3)};
}

/// Tangent slope (3x² + A)/(2y) at an affine point.
template <class Scalar>
Scalar tangent_slope(const Scalar& x, const Scalar& y, const Scalar& A) {
    return (3L * (x * x) + A) / (2L * y);
}

/// Throws PointNotOnCurve unless P is on C.
void require_on_curve(const Curve& C, const Point& P);

Point point_add(const Curve& C, const Point& P, const Point& Q);
Point point_double(const Curve& C, const Point& P);
/// Group law without input validation; used in inner loops.
Point add_unchecked(const Curve& C, const Point& P, const Point& Q);

/// nP by double-and-add; negative n is accepted.
Point scalar_mul(const Curve& C, const mpz_class& n, const Point& P);

/// #E(F_p) including infinity. Exhaustive quadratic-character tally for
/// p ≤ 10⁵; baby-step/giant-step order search in the Hasse interval above.
mpz_class count_points(const Curve& C);
mpz_class count_points_exhaustive(const Curve& C);
/// Intersects the Hasse-interval annihilators of up to `points` random points;
/// throws OrderAmbiguous if more than one candidate survives.
mpz_class count_points_bsgs(const Curve& C, std::uint64_t seed = kDefaultSeed, int points = 24);

inline constexpr unsigned long kExhaustiveCountLimit = 100'000;

/// Every N in the Hasse interval with N·P = ∞, ascending.
std::vector<mpz_class> hasse_annihilators(const Curve& C, const Point& P);

/// Hasse interval [p + 1 − ⌊2√p⌋, p + 1 + ⌊2√p⌋].
std::pair<mpz_class, mpz_class> hasse_interval(const mpz_class& p);

Point random_point(const Curve& C, Rng& rng);
/// All points, infinity first. Throws BadInput for p > 10⁵.
std::vector<Point> all_points(const Curve& C);
/// Rational points of order 2 (possibly none).
std::vector<Point> two_torsion(const Curve& C);

/// True iff #E(F_p) = p.
bool is_anomalous(const Curve& C);

inline constexpr std::uint64_t kAnomalousTrialBudget = 4'000'000;

/// `count` distinct curves with #E = p for primes p in [p_min, p_max],
/// deterministic in `seed`. Throws BadInput when the range holds no prime
/// above 3 and SearchExhausted when the trial budget runs out.
std::vector<Curve> find_anomalous(const mpz_class& p_min, const mpz_class& p_max, std::size_t count,
                                  std::uint64_t seed = kDefaultSeed,
                                  std::uint64_t trial_budget = kAnomalousTrialBudget);

} // namespace dualpair
