#include <doctest.h>

#include <array>
#include <optional>

#include "dualpair/dual_curve.hpp"
#include "support.hpp"

using namespace dualpair;
using namespace dualpair::testing;

namespace {

template <class S>
using Proj = std::array<S, 3>;

// Projective addition for y²z = x³ + axz² + bz³, exact for every pair whose
// difference is not of order 2. Independent of the chord-tangent code.
template <class S>
Proj<S> complete_add(const S& a, const S& b, const Proj<S>& P, const Proj<S>& Q) {
    const auto& [X1, Y1, Z1] = P;
    const auto& [X2, Y2, Z2] = Q;
    S b3 = 3L * b;
    S t0 = X1 * X2, t1 = Y1 * Y2, t2 = Z1 * Z2;
    S xz = X1 * Z2 + X2 * Z1, xy = X1 * Y2 + X2 * Y1, yz = Y1 * Z2 + Y2 * Z1;
    S u = t1 - a * xz - b3 * t2;
    S v = t1 + a * xz + b3 * t2;
    S w = a * t0 + b3 * xz - a * a * t2;
    S z = 3L * t0 + a * t2;
    return {xy * u - yz * w, v * u + z * w, yz * v + xy * z};
}

Proj<Fp> to_proj(const Point& P, const FieldRef& f) {
    if (P.is_infinity())
        return {f->zero(), f->one(), f->zero()};
    return {P.x(), P.y(), f->one()};
}

Proj<DualNumber> to_proj(const DualPoint& P, const FieldRef& f) {
    DualNumber zero(f->zero()), one(f->one());
    if (P.is_theta())
        return {DualNumber(f->zero(), P.k()), one, zero};
    return {P.x(), P.y(), one};
}

std::optional<Point> from_proj(const Proj<Fp>& P) {
    if (!P[2].is_zero())
        return Point(P[0] / P[2], P[1] / P[2]);
    if (!P[1].is_zero())
        return Point::infinity();
    return std::nullopt;
}

// Normalised dual point, or nullopt when every coordinate lies in εF_p.
std::optional<DualPoint> from_proj(const Proj<DualNumber>& P) {
    if (P[2].is_unit())
        return DualPoint::affine(P[0] / P[2], P[1] / P[2]);
    if (P[1].is_unit()) {
        DualNumber x = P[0] / P[1], z = P[2] / P[1];
        REQUIRE(x.re().is_zero());
        REQUIRE(z.is_zero());
        return DualPoint::theta(x.eps());
    }
    return std::nullopt;
}

DualCurve random_lift(const Curve& C, Rng& rng, bool canonical) {
    if (canonical)
        return DualCurve(C);
    return DualCurve(C, rng.element(C.field()), rng.element(C.field()));
}

// A point of the lift over P: the ε-part solves the linearised equation.
DualPoint lift_over(const DualCurve& E, const Point& P, Rng& rng) {
    const FieldRef& f = E.field();
    if (P.is_infinity())
        return DualPoint::theta(rng.element(f));
    Fp x0 = P.x(), y0 = P.y();
    Fp slope = 3L * x0 * x0 + E.base().A();
    Fp rest = E.A1() * x0 + E.B1();
    if (y0.is_zero()) {
        Fp x1 = -rest / slope;
        return DualPoint::affine({x0, x1}, {y0, rng.element(f)});
    }
    Fp x1 = rng.element(f);
    return DualPoint::affine({x0, x1}, {y0, (slope * x1 + rest) / (2L * y0)});
}

DualPoint random_dual(const DualCurve& E, Rng& rng) { return lift_over(E, random_point(E.base(), rng), rng); }

// Curves carrying rational 2-torsion.
std::vector<Curve> curves_with_two_torsion() {
    std::vector<Curve> out;
    Rng rng(45);
    for (long p : {11L, 13L, 101L, 1009L}) {
        FieldRef f = PrimeField::make(p);
        for (int found = 0; found < 2;) {
            Fp A = rng.element(f), B = rng.element(f);
            if ((4L * A * A * A + 27L * B * B).is_zero())
                continue;
            Curve C(A, B);
            if (!two_torsion(C).empty()) {
                out.push_back(C);
                ++found;
            }
        }
    }
    return out;
}

} // namespace

TEST_CASE("the complete formula reproduces the affine group law over F_p") {
    Rng rng(41);
    for (long p : {5L, 11L, 101L}) {
        FieldRef f = PrimeField::make(p);
        for (int c = 0; c < 5; ++c) {
            Fp A = rng.element(f), B = rng.element(f);
            if ((4L * A * A * A + 27L * B * B).is_zero())
                continue;
            Curve C(A, B);
            std::vector<Point> pts = all_points(C);
            for (const Point& P : pts)
                for (const Point& Q : pts) {
                    auto R = from_proj(complete_add(A, B, to_proj(P, f), to_proj(Q, f)));
                    Point D = point_add(C, P, -Q);
                    bool exceptional = !D.is_infinity() && D.y().is_zero();
                    CHECK(R.has_value() != exceptional);
                    if (R)
                        CHECK(*R == point_add(C, P, Q));
                }
        }
    }
}

TEST_CASE("dual addition agrees with the complete projective formula") {
    Rng rng(42);
    std::size_t compared = 0;
    for (long p : {5L, 7L, 11L, 13L, 101L, 10007L}) {
        FieldRef f = PrimeField::make(p);
        for (int c = 0; c < 4; ++c) {
            Fp A = rng.element(f), B = rng.element(f);
            if ((4L * A * A * A + 27L * B * B).is_zero())
                continue;
            DualCurve E = random_lift(Curve(A, B), rng, c % 2 == 0);
            for (int t = 0; t < 200; ++t) {
                DualPoint P = random_dual(E, rng);
                DualPoint Q = random_dual(E, rng);
                switch (t % 5) {
                case 1: Q = dual_add(E, P, DualPoint::theta(rng.element(f))); break;
                case 2: Q = dual_add(E, -P, DualPoint::theta(rng.element(f))); break;
                case 3: Q = P; break;
                default: break;
                }
                REQUIRE(validate(E, P));
                REQUIRE(validate(E, Q));
                auto R = from_proj(complete_add(E.A(), E.B(), to_proj(P, f), to_proj(Q, f)));
                if (!R)
                    continue;
                ++compared;
                CHECK(dual_add(E, P, Q) == *R);
            }
        }
    }
    CHECK(compared > 3000);
}

TEST_CASE("degenerate configurations on the canonical lift") {
    Curve C = tiny_anomalous().front();
    DualCurve E(C);
    const FieldRef& f = C.field();
    Rng rng(43);
    for (int t = 0; t < 50; ++t) {
        Point P = random_affine(C, rng);
        Fp k = rng.element(f), l = rng.element(f);
        DualPoint Pt = E.embed(P);
        // Θ + Θ
        CHECK(dual_add(E, DualPoint::theta(k), DualPoint::theta(l)) == DualPoint::theta(k + l));
        // P + (−P + 𝒪_k) = 𝒪_k
        CHECK(dual_add(E, Pt, compose(E, -P, k)) == DualPoint::theta(k));
        // P + (P + 𝒪_k) = 2P + 𝒪_k
        CHECK(dual_add(E, Pt, compose(E, P, k)) == compose(E, point_double(C, P), k));
        // identity and inverse
        CHECK(dual_add(E, Pt, E.identity()) == Pt);
        CHECK(dual_add(E, compose(E, P, k), -compose(E, P, k)) == E.identity());
    }
}

TEST_CASE("points with y0 = 0 add and double correctly") {
    Rng rng(44);
    for (const Curve& C : curves_with_two_torsion()) {
        const FieldRef& f = C.field();
        for (bool canonical : {true, false}) {
            DualCurve E = random_lift(C, rng, canonical);
            for (const Point& T : two_torsion(C)) {
                for (int t = 0; t < 10; ++t) {
                    DualPoint P = lift_over(E, T, rng);
                    DualPoint Q = t % 2 ? lift_over(E, T, rng) : random_dual(E, rng);
                    REQUIRE(validate(E, P));
                    DualPoint sum = dual_add(E, P, Q);
                    CHECK(validate(E, sum));
                    CHECK(sum.reduce() == point_add(C, T, Q.reduce()));
                    auto R = from_proj(complete_add(E.A(), E.B(), to_proj(P, f), to_proj(Q, f)));
                    if (R)
                        CHECK(sum == *R);
                    DualPoint twice = dual_double(E, P);
                    CHECK(twice.is_theta());
                    CHECK(dual_add(E, twice, P) == dual_add(E, P, twice));
                }
            }
        }
    }
}

TEST_CASE("the dual group is associative and reduction is a homomorphism") {
    Rng rng(46);
    for (const Curve& C : evaluable_anomalous()) {
        for (bool canonical : {true, false}) {
            DualCurve E = random_lift(C, rng, canonical);
            for (int t = 0; t < 20; ++t) {
                DualPoint P = random_dual(E, rng), Q = random_dual(E, rng), R = random_dual(E, rng);
                CHECK(dual_add(E, dual_add(E, P, Q), R) == dual_add(E, P, dual_add(E, Q, R)));
                CHECK(dual_add(E, P, Q) == dual_add(E, Q, P));
                CHECK(dual_add(E, P, Q).reduce() == point_add(C, P.reduce(), Q.reduce()));
                CHECK(dual_scalar_mul(E, 5, P) == dual_add(E, dual_scalar_mul(E, 3, P), dual_double(E, P)));
                CHECK(dual_scalar_mul(E, -2, P) == -dual_double(E, P));
            }
        }
    }
}

TEST_CASE("decomposition on the canonical lift round-trips") {
    Rng rng(47);
    for (const Curve& C : evaluable_anomalous()) {
        DualCurve E(C);
        for (int t = 0; t < 20; ++t) {
            Point P = random_point(C, rng);
            Fp k = rng.element(C.field());
            DualPoint X = compose(E, P, k);
            CHECK(validate(E, X));
            auto [Q, l] = decompose(E, X);
            CHECK(Q == P);
            CHECK(l == k);
            DualPoint Y = random_dual(E, rng);
            auto [Q2, l2] = decompose(E, Y);
            CHECK(compose(E, Q2, l2) == Y);
        }
        // p·P̃ lands in the kernel of reduction
        DualPoint X = random_dual(E, rng);
        CHECK(dual_scalar_mul(E, C.p(), X).is_theta());
    }
}

TEST_CASE("lift_point produces valid points with the documented normalisation") {
    Rng rng(48);
    for (const Curve& C : curves_with_two_torsion()) {
        DualCurve E = random_lift(C, rng, false);
        for (const Point& P : all_points(C).size() < 2000 ? all_points(C) : std::vector<Point>{}) {
            DualPoint X = lift_point(E, P);
            CHECK(validate(E, X));
            CHECK(X.reduce() == P);
            if (!P.is_infinity() && !P.y().is_zero())
                CHECK(X.x().eps().is_zero());
            if (!P.is_infinity() && P.y().is_zero())
                CHECK(X.y().eps().is_zero());
        }
    }
}

TEST_CASE("invalid inputs are rejected") {
    Curve C = tiny_anomalous().front();
    const FieldRef& f = C.field();
    DualCurve canonical(C), other(C, f->one(), f->zero());
    Rng rng(49);
    Point P = random_affine(C, rng);
    DualPoint bad = DualPoint::affine({P.x(), f->zero()}, {P.y(), f->one()});
    if (P.y().is_zero() || !(3L * P.x() * P.x() + C.A()).is_zero())
        CHECK_FALSE(validate(canonical, bad));
    if (!validate(canonical, bad))
        CHECK_RAISES(dual_add(canonical, bad, bad), ErrorCode::InvalidPoint);
    CHECK_RAISES(decompose(other, lift_point(other, P)), ErrorCode::NotCanonical);
    CHECK_RAISES(canonical.embed(P).k(), ErrorCode::BadInput);
}

TEST_CASE("the dual j-invariant of the canonical lift has zero epsilon part") {
    for (const Curve& C : evaluable_anomalous()) {
        DualNumber j = j_dual(DualCurve(C));
        CHECK(j.eps().is_zero());
    }
}
