#include "dualpair/dual_curve.hpp"

namespace dualpair {

const Fp& DualPoint::k() const {
    if (xy_)
        raise(ErrorCode::BadInput, "affine dual point has no Theta coordinate");
    return k_;
}

const DualNumber& DualPoint::x() const {
    if (!xy_)
        raise(ErrorCode::BadInput, "Theta point has no affine x-coordinate");
    return xy_->first;
}

const DualNumber& DualPoint::y() const {
    if (!xy_)
        raise(ErrorCode::BadInput, "Theta point has no affine y-coordinate");
    return xy_->second;
}

Point DualPoint::reduce() const {
    if (!xy_)
        return Point::infinity();
    return {xy_->first.re(), xy_->second.re()};
}

DualPoint DualPoint::operator-() const {
    if (!xy_)
        return theta(-k_);
    return affine(xy_->first, -xy_->second);
}

std::ostream& operator<<(std::ostream& os, const DualPoint& P) {
    if (P.is_theta())
        return os << "O_" << P.k();
    return os << "(" << P.x() << ", " << P.y() << ")";
}

DualCurve::DualCurve(const Curve& base) : base_(base), A1_(base.field()->zero()), B1_(base.field()->zero()) {}

DualCurve::DualCurve(const Curve& base, const Fp& A1, const Fp& B1) : base_(base), A1_(A1), B1_(B1) {
    check_same_field(base.field(), A1.field());
    check_same_field(base.field(), B1.field());
}

DualPoint DualCurve::embed(const Point& P) const {
    if (P.is_infinity())
        return identity();
    return DualPoint::affine(DualNumber(P.x()), DualNumber(P.y()));
}

bool validate(const DualCurve& E, const DualPoint& P) {
    if (P.is_theta())
        return P.k().field() == E.field() || P.k().modulus() == E.base().p();
    const Curve& C = E.base();
    const Fp& x0 = P.x().re();
    const Fp& x1 = P.x().eps();
    const Fp& y0 = P.y().re();
    const Fp& y1 = P.y().eps();
    if (!C.contains(Point(x0, y0)))
        return false;
    return 2L * y0 * y1 == (3L * x0 * x0 + C.A()) * x1 + E.A1() * x0 + E.B1();
}

DualPoint lift_point(const DualCurve& E, const Point& P) {
    require_on_curve(E.base(), P);
    if (P.is_infinity())
        return E.identity();
    const FieldRef& f = E.field();
    const Fp& x0 = P.x();
    const Fp& y0 = P.y();
    Fp forcing = E.A1() * x0 + E.B1();
    if (!y0.is_zero())
        return DualPoint::affine(DualNumber(x0), DualNumber(y0, forcing / (2L * y0)));
    // y₀ = 0 forces 3x₀² + A ≠ 0 on a non-singular curve
    Fp slope = 3L * x0 * x0 + E.base().A();
    return DualPoint::affine(DualNumber(x0, -(forcing / slope)), DualNumber(y0, f->zero()));
}

namespace {

// 𝒪_k + (x, y) = (x − 2y₀kε, y − (3x₀² + A)kε)
DualPoint translate_by_theta(const DualCurve& E, const DualPoint& P, const Fp& k) {
    const Fp& x0 = P.x().re();
    const Fp& y0 = P.y().re();
    const Fp zero = E.field()->zero();
    DualNumber dx(zero, -(2L * y0 * k));
    DualNumber dy(zero, -((3L * x0 * x0 + E.base().A()) * k));
    return DualPoint::affine(P.x() + dx, P.y() + dy);
}

DualPoint double_affine(const DualCurve& E, const DualPoint& P) {
    const Fp& x0 = P.x().re();
    const Fp& y0 = P.y().re();
    if (!y0.is_zero()) {
        DualNumber lambda = tangent_slope(P.x(), P.y(), E.A());
        auto [x3, y3] = chord_result(P.x(), P.y(), P.x(), lambda);
        return DualPoint::affine(x3, y3);
    }
    // y = cε: the tangent meets the line at infinity in 𝒪_{2c/(3x₀²+A)}
    Fp c = P.y().eps();
    Fp slope = 3L * x0 * x0 + E.base().A();
    return DualPoint::theta(-(2L * c) / slope);
}

} // namespace

DualPoint dual_add_unchecked(const DualCurve& E, const DualPoint& P, const DualPoint& Q) {
    if (P.is_theta() && Q.is_theta())
        return DualPoint::theta(P.k() + Q.k());
    if (P.is_theta())
        return translate_by_theta(E, Q, P.k());
    if (Q.is_theta())
        return translate_by_theta(E, P, Q.k());

    const Fp& xp0 = P.x().re();
    const Fp& xq0 = Q.x().re();
    if (xp0 != xq0) {
        DualNumber lambda = (Q.y() - P.y()) / (Q.x() - P.x());
        auto [x3, y3] = chord_result(P.x(), P.y(), Q.x(), lambda);
        return DualPoint::affine(x3, y3);
    }

    const Fp& yp0 = P.y().re();
    const Fp& yq0 = Q.y().re();
    if (yp0 == yq0) {
        if (P == Q)
            return double_affine(E, P);
        // Q = P + 𝒪_k: recover k from the ε-difference, then 2P + 𝒪_k.
        Fp k = yp0.is_zero() ? -((Q.y() - P.y()).eps() / (3L * xp0 * xp0 + E.base().A()))
                             : -((Q.x() - P.x()).eps() / (2L * yp0));
        return dual_add_unchecked(E, double_affine(E, P), DualPoint::theta(k));
    }
    if (yq0 == -yp0) {
        // Q = −P + 𝒪_k, so P + Q = 𝒪_k with k = α/(2y₀)
        Fp alpha = (Q.x() - P.x()).eps();
        return DualPoint::theta(alpha / (2L * yp0));
    }
    raise(ErrorCode::InvalidPoint, "affine points share x but not a valid y relation");
}

DualPoint dual_add(const DualCurve& E, const DualPoint& P, const DualPoint& Q) {
    if (!validate(E, P) || !validate(E, Q))
        raise(ErrorCode::InvalidPoint, "dual point does not lie on the lifted curve");
    return dual_add_unchecked(E, P, Q);
}

DualPoint dual_double(const DualCurve& E, const DualPoint& P) { return dual_add(E, P, P); }

DualPoint dual_scalar_mul(const DualCurve& E, const mpz_class& n, const DualPoint& P) {
    if (!validate(E, P))
        raise(ErrorCode::InvalidPoint, "dual point does not lie on the lifted curve");
    if (n < 0)
        return dual_scalar_mul(E, -n, -P);
    DualPoint acc = E.identity();
    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        acc = dual_add_unchecked(E, acc, acc);
        if (mpz_tstbit(n.get_mpz_t(), i))
            acc = dual_add_unchecked(E, acc, P);
    }
    return acc;
}

std::pair<Point, Fp> decompose(const DualCurve& E, const DualPoint& P) {
    if (!E.is_canonical())
        raise(ErrorCode::NotCanonical, "decomposition needs the canonical lift");
    if (!validate(E, P))
        raise(ErrorCode::InvalidPoint, "dual point does not lie on the lifted curve");
    if (P.is_theta())
        return {Point::infinity(), P.k()};
    const Fp& x0 = P.x().re();
    const Fp& y0 = P.y().re();
    if (!y0.is_zero())
        return {Point(x0, y0), -(P.x().eps() / (2L * y0))};
    return {Point(x0, y0), -(P.y().eps() / (3L * x0 * x0 + E.base().A()))};
}

DualPoint compose(const DualCurve& E, const Point& P, const Fp& k) {
    return dual_add_unchecked(E, E.embed(P), DualPoint::theta(k));
}

DualNumber j_dual(const DualCurve& E) {
    DualNumber A = E.A();
    DualNumber B = E.B();
    DualNumber four_a3 = 4L * (A * A * A);
    return four_a3 / (four_a3 + 27L * (B * B));
}

} // namespace dualpair
