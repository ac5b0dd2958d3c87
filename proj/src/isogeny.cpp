#include "dualpair/isogeny.hpp"

#include <algorithm>
#include <map>

namespace dualpair {

namespace {

// a(x) + b(x)·y modulo y² = f(x).
struct YPoly {
    Polynomial a;
    Polynomial b;
};

YPoly mul(const YPoly& u, const YPoly& v, const Polynomial& f) {
    return {u.a * v.a + u.b * v.b * f, u.a * v.b + u.b * v.a};
}

YPoly sub(const YPoly& u, const YPoly& v) { return {u.a - v.a, u.b - v.b}; }

YPoly cube(const YPoly& u, const Polynomial& f) { return mul(mul(u, u, f), u, f); }

// u / (2y), exact.
YPoly div_2y(const YPoly& u, const Polynomial& f) {
    auto [q, rem] = divmod(u.a, f);
    if (!rem.is_zero())
        raise(ErrorCode::BadInput, "division polynomial recursion is not exact");
    const Fp half = f.field()->element(2).inv();
    return {half * u.b, half * q};
}

// Value in F_p[x] of an element known to be free of y.
Polynomial x_part(const YPoly& u) {
    if (!u.b.is_zero())
        raise(ErrorCode::BadInput, "expected an element of F_p[x]");
    return u.a;
}

Polynomial poly(const FieldRef& f, std::initializer_list<Fp> coeffs) { return Polynomial(f, coeffs); }

std::vector<YPoly> division_polynomials(const Curve& C, int upto) {
    const FieldRef& F = C.field();
    const Fp& A = C.A();
    const Fp& B = C.B();
    const Polynomial f = Polynomial::weierstrass_cubic(A, B);
    const Polynomial zero(F);
    auto c = [&](long v) { return F->element(v); };

    std::vector<YPoly> psi;
    psi.push_back({zero, zero});
    psi.push_back({Polynomial::constant(F->one()), zero});
    psi.push_back({zero, Polynomial::constant(c(2))});
    psi.push_back({poly(F, {-(A * A), c(12) * B, c(6) * A, F->zero(), c(3)}), zero});
    psi.push_back({zero, c(4) * poly(F, {-(c(8) * B * B) - A * A * A, -(c(4) * A * B), -(c(5) * A * A), c(20) * B,
                                        c(5) * A, F->zero(), F->one()})});
    for (int k = 5; k <= upto; ++k) {
        const int m = k / 2;
        if (k % 2 == 1) {
            psi.push_back(sub(mul(psi[m + 2], cube(psi[m], f), f), mul(psi[m - 1], cube(psi[m + 1], f), f)));
        } else {
            YPoly inner = sub(mul(psi[m + 2], mul(psi[m - 1], psi[m - 1], f), f),
                              mul(psi[m - 2], mul(psi[m + 1], psi[m + 1], f), f));
            psi.push_back(div_2y(mul(inner, psi[m], f), f));
        }
    }
    return psi;
}

std::vector<Point> rational_kernel_points(const Curve& C, const Polynomial& den) {
    std::vector<Point> out{Point::infinity()};
    if (den.degree() <= 0)
        return out;
    for (const Fp& x : roots(den)) {
        Fp rhs = C.rhs(x);
        auto y = rhs.sqrt();
        if (!y)
            continue;
        out.emplace_back(x, *y);
        if (!y->is_zero())
            out.emplace_back(x, -*y);
    }
    return out;
}

bool contains(const std::vector<Point>& set, const Point& P) { return std::find(set.begin(), set.end(), P) != set.end(); }

RationalFunction constant_function(const Fp& c) { return RationalFunction(Polynomial::constant(c)); }

} // namespace

std::pair<Polynomial, Polynomial> division_polynomial(const Curve& C, int n) {
    if (n < 0)
        raise(ErrorCode::BadInput, "division polynomials need n >= 0");
    auto psi = division_polynomials(C, std::max(n, 4));
    return {psi[n].a, psi[n].b};
}

Isogeny velu(const Curve& C, const std::vector<Point>& kernel) {
    if (!contains(kernel, Point::infinity()))
        raise(ErrorCode::NotASubgroup, "kernel must contain the point at infinity");
    for (const Point& P : kernel)
        if (!C.contains(P))
            raise(ErrorCode::NotASubgroup, "kernel point not on the curve");
    for (const Point& P : kernel)
        for (const Point& Q : kernel)
            if (!contains(kernel, point_add(C, P, Q)))
                raise(ErrorCode::NotASubgroup, "kernel is not closed under addition");

    const FieldRef& F = C.field();
    const Polynomial X = Polynomial::x(F);
    RationalFunction r(X);
    Fp v = F->zero();
    Fp w = F->zero();
    std::vector<Point> distinct;
    for (const Point& Q : kernel) {
        if (Q.is_infinity() || contains(distinct, Q) || contains(distinct, -Q))
            continue;
        distinct.push_back(Q);
        const Fp& xq = Q.x();
        const Fp gx = 3L * xq * xq + C.A();
        const Fp vq = Q.y().is_zero() ? gx : 2L * gx;
        const Fp uq = 4L * Q.y() * Q.y();
        const Polynomial lin = X - Polynomial::constant(xq);
        r = r + RationalFunction(Polynomial::constant(vq), lin);
        if (!uq.is_zero())
            r = r + RationalFunction(Polynomial::constant(uq), lin * lin);
        v += vq;
        w += uq + xq * vq;
    }
    Curve target(C.A() - 5L * v, C.B() - 7L * w);
    std::vector<Point> pts{Point::infinity()};
    for (const Point& P : kernel)
        if (!P.is_infinity())
            pts.push_back(P);
    return {C, target, r, r.derivative(), mpz_class(static_cast<unsigned long>(kernel.size())), pts, F->one()};
}

Isogeny velu_kernel_polynomial(const Curve& C, const Polynomial& psi_in) {
    const FieldRef& F = C.field();
    check_same_field(F, psi_in.field());
    if (psi_in.is_zero())
        raise(ErrorCode::NotASubgroup, "kernel polynomial must be nonzero");
    const Polynomial psi = psi_in.monic();
    const long d = psi.degree();
    if (d == 0)
        return velu(C, {Point::infinity()});

    const Polynomial X = Polynomial::x(F);
    const Polynomial f = Polynomial::weierstrass_cubic(C.A(), C.B());
    const Polynomial df = f.derivative();
    const Polynomial dpsi = psi.derivative();
    const Polynomial ddpsi = dpsi.derivative();
    auto coeff = [&](long i) { return i >= 0 ? psi.coeff(static_cast<std::size_t>(i)) : F->zero(); };
    const Fp e1 = -coeff(d - 1);
    const Fp e2 = coeff(d - 2);
    const Fp e3 = -coeff(d - 3);
    const Fp dd = F->element(d);
    const Fp ell = F->element(2 * d + 1);

    Polynomial num = (ell * X - Polynomial::constant(2L * e1)) * psi * psi;
    num -= F->element(2) * (df * dpsi * psi);
    num -= F->element(4) * (f * (ddpsi * psi - dpsi * dpsi));
    RationalFunction r(num, psi * psi);

    const Fp p1 = e1;
    const Fp p2 = e1 * p1 - 2L * e2;
    const Fp p3 = e1 * p2 - e2 * p1 + 3L * e3;
    const Fp v = 6L * p2 + 2L * C.A() * dd;
    const Fp w = 10L * p3 + 6L * C.A() * p1 + 4L * C.B() * dd;

    Curve target = [&] {
        try {
            return Curve(C.A() - 5L * v, C.B() - 7L * w);
        } catch (const Error&) {
            raise(ErrorCode::NotASubgroup, "kernel polynomial does not define an isogeny");
        }
    }();
    Isogeny phi{C, target, r, r.derivative(), mpz_class(2 * d + 1), rational_kernel_points(C, psi), F->one()};
    if (!satisfies_curve_identity(phi))
        raise(ErrorCode::NotASubgroup, "kernel polynomial does not define an isogeny");
    return phi;
}

Isogeny mult_by_n(const Curve& C, int n) {
    if (n < 1 || n > kMultByNLimit)
        raise(ErrorCode::BadInput, "mult_by_n supports 1 <= n <= " + std::to_string(kMultByNLimit));
    const Polynomial f = Polynomial::weierstrass_cubic(C.A(), C.B());
    const auto psi = division_polynomials(C, std::max(2 * n, 4));
    const Polynomial psi_n_sq = x_part(mul(psi[n], psi[n], f));
    const Polynomial neighbours = x_part(mul(psi[n - 1], psi[n + 1], f));
    const Polynomial X = Polynomial::x(C.field());
    RationalFunction r(X * psi_n_sq - neighbours, psi_n_sq);
    if (!psi[2 * n].a.is_zero())
        raise(ErrorCode::BadInput, "even division polynomial must be odd in y");
    RationalFunction s(psi[2 * n].b, C.field()->element(2) * (psi_n_sq * psi_n_sq));
    return {C, C, r, s, mpz_class(n * n), rational_kernel_points(C, r.den()), C.field()->element(n)};
}

Isogeny frobenius(const Curve& C) {
    if (C.p() > kFrobeniusPrimeLimit)
        raise(ErrorCode::BadInput, "frobenius is only materialized for p <= " + std::to_string(kFrobeniusPrimeLimit));
    const FieldRef& F = C.field();
    const unsigned long p = C.p().get_ui();
    const Polynomial f = Polynomial::weierstrass_cubic(C.A(), C.B());
    Polynomial s = Polynomial::constant(F->one());
    for (unsigned long i = 0; i < (p - 1) / 2; ++i)
        s = s * f;
    return {C, C, RationalFunction(Polynomial::monomial(F->one(), p)), RationalFunction(s), C.p(),
            {Point::infinity()}, F->zero()};
}

bool in_kernel(const Isogeny& phi, const Point& P) {
    if (P.is_infinity())
        return true;
    return phi.r_den()(P.x()).is_zero();
}

Point isogeny_eval(const Isogeny& phi, const Point& P) {
    require_on_curve(phi.source, P);
    if (in_kernel(phi, P))
        return Point::infinity();
    return {phi.r(P.x()), P.y() * phi.s(P.x())};
}

Fp compute_m(const Isogeny& phi) {
    if (phi.s.num().is_zero())
        raise(ErrorCode::BadInput, "s vanishes identically");
    RationalFunction q = phi.r.derivative() / phi.s;
    if (q.num().degree() > 0 || q.den().degree() > 0)
        raise(ErrorCode::BadInput, "r'/s is not constant; the map is not an isogeny");
    return q.num().coeff(0);
}

Fp m_at(const Isogeny& phi, const Fp& x) { return phi.r.derivative()(x) / phi.s(x); }

Isogeny compose(const Isogeny& psi, const Isogeny& phi) {
    if (psi.source != phi.target)
        raise(ErrorCode::BadInput, "isogenies do not compose: target and source differ");
    RationalFunction r = psi.r.compose(phi.r);
    RationalFunction s = psi.s.compose(phi.r) * phi.s;
    return {phi.source, psi.target, r, s, psi.degree * phi.degree, rational_kernel_points(phi.source, r.den()),
            psi.m * phi.m};
}

bool satisfies_curve_identity(const Isogeny& phi) {
    const RationalFunction f(Polynomial::weierstrass_cubic(phi.source.A(), phi.source.B()));
    const RationalFunction& r = phi.r;
    RationalFunction lhs = f * phi.s * phi.s;
    RationalFunction rhs = r * r * r + constant_function(phi.target.A()) * r + constant_function(phi.target.B());
    return lhs == rhs;
}

namespace {

DualPoint eval_off_kernel(const Isogeny& phi, const DualPoint& P) {
    return DualPoint::affine(phi.r(P.x()), P.y() * phi.s(P.x()));
}

} // namespace

DualPoint lift_isogeny_eval(const Isogeny& phi, const DualPoint& P, const Point& T) {
    DualCurve src(phi.source);
    DualCurve tgt(phi.target);
    if (!validate(src, P))
        raise(ErrorCode::InvalidPoint, "dual point does not lie on the canonical lift of the source");
    if (P.is_theta())
        return DualPoint::theta(phi.m * P.k());
    if (!in_kernel(phi, P.reduce()))
        return eval_off_kernel(phi, P);
    require_on_curve(phi.source, T);
    if (in_kernel(phi, T))
        raise(ErrorCode::BadInput, "translation point must lie outside the kernel");
    DualPoint moved = eval_off_kernel(phi, dual_add(src, P, src.embed(T)));
    return dual_add(tgt, moved, tgt.embed(isogeny_eval(phi, -T)));
}

DualPoint lift_isogeny_eval(const Isogeny& phi, const DualPoint& P, std::uint64_t seed) {
    if (P.is_theta() || !in_kernel(phi, P.reduce()))
        return lift_isogeny_eval(phi, P, Point::infinity());
    Rng rng(seed);
    for (int i = 0; i < 1000; ++i) {
        Point T = random_point(phi.source, rng);
        if (!in_kernel(phi, T))
            return lift_isogeny_eval(phi, P, T);
    }
    raise(ErrorCode::SearchExhausted, "no rational point outside the kernel");
}

bool check_functoriality(const Isogeny& phi, const DualPoint& P, const DualPoint& Q) {
    DualCurve src(phi.source);
    DualCurve tgt(phi.target);
    PairingValue before = e_p_full(src, P, Q);
    PairingValue after = e_p_full(tgt, lift_isogeny_eval(phi, P), lift_isogeny_eval(phi, Q));
    return after == before.pow(phi.degree);
}

} // namespace dualpair
