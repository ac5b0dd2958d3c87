#include "dualpair/curve.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "dualpair/polynomial.hpp"

namespace dualpair {

Point::Point(const Fp& x, const Fp& y) : xy_(std::in_place, x, y) { check_same_field(x.field(), y.field()); }

const Fp& Point::x() const {
    if (!xy_)
        raise(ErrorCode::BadInput, "point at infinity has no x-coordinate");
    return xy_->first;
}

const Fp& Point::y() const {
    if (!xy_)
        raise(ErrorCode::BadInput, "point at infinity has no y-coordinate");
    return xy_->second;
}

Point Point::operator-() const {
    if (!xy_)
        return *this;
    return {xy_->first, -xy_->second};
}

std::ostream& operator<<(std::ostream& os, const Point& P) {
    if (P.is_infinity())
        return os << "inf";
    return os << "(" << P.x() << ", " << P.y() << ")";
}

Curve::Curve(const mpz_class& p, const mpz_class& A, const mpz_class& B) {
    FieldRef f = PrimeField::make(p);
    *this = Curve(f->element(A), f->element(B));
}

Curve::Curve(const Fp& A, const Fp& B) : A_(A), B_(B) {
    check_same_field(A.field(), B.field());
    if (discriminant().is_zero())
        raise(ErrorCode::BadInput, "singular curve: 4A^3 + 27B^2 = 0");
}

bool Curve::contains(const Point& P) const {
    if (P.is_infinity())
        return true;
    if (P.x().field() != field())
        check_same_field(P.x().field(), field());
    return P.y() * P.y() == rhs(P.x());
}

Point Curve::point(const mpz_class& x, const mpz_class& y) const {
    Point P(element(x), element(y));
    require_on_curve(*this, P);
    return P;
}

std::ostream& operator<<(std::ostream& os, const Curve& C) {
    return os << "y^2 = x^3 + " << C.A() << "x + " << C.B() << " over F_" << C.p().get_str();
}

void require_on_curve(const Curve& C, const Point& P) {
    if (!C.contains(P))
        raise(ErrorCode::PointNotOnCurve, "point is not on the curve");
}

Point add_unchecked(const Curve& C, const Point& P, const Point& Q) {
    if (P.is_infinity())
        return Q;
    if (Q.is_infinity())
        return P;
    if (P.x() == Q.x()) {
        if (P.y() + Q.y() == C.field()->zero())
            return Point::infinity();
        auto [x3, y3] = chord_result(P.x(), P.y(), P.x(), tangent_slope(P.x(), P.y(), C.A()));
        return {x3, y3};
    }
    Fp lambda = (Q.y() - P.y()) / (Q.x() - P.x());
    auto [x3, y3] = chord_result(P.x(), P.y(), Q.x(), lambda);
    return {x3, y3};
}

Point point_add(const Curve& C, const Point& P, const Point& Q) {
    require_on_curve(C, P);
    require_on_curve(C, Q);
    return add_unchecked(C, P, Q);
}

Point point_double(const Curve& C, const Point& P) { return point_add(C, P, P); }

Point scalar_mul(const Curve& C, const mpz_class& n, const Point& P) {
    require_on_curve(C, P);
    if (n < 0)
        return scalar_mul(C, -n, -P);
    Point acc;
    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        acc = add_unchecked(C, acc, acc);
        if (mpz_tstbit(n.get_mpz_t(), i))
            acc = add_unchecked(C, acc, P);
    }
    return acc;
}

std::pair<mpz_class, mpz_class> hasse_interval(const mpz_class& p) {
    mpz_class four_p = 4 * p;
    mpz_class w;
    mpz_sqrt(w.get_mpz_t(), four_p.get_mpz_t());
    return {p + 1 - w, p + 1 + w};
}

mpz_class count_points_exhaustive(const Curve& C) {
    const mpz_class& p = C.p();
    if (p > kExhaustiveCountLimit)
        raise(ErrorCode::BadInput, "exhaustive count limited to p <= 100000");
    const unsigned long pu = p.get_ui();
    const mpz_class a = C.A().value(), b = C.B().value();
    mpz_class total = 1;
    mpz_class v;
    for (unsigned long x = 0; x < pu; ++x) {
        v = x;
        v = (v * v + a) * x + b;
        mpz_mod(v.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
        total += 1 + mpz_legendre(v.get_mpz_t(), p.get_mpz_t());
    }
    return total;
}

namespace {

using PointKey = std::pair<mpz_class, mpz_class>;

} // namespace

std::vector<mpz_class> hasse_annihilators(const Curve& C, const Point& P) {
    auto [lo, hi] = hasse_interval(C.p());
    std::vector<mpz_class> hits;
    if (P.is_infinity()) {
        for (mpz_class n = lo; n <= hi; ++n)
            hits.push_back(n);
        return hits;
    }

    mpz_class width = hi - lo + 1;
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), width.get_mpz_t());
    if (s * s < width)
        ++s;

    // Baby steps jP, 0 ≤ j < s. A repeat means ord(P) < s.
    std::map<PointKey, unsigned long> baby;
    Point jP;
    const unsigned long su = s.get_ui();
    for (unsigned long j = 1; j < su; ++j) {
        jP = add_unchecked(C, jP, P);
        if (jP.is_infinity()) {
            mpz_class first = ((lo + j - 1) / j) * j;
            for (mpz_class n = first; n <= hi; n += j)
                hits.push_back(n);
            return hits;
        }
        baby.emplace(PointKey(jP.x().value(), jP.y().value()), j);
    }

    Point giant = scalar_mul(C, s, P);
    Point Q = scalar_mul(C, lo, P);
    for (mpz_class base = lo; base <= hi; base += s) {
        // base·P + jP = ∞  ⇔  jP = −(base·P)
        if (Q.is_infinity()) {
            hits.push_back(base);
        } else {
            Point target = -Q;
            auto it = baby.find(PointKey(target.x().value(), target.y().value()));
            if (it != baby.end() && base + it->second <= hi)
                hits.push_back(base + it->second);
        }
        Q = add_unchecked(C, Q, giant);
    }
    return hits;
}

mpz_class count_points_bsgs(const Curve& C, std::uint64_t seed, int points) {
    Rng rng(seed);
    std::vector<mpz_class> candidates;
    bool first = true;
    for (int attempt = 0; attempt < points; ++attempt) {
        Point P = random_point(C, rng);
        std::vector<mpz_class> hits = hasse_annihilators(C, P);
        if (first) {
            candidates = std::move(hits);
            first = false;
        } else {
            std::vector<mpz_class> kept;
            std::set_intersection(candidates.begin(), candidates.end(), hits.begin(), hits.end(),
                                  std::back_inserter(kept));
            candidates = std::move(kept);
        }
        if (candidates.size() == 1)
            return candidates.front();
    }
    raise(ErrorCode::OrderAmbiguous,
          "point orders leave " + std::to_string(candidates.size()) + " candidates in the Hasse interval");
}

mpz_class count_points(const Curve& C) {
    if (C.p() <= kExhaustiveCountLimit)
        return count_points_exhaustive(C);
    return count_points_bsgs(C);
}

Point random_point(const Curve& C, Rng& rng) {
    for (;;) {
        Fp x = rng.element(C.field());
        Fp r = C.rhs(x);
        if (auto y = r.sqrt()) {
            if (rng.coin())
                return {x, -*y};
            return {x, *y};
        }
    }
}

std::vector<Point> all_points(const Curve& C) {
    if (C.p() > kExhaustiveCountLimit)
        raise(ErrorCode::BadInput, "point enumeration limited to p <= 100000");
    std::vector<Point> out{Point::infinity()};
    const long p = static_cast<long>(C.p().get_ui());
    for (long xv = 0; xv < p; ++xv) {
        Fp x = C.field()->element(xv);
        Fp r = C.rhs(x);
        if (r.is_zero()) {
            out.emplace_back(x, r);
        } else if (auto y = r.sqrt()) {
            Fp y1 = *y, y2 = -*y;
            if (y2.value() < y1.value())
                std::swap(y1, y2);
            out.emplace_back(x, y1);
            out.emplace_back(x, y2);
        }
    }
    return out;
}

std::vector<Point> two_torsion(const Curve& C) {
    std::vector<Point> out;
    for (const Fp& x : cubic_roots(C.A(), C.B()))
        out.emplace_back(x, C.field()->zero());
    return out;
}

bool is_anomalous(const Curve& C) { return count_points(C) == C.p(); }

std::vector<Curve> find_anomalous(const mpz_class& p_min, const mpz_class& p_max, std::size_t count,
                                  std::uint64_t seed, std::uint64_t trial_budget) {
    mpz_class lo = p_min < 5 ? mpz_class(5) : p_min;
    mpz_class first_prime;
    mpz_class lo_m1 = lo - 1;
    mpz_nextprime(first_prime.get_mpz_t(), lo_m1.get_mpz_t());
    if (p_max < lo || first_prime > p_max)
        raise(ErrorCode::BadInput, "no prime > 3 in [" + p_min.get_str() + ", " + p_max.get_str() + "]");

    Rng rng(seed);
    std::vector<Curve> found;
    std::set<std::tuple<mpz_class, mpz_class, mpz_class>> seen;
    for (std::uint64_t trial = 0; trial < trial_budget && found.size() < count; ++trial) {
        mpz_class start = rng.between(lo, p_max) - 1;
        mpz_class p;
        mpz_nextprime(p.get_mpz_t(), start.get_mpz_t());
        if (p > p_max)
            p = first_prime;

        FieldRef f = PrimeField::make(p);
        Fp A = rng.element(f);
        Fp B = rng.element(f);
        if ((4L * A * A * A + 27L * B * B).is_zero())
            continue;
        Curve C(A, B);
        Point P = random_point(C, rng);
        if (P.y().is_zero())
            continue;
        if (!scalar_mul(C, p, P).is_infinity())
            continue;
        if (count_points(C) != p)
            continue;
        if (seen.emplace(p, A.value(), B.value()).second)
            found.push_back(C);
    }
    if (found.size() < count)
        raise(ErrorCode::SearchExhausted, "found " + std::to_string(found.size()) + " of " +
                                              std::to_string(count) + " anomalous curves within budget");
    return found;
}

} // namespace dualpair
