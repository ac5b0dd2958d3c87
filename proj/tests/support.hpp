#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dualpair/curve.hpp"
#include "dualpair/dual_curve.hpp"
#include "dualpair/rng.hpp"

namespace dualpair::testing {

// Anomalous curves with p ≤ 13, found once per test binary.
inline const std::vector<Curve>& tiny_anomalous() {
    static const std::vector<Curve> curves = find_anomalous(5, 13, 16, 101, kAnomalousTrialBudget);
    return curves;
}

// Anomalous curves with p ≥ 11, where translated evaluation points exist.
inline const std::vector<Curve>& evaluable_anomalous() {
    static const std::vector<Curve> curves = find_anomalous(11, 3000, 12, 202, kAnomalousTrialBudget);
    return curves;
}

inline Curve first_with(const std::vector<Curve>& curves, bool (*pred)(const Curve&)) {
    for (const Curve& C : curves)
        if (pred(C))
            return C;
    throw Error(ErrorCode::SearchExhausted, "no fixture curve satisfies the predicate");
}

inline bool generic_j(const Curve& C) { return !C.A().is_zero() && !C.B().is_zero(); }

inline Point random_affine(const Curve& C, Rng& rng) {
    for (;;) {
        Point P = random_point(C, rng);
        if (!P.is_infinity())
            return P;
    }
}

// All points of order dividing n.
inline std::vector<Point> torsion_points(const Curve& C, long n) {
    std::vector<Point> out;
    for (const Point& P : all_points(C))
        if (scalar_mul(C, n, P).is_infinity())
            out.push_back(P);
    return out;
}

// A curve over a prime p ≡ 1 (mod n) with E[n] ⊂ E(F_p), and a basis of it.
struct FullTorsion {
    Curve C;
    Point P;
    Point Q;
};

inline std::optional<FullTorsion> full_torsion_curve(long n, const mpz_class& p_lo, const mpz_class& p_hi, Rng& rng) {
    for (int attempt = 0; attempt < 200000; ++attempt) {
        mpz_class p;
        mpz_class start = rng.between(p_lo, p_hi);
        mpz_nextprime(p.get_mpz_t(), start.get_mpz_t());
        if (p > p_hi || (p - 1) % n != 0)
            continue;
        FieldRef f = PrimeField::make(p);
        Fp A = rng.element(f), B = rng.element(f);
        if ((4L * A * A * A + 27L * B * B).is_zero())
            continue;
        Curve C(A, B);
        if (count_points(C) % (n * n) != 0)
            continue;
        std::vector<Point> tors = torsion_points(C, n);
        if (static_cast<long>(tors.size()) != n * n)
            continue;
        Point P = Point::infinity();
        for (const Point& X : tors)
            if (!X.is_infinity())
                P = X;
        std::vector<Point> span;
        for (long i = 0; i < n; ++i)
            span.push_back(scalar_mul(C, i, P));
        for (const Point& X : tors) {
            bool inside = false;
            for (const Point& S : span)
                inside = inside || S == X;
            if (!inside)
                return FullTorsion{C, P, X};
        }
    }
    return std::nullopt;
}

} // namespace dualpair::testing

#define CHECK_RAISES(expr, expected)                                                                        \
    do {                                                                                                    \
        try {                                                                                               \
            (void)(expr);                                                                                   \
            FAIL_CHECK("expected " << ::dualpair::to_string(expected));                                     \
        } catch (const ::dualpair::Error& raised_) {                                                        \
            CHECK_MESSAGE(raised_.code() == (expected), raised_.what());                                    \
        }                                                                                                   \
    } while (false)
