#include <doctest.h>

#include <set>

#include "dualpair/curve.hpp"
#include "support.hpp"

using namespace dualpair;
using namespace dualpair::testing;

namespace {

// O(p²) tally over every (x, y).
long naive_count(const Curve& C) {
    const long p = C.p().get_si();
    long n = 1;
    for (long x = 0; x < p; ++x)
        for (long y = 0; y < p; ++y)
            n += C.contains(Point(C.element(x), C.element(y))) ? 1 : 0;
    return n;
}

Curve random_curve(const mpz_class& p, Rng& rng) {
    FieldRef f = PrimeField::make(p);
    for (;;) {
        Fp A = rng.element(f), B = rng.element(f);
        if (!(4L * A * A * A + 27L * B * B).is_zero())
            return Curve(A, B);
    }
}

} // namespace

TEST_CASE("curve construction validates its input") {
    CHECK_NOTHROW(Curve(7, 1, 1));
    CHECK_RAISES(Curve(7, 0, 0), ErrorCode::BadInput);
    CHECK_RAISES(Curve(9, 1, 1), ErrorCode::BadInput);
    Curve C(7, 1, 1);
    CHECK_RAISES(C.point(0, 0), ErrorCode::PointNotOnCurve);
    CHECK_RAISES(point_add(C, Point(C.element(0), C.element(0)), Point::infinity()), ErrorCode::PointNotOnCurve);
}

TEST_CASE("point counts agree with a naive double loop") {
    Rng rng(31);
    for (long p : {5L, 7L, 11L, 13L, 53L, 97L}) {
        for (int t = 0; t < 6; ++t) {
            Curve C = random_curve(p, rng);
            CHECK(count_points_exhaustive(C) == naive_count(C));
            CHECK(static_cast<long>(all_points(C).size()) == naive_count(C));
        }
    }
}

TEST_CASE("baby-step giant-step count agrees with the exhaustive tally") {
    Rng rng(32);
    for (long p : {1009L, 10007L, 65537L}) {
        for (int t = 0; t < 5; ++t) {
            Curve C = random_curve(p, rng);
            CHECK(count_points_bsgs(C, 7 + t) == count_points_exhaustive(C));
        }
    }
}

TEST_CASE("the group law is associative and commutative with the right identity") {
    Rng rng(33);
    for (long p : {11L, 101L, 10007L}) {
        Curve C = random_curve(p, rng);
        for (int t = 0; t < 50; ++t) {
            Point P = random_point(C, rng), Q = random_point(C, rng), R = random_point(C, rng);
            CHECK(point_add(C, P, Q) == point_add(C, Q, P));
            CHECK(point_add(C, point_add(C, P, Q), R) == point_add(C, P, point_add(C, Q, R)));
            CHECK(point_add(C, P, Point::infinity()) == P);
            CHECK(point_add(C, P, -P).is_infinity());
            CHECK(point_double(C, P) == point_add(C, P, P));
            CHECK(C.contains(point_add(C, P, Q)));
        }
    }
}

TEST_CASE("scalar multiplication is linear and annihilated by the group order") {
    Rng rng(34);
    Curve C = random_curve(1009, rng);
    mpz_class N = count_points(C);
    for (int t = 0; t < 20; ++t) {
        Point P = random_point(C, rng);
        CHECK(scalar_mul(C, N, P).is_infinity());
        CHECK(scalar_mul(C, 0, P).is_infinity());
        CHECK(scalar_mul(C, -5, P) == -scalar_mul(C, 5, P));
        CHECK(scalar_mul(C, 17, P) == point_add(C, scalar_mul(C, 9, P), scalar_mul(C, 8, P)));
    }
}

TEST_CASE("two-torsion points are exactly the affine points with y = 0") {
    Rng rng(35);
    for (int t = 0; t < 20; ++t) {
        Curve C = random_curve(101, rng);
        std::vector<Point> expected;
        for (const Point& P : all_points(C))
            if (!P.is_infinity() && P.y().is_zero())
                expected.push_back(P);
        CHECK(two_torsion(C) == expected);
    }
}

TEST_CASE("hasse annihilators contain the group order") {
    Rng rng(36);
    Curve C = random_curve(10007, rng);
    auto [lo, hi] = hasse_interval(C.p());
    mpz_class N = count_points(C);
    CHECK(lo <= N);
    CHECK(N <= hi);
    std::vector<mpz_class> cand = hasse_annihilators(C, random_point(C, rng));
    CHECK(std::find(cand.begin(), cand.end(), N) != cand.end());
}

TEST_CASE("find_anomalous returns distinct curves with p points, deterministically") {
    std::vector<Curve> a = find_anomalous(5, 200, 10, 41);
    std::vector<Curve> b = find_anomalous(5, 200, 10, 41);
    CHECK(a.size() == 10);
    CHECK(a == b);
    std::set<std::tuple<mpz_class, mpz_class, mpz_class>> seen;
    for (const Curve& C : a) {
        CHECK(count_points_exhaustive(C) == C.p());
        CHECK(naive_count(C) == C.p().get_si());
        CHECK(is_anomalous(C));
        seen.insert({C.p(), C.A().value(), C.B().value()});
    }
    CHECK(seen.size() == a.size());
    for (const Curve& C : find_anomalous(100000, 1000000, 3, 42)) {
        CHECK(C.p() >= 100000);
        CHECK(count_points(C) == C.p());
    }
}

TEST_CASE("find_anomalous reports empty ranges and exhausted budgets") {
    CHECK_RAISES(find_anomalous(4, 4, 1), ErrorCode::BadInput);
    CHECK_RAISES(find_anomalous(24, 28, 1), ErrorCode::BadInput);
    CHECK_RAISES(find_anomalous(5, 7, 1000, 1, 5000), ErrorCode::SearchExhausted);
}
