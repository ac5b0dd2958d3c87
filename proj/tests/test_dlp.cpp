#include <doctest.h>

#include "dualpair/dlp.hpp"
#include "support.hpp"

using namespace dualpair;
using namespace dualpair::testing;

namespace {

constexpr AttackMethod kMethods[] = {AttackMethod::Semaev, AttackMethod::Rueck, AttackMethod::Pairing,
                                     AttackMethod::Lift};

DlpInstance random_instance(const Curve& C, Rng& rng, mpz_class& n) {
    Point P = random_affine(C, rng);
    n = rng.below(C.p());
    return {C, P, scalar_mul(C, n, P)};
}

const std::vector<Curve>& large_anomalous() {
    static const std::vector<Curve> curves = find_anomalous(100000, 1000000, 4, 303);
    return curves;
}

// Every lift (A₁, B₁) of C, checked against the scaling equations directly.
template <class F>
void for_each_lift(const Curve& C, F&& body) {
    const long p = C.p().get_si();
    for (long a1 = 0; a1 < p; ++a1)
        for (long b1 = 0; b1 < p; ++b1)
            body(DualCurve(C, C.element(a1), C.element(b1)));
}

} // namespace

TEST_CASE("every attack recovers n on small and large anomalous curves") {
    Rng rng(91);
    std::vector<Curve> curves = evaluable_anomalous();
    curves.insert(curves.end(), large_anomalous().begin(), large_anomalous().end());
    for (const Curve& C : curves) {
        for (int t = 0; t < 5; ++t) {
            mpz_class n;
            DlpInstance inst = random_instance(C, rng, n);
            for (AttackMethod m : kMethods) {
                AttackResult r = attack(inst, m, rng.next_u64());
                CHECK(r.n == n);
                CHECK(r.method == m);
                CHECK(scalar_mul(C, r.n, inst.P) == inst.Q);
                CHECK(r.lift.has_value() == (m == AttackMethod::Lift));
            }
        }
    }
}

TEST_CASE("boundary instances: Q = P, Q = ∞, Q = −P") {
    Rng rng(92);
    for (const Curve& C : evaluable_anomalous()) {
        Point P = random_affine(C, rng);
        for (AttackMethod m : kMethods) {
            CHECK(attack({C, P, P}, m).n == 1);
            CHECK(attack({C, P, Point::infinity()}, m).n == 0);
            CHECK(attack({C, P, -P}, m).n == C.p() - 1);
        }
    }
}

TEST_CASE("attacks are deterministic in the seed") {
    Rng rng(93);
    const Curve& C = large_anomalous().front();
    mpz_class n;
    DlpInstance inst = random_instance(C, rng, n);
    for (AttackMethod m : kMethods) {
        AttackResult a = attack(inst, m, 5), b = attack(inst, m, 5);
        CHECK(a.n == b.n);
        CHECK(a.retries == b.retries);
        CHECK(a.lift == b.lift);
    }
}

TEST_CASE("the lift attack fails on lifts equivalent to the canonical one") {
    Rng rng(94);
    for (const Curve& C : evaluable_anomalous()) {
        mpz_class n;
        DlpInstance inst = random_instance(C, rng, n);
        const FieldRef& f = C.field();
        CHECK_RAISES(attack_lift_with(inst, f->zero(), f->zero()), ErrorCode::LiftDegenerate);
        Fp k = rng.nonzero_element(f);
        CHECK_RAISES(attack_lift_with(inst, 4L * k * C.A(), 6L * k * C.B()), ErrorCode::LiftDegenerate);
        AttackResult r = attack_lift(inst, rng.next_u64());
        REQUIRE(r.lift.has_value());
        DualCurve used(C, r.lift->first, r.lift->second);
        CHECK_FALSE(scaling_witness(used).has_value());
        CHECK(attack_lift_with(inst, r.lift->first, r.lift->second).n == n);
    }
}

TEST_CASE("malformed instances are rejected") {
    const Curve& C = evaluable_anomalous().front();
    Rng rng(95);
    Point P = random_affine(C, rng);
    CHECK_RAISES(validate_instance({C, Point::infinity(), P}), ErrorCode::BadInput);
    CHECK_RAISES(validate_instance({C, Point(P.x(), P.y() + C.element(1)), P}), ErrorCode::PointNotOnCurve);
    Curve other(11, 1, 1);
    REQUIRE_FALSE(is_anomalous(other));
    Point X = random_affine(other, rng);
    while (scalar_mul(other, other.p(), X).is_infinity())
        X = random_affine(other, rng);
    CHECK_RAISES(validate_instance({other, X, X}), ErrorCode::NotPTorsion);
    for (AttackMethod m : kMethods)
        CHECK_RAISES(attack({other, X, X}, m), ErrorCode::NotPTorsion);
}

TEST_CASE("method names parse and print") {
    for (AttackMethod m : kMethods)
        CHECK(parse_attack_method(to_string(m)) == m);
    CHECK_RAISES(parse_attack_method("rho"), ErrorCode::BadInput);
}

TEST_CASE("j in F_p holds exactly when a scaling witness exists, for A, B ≠ 0") {
    for (const Curve& C : tiny_anomalous()) {
        if (!generic_j(C))
            continue;
        std::size_t equivalent = 0;
        for_each_lift(C, [&](const DualCurve& E) {
            CanonicalTest t = is_canonical_equivalent(E);
            CHECK(t.equivalent == j_in_base_field(E));
            CHECK(t.equivalent == t.witness.has_value());
            if (t.witness) {
                const Fp& k = *t.witness;
                CHECK(4L * k * C.A() == E.A1());
                CHECK(6L * k * C.B() == E.B1());
            }
            equivalent += t.equivalent ? 1 : 0;
        });
        CHECK(equivalent == C.p().get_ui());
    }
}

TEST_CASE("j = 0 and j = 1728 break the biconditional") {
    std::size_t raised = 0;
    for (const Curve& C : tiny_anomalous()) {
        if (generic_j(C))
            continue;
        for_each_lift(C, [&](const DualCurve& E) {
            bool forced = C.A().is_zero() ? !E.A1().is_zero() : !E.B1().is_zero();
            if (forced && j_in_base_field(E)) {
                CHECK_RAISES(is_canonical_equivalent(E), ErrorCode::WitnessInconsistent);
                ++raised;
            }
        });
    }
    Curve j0(7, 0, 5);
    CHECK(j_in_base_field(DualCurve(j0, j0.element(1), j0.element(0))));
    CHECK_RAISES(is_canonical_equivalent(DualCurve(j0, j0.element(1), j0.element(0))), ErrorCode::WitnessInconsistent);
    CHECK(raised > 0);
}

TEST_CASE("torsion defect vanishes exactly on witnessed lifts of generic curves") {
    Rng rng(96);
    for (const Curve& C : tiny_anomalous()) {
        if (!generic_j(C))
            continue;
        Point G = random_affine(C, rng);
        for_each_lift(C, [&](const DualCurve& E) {
            CHECK(lift_torsion_defect(E, G).is_zero() == scaling_witness(E).has_value());
        });
    }
}

TEST_CASE("the probe compares the two lift sets exhaustively") {
    for (const Curve& C : tiny_anomalous()) {
        ConjectureProbe r = conjecture_probe(C);
        const std::size_t p = C.p().get_ui();
        CHECK(r.lifts == p * p);
        CHECK(r.both <= r.j_in_fp);
        CHECK(r.both <= r.torsion_preserving);
        CHECK(r.mismatches.size() == (r.j_in_fp - r.both) + (r.torsion_preserving - r.both));
        CHECK(r.torsion_preserving == p);
        if (generic_j(C)) {
            CHECK(r.sets_equal());
            CHECK(r.j_in_fp == p);
        } else {
            CHECK(r.j_in_fp == p * p);
            CHECK_FALSE(r.sets_equal());
        }
    }
    CHECK_RAISES(conjecture_probe(large_anomalous().front()), ErrorCode::BadInput);
}
