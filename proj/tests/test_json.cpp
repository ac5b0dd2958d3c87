#include <doctest.h>

#include "dualpair/json_io.hpp"
#include "dualpair/isogeny.hpp"
#include "support.hpp"

using namespace dualpair;
using namespace dualpair::testing;

TEST_CASE("integers accept decimal strings and JSON integers only") {
    CHECK(integer_from_json(json("12345678901234567890123")) == mpz_class("12345678901234567890123"));
    CHECK(integer_from_json(json(42)) == 42);
    CHECK(integer_from_json(json(" -7 ")) == -7);
    CHECK(integer_from_json(json("+9")) == 9);
    for (const json& bad : {json("0x10"), json("1e3"), json(""), json("-"), json(1.5), json(true), json::array(),
                            json(nullptr), json("12a")})
        CHECK_RAISES(integer_from_json(bad), ErrorCode::BadInput);
}

TEST_CASE("curves and points round-trip") {
    Rng rng(101);
    for (const Curve& C : evaluable_anomalous()) {
        json jc = to_json(C);
        CHECK(jc.at("p").is_string());
        CHECK(curve_from_json(jc) == C);
        CHECK(curve_from_json(json::parse(jc.dump())) == C);
        for (int t = 0; t < 10; ++t) {
            Point P = random_point(C, rng);
            CHECK(point_from_json(C, to_json(P)) == P);
            std::string text = P.is_infinity() ? "inf" : P.x().to_string() + "," + P.y().to_string();
            CHECK(point_from_text(C, text) == P);
        }
    }
}

TEST_CASE("malformed curves and points are rejected") {
    const Curve& C = evaluable_anomalous().front();
    CHECK_RAISES(curve_from_json(json::parse(R"({"p":"11","A":"1"})")), ErrorCode::BadInput);
    CHECK_RAISES(curve_from_json(json::parse(R"({"p":"12","A":"1","B":"1"})")), ErrorCode::BadInput);
    CHECK_RAISES(curve_from_json(json::parse(R"({"p":"11","A":"0","B":"0"})")), ErrorCode::BadInput);
    CHECK_RAISES(curve_from_json(json::array()), ErrorCode::BadInput);
    CHECK_RAISES(point_from_json(C, json::parse(R"({"inf":false})")), ErrorCode::BadInput);
    CHECK_RAISES(point_from_json(C, json::parse(R"({"x":"1"})")), ErrorCode::BadInput);
    for (const char* bad : {"", "1", "1,2,3", "a,b", "inf,", ",", "infinity"})
        CHECK_RAISES(point_from_text(C, bad), ErrorCode::BadInput);
    Rng rng(102);
    Point P = random_affine(C, rng);
    std::string off = P.x().to_string() + "," + (P.y() + C.element(1)).to_string();
    CHECK_RAISES(point_from_text(C, off), ErrorCode::PointNotOnCurve);
}

TEST_CASE("dual objects round-trip and are validated") {
    Rng rng(103);
    for (const Curve& C : evaluable_anomalous()) {
        const FieldRef& f = C.field();
        DualNumber z(rng.element(f), rng.element(f));
        CHECK(dual_number_from_json(f, to_json(z)) == z);
        DualCurve E(C, rng.element(f), rng.element(f));
        DualCurve E2 = dual_curve_from_json(to_json(E));
        CHECK(E2.base() == C);
        CHECK(E2.A1() == E.A1());
        CHECK(E2.B1() == E.B1());
        CHECK(dual_curve_from_json(to_json(C)).is_canonical());
        DualCurve canonical(C);
        for (int t = 0; t < 10; ++t) {
            DualPoint X = compose(canonical, random_point(C, rng), rng.element(f));
            CHECK(dual_point_from_json(canonical, to_json(X)) == X);
        }
        Point P = random_affine(C, rng);
        DualPoint bad = DualPoint::affine({P.x(), f->zero()}, {P.y(), f->one()});
        if (!validate(canonical, bad))
            CHECK_RAISES(dual_point_from_json(canonical, to_json(bad)), ErrorCode::InvalidPoint);
        PairingValue v(rng.element(f));
        CHECK(pairing_value_from_json(f, to_json(v)) == v);
    }
}

TEST_CASE("result objects carry the documented keys") {
    const Curve& C = evaluable_anomalous().front();
    json iso = to_json(mult_by_n(C, 2));
    for (const char* key : {"source", "target", "r_num", "r_den", "s_num", "s_den", "degree", "m", "kernel_points"})
        CHECK(iso.contains(key));
    CHECK(iso.at("degree") == "4");
    CHECK(iso.at("m") == "2");
    CHECK(iso.at("r_num").is_array());

    AttackResult r{mpz_class(5), AttackMethod::Lift, 2, std::make_pair(C.element(3), C.element(4))};
    json jr = to_json(r);
    CHECK(jr.at("n") == "5");
    CHECK(jr.at("method") == "lift");
    CHECK(jr.at("retries") == 2);
    CHECK(jr.at("lift").at("A1") == "3");

    json probe = to_json(conjecture_probe(tiny_anomalous().front()));
    for (const char* key : {"curve", "lifts", "j_in_fp", "torsion_preserving", "both", "sets_equal", "mismatches"})
        CHECK(probe.contains(key));
}
