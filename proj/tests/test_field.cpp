#include <doctest.h>

#include "dualpair/field.hpp"
#include "dualpair/rng.hpp"

using namespace dualpair;

namespace {

mpz_class mod(const mpz_class& a, const mpz_class& p) {
    mpz_class r = a % p;
    return r < 0 ? r + p : r;
}

} // namespace

TEST_CASE("prime field construction rejects non-primes and tiny primes") {
    CHECK_NOTHROW(PrimeField::make(5));
    CHECK_NOTHROW(PrimeField::make(mpz_class("1000000007")));
    for (long bad : {0L, 1L, 2L, 3L, 4L, 9L, 15L, 1001L}) {
        try {
            PrimeField::make(bad);
            FAIL("accepted " << bad);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::BadInput);
        }
    }
}

TEST_CASE("F_p arithmetic agrees with integer arithmetic mod p") {
    Rng rng(11);
    for (mpz_class p : {mpz_class(5), mpz_class(101), mpz_class("1000003"), mpz_class("340282366920938463463374607431768211507")}) {
        FieldRef f = PrimeField::make(p);
        for (int t = 0; t < 200; ++t) {
            mpz_class a = rng.below(p), b = rng.below(p);
            Fp x = f->element(a), y = f->element(b);
            CHECK((x + y).value() == mod(a + b, p));
            CHECK((x - y).value() == mod(a - b, p));
            CHECK((x * y).value() == mod(a * b, p));
            CHECK((-x).value() == mod(-a, p));
            if (b != 0) {
                CHECK(((x / y) * y) == x);
                CHECK((y * y.inv()).is_one());
            }
        }
    }
}

TEST_CASE("elements reduce negative and oversized representatives") {
    FieldRef f = PrimeField::make(13);
    CHECK(f->element(-1).value() == 12);
    CHECK(f->element(27).value() == 1);
    CHECK((3L * f->element(5)).value() == 2);
}

TEST_CASE("pow matches repeated multiplication and Fermat") {
    FieldRef f = PrimeField::make(1009);
    Rng rng(12);
    for (int t = 0; t < 50; ++t) {
        Fp a = rng.nonzero_element(f);
        Fp acc = f->one();
        for (int e = 0; e < 20; ++e) {
            CHECK(a.pow(e) == acc);
            acc *= a;
        }
        CHECK(a.pow(1008).is_one());
        CHECK(a.pow(-1) == a.inv());
        CHECK(a.pow(-3) == a.inv().pow(3));
    }
}

TEST_CASE("inverse of zero raises DivisionByZero") {
    FieldRef f = PrimeField::make(7);
    try {
        (void)f->zero().inv();
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DivisionByZero);
    }
}

TEST_CASE("legendre symbol and square roots agree with brute force") {
    for (long p : {5L, 7L, 13L, 17L, 97L, 113L}) {
        FieldRef f = PrimeField::make(p);
        for (long a = 0; a < p; ++a) {
            bool square = false;
            for (long y = 0; y < p; ++y)
                square = square || (y * y) % p == a;
            Fp x = f->element(a);
            CHECK(x.legendre() == (a == 0 ? 0 : (square ? 1 : -1)));
            auto r = x.sqrt();
            CHECK(r.has_value() == square);
            if (r)
                CHECK(*r * *r == x);
        }
    }
}

TEST_CASE("mixing moduli raises FieldMismatch") {
    FieldRef f = PrimeField::make(7), g = PrimeField::make(11);
    try {
        (void)(f->one() + g->one());
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::FieldMismatch);
    }
    try {
        (void)(DualNumber(f->one()) * DualNumber(g->one()));
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::FieldMismatch);
    }
}

TEST_CASE("dual numbers satisfy eps^2 = 0 and the unit inverse formula") {
    FieldRef f = PrimeField::make(10007);
    Rng rng(13);
    const DualNumber eps(f->zero(), f->one());
    CHECK((eps * eps).is_zero());
    for (int t = 0; t < 200; ++t) {
        DualNumber z(rng.element(f), rng.element(f));
        DualNumber w(rng.element(f), rng.element(f));
        // (a + bε)(c + dε) = ac + (ad + bc)ε
        DualNumber prod = z * w;
        CHECK(prod.re() == z.re() * w.re());
        CHECK(prod.eps() == z.re() * w.eps() + z.eps() * w.re());
        if (z.is_unit()) {
            DualNumber zi = z.inv();
            CHECK(zi.re() == z.re().inv());
            CHECK(zi.eps() == -(z.eps() / (z.re() * z.re())));
            CHECK((z * zi) == DualNumber(f->one()));
            CHECK(((w / z) * z) == w);
        }
    }
}

TEST_CASE("dual pow follows a^e + e a^(e-1) b eps") {
    FieldRef f = PrimeField::make(101);
    Rng rng(14);
    for (int t = 0; t < 50; ++t) {
        DualNumber z(rng.nonzero_element(f), rng.element(f));
        DualNumber acc(f->one());
        for (long e = 0; e < 12; ++e) {
            CHECK(z.pow(e) == acc);
            if (e > 0)
                CHECK(z.pow(e).eps() == e * z.re().pow(e - 1) * z.eps());
            acc *= z;
        }
        CHECK(z.pow(-1) == z.inv());
    }
}

TEST_CASE("non-units raise NonUnit on inversion") {
    FieldRef f = PrimeField::make(11);
    DualNumber z(f->zero(), f->element(3));
    CHECK_FALSE(z.is_unit());
    try {
        (void)z.inv();
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonUnit);
    }
}

TEST_CASE("rng is deterministic per seed") {
    Rng a(77), b(77), c(78);
    FieldRef f = PrimeField::make(1000003);
    bool differs = false;
    for (int i = 0; i < 20; ++i) {
        Fp x = a.element(f);
        CHECK(x == b.element(f));
        differs = differs || x != c.element(f);
    }
    CHECK(differs);
}
