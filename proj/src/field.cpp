#include "dualpair/field.hpp"

namespace dualpair {

FieldRef PrimeField::make(const mpz_class& p) {
    if (p <= 3)
        raise(ErrorCode::BadInput, "modulus must be a prime > 3, got " + p.get_str());
    if (mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
        raise(ErrorCode::BadInput, "modulus is not prime: " + p.get_str());
    return FieldRef(new PrimeField(p));
}

Fp PrimeField::element(const mpz_class& v) const { return Fp(shared_from_this(), v); }
Fp PrimeField::element(long v) const { return Fp(shared_from_this(), mpz_class(v)); }
Fp PrimeField::zero() const { return element(0L); }
Fp PrimeField::one() const { return element(1L); }

void check_same_field(const FieldRef& a, const FieldRef& b) {
    if (a == b && a)
        return;
    if (!a || !b || a->modulus() != b->modulus())
        raise(ErrorCode::FieldMismatch, "operands belong to different fields");
}

Fp::Fp(FieldRef field, const mpz_class& v) : f_(std::move(field)) {
    if (!f_)
        raise(ErrorCode::FieldMismatch, "element constructed without a field");
    mpz_mod(v_.get_mpz_t(), v.get_mpz_t(), f_->modulus().get_mpz_t());
}

const mpz_class& Fp::modulus() const {
    if (!f_)
        raise(ErrorCode::FieldMismatch, "unbound element has no modulus");
    return f_->modulus();
}

bool operator==(const Fp& a, const Fp& b) {
    check_same_field(a.f_, b.f_);
    return a.v_ == b.v_;
}

Fp Fp::operator-() const {
    Fp r = *this;
    if (r.v_ != 0)
        r.v_ = modulus() - r.v_;
    return r;
}

Fp& Fp::operator+=(const Fp& o) {
    check_same_field(f_, o.f_);
    v_ += o.v_;
    if (v_ >= f_->modulus())
        v_ -= f_->modulus();
    return *this;
}

Fp& Fp::operator-=(const Fp& o) {
    check_same_field(f_, o.f_);
    v_ -= o.v_;
    if (v_ < 0)
        v_ += f_->modulus();
    return *this;
}

Fp& Fp::operator*=(const Fp& o) {
    check_same_field(f_, o.f_);
    v_ *= o.v_;
    mpz_mod(v_.get_mpz_t(), v_.get_mpz_t(), f_->modulus().get_mpz_t());
    return *this;
}

Fp& Fp::operator/=(const Fp& o) { return *this *= o.inv(); }

Fp Fp::inv() const {
    if (!f_)
        raise(ErrorCode::FieldMismatch, "unbound element");
    if (v_ == 0)
        raise(ErrorCode::DivisionByZero, "inverse of 0 mod " + f_->modulus().get_str());
    Fp r = *this;
    mpz_invert(r.v_.get_mpz_t(), v_.get_mpz_t(), f_->modulus().get_mpz_t());
    return r;
}

Fp Fp::pow(const mpz_class& e) const {
    if (e < 0)
        return inv().pow(-e);
    Fp r = *this;
    mpz_powm(r.v_.get_mpz_t(), v_.get_mpz_t(), e.get_mpz_t(), modulus().get_mpz_t());
    return r;
}

int Fp::legendre() const { return mpz_legendre(v_.get_mpz_t(), modulus().get_mpz_t()); }

std::optional<Fp> Fp::sqrt() const {
    const mpz_class& p = modulus();
    if (v_ == 0)
        return *this;
    if (legendre() != 1)
        return std::nullopt;
    if (p % 4 == 3)
        return pow((p + 1) / 4);

    // p - 1 = q·2^s with q odd
    mpz_class q = p - 1;
    unsigned long s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    Fp z = f_->element(2L);
    while (z.legendre() != -1)
        z += f_->one();

    Fp c = z.pow(q);
    Fp x = pow((q + 1) / 2);
    Fp t = pow(q);
    unsigned long m = s;
    while (!t.is_one()) {
        unsigned long i = 0;
        Fp t2 = t;
        while (!t2.is_one()) {
            t2 *= t2;
            ++i;
        }
        Fp b = c;
        for (unsigned long j = 0; j + i + 1 < m; ++j)
            b *= b;
        x *= b;
        c = b * b;
        t *= c;
        m = i;
    }
    return x;
}

Fp operator*(long n, const Fp& a) { return a.field()->element(n) * a; }

std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.value().get_str(); }

DualNumber::DualNumber(const Fp& re, const Fp& eps) : re_(re), eps_(eps) {
    check_same_field(re.field(), eps.field());
}

DualNumber& DualNumber::operator+=(const DualNumber& o) {
    re_ += o.re_;
    eps_ += o.eps_;
    return *this;
}

DualNumber& DualNumber::operator-=(const DualNumber& o) {
    re_ -= o.re_;
    eps_ -= o.eps_;
    return *this;
}

DualNumber& DualNumber::operator*=(const DualNumber& o) {
    // (a + bε)(c + dε) = ac + (ad + bc)ε
    Fp eps = re_ * o.eps_ + eps_ * o.re_;
    re_ *= o.re_;
    eps_ = std::move(eps);
    return *this;
}

DualNumber& DualNumber::operator/=(const DualNumber& o) { return *this *= o.inv(); }

DualNumber DualNumber::inv() const {
    if (re_.is_zero())
        raise(ErrorCode::NonUnit, "dual number with zero real part is not invertible");
    Fp a_inv = re_.inv();
    return {a_inv, -(a_inv * a_inv * eps_)};
}

DualNumber DualNumber::pow(const mpz_class& e) const {
    if (e < 0)
        return inv().pow(-e);
    // (a + bε)^e = a^e + e·a^(e-1)·b·ε
    if (e == 0)
        return DualNumber(re_.field()->one());
    Fp a_em1 = re_.pow(e - 1);
    return {a_em1 * re_, re_.field()->element(e) * a_em1 * eps_};
}

DualNumber operator*(const Fp& c, const DualNumber& a) { return {c * a.re(), c * a.eps()}; }

DualNumber operator*(long n, const DualNumber& a) { return {n * a.re(), n * a.eps()}; }

std::ostream& operator<<(std::ostream& os, const DualNumber& a) {
    return os << a.re() << " + " << a.eps() << "ε";
}

} // namespace dualpair
