#include "dualpair/polynomial.hpp"

#include <algorithm>

namespace dualpair {

Polynomial::Polynomial(FieldRef f, std::vector<Fp> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
    for (const Fp& c : c_)
        check_same_field(f_, c.field());
    normalize();
}

void Polynomial::normalize() {
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

Polynomial Polynomial::constant(const Fp& c) { return Polynomial(c.field(), {c}); }

Polynomial Polynomial::monomial(const Fp& c, std::size_t degree) {
    std::vector<Fp> v(degree + 1, c.field()->zero());
    v[degree] = c;
    return Polynomial(c.field(), std::move(v));
}

Polynomial Polynomial::x(const FieldRef& f) { return monomial(f->one(), 1); }

Polynomial Polynomial::weierstrass_cubic(const Fp& A, const Fp& B) {
    const FieldRef& f = A.field();
    return Polynomial(f, {B, A, f->zero(), f->one()});
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1)
        return Polynomial(f_);
    std::vector<Fp> d;
    d.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        d.push_back(static_cast<long>(i) * c_[i]);
    return Polynomial(f_, std::move(d));
}

Polynomial Polynomial::monic() const {
    if (is_zero())
        return *this;
    return leading().inv() * *this;
}

Polynomial Polynomial::compose(const Polynomial& inner) const {
    Polynomial acc(f_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * inner + constant(*it);
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_same_field(f_, o.f_);
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), f_->zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (Fp& c : r.c_)
        c = -c;
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same_field(a.f_, b.f_);
    if (a.is_zero() || b.is_zero())
        return Polynomial(a.f_);
    std::vector<mpz_class> acc(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            acc[i + j] += a.c_[i].value() * b.c_[j].value();
    std::vector<Fp> out;
    out.reserve(acc.size());
    for (const mpz_class& v : acc)
        out.push_back(a.f_->element(v));
    return Polynomial(a.f_, std::move(out));
}

Polynomial operator*(const Fp& c, const Polynomial& a) {
    Polynomial r = a;
    for (Fp& v : r.c_)
        v *= c;
    r.normalize();
    return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    check_same_field(a.f_, b.f_);
    return a.c_ == b.c_;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    check_same_field(a.field(), b.field());
    if (b.is_zero())
        raise(ErrorCode::DivisionByZero, "polynomial division by zero");
    const FieldRef& f = a.field();
    if (a.degree() < b.degree())
        return {Polynomial(f), a};

    std::vector<Fp> rem = a.coeffs();
    const std::size_t db = static_cast<std::size_t>(b.degree());
    std::vector<Fp> quo(rem.size() - db, f->zero());
    const Fp lead_inv = b.leading().inv();
    for (std::size_t k = rem.size(); k-- > db;) {
        Fp q = rem[k] * lead_inv;
        if (q.is_zero())
            continue;
        quo[k - db] = q;
        for (std::size_t i = 0; i <= db; ++i)
            rem[k - db + i] -= q * b.coeffs()[i];
    }
    rem.resize(db);
    return {Polynomial(f, std::move(quo)), Polynomial(f, std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Polynomial powmod(const Polynomial& base, const mpz_class& e, const Polynomial& modulus) {
    const FieldRef& f = base.field();
    Polynomial result = Polynomial::constant(f->one()) % modulus;
    Polynomial b = base % modulus;
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = (result * result) % modulus;
        if (mpz_tstbit(e.get_mpz_t(), i))
            result = (result * b) % modulus;
    }
    return result;
}

namespace {

void split_roots(const Polynomial& g, std::vector<Fp>& out) {
    const FieldRef& f = g.field();
    if (g.degree() <= 0)
        return;
    if (g.degree() == 1) {
        out.push_back(-(g.coeff(0) / g.coeff(1)));
        return;
    }
    const mpz_class half = (f->modulus() - 1) / 2;
    for (mpz_class c = 0; c < f->modulus(); ++c) {
        Polynomial shifted = Polynomial::x(f) + Polynomial::constant(f->element(c));
        Polynomial h = gcd(powmod(shifted, half, g) - Polynomial::constant(f->one()), g);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            split_roots(h, out);
            split_roots(g / h, out);
            return;
        }
    }
    raise(ErrorCode::BadInput, "root splitting found no separating shift");
}

} // namespace

std::vector<Fp> roots(const Polynomial& f) {
    std::vector<Fp> out;
    if (f.degree() <= 0)
        return out;
    const FieldRef& field = f.field();
    Polynomial x = Polynomial::x(field);
    Polynomial frob = powmod(x, field->modulus(), f);
    Polynomial g = gcd(frob - x, f);
    split_roots(g, out);
    std::sort(out.begin(), out.end(), [](const Fp& a, const Fp& b) { return a.value() < b.value(); });
    return out;
}

std::vector<Fp> cubic_roots(const Fp& A, const Fp& B) {
    check_same_field(A.field(), B.field());
    const FieldRef& f = A.field();
    if (f->modulus() > kCubicScanLimit)
        return roots(Polynomial::weierstrass_cubic(A, B));

    std::vector<Fp> out;
    const unsigned long p = f->modulus().get_ui();
    const mpz_class& pm = f->modulus();
    const mpz_class a = A.value(), b = B.value();
    mpz_class v;
    for (unsigned long x = 0; x < p; ++x) {
        v = x;
        v = (v * v + a) * x + b;
        if (mpz_divisible_p(v.get_mpz_t(), pm.get_mpz_t()))
            out.push_back(f->element(static_cast<long>(x)));
    }
    return out;
}

RationalFunction::RationalFunction(const Polynomial& num)
    : RationalFunction(num, Polynomial::constant(num.field()->one())) {}

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) : num_(num), den_(den) {
    if (den_.is_zero())
        raise(ErrorCode::DivisionByZero, "rational function with zero denominator");
    Polynomial g = gcd(num_, den_);
    if (num_.is_zero())
        g = den_;
    if (g.degree() > 0 || num_.is_zero()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    Fp lead = den_.leading();
    if (!lead.is_one()) {
        Fp inv = lead.inv();
        num_ = inv * num_;
        den_ = inv * den_;
    }
}

RationalFunction RationalFunction::derivative() const {
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction RationalFunction::compose(const RationalFunction& inner) const {
    // N(a/b)/D(a/b) = (Σ nᵢ aⁱ b^(d−i)) / (Σ dᵢ aⁱ b^(d−i)), d = max degree
    const FieldRef& f = field();
    const long d = std::max(num_.degree(), den_.degree());
    std::vector<Polynomial> a_pow{Polynomial::constant(f->one())};
    std::vector<Polynomial> b_pow{Polynomial::constant(f->one())};
    for (long i = 1; i <= d; ++i) {
        a_pow.push_back(a_pow.back() * inner.num());
        b_pow.push_back(b_pow.back() * inner.den());
    }
    auto homogenize = [&](const Polynomial& p) {
        Polynomial acc(f);
        for (long i = 0; i <= p.degree(); ++i)
            acc += p.coeff(static_cast<std::size_t>(i)) * (a_pow[i] * b_pow[d - i]);
        return acc;
    };
    return RationalFunction(homogenize(num_), homogenize(den_));
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.num_.is_zero())
        raise(ErrorCode::DivisionByZero, "division by the zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

} // namespace dualpair
