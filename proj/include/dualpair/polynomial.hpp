#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "dualpair/field.hpp"

namespace dualpair {

/// Dense univariate polynomial over F_p, trailing zeros stripped.
class Polynomial {
public:
    /// Degree reported for the zero polynomial.
    static constexpr long kZeroDegree = -1;

    explicit Polynomial(FieldRef f) : f_(std::move(f)) {}
    Polynomial(FieldRef f, std::vector<Fp> coeffs);

    static Polynomial constant(const Fp& c);
    static Polynomial monomial(const Fp& c, std::size_t degree);
    /// The polynomial x.
    static Polynomial x(const FieldRef& f);
    /// x³ + Ax + B.
    static Polynomial weierstrass_cubic(const Fp& A, const Fp& B);

    const FieldRef& field() const noexcept { return f_; }
    const std::vector<Fp>& coeffs() const noexcept { return c_; }
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    Fp coeff(std::size_t i) const { return i < c_.size() ? c_[i] : f_->zero(); }
    Fp leading() const { return c_.empty() ? f_->zero() : c_.back(); }

    Polynomial derivative() const;
    Polynomial monic() const;
    Polynomial compose(const Polynomial& inner) const;

    /// Horner evaluation in any scalar ring containing F_p.
    template <class Scalar>
    Scalar eval(const Scalar& x) const {
        Scalar acc = embed_scalar<Scalar>(f_->zero());
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * x + embed_scalar<Scalar>(*it);
        return acc;
    }
    Fp operator()(const Fp& x) const { return eval(x); }
    DualNumber operator()(const DualNumber& x) const { return eval(x); }

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial operator-() const;

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Fp& c, const Polynomial& a);
    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    void normalize();

    FieldRef f_;
    std::vector<Fp> c_;
};

inline Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
inline Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

/// Euclidean division; throws DivisionByZero for a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
inline Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }
inline Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);

/// base^e mod modulus by square-and-multiply.
Polynomial powmod(const Polynomial& base, const mpz_class& e, const Polynomial& modulus);

/// Distinct roots of f in F_p, ascending: gcd(x^p − x, f) followed by
/// equal-degree splitting on (x + c)^((p−1)/2) − 1 for c = 0, 1, 2, ...
std::vector<Fp> roots(const Polynomial& f);

/// Roots of x³ + Ax + B in F_p, ascending. Exhaustive scan for small p,
/// the gcd route above that.
std::vector<Fp> cubic_roots(const Fp& A, const Fp& B);

inline constexpr unsigned long kCubicScanLimit = 2000;

/// num/den with den monic and gcd(num, den) = 1.
class RationalFunction {
public:
    explicit RationalFunction(const Polynomial& num);
    RationalFunction(const Polynomial& num, const Polynomial& den);

    const Polynomial& num() const noexcept { return num_; }
    const Polynomial& den() const noexcept { return den_; }
    const FieldRef& field() const noexcept { return num_.field(); }

    /// Throws NonUnit (or DivisionByZero over F_p) when the denominator
    /// does not invert at x.
    template <class Scalar>
    Scalar eval(const Scalar& x) const {
        Scalar d = den_.eval(x);
        if (!is_unit(d))
            raise(ErrorCode::NonUnit, "rational function denominator vanishes");
        return num_.eval(x) / d;
    }
    Fp operator()(const Fp& x) const { return eval(x); }
    DualNumber operator()(const DualNumber& x) const { return eval(x); }

    RationalFunction derivative() const;
    /// this ∘ inner.
    RationalFunction compose(const RationalFunction& inner) const;

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    Polynomial num_;
    Polynomial den_;
};

} // namespace dualpair
