#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <ostream>
#include <string>

#include "dualpair/errors.hpp"

namespace dualpair {

class PrimeField;
class Fp;

/// Shared handle to the modulus of one computation. Every element points at
/// the context it was created in; arithmetic across different moduli throws
/// FieldMismatch.
using FieldRef = std::shared_ptr<const PrimeField>;

class PrimeField : public std::enable_shared_from_this<PrimeField> {
public:
    /// Throws BadInput unless p is a (probable) prime greater than 3.
    static FieldRef make(const mpz_class& p);

    const mpz_class& modulus() const noexcept { return p_; }

    Fp element(const mpz_class& v) const;
    Fp element(long v) const;
    Fp zero() const;
    Fp one() const;

private:
    explicit PrimeField(mpz_class p) : p_(std::move(p)) {}
    mpz_class p_;
};

/// An element of F_p, canonically reduced to [0, p).
class Fp {
public:
    Fp() = default; // unbound zero; any arithmetic on it throws FieldMismatch
    Fp(FieldRef field, const mpz_class& v);

    const mpz_class& value() const noexcept { return v_; }
    const FieldRef& field() const noexcept { return f_; }
    const mpz_class& modulus() const;
    bool bound() const noexcept { return static_cast<bool>(f_); }

    bool is_zero() const noexcept { return v_ == 0; }
    bool is_one() const noexcept { return v_ == 1; }

    Fp operator-() const;
    Fp& operator+=(const Fp& o);
    Fp& operator-=(const Fp& o);
    Fp& operator*=(const Fp& o);
    Fp& operator/=(const Fp& o);

    /// Throws DivisionByZero for 0.
    Fp inv() const;
    /// Negative exponents invert first.
    Fp pow(const mpz_class& e) const;
    /// Legendre symbol: 0, 1 or -1.
    int legendre() const;
    /// A square root when one exists (Tonelli-Shanks).
    std::optional<Fp> sqrt() const;

    std::string to_string() const { return v_.get_str(); }

    friend bool operator==(const Fp& a, const Fp& b);
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

private:
    mpz_class v_;
    FieldRef f_;
};

void check_same_field(const FieldRef& a, const FieldRef& b);

inline Fp operator+(Fp a, const Fp& b) { return a += b; }
inline Fp operator-(Fp a, const Fp& b) { return a -= b; }
inline Fp operator*(Fp a, const Fp& b) { return a *= b; }
inline Fp operator/(Fp a, const Fp& b) { return a /= b; }
Fp operator*(long n, const Fp& a);
inline Fp operator*(const Fp& a, long n) { return n * a; }

inline bool is_unit(const Fp& a) { return !a.is_zero(); }

std::ostream& operator<<(std::ostream& os, const Fp& a);

/// a + b·ε with ε² = 0.
class DualNumber {
public:
    DualNumber() = default;
    explicit DualNumber(const Fp& re) : re_(re), eps_(re.field()->zero()) {}
    DualNumber(const Fp& re, const Fp& eps);

    const Fp& re() const noexcept { return re_; }
    const Fp& eps() const noexcept { return eps_; }
    const FieldRef& field() const noexcept { return re_.field(); }

    /// Units are exactly the elements with nonzero real part.
    bool is_unit() const noexcept { return !re_.is_zero(); }
    bool is_zero() const noexcept { return re_.is_zero() && eps_.is_zero(); }

    DualNumber operator-() const { return {-re_, -eps_}; }
    DualNumber& operator+=(const DualNumber& o);
    DualNumber& operator-=(const DualNumber& o);
    DualNumber& operator*=(const DualNumber& o);
    DualNumber& operator/=(const DualNumber& o);

    /// (a + bε)⁻¹ = a⁻¹ − a⁻²bε. Throws NonUnit when a = 0.
    DualNumber inv() const;
    DualNumber pow(const mpz_class& e) const;

    friend bool operator==(const DualNumber& a, const DualNumber& b) {
        return a.re_ == b.re_ && a.eps_ == b.eps_;
    }
    friend bool operator!=(const DualNumber& a, const DualNumber& b) { return !(a == b); }

private:
    Fp re_;
    Fp eps_;
};

inline DualNumber operator+(DualNumber a, const DualNumber& b) { return a += b; }
inline DualNumber operator-(DualNumber a, const DualNumber& b) { return a -= b; }
inline DualNumber operator*(DualNumber a, const DualNumber& b) { return a *= b; }
inline DualNumber operator/(DualNumber a, const DualNumber& b) { return a /= b; }

DualNumber operator*(const Fp& c, const DualNumber& a);
inline DualNumber operator*(const DualNumber& a, const Fp& c) { return c * a; }
inline DualNumber operator+(const DualNumber& a, const Fp& c) { return {a.re() + c, a.eps()}; }
inline DualNumber operator-(const DualNumber& a, const Fp& c) { return {a.re() - c, a.eps()}; }
DualNumber operator*(long n, const DualNumber& a);

inline bool is_unit(const DualNumber& a) { return a.is_unit(); }

std::ostream& operator<<(std::ostream& os, const DualNumber& a);

/// Lifts a base-field constant into a scalar type (Fp or DualNumber); lets
/// templated curve code mix constants with evaluation scalars.
template <class Scalar>
Scalar embed_scalar(const Fp& c);

template <>
inline Fp embed_scalar<Fp>(const Fp& c) { return c; }

template <>
inline DualNumber embed_scalar<DualNumber>(const Fp& c) { return DualNumber(c); }

/// Reduction mod ε of a scalar.
inline const Fp& reduce(const Fp& a) { return a; }
inline const Fp& reduce(const DualNumber& a) { return a.re(); }

} // namespace dualpair
