#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "dualpair/curve.hpp"
#include "dualpair/dual_curve.hpp"
#include "dualpair/field.hpp"
#include "dualpair/rng.hpp"

namespace dualpair {

/// One step (k ↦ i, j) of an addition chain decomposition, i + j = k.
struct AdditionChainStep {
    mpz_class k;
    mpz_class i;
    mpz_class j;

    friend bool operator==(const AdditionChainStep&, const AdditionChainStep&) = default;
};

using AdditionChain = std::vector<AdditionChainStep>;

/// Doubles up to the top power of two, then adds the remaining set bits from
/// most significant down (n = 11 gives S = {1, 2, 4, 8, 10, 11}).
AdditionChain binary_chain(const mpz_class& n);
/// 1, 2, 3, ..., n with steps (k ↦ k−1, 1).
AdditionChain increment_chain(const mpz_class& n);
/// Base-3 digits from the top: c ↦ 2c ↦ 3c, then + 1 per unit of the digit.
AdditionChain ternary_chain(const mpz_class& n);

/// Every step adds two earlier members (1 always available) and the last
/// step produces n.
bool is_valid_chain(const AdditionChain& chain, const mpz_class& n);
/// Number of h factors once the decomposition is fully unrolled (n − 1 for a
/// valid chain).
mpz_class unrolled_step_count(const AdditionChain& chain);

/// y − mx − b, x − c, or the constant 1 (lines through the point at
/// infinity only).
class LineFunction {
public:
    enum class Kind { Chord, Vertical, Constant };

    static LineFunction chord(const Fp& m, const Fp& b) { return {Kind::Chord, m, b}; }
    static LineFunction vertical(const Fp& c) { return {Kind::Vertical, c, c.field()->zero()}; }
    static LineFunction constant(const FieldRef& f) { return {Kind::Constant, f->zero(), f->zero()}; }

    Kind kind() const noexcept { return kind_; }
    /// Slope of a chord; zero for the other kinds.
    Fp slope() const { return kind_ == Kind::Chord ? a_ : a_.field()->zero(); }
    const Fp& intercept() const noexcept { return b_; }
    /// Abscissa of a vertical line.
    const Fp& abscissa() const noexcept { return a_; }

    template <class Scalar>
    Scalar operator()(const Scalar& x, const Scalar& y) const {
        switch (kind_) {
        case Kind::Chord: return y - a_ * x - embed_scalar<Scalar>(b_);
        case Kind::Vertical: return x - embed_scalar<Scalar>(a_);
        case Kind::Constant: break;
        }
        return embed_scalar<Scalar>(a_.field()->one());
    }

    /// d/dx along the curve, using dy/dx = (3x² + A)/(2y).
    template <class Scalar>
    Scalar derivative(const Curve& C, const Scalar& x, const Scalar& y) const {
        switch (kind_) {
        case Kind::Chord: return tangent_slope(x, y, embed_scalar<Scalar>(C.A())) - embed_scalar<Scalar>(a_);
        case Kind::Vertical: return embed_scalar<Scalar>(a_.field()->one());
        case Kind::Constant: break;
        }
        return embed_scalar<Scalar>(a_.field()->zero());
    }

    friend bool operator==(const LineFunction&, const LineFunction&) = default;

private:
    LineFunction(Kind kind, const Fp& a, const Fp& b) : kind_(kind), a_(a), b_(b) {}

    Kind kind_;
    Fp a_; // slope or abscissa
    Fp b_;
};

/// The line through A and B (tangent when equal; vertical when B = −A).
LineFunction line_through(const Curve& C, const Point& A, const Point& B);
/// x − x(A), or the constant 1 for A = ∞.
LineFunction vertical_through(const Curve& C, const Point& A);

/// h_{i,j}(Q) = (ℓ_{i,j} / v_{i+j})(Q + offset), offset = −T. When (i+j)P = ∞
/// the denominator is the constant 1 and h reduces to the vertical v_i.
struct Cocycle {
    LineFunction numerator;
    LineFunction denominator;
    Point offset;
};

Cocycle make_cocycle(const Curve& C, const Point& iP, const Point& jP, const Point& T);

/// Value of ℓ/v at already-translated coordinates. Throws
/// DegenerateEvaluation if either line fails to be a unit there.
template <class Scalar>
Scalar cocycle_value(const Cocycle& h, const Scalar& x, const Scalar& y) {
    Scalar num = h.numerator(x, y);
    Scalar den = h.denominator(x, y);
    if (!is_unit(num) || !is_unit(den))
        raise(ErrorCode::DegenerateEvaluation, "line function vanishes at the evaluation point");
    return num / den;
}

/// Translates an evaluation point by the cocycle offset. Throws
/// DegenerateEvaluation when the result lands at infinity.
Point translate_evaluation_point(const Curve& C, const Point& Q, const Point& offset);
DualPoint translate_evaluation_point(const Curve& C, const DualPoint& Q, const Point& offset);

/// Everything the Miller loop needs for one (P, chain, T): the cocycles in
/// chain order.
class MillerPlan {
public:
    struct Entry {
        AdditionChainStep step;
        Cocycle h;
    };

    MillerPlan(const Curve& C, const Point& P, const AdditionChain& chain, const Point& T);

    const Curve& curve() const noexcept { return curve_; }
    const Point& offset() const noexcept { return offset_; }
    const std::vector<Entry>& entries() const noexcept { return entries_; }
    const mpz_class& n() const noexcept { return n_; }

private:
    Curve curve_;
    Point offset_;
    mpz_class n_;
    std::vector<Entry> entries_;
};

/// Product of the cocycles over the chain at translated coordinates (x, y).
template <class Scalar>
Scalar evaluate_plan(const MillerPlan& plan, const Scalar& x, const Scalar& y);

/// h_{i,j}(Q) for Q in E(F_p) or, over the canonical lift, in Ẽ(F_p[ε]).
Fp h_eval(const Curve& C, const Point& P, const AdditionChainStep& step, const Point& T, const Point& Q);
DualNumber h_eval(const Curve& C, const Point& P, const AdditionChainStep& step, const Point& T,
                  const DualPoint& Q);

/// f_n(Q) = Π_C h_{i,j}(Q) up to the normalization constant.
Fp miller_eval(const MillerPlan& plan, const Point& Q);
DualNumber miller_eval(const MillerPlan& plan, const DualPoint& Q);
Fp miller_eval(const Curve& C, const Point& P, const mpz_class& n, const Point& T, const Point& Q);
DualNumber miller_eval(const Curve& C, const Point& P, const mpz_class& n, const Point& T, const DualPoint& Q);

inline constexpr int kWeilAttempts = 8;

/// Classical e_n(P, Q) = f_P(D_Q) / f_Q(D_P) with D_P = (P+T) − (T),
/// D_Q = (Q+R) − (R) for random T, R; re-randomizes on degeneracy.
/// Requires gcd(n, p) = 1, n | p − 1 and nP = nQ = ∞ (BadTorsion otherwise).
Fp weil_pairing_n(const Curve& C, const mpz_class& n, const Point& P, const Point& Q,
                  std::uint64_t seed = kDefaultSeed, int attempts = kWeilAttempts);

/// e_n with caller-chosen translation points; one attempt.
Fp weil_pairing_n_at(const Curve& C, const mpz_class& n, const Point& P, const Point& Q, const Point& T,
                     const Point& R);

} // namespace dualpair
