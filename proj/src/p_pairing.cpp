#include "dualpair/p_pairing.hpp"

#include <functional>
#include <map>
#include <string>

namespace dualpair {

PairingValue PairingValue::from_dual(const DualNumber& z) {
    if (!z.re().is_one())
        raise(ErrorCode::BadInput, "pairing values have real part 1");
    return PairingValue(z.eps());
}

std::ostream& operator<<(std::ostream& os, const PairingValue& v) { return os << "1 + " << v.a() << "ε"; }

void require_p_torsion(const Curve& C, const Point& P) {
    require_on_curve(C, P);
    if (!scalar_mul(C, C.p(), P).is_infinity())
        raise(ErrorCode::NotPTorsion, "point is not p-torsion");
}

Point choose_evaluation_point(const Curve& C, Rng& rng) {
    for (int i = 0; i < 1000; ++i) {
        Point R = random_point(C, rng);
        if (!R.is_infinity() && !R.y().is_zero() && scalar_mul(C, C.p(), R).is_infinity())
            return R;
    }
    raise(ErrorCode::SearchExhausted, "no point of order p outside E[2] found");
}

namespace {

void require_evaluation_point(const Curve& C, const Point& R) {
    require_on_curve(C, R);
    if (R.is_infinity() || R.y().is_zero())
        raise(ErrorCode::BadInput, "evaluation point must lie outside E[2]");
    if (!scalar_mul(C, C.p(), R).is_infinity())
        raise(ErrorCode::BadInput, "evaluation point must be p-torsion");
}

void require_canonical(const DualCurve& E) {
    if (!E.is_canonical())
        raise(ErrorCode::NotCanonical, "the pairing is defined on the canonical lift");
}

// Runs `body` with translation points drawn per the default policy until it
// stops reporting DegenerateEvaluation.
template <class Result>
Result with_translation(const Curve& C, const MillerOptions& opts, const std::function<Result(const Point&)>& body) {
    if (opts.translation)
        return body(*opts.translation);
    Rng rng(opts.seed);
    const std::vector<Point> halves = two_torsion(C);
    for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
        Point T = attempt < static_cast<int>(halves.size()) ? halves[attempt] : random_point(C, rng);
        try {
            return body(T);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::DegenerateEvaluation)
                throw;
        }
    }
    raise(ErrorCode::DegenerateEvaluation,
          "no admissible translation point after " + std::to_string(opts.max_attempts) + " attempts");
}

PairingValue direct_with(const DualCurve& E, const Point& P, const Fp& k, const Point& R, const AdditionChain& chain,
                         const Point& T) {
    MillerPlan plan(E.base(), P, chain, T);
    DualNumber moved = miller_eval(plan, compose(E, R, k));
    Fp base = miller_eval(plan, R);
    return PairingValue::from_dual(moved / DualNumber(base));
}

// y · d/dx of a line along the curve; finite even where y vanishes.
Fp y_derivative(const Curve& C, const LineFunction& line, const Fp& x, const Fp& y) {
    switch (line.kind()) {
    case LineFunction::Kind::Chord: {
        Fp half = C.field()->element(2).inv();
        return (3L * x * x + C.A()) * half - line.slope() * y;
    }
    case LineFunction::Kind::Vertical: return y;
    case LineFunction::Kind::Constant: break;
    }
    return C.field()->zero();
}

LambdaValue lambda_with(const Curve& C, const Point& P, const Point& R, const AdditionChain& chain, const Point& T) {
    MillerPlan plan(C, P, chain, T);
    Point S = translate_evaluation_point(C, R, plan.offset());
    const Fp yR_inv = R.y().inv();
    std::map<mpz_class, Fp> lam{{1, C.field()->zero()}};
    for (const auto& e : plan.entries()) {
        Fp num = e.h.numerator(S.x(), S.y());
        Fp den = e.h.denominator(S.x(), S.y());
        if (num.is_zero() || den.is_zero())
            raise(ErrorCode::DegenerateEvaluation, "line function vanishes at the evaluation point");
        Fp term = (y_derivative(C, e.h.numerator, S.x(), S.y()) / num -
                   y_derivative(C, e.h.denominator, S.x(), S.y()) / den) *
                  yR_inv;
        lam.insert_or_assign(e.step.k, lam.at(e.step.i) + lam.at(e.step.j) + term);
    }
    return {lam.at(plan.n())};
}

AdditionChain chain_or_default(const Curve& C, const MillerOptions& opts) {
    return opts.chain ? *opts.chain : binary_chain(C.p());
}

} // namespace

PairingValue e_direct(const DualCurve& E, const Point& P, const Fp& k, const Point& R, const MillerOptions& opts) {
    require_canonical(E);
    const Curve& C = E.base();
    check_same_field(C.field(), k.field());
    require_p_torsion(C, P);
    require_evaluation_point(C, R);
    if (P.is_infinity() || k.is_zero())
        return PairingValue::one(C.field());
    const AdditionChain chain = chain_or_default(C, opts);
    return with_translation<PairingValue>(C, opts,
                                          [&](const Point& T) { return direct_with(E, P, k, R, chain, T); });
}

PairingValue e_direct(const DualCurve& E, const Point& P, const Fp& k, const Point& R, const AdditionChain& chain) {
    MillerOptions opts;
    opts.chain = chain;
    return e_direct(E, P, k, R, opts);
}

LambdaValue lambda_semaev(const Curve& C, const Point& P, const Point& R, const MillerOptions& opts) {
    require_p_torsion(C, P);
    require_evaluation_point(C, R);
    if (P.is_infinity())
        return {C.field()->zero()};
    const AdditionChain chain = chain_or_default(C, opts);
    return with_translation<LambdaValue>(C, opts,
                                         [&](const Point& T) { return lambda_with(C, P, R, chain, T); });
}

LambdaValue lambda_semaev(const Curve& C, const Point& P, const Point& R, const Point& T) {
    MillerOptions opts;
    opts.translation = T;
    return lambda_semaev(C, P, R, opts);
}

PairingValue e_semaev(const DualCurve& E, const Point& P, const Fp& k, const Point& R, const MillerOptions& opts) {
    require_canonical(E);
    check_same_field(E.field(), k.field());
    LambdaValue lam = lambda_semaev(E.base(), P, R, opts);
    return PairingValue(-2L * R.y() * lam.v * k);
}

Fp rueck_sum(const Curve& C, const Point& P) { return rueck_sum(C, P, binary_chain(C.p())); }

Fp rueck_sum(const Curve& C, const Point& P, const AdditionChain& chain) {
    require_p_torsion(C, P);
    if (P.is_infinity())
        return C.field()->zero();
    std::map<mpz_class, Point> multiple{{1, P}};
    std::map<mpz_class, Fp> acc{{1, C.field()->zero()}};
    for (const auto& s : chain) {
        const Point& iP = multiple.at(s.i);
        const Point& jP = multiple.at(s.j);
        Fp total = acc.at(s.i) + acc.at(s.j) + line_through(C, iP, jP).slope();
        acc.insert_or_assign(s.k, total);
        multiple.insert_or_assign(s.k, add_unchecked(C, iP, jP));
    }
    return acc.at(chain.empty() ? mpz_class(1) : chain.back().k);
}

PairingValue e_rueck(const DualCurve& E, const Point& P, const Fp& k) {
    require_canonical(E);
    check_same_field(E.field(), k.field());
    return PairingValue(kRueckSign * rueck_sum(E.base(), P) * k);
}

PairingMethod parse_pairing_method(std::string_view name) {
    if (name == "direct")
        return PairingMethod::Direct;
    if (name == "semaev")
        return PairingMethod::Semaev;
    if (name == "rueck")
        return PairingMethod::Rueck;
    raise(ErrorCode::BadInput, "unknown pairing method: " + std::string(name));
}

std::string_view to_string(PairingMethod m) {
    switch (m) {
    case PairingMethod::Direct: return "direct";
    case PairingMethod::Semaev: return "semaev";
    case PairingMethod::Rueck: break;
    }
    return "rueck";
}

PairingValue pairing(const DualCurve& E, const Point& P, const Fp& k, PairingMethod method, std::uint64_t seed) {
    if (method == PairingMethod::Rueck)
        return e_rueck(E, P, k);
    require_p_torsion(E.base(), P);
    Rng rng(seed);
    for (int draw = 0; draw < kEvaluationPointDraws; ++draw) {
        Point R = choose_evaluation_point(E.base(), rng);
        MillerOptions opts;
        opts.seed = rng.next_u64();
        try {
            return method == PairingMethod::Direct ? e_direct(E, P, k, R, opts) : e_semaev(E, P, k, R, opts);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::DegenerateEvaluation)
                throw;
        }
    }
    raise(ErrorCode::DegenerateEvaluation,
          "no admissible evaluation point after " + std::to_string(kEvaluationPointDraws) + " draws");
}

PairingValue e_p_full(const DualCurve& E, const DualPoint& P, const DualPoint& Q) {
    require_canonical(E);
    for (const DualPoint* X : {&P, &Q}) {
        if (!validate(E, *X))
            raise(ErrorCode::InvalidPoint, "dual point does not lie on the lifted curve");
        if (!dual_scalar_mul(E, E.base().p(), *X).is_theta() || !dual_scalar_mul(E, E.base().p(), *X).k().is_zero())
            raise(ErrorCode::NotPTorsion, "dual point is not p-torsion");
    }
    auto [P0, k] = decompose(E, P);
    auto [Q0, j] = decompose(E, Q);
    return e_rueck(E, P0, j) * e_rueck(E, Q0, k).inverse();
}

} // namespace dualpair
