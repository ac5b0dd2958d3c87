#include "dualpair/miller.hpp"

#include <map>
#include <set>

namespace dualpair {

AdditionChain binary_chain(const mpz_class& n) {
    if (n < 1)
        raise(ErrorCode::BadInput, "addition chains need n >= 1");
    AdditionChain chain;
    const std::size_t top = mpz_sizeinbase(n.get_mpz_t(), 2) - 1;
    mpz_class power = 1;
    for (std::size_t b = 0; b < top; ++b) {
        chain.push_back({2 * power, power, power});
        power *= 2;
    }
    mpz_class acc = power;
    for (std::size_t b = top; b-- > 0;) {
        if (!mpz_tstbit(n.get_mpz_t(), b))
            continue;
        mpz_class bit;
        mpz_ui_pow_ui(bit.get_mpz_t(), 2, b);
        chain.push_back({acc + bit, acc, bit});
        acc += bit;
    }
    return chain;
}

AdditionChain increment_chain(const mpz_class& n) {
    if (n < 1)
        raise(ErrorCode::BadInput, "addition chains need n >= 1");
    AdditionChain chain;
    for (mpz_class k = 2; k <= n; ++k)
        chain.push_back({k, k - 1, 1});
    return chain;
}

AdditionChain ternary_chain(const mpz_class& n) {
    if (n < 1)
        raise(ErrorCode::BadInput, "addition chains need n >= 1");
    std::vector<int> digits;
    for (mpz_class m = n; m > 0; m /= 3)
        digits.push_back(static_cast<int>(mpz_class(m % 3).get_si()));
    AdditionChain chain;
    mpz_class c = 1;
    if (digits.back() == 2) {
        chain.push_back({2, 1, 1});
        c = 2;
    }
    for (auto it = digits.rbegin() + 1; it != digits.rend(); ++it) {
        chain.push_back({2 * c, c, c});
        chain.push_back({3 * c, 2 * c, c});
        c *= 3;
        for (int d = 0; d < *it; ++d, ++c)
            chain.push_back({c + 1, c, 1});
    }
    return chain;
}

bool is_valid_chain(const AdditionChain& chain, const mpz_class& n) {
    std::set<mpz_class> have{1};
    for (const auto& s : chain) {
        if (s.i + s.j != s.k || !have.count(s.i) || !have.count(s.j))
            return false;
        have.insert(s.k);
    }
    return chain.empty() ? n == 1 : chain.back().k == n;
}

mpz_class unrolled_step_count(const AdditionChain& chain) {
    std::map<mpz_class, mpz_class> count{{1, 0}};
    mpz_class last = 0;
    for (const auto& s : chain) {
        last = count.at(s.i) + count.at(s.j) + 1;
        count[s.k] = last;
    }
    return last;
}

LineFunction line_through(const Curve& C, const Point& A, const Point& B) {
    if (A.is_infinity() && B.is_infinity())
        return LineFunction::constant(C.field());
    if (A.is_infinity())
        return LineFunction::vertical(B.x());
    if (B.is_infinity())
        return LineFunction::vertical(A.x());
    if (A.x() == B.x() && A.y() == -B.y())
        return LineFunction::vertical(A.x());
    Fp m = A == B ? tangent_slope(A.x(), A.y(), C.A()) : (B.y() - A.y()) / (B.x() - A.x());
    return LineFunction::chord(m, A.y() - m * A.x());
}

LineFunction vertical_through(const Curve& C, const Point& A) {
    if (A.is_infinity())
        return LineFunction::constant(C.field());
    return LineFunction::vertical(A.x());
}

Cocycle make_cocycle(const Curve& C, const Point& iP, const Point& jP, const Point& T) {
    Point sum = add_unchecked(C, iP, jP);
    return {line_through(C, iP, jP), vertical_through(C, sum), -T};
}

Point translate_evaluation_point(const Curve& C, const Point& Q, const Point& offset) {
    Point S = point_add(C, Q, offset);
    if (S.is_infinity())
        raise(ErrorCode::DegenerateEvaluation, "translated evaluation point is at infinity");
    return S;
}

DualPoint translate_evaluation_point(const Curve& C, const DualPoint& Q, const Point& offset) {
    DualCurve E(C);
    DualPoint S = dual_add(E, Q, E.embed(offset));
    if (S.is_theta())
        raise(ErrorCode::DegenerateEvaluation, "translated evaluation point is at infinity");
    return S;
}

MillerPlan::MillerPlan(const Curve& C, const Point& P, const AdditionChain& chain, const Point& T)
    : curve_(C), offset_(-T), n_(chain.empty() ? mpz_class(1) : chain.back().k) {
    require_on_curve(C, P);
    require_on_curve(C, T);
    std::map<mpz_class, Point> multiple{{1, P}};
    entries_.reserve(chain.size());
    for (const auto& s : chain) {
        const Point& iP = multiple.at(s.i);
        const Point& jP = multiple.at(s.j);
        entries_.push_back({s, make_cocycle(C, iP, jP, T)});
        multiple[s.k] = add_unchecked(C, iP, jP);
    }
}

template <class Scalar>
Scalar evaluate_plan(const MillerPlan& plan, const Scalar& x, const Scalar& y) {
    const Scalar one = embed_scalar<Scalar>(plan.curve().field()->one());
    std::map<mpz_class, Scalar> f{{1, one}};
    for (const auto& e : plan.entries()) {
        Scalar h = cocycle_value(e.h, x, y);
        f.insert_or_assign(e.step.k, f.at(e.step.i) * f.at(e.step.j) * h);
    }
    return f.at(plan.n());
}

template Fp evaluate_plan<Fp>(const MillerPlan&, const Fp&, const Fp&);
template DualNumber evaluate_plan<DualNumber>(const MillerPlan&, const DualNumber&, const DualNumber&);

Fp h_eval(const Curve& C, const Point& P, const AdditionChainStep& step, const Point& T, const Point& Q) {
    Cocycle h = make_cocycle(C, scalar_mul(C, step.i, P), scalar_mul(C, step.j, P), T);
    Point S = translate_evaluation_point(C, Q, h.offset);
    return cocycle_value(h, S.x(), S.y());
}

DualNumber h_eval(const Curve& C, const Point& P, const AdditionChainStep& step, const Point& T,
                  const DualPoint& Q) {
    Cocycle h = make_cocycle(C, scalar_mul(C, step.i, P), scalar_mul(C, step.j, P), T);
    DualPoint S = translate_evaluation_point(C, Q, h.offset);
    return cocycle_value(h, S.x(), S.y());
}

Fp miller_eval(const MillerPlan& plan, const Point& Q) {
    Point S = translate_evaluation_point(plan.curve(), Q, plan.offset());
    return evaluate_plan(plan, S.x(), S.y());
}

DualNumber miller_eval(const MillerPlan& plan, const DualPoint& Q) {
    DualPoint S = translate_evaluation_point(plan.curve(), Q, plan.offset());
    return evaluate_plan(plan, S.x(), S.y());
}

Fp miller_eval(const Curve& C, const Point& P, const mpz_class& n, const Point& T, const Point& Q) {
    return miller_eval(MillerPlan(C, P, binary_chain(n), T), Q);
}

DualNumber miller_eval(const Curve& C, const Point& P, const mpz_class& n, const Point& T, const DualPoint& Q) {
    return miller_eval(MillerPlan(C, P, binary_chain(n), T), Q);
}

namespace {

void check_weil_inputs(const Curve& C, const mpz_class& n, const Point& P, const Point& Q) {
    if (n < 1)
        raise(ErrorCode::BadInput, "e_n needs n >= 1");
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), C.p().get_mpz_t());
    if (g != 1)
        raise(ErrorCode::BadInput, "e_n needs gcd(n, p) = 1");
    if ((C.p() - 1) % n != 0)
        raise(ErrorCode::BadInput, "mu_n is not contained in F_p (n does not divide p - 1)");
    if (!scalar_mul(C, n, P).is_infinity() || !scalar_mul(C, n, Q).is_infinity())
        raise(ErrorCode::BadTorsion, "e_n needs nP = nQ = infinity");
}

} // namespace

Fp weil_pairing_n_at(const Curve& C, const mpz_class& n, const Point& P, const Point& Q, const Point& T,
                     const Point& R) {
    check_weil_inputs(C, n, P, Q);
    if (P.is_infinity() || Q.is_infinity() || P == Q)
        return C.field()->one();
    const AdditionChain chain = binary_chain(n);
    MillerPlan fP(C, P, chain, T);
    MillerPlan fQ(C, Q, chain, R);
    Fp num = miller_eval(fP, add_unchecked(C, Q, R)) / miller_eval(fP, R);
    Fp den = miller_eval(fQ, add_unchecked(C, P, T)) / miller_eval(fQ, T);
    return num / den;
}

Fp weil_pairing_n(const Curve& C, const mpz_class& n, const Point& P, const Point& Q, std::uint64_t seed,
                  int attempts) {
    check_weil_inputs(C, n, P, Q);
    if (P.is_infinity() || Q.is_infinity() || P == Q)
        return C.field()->one();
    Rng rng(seed);
    for (int attempt = 0; attempt < attempts; ++attempt) {
        Point T = random_point(C, rng);
        Point R = random_point(C, rng);
        try {
            return weil_pairing_n_at(C, n, P, Q, T, R);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::DegenerateEvaluation)
                throw;
        }
    }
    raise(ErrorCode::DegenerateEvaluation,
          "no admissible translation points after " + std::to_string(attempts) + " attempts");
}

} // namespace dualpair
