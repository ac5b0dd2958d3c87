#include "dualpair/dlp.hpp"

#include <string>

#include "dualpair/p_pairing.hpp"

namespace dualpair {

void validate_instance(const DlpInstance& inst) {
    require_on_curve(inst.C, inst.P);
    require_on_curve(inst.C, inst.Q);
    if (inst.P.is_infinity())
        raise(ErrorCode::BadInput, "the base point must not be infinity");
    require_p_torsion(inst.C, inst.P);
    require_p_torsion(inst.C, inst.Q);
}

AttackMethod parse_attack_method(std::string_view name) {
    if (name == "semaev")
        return AttackMethod::Semaev;
    if (name == "rueck")
        return AttackMethod::Rueck;
    if (name == "pairing")
        return AttackMethod::Pairing;
    if (name == "lift")
        return AttackMethod::Lift;
    raise(ErrorCode::BadInput, "unknown attack method: " + std::string(name));
}

std::string_view to_string(AttackMethod m) {
    switch (m) {
    case AttackMethod::Semaev: return "semaev";
    case AttackMethod::Rueck: return "rueck";
    case AttackMethod::Pairing: return "pairing";
    case AttackMethod::Lift: break;
    }
    return "lift";
}

namespace {

AttackResult solved(const Fp& num, const Fp& den, AttackMethod method, int retries = 0) {
    if (den.is_zero())
        raise(ErrorCode::DegenerateEvaluation, "base point maps to zero");
    return {(num / den).value(), method, retries, std::nullopt};
}

} // namespace

AttackResult attack_semaev(const DlpInstance& inst, std::uint64_t seed) {
    validate_instance(inst);
    const Curve& C = inst.C;
    Rng rng(seed);
    MillerOptions opts;
    opts.chain = binary_chain(C.p());
    for (int draw = 0; draw < kEvaluationPointDraws; ++draw) {
        // λ(P) and λ(Q) share R but pick their translations independently:
        // on small curves no single T avoids the line zeros of both
        const Point R = choose_evaluation_point(C, rng);
        opts.seed = rng.next_u64();
        try {
            Fp lp = lambda_semaev(C, inst.P, R, opts).v;
            Fp lq = lambda_semaev(C, inst.Q, R, opts).v;
            return solved(lq, lp, AttackMethod::Semaev, draw);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::DegenerateEvaluation)
                throw;
        }
    }
    raise(ErrorCode::DegenerateEvaluation, "no admissible evaluation point for the semaev attack");
}

AttackResult attack_rueck(const DlpInstance& inst) {
    validate_instance(inst);
    return solved(rueck_sum(inst.C, inst.Q), rueck_sum(inst.C, inst.P), AttackMethod::Rueck);
}

AttackResult attack_pairing(const DlpInstance& inst) {
    validate_instance(inst);
    DualCurve E(inst.C);
    const DualPoint theta_one = DualPoint::theta(inst.C.field()->one());
    Fp a = e_p_full(E, E.embed(inst.P), theta_one).a();
    Fp b = e_p_full(E, E.embed(inst.Q), theta_one).a();
    return solved(b, a, AttackMethod::Pairing);
}

Fp lift_torsion_defect(const DualCurve& E, const Point& generator) {
    DualPoint top = dual_scalar_mul(E, E.base().p(), lift_point(E, generator));
    if (!top.is_theta())
        raise(ErrorCode::NotPTorsion, "point is not p-torsion on the base curve");
    return top.k();
}

AttackResult attack_lift_with(const DlpInstance& inst, const Fp& A1, const Fp& B1) {
    validate_instance(inst);
    DualCurve E(inst.C, A1, B1);
    Fp kP = lift_torsion_defect(E, inst.P);
    if (kP.is_zero())
        raise(ErrorCode::LiftDegenerate, "the lift keeps the base point p-torsion");
    Fp kQ = lift_torsion_defect(E, inst.Q);
    AttackResult out = solved(kQ, kP, AttackMethod::Lift);
    out.lift = {A1, B1};
    return out;
}

AttackResult attack_lift(const DlpInstance& inst, std::uint64_t seed) {
    validate_instance(inst);
    const FieldRef& F = inst.C.field();
    Rng rng(seed);
    int rejected = 0;
    for (int attempt = 0; attempt < kLiftResamples; ++attempt) {
        Fp A1 = rng.element(F);
        Fp B1 = rng.element(F);
        DualCurve E(inst.C, A1, B1);
        if (scaling_witness(E)) {
            ++rejected;
            continue;
        }
        try {
            AttackResult out = attack_lift_with(inst, A1, B1);
            out.retries = rejected;
            return out;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::LiftDegenerate)
                throw;
            ++rejected;
        }
    }
    raise(ErrorCode::LiftDegenerate,
          "no lift breaking p-torsion after " + std::to_string(kLiftResamples) + " samples");
}

AttackResult attack(const DlpInstance& inst, AttackMethod method, std::uint64_t seed) {
    switch (method) {
    case AttackMethod::Semaev: return attack_semaev(inst, seed);
    case AttackMethod::Rueck: return attack_rueck(inst);
    case AttackMethod::Pairing: return attack_pairing(inst);
    case AttackMethod::Lift: break;
    }
    return attack_lift(inst, seed);
}

bool j_in_base_field(const DualCurve& E) { return j_dual(E).eps().is_zero(); }

std::optional<Fp> scaling_witness(const DualCurve& E) {
    const Fp& A = E.base().A();
    const Fp& B = E.base().B();
    std::optional<Fp> k;
    if (A.is_zero()) {
        if (!E.A1().is_zero())
            return std::nullopt;
        k = E.B1() / (6L * B);
    } else if (B.is_zero()) {
        if (!E.B1().is_zero())
            return std::nullopt;
        k = E.A1() / (4L * A);
    } else {
        Fp kA = E.A1() / (4L * A);
        Fp kB = E.B1() / (6L * B);
        if (kA != kB)
            return std::nullopt;
        k = kA;
    }
    const DualNumber mu(E.field()->one(), *k);
    if (mu.pow(4) * A != E.A() || mu.pow(6) * B != E.B())
        return std::nullopt;
    return k;
}

CanonicalTest is_canonical_equivalent(const DualCurve& E) {
    const bool j_ok = j_in_base_field(E);
    std::optional<Fp> k = scaling_witness(E);
    if (j_ok != k.has_value())
        raise(ErrorCode::WitnessInconsistent, j_ok ? "j is in F_p but no scaling witness exists"
                                                    : "scaling witness exists but j is not in F_p");
    return {j_ok, k};
}

ConjectureProbe conjecture_probe(const Curve& C) {
    if (C.p() > kProbePrimeLimit)
        raise(ErrorCode::BadInput, "the conjecture probe is exhaustive; p must be at most " +
                                       std::to_string(kProbePrimeLimit));
    const FieldRef& F = C.field();
    std::vector<Point> gens;
    for (const Point& P : all_points(C))
        if (!P.is_infinity() && scalar_mul(C, C.p(), P).is_infinity())
            gens.push_back(P);
    ConjectureProbe out{C.p(), C.A(), C.B(), 0, 0, 0, 0, {}};
    const long p = C.p().get_si();
    for (long a1 = 0; a1 < p; ++a1) {
        for (long b1 = 0; b1 < p; ++b1) {
            DualCurve E(C, F->element(a1), F->element(b1));
            const bool j_ok = j_in_base_field(E);
            bool keeps = true;
            for (const Point& P : gens) {
                DualPoint top = dual_scalar_mul(E, C.p(), lift_point(E, P));
                if (!top.is_theta() || !top.k().is_zero()) {
                    keeps = false;
                    break;
                }
            }
            ++out.lifts;
            out.j_in_fp += j_ok;
            out.torsion_preserving += keeps;
            out.both += j_ok && keeps;
            if (j_ok != keeps)
                out.mismatches.emplace_back(E.A1(), E.B1(), j_ok);
        }
    }
    return out;
}

} // namespace dualpair
