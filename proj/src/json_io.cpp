#include "dualpair/json_io.hpp"

#include <algorithm>
#include <cctype>

namespace dualpair {

namespace {

std::string dec(const mpz_class& v) { return v.get_str(10); }
std::string dec(const Fp& v) { return v.value().get_str(10); }

const json& member(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        raise(ErrorCode::BadInput, std::string("missing JSON member \"") + key + "\"");
    return j.at(key);
}

bool is_decimal(const std::string& s) {
    std::size_t start = !s.empty() && (s[0] == '-' || s[0] == '+') ? 1 : 0;
    return s.size() > start &&
           std::all_of(s.begin() + static_cast<long>(start), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

mpz_class parse_decimal(const std::string& raw) {
    std::string s = raw;
    s.erase(0, s.find_first_not_of(" \t"));
    s.erase(s.find_last_not_of(" \t") + 1);
    if (!is_decimal(s))
        raise(ErrorCode::BadInput, "not a decimal integer: \"" + raw + "\"");
    if (s[0] == '+')
        s.erase(0, 1);
    return mpz_class(s, 10);
}

} // namespace

mpz_class integer_from_json(const json& j) {
    if (j.is_string())
        return parse_decimal(j.get<std::string>());
    if (j.is_number_integer())
        return parse_decimal(j.dump());
    raise(ErrorCode::BadInput, "expected a decimal integer, got " + j.dump());
}

Fp element_from_json(const FieldRef& f, const json& j) { return f->element(integer_from_json(j)); }

json to_json(const Curve& C) { return {{"p", dec(C.p())}, {"A", dec(C.A())}, {"B", dec(C.B())}}; }

Curve curve_from_json(const json& j) {
    return Curve(integer_from_json(member(j, "p")), integer_from_json(member(j, "A")),
                 integer_from_json(member(j, "B")));
}

json to_json(const Point& P) {
    if (P.is_infinity())
        return {{"inf", true}};
    return {{"x", dec(P.x())}, {"y", dec(P.y())}};
}

Point point_from_json(const Curve& C, const json& j) {
    if (j.is_object() && j.contains("inf")) {
        if (j.at("inf") != true)
            raise(ErrorCode::BadInput, "\"inf\" must be true");
        return Point::infinity();
    }
    return C.point(integer_from_json(member(j, "x")), integer_from_json(member(j, "y")));
}

Point point_from_text(const Curve& C, const std::string& text) {
    if (text == "inf")
        return Point::infinity();
    auto comma = text.find(',');
    if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos)
        raise(ErrorCode::BadInput, "point must be \"x,y\" or \"inf\", got \"" + text + "\"");
    return C.point(parse_decimal(text.substr(0, comma)), parse_decimal(text.substr(comma + 1)));
}

json to_json(const DualNumber& z) { return {{"re", dec(z.re())}, {"eps", dec(z.eps())}}; }

DualNumber dual_number_from_json(const FieldRef& f, const json& j) {
    return {element_from_json(f, member(j, "re")), element_from_json(f, member(j, "eps"))};
}

json to_json(const DualCurve& E) {
    json j = to_json(E.base());
    j["A1"] = dec(E.A1());
    j["B1"] = dec(E.B1());
    return j;
}

DualCurve dual_curve_from_json(const json& j) {
    Curve C = curve_from_json(j);
    Fp A1 = j.contains("A1") ? element_from_json(C.field(), j.at("A1")) : C.field()->zero();
    Fp B1 = j.contains("B1") ? element_from_json(C.field(), j.at("B1")) : C.field()->zero();
    return DualCurve(C, A1, B1);
}

json to_json(const DualPoint& P) {
    if (P.is_theta())
        return {{"theta", dec(P.k())}};
    return {{"x", to_json(P.x())}, {"y", to_json(P.y())}};
}

DualPoint dual_point_from_json(const DualCurve& E, const json& j) {
    DualPoint P = j.is_object() && j.contains("theta")
                      ? DualPoint::theta(element_from_json(E.field(), j.at("theta")))
                      : DualPoint::affine(dual_number_from_json(E.field(), member(j, "x")),
                                          dual_number_from_json(E.field(), member(j, "y")));
    if (!validate(E, P))
        raise(ErrorCode::InvalidPoint, "dual point does not lie on the lifted curve");
    return P;
}

json to_json(const PairingValue& v) { return {{"one_plus_eps_times", dec(v.a())}}; }

PairingValue pairing_value_from_json(const FieldRef& f, const json& j) {
    return PairingValue(element_from_json(f, member(j, "one_plus_eps_times")));
}

json to_json(const Polynomial& f) {
    json out = json::array();
    for (const Fp& c : f.coeffs())
        out.push_back(dec(c));
    return out;
}

json to_json(const Isogeny& phi) {
    json kernel = json::array();
    for (const Point& P : phi.kernel_points)
        kernel.push_back(to_json(P));
    return {{"source", to_json(phi.source)},   {"target", to_json(phi.target)},
            {"r_num", to_json(phi.r_num())},   {"r_den", to_json(phi.r_den())},
            {"s_num", to_json(phi.s_num())},   {"s_den", to_json(phi.s_den())},
            {"degree", dec(phi.degree)},       {"m", dec(phi.m)},
            {"kernel_points", kernel}};
}

json to_json(const AttackResult& r) {
    json j = {{"n", dec(r.n)}, {"method", std::string(to_string(r.method))}, {"retries", r.retries}};
    if (r.lift)
        j["lift"] = {{"A1", dec(r.lift->first)}, {"B1", dec(r.lift->second)}};
    return j;
}

json to_json(const ConjectureProbe& probe) {
    json mismatches = json::array();
    for (const auto& [a1, b1, j_ok] : probe.mismatches)
        mismatches.push_back({{"A1", dec(a1)}, {"B1", dec(b1)}, {"j_in_fp", j_ok}});
    return {{"curve", {{"p", dec(probe.p)}, {"A", dec(probe.A)}, {"B", dec(probe.B)}}},
            {"lifts", probe.lifts},
            {"j_in_fp", probe.j_in_fp},
            {"torsion_preserving", probe.torsion_preserving},
            {"both", probe.both},
            {"sets_equal", probe.sets_equal()},
            {"mismatches", mismatches}};
}

} // namespace dualpair
