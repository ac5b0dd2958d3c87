#pragma once

#include <json.hpp>

#include <gmpxx.h>

#include <string>

#include "dualpair/curve.hpp"
#include "dualpair/dlp.hpp"
#include "dualpair/dual_curve.hpp"
#include "dualpair/isogeny.hpp"
#include "dualpair/p_pairing.hpp"

namespace dualpair {

using json = nlohmann::json;

// All integers travel as decimal strings. Readers also accept JSON integers
// and throw BadInput on anything malformed.

mpz_class integer_from_json(const json& j);
Fp element_from_json(const FieldRef& f, const json& j);

json to_json(const Curve& C);
Curve curve_from_json(const json& j);

json to_json(const Point& P);
/// Validated against C (PointNotOnCurve).
Point point_from_json(const Curve& C, const json& j);
/// "x,y" or "inf".
Point point_from_text(const Curve& C, const std::string& text);

json to_json(const DualNumber& z);
DualNumber dual_number_from_json(const FieldRef& f, const json& j);

json to_json(const DualCurve& E);
DualCurve dual_curve_from_json(const json& j);

json to_json(const DualPoint& P);
/// Validated against E (InvalidPoint).
DualPoint dual_point_from_json(const DualCurve& E, const json& j);

json to_json(const PairingValue& v);
PairingValue pairing_value_from_json(const FieldRef& f, const json& j);

json to_json(const Polynomial& f);
json to_json(const Isogeny& phi);

json to_json(const AttackResult& r);

json to_json(const ConjectureProbe& probe);

} // namespace dualpair
