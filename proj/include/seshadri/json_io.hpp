#pragma once

#include "seshadri/oracle.hpp"
#include "seshadri/pell.hpp"

#include <json.hpp>

namespace seshadri {

// Canonical JSON forms: insertion-ordered keys, rationals as "p/q" strings,
// exact values as {"q": .., "r": .., "d": ..}. Rendering then re-parsing then
// re-rendering is byte-identical.
using Json = nlohmann::ordered_json;

Json to_json(const Rational& x);
Json to_json(const ExactValue& x);
Json to_json(const DivisorClass& l);
Json to_json(const PointClass& point);
Json to_json(const SeshadriEstimate& estimate);
Json to_json(const CurveCandidate& c);
Json to_json(const OracleReport& report);
Json to_json(const CrossCheckRow& row);
Json to_json(const SurfaceType& s);

ExactValue exact_value_from_json(const Json& j);

}  // namespace seshadri
