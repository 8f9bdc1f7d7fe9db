#include "seshadri/json_io.hpp"

namespace seshadri {

Json to_json(const Rational& x) { return rational_to_string(x); }

Json to_json(const ExactValue& x) {
    Json j;
    j["q"] = rational_to_string(x.rational_part());
    j["r"] = rational_to_string(x.surd_coefficient());
    j["d"] = x.radicand().convert_to<std::uint64_t>();
    return j;
}

ExactValue exact_value_from_json(const Json& j) {
    return ExactValue(parse_rational(j.at("q").get<std::string>()),
                      parse_rational(j.at("r").get<std::string>()),
                      Int(j.at("d").get<std::uint64_t>()));
}

Json to_json(const DivisorClass& l) {
    Json j;
    j["a"] = l.a;
    j["b"] = l.b;
    return j;
}

Json to_json(const PointClass& point) {
    Json j;
    switch (point.kind) {
        case PointClass::Kind::VeryGeneral: j["kind"] = "very_general"; break;
        case PointClass::Kind::Arbitrary: j["kind"] = "arbitrary"; break;
        case PointClass::Kind::OnSingularFibre:
            j["kind"] = "on_singular_fibre";
            j["n"] = point.fibre_multiplicity;
            break;
    }
    return j;
}

Json to_json(const SeshadriEstimate& estimate) {
    Json j;
    j["kind"] = to_string(estimate.kind);
    if (estimate.value) j["value"] = rational_to_string(*estimate.value);
    if (estimate.lower) j["lower"] = to_json(*estimate.lower);
    if (estimate.upper) j["upper"] = to_json(*estimate.upper);
    j["branch"] = estimate.branch;
    return j;
}

Json to_json(const CurveCandidate& c) {
    Json j;
    j["alpha"] = c.alpha;
    j["beta"] = c.beta;
    j["m"] = c.m;
    return j;
}

Json to_json(const OracleReport& report) {
    Json j;
    j["lower"] = to_json(report.lower);
    j["upper"] = to_json(report.upper);
    Json w = Json::array();
    for (const auto& c : report.witnesses) w.push_back(to_json(c));
    j["witnesses"] = std::move(w);
    j["scan_limit"] = report.scan_limit;
    j["tail_bound"] = to_json(report.tail_bound);
    j["mixed_floor"] = to_json(report.mixed_floor);
    return j;
}

Json to_json(const CrossCheckRow& row) {
    Json j;
    j["a"] = row.l.a;
    j["b"] = row.l.b;
    j["check"] = row.check;
    j["point"] = to_json(row.point);
    j["estimate"] = to_json(row.estimate);
    j["oracle"] = to_json(row.report);
    j["verdict"] = row.pass ? "PASS" : "FAIL";
    if (!row.pass) j["detail"] = row.detail;
    return j;
}

Json to_json(const SurfaceType& s) {
    Json j;
    j["type"] = s.type_id;
    j["group"] = s.group_name;
    j["gamma"] = s.gamma;
    j["mu"] = s.mu;
    j["singular_fibre_multiplicities"] = s.sing_mults;
    return j;
}

}  // namespace seshadri
