#pragma once

#include "seshadri/exact_value.hpp"
#include "seshadri/surface.hpp"

#include <optional>
#include <string>

namespace seshadri {

enum class EstimateKind {
    Exact,             // value known, rational
    CertifiedRational, // value unknown but proven rational; upper carries the witness ratio
    BoundedBelow,      // lower (and usually upper) bounds known
    UnknownWithBound,  // rationality open; lower/upper bounds known
};

std::string to_string(EstimateKind kind);

struct SeshadriEstimate {
    EstimateKind kind;
    std::optional<Rational> value;     // present iff kind == Exact
    std::optional<ExactValue> lower;
    std::optional<ExactValue> upper;
    std::string branch;                // which case of the dispatch fired

    static SeshadriEstimate exact(Rational v, std::string branch_label);
    static SeshadriEstimate certified_rational(ExactValue upper_witness, std::string branch_label);
    static SeshadriEstimate bounded_below(ExactValue lo, ExactValue up, std::string branch_label);
    static SeshadriEstimate unknown_with_bound(ExactValue lo, ExactValue up, std::string branch_label);
};

/// The class of point a Seshadri constant is queried at. OnSingularFibre(n)
/// means a point lying on a fibre of Psi of multiplicity n; Arbitrary asks
/// for bounds valid at every point (the worst point witnesses the upper
/// bound); VeryGeneral is the generic point of eps(L,1).
struct PointClass {
    enum class Kind { VeryGeneral, OnSingularFibre, Arbitrary };

    Kind kind = Kind::Arbitrary;
    int fibre_multiplicity = 0;  // n, meaningful only for OnSingularFibre

    static PointClass very_general() { return {Kind::VeryGeneral, 0}; }
    static PointClass arbitrary() { return {Kind::Arbitrary, 0}; }
    static PointClass on_singular_fibre(int n) { return {Kind::OnSingularFibre, n}; }

    friend bool operator==(const PointClass&, const PointClass&) = default;
};

std::string to_string(const PointClass& point);

/// Throws if an OnSingularFibre multiplicity is not one of the surface's
/// singular-fibre multiplicities.
void validate_point_class(const PointClass& point, const SurfaceType& s);

}  // namespace seshadri
