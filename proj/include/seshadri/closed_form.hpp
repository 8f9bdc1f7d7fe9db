#pragma once

#include "seshadri/estimate.hpp"

#include <vector>

namespace seshadri {

/// Default threshold ratio used by the eps(L,1) case analysis: 93/100.
const Rational& default_delta();

/// The least Seshadri constant eps(L) = inf over points.
///
/// Dispatch, in order (L = (a,b) ample):
///   odd types 1,3,5,7          -> Exact(min(a,b))
///   type 2, b <= a             -> Exact(b)        (types 4,6: 2b <= a)
///   type 2, b >= 3a            -> Exact(2a)
///   type 4, 2b >= 7a           -> Exact(2a)
///   type 6, b >= 8a            -> Exact(3a)
///   types 2,4 otherwise        -> CertifiedRational, upper = min(b, 2a)
///   type 6, b outside (2a,9a/2)-> CertifiedRational, upper = min(b, 3a)
///   type 6, 2a < b < 9a/2      -> UnknownWithBound, lower = (7/10)sqrt(2ab),
///                                 upper = sqrt(2ab)
SeshadriEstimate epsilon_min(const SurfaceType& s, const DivisorClass& l);

/// Seshadri constant at a very general point. All threshold comparisons are
/// exact in delta; boundary equalities resolve to the Exact branch. delta
/// must lie in (0,1) and satisfy the very-general feasibility check.
SeshadriEstimate epsilon_one(const SurfaceType& s, const DivisorClass& l,
                             const Rational& delta = default_delta());

/// Sharpest statement available for the given point class: exact where a
/// blanket case applies or the fibre and Bezout bounds meet, otherwise
/// BoundedBelow with the fibre-ratio upper bound.
SeshadriEstimate epsilon_at_point(const SurfaceType& s, const DivisorClass& l,
                                  const PointClass& point,
                                  const Rational& delta = default_delta());

enum class GenusConstraint {
    VeryGeneral,  // C^2 >= m^2 - m + 2 for m >= 2
    General,      // C^2 >= m^2 - m
};

struct DeltaFeasibility {
    bool feasible;
    std::vector<Int> violating_m;
};

/// For VeryGeneral, checks (1 - delta^2)m^2 - m + 2 > 0 for every integer
/// m >= 2; for General, checks (1 - delta^2)m^2 - m >= 0. The violating set
/// is finite (the quadratic opens upward) and is returned in full.
DeltaFeasibility delta_feasibility(const Rational& delta, GenusConstraint constraint);

struct MaxDelta {
    Rational sup_delta_squared;
    Int critical_m;
};

/// Supremum of feasible delta^2 over integer m >= 2, with the minimizing m:
/// min of (m^2-m+2)/m^2 (VeryGeneral) resp. (m^2-m)/m^2 (General).
MaxDelta max_feasible_delta(GenusConstraint constraint);

}  // namespace seshadri
