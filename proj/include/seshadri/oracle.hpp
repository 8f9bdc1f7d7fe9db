#pragma once

#include "seshadri/closed_form.hpp"

#include <cstdint>
#include <vector>

namespace seshadri {

/// Numerical curve candidate: class (alpha, beta) passing through the queried
/// point with multiplicity m. Mixed candidates (alpha*beta != 0) are subject
/// to Bezout constraints against the two fibres through the point and to the
/// genus constraint C^2 >= m^2 - m (+2 through a very general point, m >= 2);
/// candidates with alpha*beta = 0 are fibres, handled by their ratios.
struct CurveCandidate {
    std::int64_t alpha;
    std::int64_t beta;
    std::int64_t m;

    friend bool operator==(const CurveCandidate&, const CurveCandidate&) = default;
    friend auto operator<=>(const CurveCandidate&, const CurveCandidate&) = default;
};

struct OracleReport {
    ExactValue lower;    // certified: every curve through the point class has ratio >= lower
    ExactValue upper;    // attained by a fibre through the point
    std::vector<CurveCandidate> witnesses;  // candidates attaining lower, (m,alpha,beta)-sorted
    int scan_limit;      // M
    ExactValue tail_bound;   // Hodge floor sqrt(2ab(1 - 1/M)) for multiplicities > M
    ExactValue mixed_floor;  // Bezout floor on every mixed candidate, any multiplicity
};

/// Certified two-sided bounds on the Seshadri constant at the given point
/// class, by exact minimization of (a*beta + b*alpha)/m over all curve
/// candidates with m <= M; multiplicities beyond M are covered by the Hodge
/// and Bezout floors. lower <= eps <= upper always holds.
OracleReport certify_point(const SurfaceType& s, const DivisorClass& l,
                           const PointClass& point, int scan_limit);

struct CrossCheckRow {
    DivisorClass l;
    std::string check;  // "epsilon_min" | "epsilon_one" | "epsilon_at_point"
    PointClass point;
    SeshadriEstimate estimate;
    OracleReport report;
    bool pass;
    std::string detail;  // reason, when pass is false
};

/// Runs the closed-form dispatch against the oracle on every ample (a,b) in
/// the grid: epsilon_min against the arbitrary point class, epsilon_one
/// against the very general one, and epsilon_at_point against each distinct
/// singular-fibre multiplicity. Row order is deterministic.
std::vector<CrossCheckRow> cross_check_region(const SurfaceType& s, int a_max,
                                              int b_max, int scan_limit);

/// Verdict used by cross_check_region, exposed for tests.
bool check_estimate_against_oracle(const SeshadriEstimate& estimate,
                                   const OracleReport& report, std::string* detail);

namespace detail {
/// Minimum Seshadri ratio over mixed candidates with multiplicity <= M,
/// ignoring fibres and tail. Returns the minimizing candidates. Exposed for
/// the redundant full-enumeration check in tests.
Rational mixed_scan_minimum(const SurfaceType& s, const DivisorClass& l, int n_bezout,
                            GenusConstraint genus, int scan_limit,
                            std::vector<CurveCandidate>* minimizers);
}  // namespace detail

}  // namespace seshadri
