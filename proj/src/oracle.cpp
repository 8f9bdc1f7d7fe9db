#include "seshadri/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace seshadri {

namespace {

std::int64_t ceil_div_i64(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

void require_oracle_inputs(const DivisorClass& l, int scan_limit) {
    if (!is_ample(l)) throw std::domain_error("line bundle is not ample");
    if (l.a > 1000000 || l.b > 1000000)
        throw std::domain_error("coordinates out of supported oracle range");
    if (scan_limit < 2 || scan_limit > 20000)
        throw std::domain_error("scan limit must be in 2..20000");
}

struct PointData {
    int n_fibre;   // multiplicity of the Psi-fibre through the point
    int n_bezout;  // multiplicity usable in the Bezout constraint
    GenusConstraint genus;
};

PointData point_data(const SurfaceType& s, const PointClass& point) {
    switch (point.kind) {
        case PointClass::Kind::VeryGeneral:
            // A very general point misses the finitely many singular fibres.
            return {1, 1, GenusConstraint::VeryGeneral};
        case PointClass::Kind::Arbitrary:
            // Upper bound from the worst fibre; Bezout must hold at every
            // point, including those on smooth fibres.
            return {s.mu, 1, GenusConstraint::General};
        case PointClass::Kind::OnSingularFibre:
            return {point.fibre_multiplicity, point.fibre_multiplicity,
                    GenusConstraint::General};
    }
    throw std::logic_error("unreachable");
}

}  // namespace

namespace detail {

Rational mixed_scan_minimum(const SurfaceType& s, const DivisorClass& l, int n_bezout,
                            GenusConstraint genus, int scan_limit,
                            std::vector<CurveCandidate>* minimizers) {
    const std::int64_t a = l.a, b = l.b;
    const std::int64_t phi_coeff = s.phi_fibre_coefficient();
    std::int64_t best_num = -1, best_den = 1;
    std::vector<CurveCandidate> best;

    for (std::int64_t m = 1; m <= scan_limit; ++m) {
        std::int64_t g = m * m - m;
        if (genus == GenusConstraint::VeryGeneral && m >= 2) g += 2;
        const std::int64_t min_product = (g + 1) / 2;  // alpha*beta >= ceil(g/2)
        const std::int64_t alpha0 = ceil_div_i64(m, phi_coeff);
        const std::int64_t beta0 = ceil_div_i64(m * n_bezout, s.mu);
        // The objective is increasing in both coordinates, so only the corner
        // profile beta = max(beta0, ceil(min_product/alpha)) can minimize.
        for (std::int64_t alpha = alpha0;; ++alpha) {
            std::int64_t beta = std::max(beta0, ceil_div_i64(min_product, alpha));
            std::int64_t num = a * beta + b * alpha;
            if (best_num < 0 || num * best_den < best_num * m) {
                best_num = num;
                best_den = m;
                best.assign(1, CurveCandidate{alpha, beta, m});
            } else if (num * best_den == best_num * m) {
                best.push_back({alpha, beta, m});
            }
            if (beta == beta0) break;
        }
    }
    std::sort(best.begin(), best.end(), [](const CurveCandidate& x, const CurveCandidate& y) {
        return std::tie(x.m, x.alpha, x.beta) < std::tie(y.m, y.alpha, y.beta);
    });
    if (minimizers) *minimizers = std::move(best);
    return Rational(Int(best_num), Int(best_den));
}

}  // namespace detail

OracleReport certify_point(const SurfaceType& s, const DivisorClass& l,
                           const PointClass& point, int scan_limit) {
    require_oracle_inputs(l, scan_limit);
    validate_point_class(point, s);
    const PointData pd = point_data(s, point);
    const Rational a(l.a), b(l.b);

    // Candidates with alpha*beta = 0 are fibres or multiples k*fibre. A
    // multiple admits m <= k*(fibre multiplicity at the point) by Bezout
    // against the complementary fibre, so its ratio is bounded below by the
    // single-fibre ratio; the two k = 1 candidates cover the whole family.
    const Rational phi_ratio = Rational(s.phi_fibre_coefficient()) * a;
    const Rational psi_ratio = Rational(s.mu) * b / pd.n_fibre;

    std::vector<CurveCandidate> scan_witnesses;
    const Rational scan_min =
        detail::mixed_scan_minimum(s, l, pd.n_bezout, pd.genus, scan_limit, &scan_witnesses);

    // Mixed candidates with m > scan_limit: by Hodge index their ratio is at
    // least sqrt(2ab(1 - 1/M)); by Bezout alone it is at least
    // a*n/mu + b*mu/gamma. Either floor is valid for every m, so take the max.
    const Int l2 = Int(self_intersection(l));
    const ExactValue hodge_tail =
        make_surd(Rational(1, scan_limit), l2 * scan_limit * (scan_limit - 1));
    const Rational bezout_floor =
        a * Rational(pd.n_bezout, s.mu) + b * Rational(s.mu, s.gamma);
    const ExactValue tail = max(hodge_tail, ExactValue(bezout_floor));

    const ExactValue upper = min(ExactValue(phi_ratio), ExactValue(psi_ratio));
    ExactValue lower = min(upper, ExactValue(scan_min));
    lower = min(lower, tail);

    std::vector<CurveCandidate> witnesses;
    if (ExactValue(phi_ratio) == lower)
        witnesses.push_back({0, s.phi_fibre_coefficient(), 1});
    if (ExactValue(psi_ratio) == lower)
        witnesses.push_back({s.mu, 0, pd.n_fibre});
    if (ExactValue(scan_min) == lower)
        witnesses.insert(witnesses.end(), scan_witnesses.begin(), scan_witnesses.end());
    std::sort(witnesses.begin(), witnesses.end(),
              [](const CurveCandidate& x, const CurveCandidate& y) {
                  return std::tie(x.m, x.alpha, x.beta) < std::tie(y.m, y.alpha, y.beta);
              });

    return OracleReport{std::move(lower), upper, std::move(witnesses),
                        scan_limit, hodge_tail, ExactValue(bezout_floor)};
}

bool check_estimate_against_oracle(const SeshadriEstimate& estimate,
                                   const OracleReport& report, std::string* detail) {
    auto fail = [&](const char* why) {
        if (detail) *detail = why;
        return false;
    };
    if (report.lower > report.upper) return fail("oracle lower exceeds oracle upper");
    switch (estimate.kind) {
        case EstimateKind::Exact: {
            ExactValue v{*estimate.value};
            if (v < report.lower) return fail("exact value below oracle lower bound");
            if (v > report.upper) return fail("exact value above oracle upper bound");
            if (report.lower == report.upper && !(v == report.lower))
                return fail("oracle pinned a different value");
            return true;
        }
        case EstimateKind::BoundedBelow:
        case EstimateKind::UnknownWithBound:
            if (report.lower < *estimate.lower)
                return fail("oracle lower bound below estimate lower bound");
            if (estimate.upper && report.lower > *estimate.upper)
                return fail("oracle lower bound exceeds estimate upper bound");
            return true;
        case EstimateKind::CertifiedRational:
            if (estimate.upper && report.lower > *estimate.upper)
                return fail("oracle lower bound exceeds witness upper bound");
            return true;
    }
    throw std::logic_error("unreachable");
}

std::vector<CrossCheckRow> cross_check_region(const SurfaceType& s, int a_max, int b_max,
                                              int scan_limit) {
    if (a_max < 1 || b_max < 1) throw std::domain_error("grid bounds must be positive");
    std::vector<int> mults = s.sing_mults;
    std::sort(mults.begin(), mults.end());
    mults.erase(std::unique(mults.begin(), mults.end()), mults.end());

    std::vector<CrossCheckRow> rows;
    rows.reserve(static_cast<std::size_t>(a_max) * b_max * (2 + mults.size()));
    for (int a = 1; a <= a_max; ++a) {
        for (int b = 1; b <= b_max; ++b) {
            const DivisorClass l{a, b};
            auto add = [&](const char* check, const PointClass& point,
                           SeshadriEstimate est) {
                CrossCheckRow row{l,   check, point, std::move(est),
                                  certify_point(s, l, point, scan_limit), true, ""};
                row.pass = check_estimate_against_oracle(row.estimate, row.report,
                                                         &row.detail);
                rows.push_back(std::move(row));
            };
            add("epsilon_min", PointClass::arbitrary(), epsilon_min(s, l));
            add("epsilon_one", PointClass::very_general(), epsilon_one(s, l));
            for (int n : mults)
                add("epsilon_at_point", PointClass::on_singular_fibre(n),
                    epsilon_at_point(s, l, PointClass::on_singular_fibre(n)));
        }
    }
    return rows;
}

}  // namespace seshadri
