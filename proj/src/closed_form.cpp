#include "seshadri/closed_form.hpp"

#include <algorithm>
#include <stdexcept>

namespace seshadri {

const Rational& default_delta() {
    static const Rational d(93, 100);
    return d;
}

std::string to_string(EstimateKind kind) {
    switch (kind) {
        case EstimateKind::Exact: return "exact";
        case EstimateKind::CertifiedRational: return "certified_rational";
        case EstimateKind::BoundedBelow: return "bounded_below";
        case EstimateKind::UnknownWithBound: return "unknown_with_bound";
    }
    throw std::logic_error("unreachable");
}

SeshadriEstimate SeshadriEstimate::exact(Rational v, std::string branch_label) {
    SeshadriEstimate e;
    e.kind = EstimateKind::Exact;
    e.value = v;
    e.lower = ExactValue(v);
    e.upper = ExactValue(std::move(v));
    e.branch = std::move(branch_label);
    return e;
}

SeshadriEstimate SeshadriEstimate::certified_rational(ExactValue upper_witness,
                                                      std::string branch_label) {
    SeshadriEstimate e;
    e.kind = EstimateKind::CertifiedRational;
    e.upper = std::move(upper_witness);
    e.branch = std::move(branch_label);
    return e;
}

SeshadriEstimate SeshadriEstimate::bounded_below(ExactValue lo, ExactValue up,
                                                 std::string branch_label) {
    SeshadriEstimate e;
    e.kind = EstimateKind::BoundedBelow;
    e.lower = std::move(lo);
    e.upper = std::move(up);
    e.branch = std::move(branch_label);
    return e;
}

SeshadriEstimate SeshadriEstimate::unknown_with_bound(ExactValue lo, ExactValue up,
                                                      std::string branch_label) {
    SeshadriEstimate e;
    e.kind = EstimateKind::UnknownWithBound;
    e.lower = std::move(lo);
    e.upper = std::move(up);
    e.branch = std::move(branch_label);
    return e;
}

std::string to_string(const PointClass& point) {
    switch (point.kind) {
        case PointClass::Kind::VeryGeneral: return "very-general";
        case PointClass::Kind::Arbitrary: return "arbitrary";
        case PointClass::Kind::OnSingularFibre:
            return "fibre-mult-" + std::to_string(point.fibre_multiplicity);
    }
    throw std::logic_error("unreachable");
}

void validate_point_class(const PointClass& point, const SurfaceType& s) {
    if (point.kind != PointClass::Kind::OnSingularFibre) return;
    for (int m : s.sing_mults)
        if (m == point.fibre_multiplicity) return;
    throw std::domain_error("no singular fibre of multiplicity " +
                            std::to_string(point.fibre_multiplicity) + " on type " +
                            std::to_string(s.type_id));
}

namespace {

void require_ample(const DivisorClass& l) {
    if (!is_ample(l)) throw std::domain_error("line bundle is not ample");
    if (l.a > 1000000000 || l.b > 1000000000)
        throw std::domain_error("coordinates out of supported range");
}

void require_valid_delta(const Rational& delta) {
    if (delta == default_delta()) return;  // 93/100 is feasible; skip the scan
    if (delta <= 0 || delta >= 1)
        throw std::domain_error("delta must lie in (0,1)");
    if (!delta_feasibility(delta, GenusConstraint::VeryGeneral).feasible)
        throw std::domain_error("delta fails the very-general genus feasibility check");
}

}  // namespace

SeshadriEstimate epsilon_min(const SurfaceType& s, const DivisorClass& l) {
    require_ample(l);
    const Rational a(l.a), b(l.b);
    if (s.type_id % 2 == 1)
        return SeshadriEstimate::exact(std::min(a, b), "odd types");

    switch (s.type_id) {
        case 2:
            if (b <= a) return SeshadriEstimate::exact(b, "even-1(1)");
            if (b >= 3 * a) return SeshadriEstimate::exact(2 * a, "even-2(1)");
            return SeshadriEstimate::certified_rational(
                ExactValue(std::min(b, Rational(2 * a))), "rational");
        case 4:
            if (2 * b <= a) return SeshadriEstimate::exact(b, "even-1(2)");
            if (2 * b >= 7 * a) return SeshadriEstimate::exact(2 * a, "even-2(2)");
            return SeshadriEstimate::certified_rational(
                ExactValue(std::min(b, Rational(2 * a))), "rational");
        case 6: {
            if (2 * b <= a) return SeshadriEstimate::exact(b, "even-1(2)");
            if (b >= 8 * a) return SeshadriEstimate::exact(3 * a, "even-2(3)");
            Int l2 = Int(self_intersection(l));
            if (b > 2 * a && 2 * b < 9 * a)
                return SeshadriEstimate::unknown_with_bound(
                    make_surd(Rational(7, 10), l2), make_surd(Rational(1), l2),
                    "type6-bound");
            return SeshadriEstimate::certified_rational(
                ExactValue(std::min(b, Rational(3 * a))), "type6-rational");
        }
    }
    throw std::logic_error("unreachable");
}

SeshadriEstimate epsilon_one(const SurfaceType& s, const DivisorClass& l,
                             const Rational& delta) {
    require_ample(l);
    require_valid_delta(delta);
    const Rational a(l.a), b(l.b);
    const Rational d2 = delta * delta;
    const Int l2 = Int(self_intersection(l));
    const std::string t = "type" + std::to_string(s.type_id);
    auto bounded = [&](Rational fibre_upper) {
        return SeshadriEstimate::bounded_below(make_surd(delta, l2),
                                               ExactValue(std::move(fibre_upper)),
                                               t + "(2)");
    };

    switch (s.type_id) {
        case 1:
            return SeshadriEstimate::exact(std::min(a, Rational(2 * b)), t);
        case 2: {
            Rational mn = std::min(a, b), mx = std::max(a, b);
            if (2 * mn <= mx * d2) return SeshadriEstimate::exact(2 * mn, t + "(1)");
            return bounded(2 * mn);
        }
        case 3:
            if (b <= a * d2 / 8) return SeshadriEstimate::exact(4 * b, t + "(1)");
            if (b >= a / (2 * d2)) return SeshadriEstimate::exact(a, t + "(3)");
            return bounded(std::min(a, Rational(4 * b)));
        case 4:
            if (b <= a * d2 / 8) return SeshadriEstimate::exact(4 * b, t + "(1)");
            if (b >= 2 * a / d2) return SeshadriEstimate::exact(2 * a, t + "(3)");
            return bounded(std::min(Rational(2 * a), Rational(4 * b)));
        case 5:
            if (b <= 2 * a * d2 / 9) return SeshadriEstimate::exact(3 * b, t + "(1)");
            if (b >= a / (2 * d2)) return SeshadriEstimate::exact(a, t + "(3)");
            return bounded(std::min(a, Rational(3 * b)));
        case 6: {
            Rational mn = std::min(a, b), mx = std::max(a, b);
            if (9 * mn <= 2 * mx * d2) return SeshadriEstimate::exact(3 * mn, t + "(1)");
            return bounded(3 * mn);
        }
        case 7:
            if (b <= a * d2 / 18) return SeshadriEstimate::exact(6 * b, t + "(1)");
            if (b >= a / (2 * d2)) return SeshadriEstimate::exact(a, t + "(3)");
            return bounded(std::min(a, Rational(6 * b)));
    }
    throw std::logic_error("unreachable");
}

SeshadriEstimate epsilon_at_point(const SurfaceType& s, const DivisorClass& l,
                                  const PointClass& point, const Rational& delta) {
    require_ample(l);
    validate_point_class(point, s);
    if (point.kind == PointClass::Kind::VeryGeneral) return epsilon_one(s, l, delta);

    const Rational a(l.a), b(l.b);
    // Blanket regimes: the value is the same at every point of the surface.
    if (s.type_id == 2 && b >= 3 * a)
        return SeshadriEstimate::exact(2 * a, "even-2(1)");
    if (s.type_id == 4 && 2 * b >= 7 * a)
        return SeshadriEstimate::exact(2 * a, "even-2(2)");
    if (s.type_id == 6 && b >= 8 * a)
        return SeshadriEstimate::exact(3 * a, "even-2(3)");

    // n_fibre: multiplicity of the Psi-fibre whose ratio witnesses the upper
    // bound (the worst fibre for Arbitrary). n_bezout: multiplicity usable in
    // the Bezout constraint (1 for Arbitrary, since the bound must hold at
    // points on smooth fibres too).
    const bool on_fibre = point.kind == PointClass::Kind::OnSingularFibre;
    const int n_fibre = on_fibre ? point.fibre_multiplicity : s.mu;
    const int n_bezout = on_fibre ? point.fibre_multiplicity : 1;

    const Rational phi_ratio = Rational(s.phi_fibre_coefficient()) * a;
    const Rational psi_ratio = Rational(s.mu) * b / n_fibre;
    const Rational fibre_upper = std::min(phi_ratio, psi_ratio);

    if (s.type_id == 6 && b > 2 * a && 2 * b < 9 * a) {
        // Gap regime: no sub-maximal fibre exists; the Hodge-index bound is
        // the only statement valid at every point.
        return SeshadriEstimate::bounded_below(
            make_surd(Rational(7, 10), Int(self_intersection(l))),
            ExactValue(fibre_upper), "type6-bound");
    }

    const Rational mixed =
        a * Rational(n_bezout, s.mu) + b * Rational(s.mu, s.gamma);
    const Rational lower = std::min(fibre_upper, mixed);
    if (lower == fibre_upper) {
        std::string label = "bezout-fibre";
        if (s.type_id % 2 == 1)
            label = "odd types";
        else if (s.type_id == 2 && b <= a)
            label = "even-1(1)";
        else if ((s.type_id == 4 || s.type_id == 6) && 2 * b <= a)
            label = "even-1(2)";
        return SeshadriEstimate::exact(fibre_upper, label);
    }
    return SeshadriEstimate::bounded_below(ExactValue(lower), ExactValue(fibre_upper),
                                           "bezout-fibre");
}

DeltaFeasibility delta_feasibility(const Rational& delta, GenusConstraint constraint) {
    if (delta <= 0 || delta >= 1)
        throw std::domain_error("delta must lie in (0,1)");
    const Rational gap = 1 - delta * delta;  // positive
    const Rational c = constraint == GenusConstraint::VeryGeneral ? 2 : 0;
    // gap*m^2 - m + c is an upward parabola; any violation satisfies
    // m <= larger root <= 1/gap, so the scan range is finite.
    Int m_hi = numerator(Rational(1) / gap) / denominator(Rational(1) / gap) + 1;
    DeltaFeasibility result{true, {}};
    for (Int m = 2; m <= m_hi; ++m) {
        Rational expr = gap * m * m - m + c;
        bool violates = constraint == GenusConstraint::VeryGeneral ? expr <= 0 : expr < 0;
        if (violates) result.violating_m.push_back(m);
    }
    result.feasible = result.violating_m.empty();
    return result;
}

MaxDelta max_feasible_delta(GenusConstraint constraint) {
    const Rational c = constraint == GenusConstraint::VeryGeneral ? 2 : 0;
    MaxDelta best{Rational(0), Int(0)};
    for (Int m = 2; m <= 1000; ++m) {
        Rational ratio = (m * m - m + c) / Rational(m * m);
        if (best.critical_m == 0 || ratio < best.sup_delta_squared) {
            best.sup_delta_squared = ratio;
            best.critical_m = m;
        }
    }
    return best;
}

}  // namespace seshadri
