#include "seshadri/pell.hpp"

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace seshadri {

PellSolution pell_fundamental(const Int& d) {
    if (d < 2) throw std::domain_error("radicand must be at least 2");
    const Int a0 = isqrt(d);
    if (a0 * a0 == d) throw std::domain_error("radicand must not be a perfect square");

    // Continued fraction of sqrt(d): the (m, den, a) integer recurrence.
    // Convergents h/k are tested against h^2 - d*k^2 = 1; the first hit is
    // the fundamental solution (it appears at the period, or the doubled
    // period when the period is odd).
    Int m = 0, den = 1, a = a0;
    Int h_prev = 1, h = a0, k_prev = 0, k = 1;
    for (int iter = 0; iter < 1000000; ++iter) {
        if (h * h - d * k * k == 1) return {k, h};
        m = den * a - m;
        den = (d - m * m) / den;
        a = (a0 + m) / den;
        Int h_next = a * h + h_prev;
        Int k_next = a * k + k_prev;
        h_prev = h;
        k_prev = k;
        h = h_next;
        k = k_next;
    }
    throw std::runtime_error("Pell continued fraction did not close");
}

ExactValue fsst_lower_bound(const Int& d) {
    PellSolution sol = pell_fundamental(d);
    return ExactValue(make_fraction(sol.p * d, sol.q));
}

ExcSet ExcSet::for_radicand(const Int& d) {
    PellSolution sol = pell_fundamental(d);
    return ExcSet{d, sol.p, sol.q};
}

bool ExcSet::contains(const Int& r, const Int& s) const {
    if (s == 0) throw std::domain_error("zero denominator");
    Rational x = make_fraction(r, s);
    Int num = numerator(x), den = denominator(x);
    if (den == 1) return num >= 1 && num <= isqrt(d);
    // Reduced non-integer fraction: 1 <= num/den < p*d/q and 2 <= den < q^2.
    if (den >= q * q) return false;
    if (num < den) return false;
    return num * q < p * d * den;
}

bool exc_membership(const ExcSet& e, const Int& r, const Int& s) {
    return e.contains(r, s);
}

std::optional<Int> ExcSet::reduced_fraction_count() const {
    // Work is ~ sqrt(d) * q^4; refuse sets too large to enumerate.
    if (isqrt(d) * q * q * q * q > 2000000000) return std::nullopt;
    const std::int64_t q64 = q.convert_to<std::int64_t>();
    std::int64_t count = 0;
    for (std::int64_t s = 2; s < q64 * q64; ++s) {
        // largest r with r/s < p*d/q
        const std::int64_t r_max = ((p * d * s - 1) / q).convert_to<std::int64_t>();
        for (std::int64_t r = s; r <= r_max; ++r)
            if (std::gcd(r, s) == 1) ++count;
    }
    return Int(count);
}

BoundComparison compare_bounds(const SurfaceType& s, const DivisorClass& l) {
    if (!is_ample(l)) throw std::domain_error("line bundle is not ample");
    SeshadriEstimate est = epsilon_one(s, l);
    BoundComparison out;
    out.our_bound = est.kind == EstimateKind::Exact ? ExactValue(*est.value) : *est.lower;
    const Int d = Int(self_intersection(l));
    if (is_perfect_square(d)) {
        out.pell_applicable = false;
        return out;
    }
    out.pell_applicable = true;
    out.pell = pell_fundamental(d);
    out.pell_bound = ExactValue(make_fraction(out.pell->p * d, out.pell->q));
    out.which_larger = compare(out.our_bound, *out.pell_bound);
    out.exc_reduced_fraction_count = ExcSet{d, out.pell->p, out.pell->q}.reduced_fraction_count();
    return out;
}

}  // namespace seshadri
