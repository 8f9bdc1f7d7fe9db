#pragma once

#include "seshadri/closed_form.hpp"

#include <optional>

namespace seshadri {

/// Minimal positive solution of q^2 - d*p^2 = 1 (q/p is the convergent of
/// sqrt(d) at the continued-fraction period).
struct PellSolution {
    Int p;  // the x-value
    Int q;  // the y-value
};

/// Continued-fraction solver; d must be >= 2 and not a perfect square.
PellSolution pell_fundamental(const Int& d);

/// The rational lower-bound candidate p*d/q derived from the fundamental
/// solution; always strictly below sqrt(d).
ExactValue fsst_lower_bound(const Int& d);

/// Exceptional set in the printed shape
///   {1, .., floor(sqrt(d))} u { r/s : 1 <= r/s < p*d/q, 2 <= s < q^2 }
/// with s read off the reduced form of r/s.
struct ExcSet {
    Int d;
    Int p;
    Int q;

    static ExcSet for_radicand(const Int& d);  // uses the fundamental solution

    bool contains(const Int& r, const Int& s) const;
    /// Number of reduced non-integer fractions r/s in the set. Quadratic in
    /// q; refused (nullopt) when q is too large to enumerate.
    std::optional<Int> reduced_fraction_count() const;
};

bool exc_membership(const ExcSet& e, const Int& r, const Int& s);

struct BoundComparison {
    ExactValue our_bound;               // epsilon_one lower bound or exact value
    bool pell_applicable;               // false when L^2 is a perfect square
    std::optional<PellSolution> pell;   // fundamental solution for d = L^2
    std::optional<ExactValue> pell_bound;  // p*d/q
    std::optional<Ordering> which_larger;  // our_bound vs pell_bound
    std::optional<Int> exc_reduced_fraction_count;
};

/// Compares the delta*sqrt(L^2) style bound (or exact value) from
/// epsilon_one against the Pell-derived bound p*d/q for d = L^2.
BoundComparison compare_bounds(const SurfaceType& s, const DivisorClass& l);

}  // namespace seshadri
