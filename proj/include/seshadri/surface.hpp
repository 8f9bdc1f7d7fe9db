#pragma once

#include "seshadri/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace seshadri {

/// One of the seven Bagnera-de Franchis types of hyperelliptic surface
/// X = (A x B)/G. Carries the group order gamma = |G|, mu = lcm of the
/// multiplicities of the singular fibres of the elliptic fibration
/// Psi: X -> B/G, and the multiplicity list itself. Num(X) has rank 2 with
/// basis e1 = A/mu, e2 = (mu/gamma)B; in that basis e1^2 = e2^2 = 0 and
/// e1.e2 = 1.
struct SurfaceType {
    int type_id;
    std::string group_name;
    int gamma;
    int mu;
    std::vector<int> sing_mults;

    /// gamma/mu, always an integer (1, 2 or 3).
    int phi_fibre_coefficient() const { return gamma / mu; }
};

/// Table lookup for type_id in 1..7; domain error otherwise.
const SurfaceType& surface_params(int type_id);

/// All seven rows.
const std::vector<SurfaceType>& all_surface_types();

/// Integer coordinates (a, b) of a numerical divisor class with respect to
/// the basis e1 = A/mu, e2 = (mu/gamma)B.
struct DivisorClass {
    std::int64_t a = 0;
    std::int64_t b = 0;

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

/// Intersection number a1*b2 + a2*b1 (the basis is isotropic with e1.e2 = 1).
std::int64_t intersect(const DivisorClass& d1, const DivisorClass& d2);

/// Ample iff a > 0 and b > 0.
bool is_ample(const DivisorClass& l);

/// Self-intersection L^2 = 2ab.
std::int64_t self_intersection(const DivisorClass& l);

struct FibreClasses {
    DivisorClass psi_fibre;  // class of A as a fibre of Psi: (mu, 0)
    DivisorClass phi_fibre;  // class of B as a fibre of Phi: (0, gamma/mu)
};

FibreClasses fibre_classes(const SurfaceType& s);

/// A vertical class (0, b) with rational b is effective iff b*(mu/gamma) is a
/// nonnegative integer.
bool is_effective_vertical(const Rational& b, const SurfaceType& s);

}  // namespace seshadri
