#include "seshadri/surface.hpp"

#include <stdexcept>

namespace seshadri {

const std::vector<SurfaceType>& all_surface_types() {
    static const std::vector<SurfaceType> table = {
        {1, "Z2", 2, 2, {2, 2, 2, 2}},
        {2, "Z2xZ2", 4, 2, {2, 2, 2, 2}},
        {3, "Z4", 4, 4, {2, 4, 4}},
        {4, "Z4xZ2", 8, 4, {2, 4, 4}},
        {5, "Z3", 3, 3, {3, 3, 3}},
        {6, "Z3xZ3", 9, 3, {3, 3, 3}},
        {7, "Z6", 6, 6, {2, 3, 6}},
    };
    return table;
}

const SurfaceType& surface_params(int type_id) {
    if (type_id < 1 || type_id > 7)
        throw std::domain_error("surface type must be in 1..7");
    return all_surface_types()[static_cast<std::size_t>(type_id - 1)];
}

std::int64_t intersect(const DivisorClass& d1, const DivisorClass& d2) {
    return d1.a * d2.b + d2.a * d1.b;
}

bool is_ample(const DivisorClass& l) { return l.a > 0 && l.b > 0; }

std::int64_t self_intersection(const DivisorClass& l) { return 2 * l.a * l.b; }

FibreClasses fibre_classes(const SurfaceType& s) {
    return {DivisorClass{s.mu, 0}, DivisorClass{0, s.phi_fibre_coefficient()}};
}

bool is_effective_vertical(const Rational& b, const SurfaceType& s) {
    Rational scaled = b * Rational(s.mu, s.gamma);
    return scaled >= 0 && denominator(scaled) == 1;
}

}  // namespace seshadri
