#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seshadri/surface.hpp"

#include <numeric>

using namespace seshadri;

TEST_CASE("the seven-row table") {
    const auto& types = all_surface_types();
    REQUIRE(types.size() == 7);

    const int expected_gamma[] = {2, 4, 4, 8, 3, 9, 6};
    const int expected_ratio[] = {1, 2, 1, 2, 1, 3, 1};
    const char* expected_group[] = {"Z2", "Z2xZ2", "Z4", "Z4xZ2", "Z3", "Z3xZ3", "Z6"};
    for (int t = 1; t <= 7; ++t) {
        const SurfaceType& s = surface_params(t);
        CHECK(s.type_id == t);
        CHECK(s.group_name == expected_group[t - 1]);
        CHECK(s.gamma == expected_gamma[t - 1]);
        CHECK(s.gamma / s.mu == expected_ratio[t - 1]);
        CHECK(s.gamma % s.mu == 0);
        int lcm = 1, mx = 0;
        for (int m : s.sing_mults) {
            lcm = std::lcm(lcm, m);
            mx = std::max(mx, m);
        }
        CHECK(s.mu == lcm);
        CHECK(s.mu == mx);
    }
    CHECK(surface_params(1).sing_mults == std::vector<int>{2, 2, 2, 2});
    CHECK(surface_params(3).sing_mults == std::vector<int>{2, 4, 4});
    CHECK(surface_params(6).sing_mults == std::vector<int>{3, 3, 3});
    CHECK(surface_params(7).sing_mults == std::vector<int>{2, 3, 6});

    CHECK_THROWS_AS(surface_params(0), std::domain_error);
    CHECK_THROWS_AS(surface_params(8), std::domain_error);
}

TEST_CASE("intersection form") {
    CHECK(intersect({1, 0}, {0, 1}) == 1);
    CHECK(intersect({5, 11}, {5, 11}) == 110);
    CHECK(intersect({3, 0}, {3, 0}) == 0);
    CHECK(self_intersection({5, 11}) == 110);
    CHECK(intersect({2, 3}, {4, 5}) == intersect({4, 5}, {2, 3}));
}

TEST_CASE("ampleness") {
    CHECK(is_ample({5, 11}));
    CHECK_FALSE(is_ample({0, 1}));
    CHECK_FALSE(is_ample({-1, 3}));
    CHECK_FALSE(is_ample({4, 0}));
    CHECK_FALSE(is_ample({-2, -2}));
}

TEST_CASE("fibre classes") {
    CHECK(fibre_classes(surface_params(1)).psi_fibre == DivisorClass{2, 0});
    CHECK(fibre_classes(surface_params(1)).phi_fibre == DivisorClass{0, 1});
    CHECK(fibre_classes(surface_params(4)).psi_fibre == DivisorClass{4, 0});
    CHECK(fibre_classes(surface_params(4)).phi_fibre == DivisorClass{0, 2});
    CHECK(fibre_classes(surface_params(6)).psi_fibre == DivisorClass{3, 0});
    CHECK(fibre_classes(surface_params(6)).phi_fibre == DivisorClass{0, 3});

    for (const SurfaceType& s : all_surface_types()) {
        auto [psi, phi] = fibre_classes(s);
        CHECK(intersect(psi, phi) == s.gamma);
        CHECK(self_intersection(psi) == 0);
        CHECK(self_intersection(phi) == 0);
        // L.A = mu*b and L.B = (gamma/mu)*a for every bundle
        for (std::int64_t a = 1; a <= 5; ++a)
            for (std::int64_t b = 1; b <= 5; ++b) {
                DivisorClass l{a, b};
                CHECK(intersect(l, psi) == s.mu * b);
                CHECK(intersect(l, phi) == (s.gamma / s.mu) * a);
                CHECK(self_intersection(l) == 2 * a * b);
                if (is_ample(l)) CHECK(self_intersection(l) > 0);
            }
    }
}

TEST_CASE("effectivity of vertical classes") {
    CHECK(is_effective_vertical(Rational(2), surface_params(2)));
    CHECK_FALSE(is_effective_vertical(Rational(1), surface_params(2)));
    CHECK(is_effective_vertical(Rational(3), surface_params(5)));
    CHECK(is_effective_vertical(Rational(0), surface_params(2)));
    CHECK_FALSE(is_effective_vertical(Rational(3, 2), surface_params(2)));
    CHECK_FALSE(is_effective_vertical(Rational(9, 2), surface_params(4)));  // 9/4 not integral
    CHECK(is_effective_vertical(Rational(4), surface_params(4)));
    CHECK_FALSE(is_effective_vertical(Rational(-2), surface_params(2)));
}
