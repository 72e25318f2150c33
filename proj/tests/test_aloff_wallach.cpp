// Contributing triples of SU(3)/S^1: the lattice partition function
// against its defining count, the alternating-sum multiplicity, and the
// eigenvalue split.

#include <stdexcept>

#include "doctest.h"

#include "awspec/aloff_wallach.hpp"
#include "awspec/casimir.hpp"

using namespace awspec;

namespace {

// Direct count over the defining set
//   { (m1, m2, m3) in N_0^3 : a1 = 3*(m1 + m2), a2 = m3 - m1 - 2*m2 }.
long long partition_brute(long long a1, long long a2) {
    if (a1 < 0 || a1 % 3 != 0) return 0;
    const long long s = a1 / 3;
    long long count = 0;
    for (long long m1 = 0; m1 <= s; ++m1) {
        const long long m2 = s - m1;
        if (a2 + m1 + 2 * m2 >= 0) ++count;  // m3 is determined and must be >= 0
    }
    return count;
}

}  // namespace

TEST_CASE("partition closed form equals the defining count") {
    for (long long a1 = -60; a1 <= 60; ++a1) {
        for (long long a2 = -60; a2 <= 60; ++a2) {
            CHECK(partition(a1, a2) == partition_brute(a1, a2));
        }
    }
}

TEST_CASE("partition spot values") {
    CHECK(partition(0, 0) == 1);
    CHECK(partition(0, -1) == 0);
    CHECK(partition(3, 0) == 2);
    CHECK(partition(3, -2) == 1);
    CHECK(partition(6, -5) == 0);
    CHECK(partition(-3, 5) == 0);
    CHECK(partition(4, 0) == 0);  // not a multiple of 3
}

TEST_CASE("multiplicity spot values") {
    CHECK(multiplicity_m(0, 0, 0) == 1);
    CHECK(multiplicity_m(2, 1, 0) == 1);
    CHECK(multiplicity_m(2, 1, 1) == 1);
    CHECK(multiplicity_m(2, 1, 2) == 0);
    CHECK(multiplicity_m(4, 2, 2) == 1);
    CHECK(multiplicity_m(6, 3, 3) == 1);
    CHECK(multiplicity_m(6, 3, 4) == 0);
    CHECK(multiplicity_m(12, 6, 3) == 1);
    // Circle-incompatible classes never contribute.
    CHECK(multiplicity_m(1, 0, 0) == 0);
    CHECK(multiplicity_m(4, 1, 1) == 0);
}

TEST_CASE("multiplicity validates dominance") {
    CHECK_THROWS_AS(multiplicity_m(1, 2, 0), std::domain_error);
    CHECK_THROWS_AS(multiplicity_m(2, -1, 0), std::domain_error);
    CHECK_THROWS_AS(multiplicity_m(2, 1, -1), std::domain_error);
}

TEST_CASE("circle compatibility is necessary and sufficient for some z3") {
    for (long long z1 = 0; z1 <= 15; ++z1) {
        for (long long z2 = 0; z2 <= z1; ++z2) {
            bool any = false;
            for (long long z3 = 0; z3 <= z1 && !any; ++z3) {
                any = multiplicity_m(z1, z2, z3) > 0;
            }
            CHECK(any == is_s1_spherical(z1, z2));
        }
    }
}

TEST_CASE("dimensions") {
    CHECK(dim_su3(0, 0) == 1);
    CHECK(dim_su3(1, 0) == 3);
    CHECK(dim_su3(2, 1) == 8);
    CHECK(dim_su3(3, 0) == 10);
    CHECK(dim_su3(3, 3) == 10);
    CHECK(dim_su3(4, 2) == 27);
    CHECK(dim_su3(12, 6) == 343);
    CHECK(dim_so3(0) == 1);
    CHECK(dim_so3(3) == 7);
    CHECK_THROWS_AS(dim_su3(1, 2), std::domain_error);
    CHECK_THROWS_AS(dim_so3(-1), std::domain_error);
}

TEST_CASE("eigenvalue split h, v") {
    const EigenPair origin = eigen_pair(0, 0, 0);
    CHECK(origin.h == 0);
    CHECK(origin.v == 0);
    const EigenPair adjoint = eigen_pair(2, 1, 1);
    CHECK(adjoint.h == 4);
    CHECK(adjoint.v == 8);
    const EigenPair deep = eigen_pair(12, 6, 3);
    CHECK(deep.h == 144);
    CHECK(deep.v == 48);
    // h + v recovers the su(3) Casimir eigenvalue.
    CHECK(deep.h + deep.v == su3_casimir(12, 6));
    // Non-contributing triples are rejected.
    CHECK_THROWS_AS(eigen_pair(2, 1, 2), std::domain_error);
    CHECK_THROWS_AS(eigen_pair(1, 0, 0), std::domain_error);
}

TEST_CASE("eigenvalue_at combines the split with the metric") {
    CHECK(eigenvalue_at(2, 1, 1, make_rational(1, 2), make_rational(1)) == 16);
    CHECK(eigenvalue_at(2, 1, 0, make_rational(1, 2), make_rational(1, 4)) == 24);
    CHECK_THROWS_AS(eigenvalue_at(2, 1, 1, make_rational(0), make_rational(1)),
                    std::domain_error);
    CHECK_THROWS_AS(eigenvalue_at(2, 1, 1, make_rational(1), make_rational(-1)),
                    std::domain_error);
}

TEST_CASE("horizontal part dominates 4*z3, sharp exactly on (2k, k, k)") {
    for (long long z1 = 0; z1 <= 15; ++z1) {
        for (long long z2 = 0; z2 <= z1; ++z2) {
            if (!is_s1_spherical(z1, z2)) continue;
            for (long long z3 = 0; so3_casimir(z3) <= su3_casimir(z1, z2); ++z3) {
                if (multiplicity_m(z1, z2, z3) == 0) continue;
                const EigenPair pair = eigen_pair(z1, z2, z3);
                const Rational floor = make_rational(4 * z3);
                CHECK(pair.h >= floor);
                const bool sharp = (z1 == 2 * z3 && z2 == z3);
                CHECK((pair.h == floor) == sharp);
            }
        }
    }
}

TEST_CASE("the ray z1 == 2*z2 carries exactly the strings z3 <= z2") {
    for (long long z2 = 0; z2 <= 12; ++z2) {
        for (long long z3 = 0; z3 <= z2 + 3; ++z3) {
            CHECK((multiplicity_m(2 * z2, z2, z3) == 1) == (z3 <= z2));
        }
    }
}

TEST_CASE("make_spherical_triple assembles consistent records") {
    const SphericalTriple triple = make_spherical_triple(2, 1, 1);
    CHECK(triple.m == 1);
    CHECK(triple.dim_su3 == 8);
    CHECK(triple.dim_so3 == 3);
    CHECK(triple.total_mult == 24);
    CHECK_THROWS_AS(make_spherical_triple(2, 1, 2), std::domain_error);
}
