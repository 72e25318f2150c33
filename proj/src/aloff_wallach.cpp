// aloff_wallach.cpp — partition function, intertwining multiplicity, and
// eigenvalue data of the contributing triples of SU(3)/S^1.

#include "awspec/aloff_wallach.hpp"

#include <stdexcept>
#include <string>

#include "awspec/casimir.hpp"

namespace awspec {

namespace {

void check_dominant(long long z1, long long z2, long long z3, const char* function) {
    if (z1 < z2 || z2 < 0 || z3 < 0) {
        throw std::domain_error(std::string(function) + ": need z1 >= z2 >= 0 and z3 >= 0, got (" +
                                std::to_string(z1) + ", " + std::to_string(z2) + ", " +
                                std::to_string(z3) + ")");
    }
}

void check_pair_dominant(long long z1, long long z2, const char* function) {
    if (z1 < z2 || z2 < 0) {
        throw std::domain_error(std::string(function) + ": need z1 >= z2 >= 0, got (" +
                                std::to_string(z1) + ", " + std::to_string(z2) + ")");
    }
}

}  // namespace

long long partition(long long a1, long long a2) {
    // #{(m1,m2,m3) in N_0^3 : a1 = 3(m1+m2), a2 = m3 - m1 - 2*m2}.
    // With q = a1/3 and m2 = k in [0, q], m3 = a2 + q + k must be >= 0,
    // so exactly the k >= -(a2 + q) survive.
    if (a1 < 0 || a1 % 3 != 0) return 0;
    const long long q = a1 / 3;
    long long count = q + 1;
    if (a2 + q < 0) count += a2 + q;
    return count > 0 ? count : 0;
}

long long multiplicity_m(long long z1, long long z2, long long z3) {
    check_dominant(z1, z2, z3, "awspec::multiplicity_m");
    const long long a = z1 + z2;
    const long long b = z1 - 2 * z2 - 3;
    return partition(a, -z3 - z1 - 2) + partition(a, z3 - z2)      //
           - partition(a, -z3 - z2 - 1) - partition(a, z3 - z1 - 1)  //
           + partition(b, z2 + 1 - z3) + partition(b, z2 - z1 + z3)  //
           - partition(b, z2 + 2 + z3);
}

bool is_s1_spherical(long long z1, long long z2) {
    check_pair_dominant(z1, z2, "awspec::is_s1_spherical");
    return (z1 + z2) % 3 == 0;
}

long long dim_su3(long long z1, long long z2) {
    check_pair_dominant(z1, z2, "awspec::dim_su3");
    return (z1 - z2 + 1) * (z1 + 2) * (z2 + 1) / 2;
}

long long dim_so3(long long z3) {
    if (z3 < 0) {
        throw std::domain_error("awspec::dim_so3: need z3 >= 0, got " + std::to_string(z3));
    }
    return 2 * z3 + 1;
}

EigenPair eigen_pair(long long z1, long long z2, long long z3) {
    check_dominant(z1, z2, z3, "awspec::eigen_pair");
    if (multiplicity_m(z1, z2, z3) == 0) {
        throw std::domain_error("awspec::eigen_pair: triple (" + std::to_string(z1) + ", " +
                                std::to_string(z2) + ", " + std::to_string(z3) +
                                ") does not contribute to the spectrum (multiplicity 0)");
    }
    EigenPair pair;
    pair.v = so3_casimir(z3);
    pair.h = su3_casimir(z1, z2) - pair.v;
    return pair;
}

Rational eigenvalue_at(long long z1, long long z2, long long z3, const Rational& t0,
                       const Rational& t1) {
    if (sgn(t0) <= 0 || sgn(t1) <= 0) {
        throw std::domain_error("awspec::eigenvalue_at: need t0 > 0 and t1 > 0, got (" +
                                to_string(t0) + ", " + to_string(t1) + ")");
    }
    const EigenPair pair = eigen_pair(z1, z2, z3);
    return pair.h / t0 + pair.v / t1;
}

SphericalTriple make_spherical_triple(long long z1, long long z2, long long z3) {
    check_dominant(z1, z2, z3, "awspec::make_spherical_triple");
    const long long m = multiplicity_m(z1, z2, z3);
    if (m == 0) {
        throw std::domain_error("awspec::make_spherical_triple: triple (" + std::to_string(z1) +
                                ", " + std::to_string(z2) + ", " + std::to_string(z3) +
                                ") does not contribute to the spectrum (multiplicity 0)");
    }
    SphericalTriple triple;
    triple.z1 = z1;
    triple.z2 = z2;
    triple.z3 = z3;
    triple.m = m;
    triple.dim_su3 = awspec::dim_su3(z1, z2);
    triple.dim_so3 = awspec::dim_so3(z3);
    triple.total_mult = m * triple.dim_su3 * triple.dim_so3;
    return triple;
}

}  // namespace awspec
