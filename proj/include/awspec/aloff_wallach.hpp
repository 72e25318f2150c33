// aloff_wallach.hpp — spherical representations of the homogeneous
// 7-manifold SU(3)/S^1 (the Aloff–Wallach space W^{1,1}) and their
// Laplace eigenvalue data.
//
// In its presentation as (SU(3) x SO(3)) / U(2), the space carries a
// two-parameter family of metrics scaled by t0 (horizontal) and t1
// (vertical).  The representations of SU(3) x SO(3) that contribute to
// the Laplace spectrum are indexed by dominant triples (z1, z2, z3) with
// z1 >= z2 >= 0 and z3 >= 0:  z1, z2 are the coefficients of the su(3)
// highest weight in the diagonal-projection basis and z3 is the so(3)
// highest weight.  A triple contributes if and only if the representation
// contains a vector fixed by the isotropy subgroup; the number of such
// vectors is the intertwining multiplicity m(z1, z2, z3), computed here by
// an exact 7-term alternating sum of a lattice partition function.
//
// For a contributing triple the Laplace eigenvalue splits as
//     h / t0 + v / t1
// where v = so3_casimir(z3) and h = su3_casimir(z1, z2) - v, both
// nonnegative integers.  All arithmetic is exact; nothing here touches
// floating point.

#pragma once

#include "awspec/rational.hpp"

namespace awspec {

/// A contributing representation triple together with its multiplicity
/// data.  total_mult = m * dim_su3 * dim_so3 always holds, and m >= 1
/// whenever a SphericalTriple is constructed.
struct SphericalTriple {
    long long z1 = 0;
    long long z2 = 0;
    long long z3 = 0;
    long long m = 0;          ///< intertwining multiplicity, >= 1
    long long dim_su3 = 0;    ///< dimension of the su(3) factor
    long long dim_so3 = 0;    ///< dimension of the so(3) factor (2*z3 + 1)
    long long total_mult = 0; ///< m * dim_su3 * dim_so3
};

/// Horizontal/vertical split of a Laplace eigenvalue:
/// the eigenvalue at metric parameters (t0, t1) is h / t0 + v / t1.
struct EigenPair {
    Rational h;
    Rational v;
};

/// Lattice partition function on Z^2:
///     partition(a1, a2) = #{ (m1, m2, m3) in N_0^3 :
///                             a1 = 3*(m1 + m2),  a2 = m3 - m1 - 2*m2 }.
/// Closed form: 0 unless a1 is a nonnegative multiple of 3; otherwise,
/// with q = a1/3,  max(0, q + 1 + min(0, a2 + q)).
/// Total on Z^2 — no preconditions.
long long partition(long long a1, long long a2);

/// Intertwining multiplicity m(z1, z2, z3): the number of isotropy-fixed
/// vectors in the representation indexed by (z1, z2, z3); zero means the
/// triple does not contribute to the spectrum.  Evaluated as an exact
/// 7-term alternating sum of `partition`.
/// Preconditions: z1 >= z2 >= 0 and z3 >= 0; throws std::domain_error.
long long multiplicity_m(long long z1, long long z2, long long z3);

/// Whether the su(3) representation (z1, z2) restricts to the circle
/// factor with a trivial component, i.e. (z1 + z2) % 3 == 0.  Only these
/// pairs can contribute to the spectrum for any z3.
/// Preconditions: z1 >= z2 >= 0; throws std::domain_error.
bool is_s1_spherical(long long z1, long long z2);

/// Dimension of the su(3) representation with highest weight
/// z1*lambda_1 + z2*lambda_2:  (z1 - z2 + 1)(z1 + 2)(z2 + 1) / 2.
/// Preconditions: z1 >= z2 >= 0; throws std::domain_error.
long long dim_su3(long long z1, long long z2);

/// Dimension of the so(3) representation with highest weight z3*mu_1:
/// 2*z3 + 1.  Precondition: z3 >= 0; throws std::domain_error.
long long dim_so3(long long z3);

/// Horizontal/vertical eigenvalue split (h, v) of a contributing triple:
/// v = so3_casimir(z3), h = su3_casimir(z1, z2) - v.
/// Throws std::domain_error if the triple does not contribute
/// (multiplicity_m(z1, z2, z3) == 0) or violates dominance.
EigenPair eigen_pair(long long z1, long long z2, long long z3);

/// Laplace eigenvalue h / t0 + v / t1 of a contributing triple at metric
/// parameters t0, t1 > 0.
/// Throws std::domain_error on a non-contributing triple or t0, t1 <= 0.
Rational eigenvalue_at(long long z1, long long z2, long long z3, const Rational& t0,
                       const Rational& t1);

/// Assemble the full SphericalTriple record for a contributing triple.
/// Throws std::domain_error if multiplicity_m(z1, z2, z3) == 0.
SphericalTriple make_spherical_triple(long long z1, long long z2, long long z3);

}  // namespace awspec
