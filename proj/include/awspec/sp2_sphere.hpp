// sp2_sphere.hpp — spherical representations of the 7-sphere presented as
// (Sp(2) x Sp(1)) / Sp(1)', the second member of the family of homogeneous
// 7-manifolds treated by this library.
//
// Representations of Sp(2) x Sp(1) are indexed by (n1, n2, n3) >= 0:
// n1, n2 are the fundamental-weight coefficients of the Sp(2) factor and
// n3 is the doubled spin of the Sp(1) factor.  The intertwining
// multiplicity of the subgroup Sp(1)' is an alternating sum over the
// 16-element Weyl group of Sp(2) x Sp(1) of a two-variable partition
// function attached to the restricted positive roots
//     (nu0 + nu1)/2,  (nu1 - nu0)/2,  nu1   (each with multiplicity 1)
// on the restricted torus { a0*nu0 + a1*nu1 }.  A representation is
// spherical (contributes to the sphere's spectrum) precisely when the
// multiplicity is positive; structurally this happens exactly for
// n1 == n3.
//
// All weight coordinates are doubled integers (a value x stands for the
// coefficient x/2) so the half-integral lattice stays exact.

#pragma once

namespace awspec {

/// Restricted-root partition function:
///     #{ (m1, m2, m3) in N_0^3 :  a0 = (m1 - m2)/2,
///                                 a1 = (m1 + m2)/2 + m3 }
/// with DOUBLED arguments: a0_doubled = 2*a0, a1_doubled = 2*a1.
/// Zero unless a0_doubled and a1_doubled have equal parity (otherwise the
/// lattice has no points); when they do, there are
/// max(0, a1 - a0 - max(0, -2*a0) + 1)  =  max(0, a1 - |a0| + 1)
/// solutions.  Total on Z^2 — no preconditions.
long long sp2_partition(long long a0_doubled, long long a1_doubled);

/// Intertwining multiplicity of Sp(1)' in the (Sp(2) x Sp(1))
/// representation (n1, n2, n3): signed sum of sp2_partition over the 16
/// Weyl elements (8 signed permutations of the Sp(2) coordinates times
/// the Sp(1) sign flip).
/// Preconditions: n1, n2, n3 >= 0; throws std::domain_error.
long long sp2_multiplicity(long long n1, long long n2, long long n3);

/// Whether (n1, n2, n3) contributes to the spectrum of the 7-sphere in
/// this presentation, i.e. sp2_multiplicity(n1, n2, n3) > 0.
/// Same preconditions as sp2_multiplicity.
bool is_sp1prime_spherical(long long n1, long long n2, long long n3);

}  // namespace awspec
