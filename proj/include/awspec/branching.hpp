// branching.hpp — independent oracle for the intertwining multiplicities.
//
// Instead of the alternating-sum formula in aloff_wallach.hpp, this module
// computes the full weight-multiplicity diagram of an su(3) representation
// by Freudenthal's recursion, restricts it to the subgroup U(2) embedded
// along the diagonal circle, and reads off how many so(3) strings of each
// highest weight z3 occur among the circle-fixed vectors.  Agreement of
// so3_content(z1, z2)[z3] with multiplicity_m(z1, z2, z3) is the central
// cross-check between the two computational routes.
//
// Weights of su(3) are written in the diagonal-projection basis
// (lambda_1, lambda_2) with integer coordinates (c1, c2); the third
// projection is eliminated via lambda_3 = -lambda_1 - lambda_2.  On the
// generators of the embedded U(2):
//   * the circle generator pairs with c1 + c2, so circle-fixed weight
//     vectors are exactly those with c1 + c2 == 0;
//   * the su(2) torus generator pairs with c1 - c2, which is even on
//     circle-fixed weights, and an so(3) representation of highest
//     weight z3 contributes one string with top value 2*z3.
// The multiset of circle-fixed torus values is symmetric under negation,
// so counting descending string tops in the single representation
// determines the so(3) content — no dual representation is needed even
// though (z1, z2) is generally not self-dual.
//
// Freudenthal's recursion is exact integer arithmetic (the inner product
// is evaluated through a common-denominator-scaled Gram matrix, and the
// scale cancels between the two sides of the recursion).  The recursion
// cost grows quadratically with the number of dominant weights, so calls
// are capped: z1 may not exceed the configured oracle bound (environment
// variable AWSPEC_ORACLE_MAX_Z1, default 40); beyond it the call fails
// with a resource error rather than silently taking unbounded time.

#pragma once

#include <map>
#include <utility>

#include "awspec/rational.hpp"

namespace awspec {

/// Weight-multiplicity diagram of an su(3) representation: map from a
/// weight (c1, c2) in the diagonal-projection basis to its multiplicity.
struct WeightMultiset {
    std::map<std::pair<long long, long long>, long long> mult;

    /// Sum of all multiplicities (== dimension of the representation).
    long long total() const;
};

/// The configured cap on z1 for the weight-diagram oracle: the value of
/// the environment variable AWSPEC_ORACLE_MAX_Z1 if set, otherwise 40.
long long oracle_max_z1();

/// Full weight diagram of the su(3) representation with highest weight
/// z1*lambda_1 + z2*lambda_2 by Freudenthal's recursion, cross-checked
/// against the Weyl dimension formula before returning.
/// Preconditions: z1 >= z2 >= 0 (std::domain_error) and
/// z1 <= oracle_max_z1() (std::length_error, resource cap).
WeightMultiset weight_multiplicities_su3(long long z1, long long z2);

/// Decomposition of the circle-fixed subspace of the representation
/// (z1, z2) into so(3) strings: maps z3 to the number of so(3)
/// representations of highest weight z3 that occur.  Entries with count
/// zero are omitted; an empty map means no circle-fixed vectors exist
/// (exactly the case (z1 + z2) % 3 != 0).
/// Same preconditions and errors as weight_multiplicities_su3.
std::map<long long, long long> so3_content(long long z1, long long z2);

}  // namespace awspec
