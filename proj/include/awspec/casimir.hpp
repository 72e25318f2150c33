// casimir.hpp — quadratic Casimir eigenvalues from weight data.
//
// The Casimir eigenvalue of an irreducible representation with highest
// weight w, relative to an invariant inner product g on the weight space,
// is g(w, w + 2*rho) where rho is the half sum of positive roots.  This
// header provides a generic evaluator driven by a Gram matrix together
// with closed forms for the cases the rest of the library consumes:
//
//  * su(3), weights written in the diagonal-projection basis (lambda_1,
//    lambda_2), inner product normalized so the adjoint representation
//    (highest weight 2*lambda_1 + lambda_2) has eigenvalue 12;
//  * so(3), weights written as multiples of mu_1, normalized so the
//    adjoint representation (highest weight mu_1) has eigenvalue 8;
//  * sp(2) and su(5) relative to the Killing form (closed forms only,
//    used for cross-space comparison of lowest eigenvalues).
//
// Weight coordinates are stored doubled (coords[i] is twice the
// coefficient of basis vector i) so half-integral weights such as rho of
// so(3) stay in exact integer arithmetic.

#pragma once

#include <string>
#include <vector>

#include "awspec/rational.hpp"

namespace awspec {

/// A weight expressed in a named basis.  coords[i] is TWICE the
/// coefficient of the i-th basis vector, so half-integral coefficients
/// are representable exactly.
struct Weight {
    std::string basis_id;
    std::vector<long long> coords;
};

/// Inner-product data for a named weight basis: the symmetric Gram matrix
/// of the basis vectors and the weight 2*rho (doubled coordinates, like
/// every Weight).
struct GramData {
    std::string basis_id;
    std::vector<std::vector<Rational>> gram;
    std::vector<long long> two_rho;
};

/// g(a, b) for two weights in the basis described by `data`.
/// Throws std::invalid_argument on basis or dimension mismatch.
Rational inner_product(const Weight& a, const Weight& b, const GramData& data);

/// Casimir eigenvalue g(lambda, lambda + 2*rho) of the irreducible
/// representation with highest weight `lambda`.
/// Throws std::invalid_argument on basis or dimension mismatch.
Rational casimir_eigenvalue(const Weight& lambda, const GramData& data);

/// Gram data for su(3) in the diagonal-projection basis (lambda_1, lambda_2):
/// Gram [[4/3, -2/3], [-2/3, 4/3]], 2*rho = 4*lambda_1 + 2*lambda_2.
GramData su3_gram();

/// Gram data for so(3) in the basis (mu_1): Gram [[4]], 2*rho = mu_1.
GramData so3_gram();

/// The weight z1*lambda_1 + z2*lambda_2 in the su(3) basis above.
Weight su3_weight(long long z1, long long z2);

/// The weight z3*mu_1 in the so(3) basis above.
Weight so3_weight(long long z3);

/// Closed form for the su(3) Casimir eigenvalue of the representation with
/// dominant highest weight z1*lambda_1 + z2*lambda_2 (z1 >= z2 >= 0):
///     4*(z1^2 + z2^2 - z1*(z2 - 3)) / 3.
/// Agrees with casimir_eigenvalue over su3_gram().
/// Throws std::domain_error unless z1 >= z2 >= 0.
Rational su3_casimir(long long z1, long long z2);

/// Closed form for the so(3) Casimir eigenvalue of the representation with
/// highest weight z3*mu_1 (z3 >= 0):  4*z3*(z3 + 1).
/// Throws std::domain_error unless z3 >= 0.
Rational so3_casimir(long long z3);

/// Killing-form Casimir eigenvalue of the sp(2) representation with
/// fundamental-weight coefficients (n1, n2), n1, n2 >= 0:
///     (n1(n1+2) + n1(n2+2) + n2(n1+2) + n2(n2+2) + 2 n2(n2+2)) / 12.
/// Throws std::domain_error on negative input.
Rational sp2_casimir_killing(long long n1, long long n2);

/// Killing-form Casimir eigenvalue of the su(5) representation with
/// fundamental-weight coefficients (n1, n2, n3, n4), all >= 0.
/// Throws std::domain_error on negative input.
Rational su5_casimir_killing(long long n1, long long n2, long long n3, long long n4);

}  // namespace awspec
