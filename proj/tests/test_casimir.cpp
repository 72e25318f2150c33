// Casimir evaluator: closed forms against the generic Gram-matrix route,
// normalization anchors, and input validation.

#include <stdexcept>

#include "doctest.h"

#include "awspec/casimir.hpp"
#include "awspec/rational.hpp"

using namespace awspec;

TEST_CASE("su3 normalization anchors") {
    // Trivial representation has eigenvalue 0, the adjoint has 12.
    CHECK(su3_casimir(0, 0) == 0);
    CHECK(su3_casimir(2, 1) == 12);
    // Both fundamental representations sit at 16/3.
    CHECK(su3_casimir(1, 0) == make_rational(16, 3));
    CHECK(su3_casimir(1, 1) == make_rational(16, 3));
}

TEST_CASE("so3 normalization anchors") {
    CHECK(so3_casimir(0) == 0);
    CHECK(so3_casimir(1) == 8);  // adjoint
    CHECK(so3_casimir(2) == 24);
    CHECK(so3_casimir(5) == 120);
}

TEST_CASE("closed forms agree with the generic evaluator") {
    const GramData su3 = su3_gram();
    for (long long z1 = 0; z1 <= 40; ++z1) {
        for (long long z2 = 0; z2 <= z1; ++z2) {
            CHECK(su3_casimir(z1, z2) == casimir_eigenvalue(su3_weight(z1, z2), su3));
        }
    }
    const GramData so3 = so3_gram();
    for (long long z3 = 0; z3 <= 40; ++z3) {
        CHECK(so3_casimir(z3) == casimir_eigenvalue(so3_weight(z3), so3));
    }
}

TEST_CASE("casimir grows when a positive root is added to the weight") {
    // g(w, w + 2 rho) is strictly increasing along dominant directions;
    // exercised through the generic evaluator on raw Weight values.
    const GramData su3 = su3_gram();
    const long long roots[3][2] = {{2, -2}, {2, 4}, {4, 2}};  // doubled coords
    for (long long z1 = 0; z1 <= 10; ++z1) {
        for (long long z2 = 0; z2 <= z1; ++z2) {
            const Weight base = su3_weight(z1, z2);
            for (const auto& root : roots) {
                Weight shifted = base;
                shifted.coords[0] += root[0];
                shifted.coords[1] += root[1];
                if (shifted.coords[0] < shifted.coords[1] || shifted.coords[1] < 0) continue;
                CHECK(casimir_eigenvalue(shifted, su3) > casimir_eigenvalue(base, su3));
            }
        }
    }
}

TEST_CASE("sp2 and su5 closed forms") {
    CHECK(sp2_casimir_killing(0, 0) == 0);
    CHECK(sp2_casimir_killing(4, 0) == make_rational(8, 3));
    CHECK(sp2_casimir_killing(1, 1) == make_rational(3, 2));
    CHECK(su5_casimir_killing(0, 0, 0, 0) == 0);
    CHECK(su5_casimir_killing(1, 0, 0, 1) == 1);  // adjoint
    CHECK(su5_casimir_killing(1, 0, 0, 0) == make_rational(12, 25));
    CHECK(su5_casimir_killing(0, 0, 0, 1) == make_rational(12, 25));
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(su3_casimir(1, 2), std::domain_error);   // not dominant
    CHECK_THROWS_AS(su3_casimir(-1, 0), std::domain_error);
    CHECK_THROWS_AS(so3_casimir(-1), std::domain_error);
    CHECK_THROWS_AS(sp2_casimir_killing(-1, 0), std::domain_error);
    CHECK_THROWS_AS(su5_casimir_killing(0, -1, 0, 0), std::domain_error);

    // Generic evaluator rejects mismatched weight/Gram data.
    const GramData su3 = su3_gram();
    CHECK_THROWS_AS(casimir_eigenvalue(so3_weight(1), su3), std::invalid_argument);
    Weight bad = su3_weight(1, 0);
    bad.coords.push_back(0);
    CHECK_THROWS_AS(casimir_eigenvalue(bad, su3), std::invalid_argument);
}
