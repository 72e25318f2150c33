// casimir.cpp — generic Gram-matrix Casimir evaluator and the closed forms
// for su(3), so(3), sp(2) and su(5).

#include "awspec/casimir.hpp"

#include <cstddef>
#include <stdexcept>

namespace awspec {

namespace {

// Shared validation: both weights must live in the basis described by
// `data`, and the Gram matrix must be square of matching size.
void check_compatible(const Weight& a, const Weight& b, const GramData& data,
                      const char* function) {
    if (a.basis_id != data.basis_id || b.basis_id != data.basis_id) {
        throw std::invalid_argument(std::string(function) + ": basis mismatch ('" + a.basis_id +
                                    "', '" + b.basis_id + "' vs Gram data '" + data.basis_id +
                                    "')");
    }
    const std::size_t n = data.gram.size();
    if (a.coords.size() != n || b.coords.size() != n || data.two_rho.size() != n) {
        throw std::invalid_argument(std::string(function) + ": dimension mismatch in basis '" +
                                    data.basis_id + "'");
    }
    for (const auto& row : data.gram) {
        if (row.size() != n) {
            throw std::invalid_argument(std::string(function) +
                                        ": Gram matrix is not square in basis '" + data.basis_id +
                                        "'");
        }
    }
}

// g(a, b) on doubled coordinate vectors: (1/4) * a^T G b.
Rational pairing(const std::vector<long long>& a, const std::vector<long long>& b,
                 const std::vector<std::vector<Rational>>& gram) {
    Rational sum = 0;
    for (std::size_t i = 0; i < gram.size(); ++i) {
        for (std::size_t j = 0; j < gram.size(); ++j) {
            sum += Rational(static_cast<long>(a[i])) * gram[i][j] *
                   Rational(static_cast<long>(b[j]));
        }
    }
    return sum / 4;
}

}  // namespace

Rational inner_product(const Weight& a, const Weight& b, const GramData& data) {
    check_compatible(a, b, data, "awspec::inner_product");
    return pairing(a.coords, b.coords, data.gram);
}

Rational casimir_eigenvalue(const Weight& lambda, const GramData& data) {
    check_compatible(lambda, lambda, data, "awspec::casimir_eigenvalue");
    // g(lambda, lambda + 2*rho) = g(lambda, lambda) + g(lambda, 2*rho).
    std::vector<long long> shifted(lambda.coords.size());
    for (std::size_t i = 0; i < shifted.size(); ++i) {
        shifted[i] = lambda.coords[i] + data.two_rho[i];
    }
    return pairing(lambda.coords, shifted, data.gram);
}

GramData su3_gram() {
    GramData data;
    data.basis_id = "su3-diagonal-projections";
    data.gram = {{make_rational(4, 3), make_rational(-2, 3)},
                 {make_rational(-2, 3), make_rational(4, 3)}};
    data.two_rho = {8, 4};  // 2*rho = 4*lambda_1 + 2*lambda_2, doubled
    return data;
}

GramData so3_gram() {
    GramData data;
    data.basis_id = "so3-mu1";
    data.gram = {{make_rational(4)}};
    data.two_rho = {2};  // 2*rho = mu_1, doubled
    return data;
}

Weight su3_weight(long long z1, long long z2) {
    return Weight{"su3-diagonal-projections", {2 * z1, 2 * z2}};
}

Weight so3_weight(long long z3) {
    return Weight{"so3-mu1", {2 * z3}};
}

Rational su3_casimir(long long z1, long long z2) {
    if (z1 < z2 || z2 < 0) {
        throw std::domain_error("awspec::su3_casimir: need z1 >= z2 >= 0, got (" +
                                std::to_string(z1) + ", " + std::to_string(z2) + ")");
    }
    // 4*(z1^2 + z2^2 - z1*(z2 - 3)) / 3
    return make_rational(4 * (z1 * z1 + z2 * z2 - z1 * (z2 - 3)), 3);
}

Rational so3_casimir(long long z3) {
    if (z3 < 0) {
        throw std::domain_error("awspec::so3_casimir: need z3 >= 0, got " + std::to_string(z3));
    }
    return make_rational(4 * z3 * (z3 + 1));
}

Rational sp2_casimir_killing(long long n1, long long n2) {
    if (n1 < 0 || n2 < 0) {
        throw std::domain_error("awspec::sp2_casimir_killing: need n1, n2 >= 0, got (" +
                                std::to_string(n1) + ", " + std::to_string(n2) + ")");
    }
    return make_rational(n1 * (n1 + 2) + n1 * (n2 + 2) + n2 * (n1 + 2) + n2 * (n2 + 2) +
                             2 * n2 * (n2 + 2),
                         12);
}

Rational su5_casimir_killing(long long n1, long long n2, long long n3, long long n4) {
    if (n1 < 0 || n2 < 0 || n3 < 0 || n4 < 0) {
        throw std::domain_error("awspec::su5_casimir_killing: need n1..n4 >= 0, got (" +
                                std::to_string(n1) + ", " + std::to_string(n2) + ", " +
                                std::to_string(n3) + ", " + std::to_string(n4) + ")");
    }
    const long long s = (4 * n1 + 3 * n2 + 2 * n3 + n4) * (2 + n1) +
                        (3 * n1 + 6 * n2 + 4 * n3 + 2 * n4) * (2 + n2) +
                        (2 * n1 + 4 * n2 + 6 * n3 + 3 * n4) * (2 + n3) +
                        (n1 + 2 * n2 + 3 * n3 + 4 * n4) * (2 + n4);
    return make_rational(s, 50);
}

}  // namespace awspec
