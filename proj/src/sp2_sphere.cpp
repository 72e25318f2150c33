// sp2_sphere.cpp — partition function and intertwining multiplicities for
// the 7-sphere as (Sp(2) x Sp(1)) / Sp(1)'.

#include "awspec/sp2_sphere.hpp"

#include <array>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace awspec {

long long sp2_partition(long long a0_doubled, long long a1_doubled) {
    // #{(m1,m2,m3) in N_0^3 : a0 = (m1-m2)/2, a1 = (m1+m2)/2 + m3}.
    // m1 - m2 = 2*a0 and m2 + m3 = a1 - a0, so a1 - a0 must be an integer
    // (equal parity of the doubled inputs); m2 then ranges over
    // max(0, -2*a0) .. a1 - a0, giving a1 - |a0| + 1 solutions when >= 0.
    if (((a1_doubled - a0_doubled) % 2 + 2) % 2 != 0) return 0;
    const long long half_diff = (a1_doubled - a0_doubled) / 2;  // a1 - a0
    long long count = half_diff + 1;
    if (a0_doubled < 0) count += a0_doubled;  // minus max(0, -2*a0)
    return count > 0 ? count : 0;
}

long long sp2_multiplicity(long long n1, long long n2, long long n3) {
    if (n1 < 0 || n2 < 0 || n3 < 0) {
        throw std::domain_error("awspec::sp2_multiplicity: need n1, n2, n3 >= 0, got (" +
                                std::to_string(n1) + ", " + std::to_string(n2) + ", " +
                                std::to_string(n3) + ")");
    }
    // Doubled coordinates of lambda + rho in the basis (nu0, nu1, nu1'):
    // the fundamental weights are omega_1 = nu1/2, omega_2 = (nu1+nu0)/2,
    // omega_3 = nu1'/2 and rho = nu0/2 + nu1 + nu1'/2.
    const long long x = n2 + 1;            // nu0 component, doubled
    const long long y = n1 + n2 + 2;       // nu1 component, doubled
    const long long z = n3 + 1;            // nu1' component, doubled

    // The Weyl group permutes {nu0, nu1} and flips the signs of all three
    // coordinates independently (the nu0/nu1 flips come from Sp(2), the
    // nu1' flip from Sp(1)); a transposition and each flip contribute -1.
    // Restriction to the Sp(1)' torus sends nu0 -> nu0* and both nu1 and
    // nu1' -> nu1*, and the restricted rho has doubled coordinates (1, 3).
    long long total = 0;
    const std::array<std::array<long long, 2>, 2> perms{{{x, y}, {y, x}}};
    for (std::size_t p = 0; p < 2; ++p) {
        const long long perm_sign = (p == 0) ? 1 : -1;
        for (int s0 = -1; s0 <= 1; s0 += 2) {
            for (int s1 = -1; s1 <= 1; s1 += 2) {
                for (int s2 = -1; s2 <= 1; s2 += 2) {
                    const long long w0 = s0 * perms[p][0];
                    const long long w1 = s1 * perms[p][1];
                    const long long w2 = s2 * z;
                    const long long sign = perm_sign * s0 * s1 * s2;
                    total += sign * sp2_partition(w0 - 1, w1 + w2 - 3);
                }
            }
        }
    }
    return total;
}

bool is_sp1prime_spherical(long long n1, long long n2, long long n3) {
    return sp2_multiplicity(n1, n2, n3) > 0;
}

}  // namespace awspec
