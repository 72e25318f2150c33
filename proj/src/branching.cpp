// branching.cpp — su(3) weight diagrams by Freudenthal's recursion and
// their decomposition into circle-fixed so(3) strings.

#include "awspec/branching.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "awspec/aloff_wallach.hpp"

namespace awspec {

namespace {

using Coord = std::pair<long long, long long>;  // (c1, c2) in the diagonal basis

// Positive roots of su(3) in (c1, c2) coordinates:
// lambda_1 - lambda_2, lambda_2 - lambda_3, lambda_1 - lambda_3.
constexpr std::array<Coord, 3> kPositiveRoots{{{1, -1}, {1, 2}, {2, 1}}};

// rho = half the sum of the positive roots.
constexpr Coord kRho{2, 1};

// Inner product scaled by 3 (the Gram matrix [[4/3,-2/3],[-2/3,4/3]] times
// 3) so everything stays in integers; the scale cancels between the two
// sides of Freudenthal's recursion.
long long ip3(const Coord& a, const Coord& b) {
    return 4 * a.first * b.first + 4 * a.second * b.second -
           2 * (a.first * b.second + a.second * b.first);
}

Coord add(const Coord& a, const Coord& b) {
    return {a.first + b.first, a.second + b.second};
}

// Whether d = (d1, d2) is a nonnegative integer combination of the simple
// roots (1,-1) and (1,2); if so, d = x*(1,-1) + y*(1,2) with
// y = (d1+d2)/3 and x = d1-y.
bool in_root_cone(const Coord& d) {
    const long long s = d.first + d.second;
    if (s % 3 != 0) return false;
    const long long y = s / 3;
    const long long x = d.first - y;
    return x >= 0 && y >= 0;
}

// Dominant representative of the Weyl orbit of (c1, c2): realize the
// weight as the triple (c1, c2, 0) modulo (1,1,1), sort the entries
// descending (the Weyl group of su(3) permutes them), and renormalize the
// third entry to zero.
Coord dominantize(const Coord& w) {
    std::array<long long, 3> t{w.first, w.second, 0};
    std::sort(t.begin(), t.end(), std::greater<>());
    return {t[0] - t[2], t[1] - t[2]};
}

// Freudenthal's recursion over dominant weights of the representation
// with highest weight `top`:
//   (|top+rho|^2 - |mu+rho|^2) m(mu)
//       = 2 * sum over positive roots alpha, k >= 1 of
//             (mu + k*alpha, alpha) * m(mu + k*alpha).
// Non-dominant arguments are mapped into the dominant chamber first
// (multiplicities are Weyl invariant); the recursion climbs strictly
// toward `top`, so it terminates.
long long dominant_multiplicity(const Coord& mu, const Coord& top,
                                std::map<Coord, long long>& memo) {
    if (mu == top) return 1;
    const Coord diff{top.first - mu.first, top.second - mu.second};
    if (!in_root_cone(diff)) return 0;
    if (const auto it = memo.find(mu); it != memo.end()) return it->second;

    const Coord top_rho = add(top, kRho);
    const Coord mu_rho = add(mu, kRho);
    const long long denom = ip3(top_rho, top_rho) - ip3(mu_rho, mu_rho);
    if (denom <= 0) {
        throw std::logic_error(
            "awspec::weight_multiplicities_su3: nonpositive Freudenthal denominator at (" +
            std::to_string(mu.first) + ", " + std::to_string(mu.second) + ")");
    }

    long long sum = 0;
    for (const Coord& alpha : kPositiveRoots) {
        Coord nu = add(mu, alpha);
        while (in_root_cone({top.first - nu.first, top.second - nu.second})) {
            const long long m = dominant_multiplicity(dominantize(nu), top, memo);
            if (m != 0) sum += ip3(nu, alpha) * m;
            nu = add(nu, alpha);
        }
    }
    const long long numer = 2 * sum;
    if (numer % denom != 0) {
        throw std::logic_error(
            "awspec::weight_multiplicities_su3: non-integral Freudenthal quotient at (" +
            std::to_string(mu.first) + ", " + std::to_string(mu.second) + ")");
    }
    const long long m = numer / denom;
    memo.emplace(mu, m);
    return m;
}

}  // namespace

long long WeightMultiset::total() const {
    long long sum = 0;
    for (const auto& [weight, count] : mult) sum += count;
    return sum;
}

long long oracle_max_z1() {
    const char* raw = std::getenv("AWSPEC_ORACLE_MAX_Z1");
    if (raw == nullptr) return 40;
    char* end = nullptr;
    const long long value = std::strtoll(raw, &end, 10);
    if (end == raw || *end != '\0' || value < 0) {
        throw std::invalid_argument(
            "awspec::oracle_max_z1: AWSPEC_ORACLE_MAX_Z1 must be a nonnegative integer, got '" +
            std::string(raw) + "'");
    }
    return value;
}

WeightMultiset weight_multiplicities_su3(long long z1, long long z2) {
    if (z1 < z2 || z2 < 0) {
        throw std::domain_error("awspec::weight_multiplicities_su3: need z1 >= z2 >= 0, got (" +
                                std::to_string(z1) + ", " + std::to_string(z2) + ")");
    }
    const long long cap = oracle_max_z1();
    if (z1 > cap) {
        throw std::length_error("awspec::weight_multiplicities_su3: z1 = " + std::to_string(z1) +
                                " exceeds the configured oracle bound " + std::to_string(cap) +
                                " (set AWSPEC_ORACLE_MAX_Z1 to raise it)");
    }

    const Coord top{z1, z2};
    std::map<Coord, long long> memo;
    WeightMultiset result;

    // Every dominant weight mu <= top satisfies 0 <= c2 <= c1 <= z1
    // (subtracting positive roots cannot raise c1 above z1).
    for (long long c1 = 0; c1 <= z1; ++c1) {
        for (long long c2 = 0; c2 <= c1; ++c2) {
            const Coord mu{c1, c2};
            if (!in_root_cone({top.first - mu.first, top.second - mu.second})) continue;
            const long long m = dominant_multiplicity(mu, top, memo);
            if (m == 0) continue;
            // Spread over the Weyl orbit: all permutations of (c1, c2, 0),
            // renormalized so the third coordinate vanishes.
            std::array<long long, 3> t{c1, c2, 0};
            std::sort(t.begin(), t.end());
            do {
                result.mult[{t[0] - t[2], t[1] - t[2]}] = m;
            } while (std::next_permutation(t.begin(), t.end()));
        }
    }

    const long long expected = dim_su3(z1, z2);
    if (result.total() != expected) {
        throw std::logic_error("awspec::weight_multiplicities_su3: weight diagram of (" +
                               std::to_string(z1) + ", " + std::to_string(z2) + ") sums to " +
                               std::to_string(result.total()) + ", expected dimension " +
                               std::to_string(expected));
    }
    return result;
}

std::map<long long, long long> so3_content(long long z1, long long z2) {
    const WeightMultiset diagram = weight_multiplicities_su3(z1, z2);

    // Circle-fixed weights are those with c1 + c2 == 0; their value on the
    // su(2) torus generator is u = c1 - c2 = 2*c1, always even.
    std::map<long long, long long> fixed;  // u -> multiplicity, u >= 0 side
    for (const auto& [weight, count] : diagram.mult) {
        if (weight.first + weight.second != 0) continue;
        const long long u = weight.first - weight.second;
        if (u >= 0) fixed[u] += count;
    }

    // An so(3) representation of highest weight z3 contributes the string
    // u = -2*z3, ..., 2*z3 (step 2), so the number of strings with top
    // exactly 2*z3 is N(2*z3) - N(2*z3 + 2).
    std::map<long long, long long> content;
    for (const auto& [u, count] : fixed) {
        const auto next = fixed.find(u + 2);
        const long long strings = count - (next == fixed.end() ? 0 : next->second);
        if (strings < 0) {
            throw std::logic_error("awspec::so3_content: torus values of (" + std::to_string(z1) +
                                   ", " + std::to_string(z2) +
                                   ") do not stack into strings (negative count at u = " +
                                   std::to_string(u) + ")");
        }
        if (strings > 0) content[u / 2] = strings;
    }
    return content;
}

}  // namespace awspec
