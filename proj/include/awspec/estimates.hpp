// estimates.hpp — metric parameter conversions, curvature regimes, and
// first-eigenvalue estimates for the two-parameter metric family.
//
// Three equivalent parameterizations of the same metric are supported:
//   * (t0, t1)      — horizontal/vertical scales (used by the spectrum
//                     engine), both positive;
//   * (r0, r1)      — scales of the two irreducible isotropy blocks of
//                     the normal presentation; r0 > 0 and either r1 > 0
//                     or r1 < -r0 (the reparameterized range);
//   * (alpha, delta) — the contact-geometry parameters of the underlying
//                     3-Sasaki-type structure, alpha*delta > 0 for the
//                     metrics covered here.
// Conversions are exact rational maps:
//     t0 = r0,              t1 = r0*r1 / (r0 + r1),
//     r0 = t0,              r1 = t0*t1 / (t0 - t1)   (undefined at t1 == t0),
//     t0 = 1/(2*alpha*delta),  t1 = 1/delta^2.
// The inverse map to (alpha, delta) needs delta = 1/sqrt(t1), which is
// rational only when 1/t1 is a perfect rational square; otherwise the
// exact converter refuses (callers wanting decimals can compute them in
// floating point).
//
// The estimate functions bound the smallest nonzero eigenvalue eta_1 of a
// (4n+3)-dimensional member of this family of homogeneous spaces
// (n == 1 for SU(3)/S^1):
//   * basic_lower_bound — lower bound 2*alpha*delta*K for the smallest
//     nonzero horizontal eigenvalue, K depending on the base family;
//   * f1 — upper bound 8*(n + 1/t1) for t1 >= 1, 8*(n + 1) for t1 <= 1
//     (attained by the lowest t1-dependent branch);
//   * f2 — Lichnerowicz-type lower bound, two closed-form branches with
//     a validity flag (no information once t1 >= (2n+4)/3);
//   * volume_factor / volume_normalized_eigenvalue — scale-invariant
//     comparison of eta_1 across the family (the volume of the metric is
//     proportional to sqrt(t0^4 * t1^3), so eta_1 * (t0^4*t1^3)^{1/7} is
//     scale-free up to one universal constant);
//   * constant_volume_params — the curve t0 = s^{-3}, t1 = s^4 along
//     which volume_factor is identically 1.

#pragma once

#include "awspec/rational.hpp"
#include "awspec/spectrum.hpp"

namespace awspec {

/// Contact-geometry parameters; the conversions here require
/// alpha * delta > 0.
struct SasakiParams {
    Rational alpha;
    Rational delta;
};

/// Normal-presentation scales; valid range r0 > 0 and r1 > 0 or r1 < -r0.
struct NormalParams {
    Rational r0;
    Rational r1;
};

/// Coarse geometry of the metric (t0, t1):
///   positive_normal          — t1 < t0
///   parallel                 — t1 == t0
///   naturally_reductive_only — t1 > t0
enum class CurvatureRegime { positive_normal, parallel, naturally_reductive_only };

/// Base families for basic_lower_bound, named by the symmetric-space type
/// of the base.  The caller supplies the label; it is never inferred.
enum class SymmetricBaseFamily { su_so_even, so_odd_sp, e6, e7, e8, f4, g2 };

/// Throws std::domain_error unless r0 > 0 and (r1 > 0 or r1 < -r0).
void validate(const NormalParams& params);

/// Throws std::domain_error unless alpha * delta > 0.
void validate(const SasakiParams& params);

/// (r0, r1) -> (t0, t1); exact.  Validates the input range.
MetricParams convert_r_to_t(const NormalParams& params);

/// (t0, t1) -> (r0, r1); exact.  Throws std::domain_error at t1 == t0
/// (parallel point: r1 is undefined / infinite).
NormalParams convert_t_to_r(const MetricParams& params);

/// (alpha, delta) -> (t0, t1); exact.  Throws std::domain_error unless
/// alpha * delta > 0.
MetricParams convert_sasaki_to_t(const SasakiParams& params);

/// (t0, t1) -> (alpha, delta), returning the positive-delta representative.
/// Exact only: throws std::domain_error if 1/t1 is not the square of a
/// rational (delta would be irrational).
SasakiParams convert_t_to_sasaki(const MetricParams& params);

/// Regime classification of (t0, t1); validates positivity.
CurvatureRegime curvature_regime(const MetricParams& params);

/// Lower bound 2*alpha*delta*K(family, n) for the smallest nonzero
/// horizontal (basic) eigenvalue over a base of the given family:
///   su_so_even: K = 4*(n+2)     so_odd_sp: K = 4*(n+1)
///   e6: 48   e7: 72   e8: 120   f4: 32   g2: 12    (n ignored for the
/// exceptional families).  Requires n >= 1 and alpha*delta > 0
/// (std::domain_error).
Rational basic_lower_bound(SymmetricBaseFamily family, long long n, const Rational& alpha,
                           const Rational& delta);

/// Upper bound for eta_1 in dimension 4n+3:
///     8*(n + 1/t1) if t1 >= 1,   8*(n + 1) if t1 <= 1
/// (continuous at t1 == 1).  Requires t1 > 0 and n >= 1.
Rational f1(const Rational& t1, long long n);

/// Lichnerowicz-type lower bound for eta_1 in dimension 4n+3.
/// `valid` is false when t1 >= (2n+4)/3, where the method gives no
/// information (the value field still evaluates the outer branch).
struct F2Result {
    Rational value;
    bool valid = false;
};

/// Two closed-form branches, equal at the breakpoints t1 == 1 and
/// t1 == 1/(2n+3):
///     (4n+3)*(2n + 4 - 3*t1) / (2n+1)            for t1 >= 1 or
///                                                    t1 <= 1/(2n+3),
///     (2n*t1^2*(4n+3) + 4n+3) / (t1*(2n+1))      for 1/(2n+3) <= t1 <= 1.
/// Requires t1 > 0 and n >= 1.
F2Result f2(const Rational& t1, long long n);

/// t0^4 * t1^3 — the seventh power of the scale-invariant volume factor
/// (volume is proportional to sqrt(t0^4*t1^3) times a constant).
Rational volume_factor(const MetricParams& params);

/// eta_1 * (t0^4 * t1^3)^{1/7}, as a double: the volume-normalized first
/// eigenvalue, comparable across the family up to one universal constant.
double volume_normalized_eigenvalue(const MetricParams& params);

/// The constant-volume curve through the round point: t0 = s^{-3},
/// t1 = s^4, so volume_factor == 1 identically.  Requires s > 0.
MetricParams constant_volume_params(const Rational& s);

}  // namespace awspec
