// spectrum.hpp — exact Laplace spectra of SU(3)/S^1 in the two-parameter
// metric family, assembled from the contributing triples of
// aloff_wallach.hpp.
//
// A metric is described by rational parameters t0, t1 > 0 (horizontal and
// vertical scale).  Every contributing triple (z1, z2, z3) adds the
// eigenvalue h/t0 + v/t1 with multiplicity m * dim_su3 * dim_so3; equal
// eigenvalues from different triples merge (exact rational comparison,
// never floating point).  Enumeration is complete by construction: the
// vertical part v = 4*z3*(z3+1) and the bound h >= 0 confine (z1, z2, z3)
// to a finite box for any finite eigenvalue bound, and every lattice
// point of the box is tested directly through multiplicity_m — no
// heuristic pruning that could silently drop a triple.

#pragma once

#include <cstddef>
#include <vector>

#include "awspec/aloff_wallach.hpp"
#include "awspec/rational.hpp"

namespace awspec {

/// Metric parameters: t0 scales the horizontal part, t1 the vertical part.
/// Both must be positive rationals.
struct MetricParams {
    Rational t0;
    Rational t1;
};

/// Throws std::domain_error unless t0 > 0 and t1 > 0.
void validate(const MetricParams& params);

/// One point of a spectrum: an eigenvalue, its total multiplicity, and the
/// contributing triples in lexicographic (z1, z2, z3) order.
struct SpectrumEntry {
    Rational eigenvalue;
    long long multiplicity = 0;
    std::vector<SphericalTriple> triples;
};

/// A finite lower part of a Laplace spectrum: entries sorted by strictly
/// increasing eigenvalue, complete up to `bound` (every eigenvalue
/// <= bound appears, with its full multiplicity).
struct Spectrum {
    MetricParams params;
    Rational bound;
    std::vector<SpectrumEntry> entries;
};

/// What part of the spectrum to build: everything up to an eigenvalue
/// bound, or the first n distinct eigenvalues.
struct SpectrumRequest {
    enum class Kind { up_to, first_n };
    Kind kind = Kind::up_to;
    Rational bound;           ///< used when kind == up_to (must be >= 0)
    std::size_t count = 0;    ///< used when kind == first_n (must be >= 1)

    static SpectrumRequest up_to(const Rational& bound);
    static SpectrumRequest first(std::size_t n);
};

/// All contributing triples whose eigenvalue at `params` is <= bound,
/// in lexicographic (z1, z2, z3) order.  bound must be >= 0
/// (std::domain_error otherwise); bound == 0 yields only (0, 0, 0).
std::vector<SphericalTriple> enumerate_spherical(const Rational& bound,
                                                 const MetricParams& params);

/// Assemble the spectrum for the given request.  For first_n requests the
/// enumeration bound starts at 12/t0 (which always captures a nonzero
/// eigenvalue) and doubles until enough distinct eigenvalues are present;
/// the result's `bound` is then the largest returned eigenvalue.
Spectrum build_spectrum(const MetricParams& params, const SpectrumRequest& request);

/// The smallest nonzero eigenvalue together with every triple realizing it.
struct FirstEigenvalue {
    Rational value;
    std::vector<SphericalTriple> triples;
};

/// Smallest nonzero eigenvalue at `params`, computed from the enumeration
/// engine (independent of the closed form below).
FirstEigenvalue first_eigenvalue(const MetricParams& params);

/// Closed form for the smallest nonzero eigenvalue:
///     12 / t0            if t1 < t0   (realized by (2, 1, 0)),
///     4 / t0 + 8 / t1    if t1 >= t0  (realized by (2, 1, 1);
///                         at t1 == t0 both values coincide).
Rational first_eigenvalue_closed_form(const MetricParams& params);

/// Spectrum of the z3 == 0 part only (the horizontal eigenvalues h/t0,
/// which depend on t0 alone).  Same request semantics as build_spectrum.
Spectrum basic_spectrum(const MetricParams& params, const SpectrumRequest& request);

/// Vertical model spectrum: eigenvalue 4*z3*(z3+1)/t1 with multiplicity
/// (2*z3+1)^2 for z3 = 0..z3_max (the bi-regular count of the compact
/// 3-dimensional fiber).  Throws std::domain_error if t1 <= 0 or
/// z3_max < 0.
std::vector<SpectrumEntry> fiber_spectrum(const Rational& t1, long long z3_max);

/// Total multiplicity contributed by the su(3) class (z1, z2) across all
/// z3:  sum over z3 of m(z1,z2,z3) * dim_su3(z1,z2) * (2*z3+1).
/// This is the multiplicity of the eigenvalue su3_casimir(z1,z2)/t at the
/// round point t0 == t1 == t, where all z3-branches of a class merge.
/// Preconditions: z1 >= z2 >= 0; throws std::domain_error.
long long aggregate_su3_multiplicity(long long z1, long long z2);

/// One eigenvalue of the left-invariant comparison family on SU(2):
///     (n1*(2*n1 + 1) - (n1 - 2*n2)^2) / t0 + (n1 - 2*n2)^2 / t1
/// for 0 <= n2 <= n1.
struct BergerEntry {
    long long n1 = 0;
    long long n2 = 0;
    Rational eigenvalue;
};

/// All BergerEntry values with n1 <= n1_max, in lexicographic (n1, n2)
/// order.  If so3_only is true, only even n1 (the representations that
/// descend to SO(3)) are kept.  Throws std::domain_error if t0, t1 <= 0
/// or n1_max < 0.
std::vector<BergerEntry> su2_berger_spectrum(const Rational& t0, const Rational& t1,
                                             long long n1_max, bool so3_only);

}  // namespace awspec
