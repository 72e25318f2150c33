// spectrum.cpp — enumeration of contributing triples and assembly of
// exact Laplace spectra for SU(3)/S^1.

#include "awspec/spectrum.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "awspec/casimir.hpp"

namespace awspec {

namespace {

// Group triples by exact eigenvalue and flatten into sorted entries.
// Triples arrive in lexicographic order and std::map keeps eigenvalues
// ascending, so the output is canonical.
std::vector<SpectrumEntry> group_by_eigenvalue(const std::vector<SphericalTriple>& triples,
                                               const MetricParams& params) {
    std::map<Rational, SpectrumEntry> grouped;
    for (const SphericalTriple& triple : triples) {
        const Rational value =
            eigenvalue_at(triple.z1, triple.z2, triple.z3, params.t0, params.t1);
        SpectrumEntry& entry = grouped[value];
        entry.eigenvalue = value;
        entry.multiplicity += triple.total_mult;
        entry.triples.push_back(triple);
    }
    std::vector<SpectrumEntry> entries;
    entries.reserve(grouped.size());
    for (auto& [value, entry] : grouped) entries.push_back(std::move(entry));
    return entries;
}

// Shared doubling driver for the first_n request kinds.
template <typename Enumerate>
Spectrum build_with_request(const MetricParams& params, const SpectrumRequest& request,
                            Enumerate enumerate, const char* function) {
    validate(params);
    Spectrum spectrum;
    spectrum.params = params;
    if (request.kind == SpectrumRequest::Kind::up_to) {
        if (sgn(request.bound) < 0) {
            throw std::domain_error(std::string(function) + ": bound must be >= 0, got " +
                                    to_string(request.bound));
        }
        spectrum.bound = request.bound;
        spectrum.entries = group_by_eigenvalue(enumerate(request.bound), params);
        return spectrum;
    }
    if (request.count < 1) {
        throw std::domain_error(std::string(function) + ": first_n request needs count >= 1");
    }
    // 12/t0 always captures the constant eigenvalue 0 and the nonzero
    // eigenvalue of (2, 1, 0); double until enough distinct values exist.
    Rational bound = make_rational(12) / params.t0;
    for (;;) {
        std::vector<SpectrumEntry> entries = group_by_eigenvalue(enumerate(bound), params);
        if (entries.size() >= request.count) {
            entries.resize(request.count);
            spectrum.entries = std::move(entries);
            spectrum.bound = spectrum.entries.back().eigenvalue;
            return spectrum;
        }
        bound *= 2;
    }
}

}  // namespace

void validate(const MetricParams& params) {
    if (sgn(params.t0) <= 0 || sgn(params.t1) <= 0) {
        throw std::domain_error("awspec::validate: metric parameters must be positive, got t0 = " +
                                to_string(params.t0) + ", t1 = " + to_string(params.t1));
    }
}

SpectrumRequest SpectrumRequest::up_to(const Rational& bound) {
    SpectrumRequest request;
    request.kind = Kind::up_to;
    request.bound = bound;
    return request;
}

SpectrumRequest SpectrumRequest::first(std::size_t n) {
    SpectrumRequest request;
    request.kind = Kind::first_n;
    request.count = n;
    return request;
}

std::vector<SphericalTriple> enumerate_spherical(const Rational& bound,
                                                 const MetricParams& params) {
    validate(params);
    if (sgn(bound) < 0) {
        throw std::domain_error("awspec::enumerate_spherical: bound must be >= 0, got " +
                                to_string(bound));
    }
    // Finite search box.  Vertical part: v = 4*z3*(z3+1) needs v/t1 <= bound.
    // Horizontal part: h = c - v >= 0 forces the su(3) Casimir value c to
    // satisfy c <= t0*(bound - v/t1) + v <= max(t0, t1)*bound, and
    // c >= z1^2 for every dominant pair, which bounds z1.
    const Rational c_max = (params.t1 > params.t0 ? params.t1 : params.t0) * bound;

    std::vector<SphericalTriple> triples;
    for (long long z1 = 0; make_rational(z1 * z1) <= c_max; ++z1) {
        for (long long z2 = 0; z2 <= z1; ++z2) {
            if ((z1 + z2) % 3 != 0) continue;  // no circle-fixed vectors at all
            const Rational c = su3_casimir(z1, z2);
            for (long long z3 = 0; so3_casimir(z3) <= c; ++z3) {
                const long long m = multiplicity_m(z1, z2, z3);
                if (m == 0) continue;
                const Rational value = eigenvalue_at(z1, z2, z3, params.t0, params.t1);
                if (value <= bound) triples.push_back(make_spherical_triple(z1, z2, z3));
            }
        }
    }
    return triples;
}

Spectrum build_spectrum(const MetricParams& params, const SpectrumRequest& request) {
    return build_with_request(
        params, request,
        [&params](const Rational& bound) { return enumerate_spherical(bound, params); },
        "awspec::build_spectrum");
}

FirstEigenvalue first_eigenvalue(const MetricParams& params) {
    const Spectrum spectrum = build_spectrum(params, SpectrumRequest::first(2));
    // entries[0] is the constant eigenvalue 0 from (0, 0, 0).
    FirstEigenvalue first;
    first.value = spectrum.entries[1].eigenvalue;
    first.triples = spectrum.entries[1].triples;
    return first;
}

Rational first_eigenvalue_closed_form(const MetricParams& params) {
    validate(params);
    if (params.t1 < params.t0) {
        return make_rational(12) / params.t0;
    }
    return make_rational(4) / params.t0 + make_rational(8) / params.t1;
}

Spectrum basic_spectrum(const MetricParams& params, const SpectrumRequest& request) {
    const auto enumerate_basic = [&params](const Rational& bound) {
        std::vector<SphericalTriple> triples;
        for (const SphericalTriple& triple : enumerate_spherical(bound, params)) {
            if (triple.z3 == 0) triples.push_back(triple);
        }
        return triples;
    };
    return build_with_request(params, request, enumerate_basic, "awspec::basic_spectrum");
}

std::vector<SpectrumEntry> fiber_spectrum(const Rational& t1, long long z3_max) {
    if (sgn(t1) <= 0) {
        throw std::domain_error("awspec::fiber_spectrum: need t1 > 0, got " + to_string(t1));
    }
    if (z3_max < 0) {
        throw std::domain_error("awspec::fiber_spectrum: need z3_max >= 0, got " +
                                std::to_string(z3_max));
    }
    std::vector<SpectrumEntry> entries;
    entries.reserve(static_cast<std::size_t>(z3_max) + 1);
    for (long long z3 = 0; z3 <= z3_max; ++z3) {
        SpectrumEntry entry;
        entry.eigenvalue = so3_casimir(z3) / t1;
        entry.multiplicity = dim_so3(z3) * dim_so3(z3);
        entries.push_back(std::move(entry));
    }
    return entries;
}

long long aggregate_su3_multiplicity(long long z1, long long z2) {
    const long long dim = dim_su3(z1, z2);  // validates z1 >= z2 >= 0
    const Rational c = su3_casimir(z1, z2);
    long long total = 0;
    for (long long z3 = 0; so3_casimir(z3) <= c; ++z3) {
        total += multiplicity_m(z1, z2, z3) * dim * dim_so3(z3);
    }
    return total;
}

std::vector<BergerEntry> su2_berger_spectrum(const Rational& t0, const Rational& t1,
                                             long long n1_max, bool so3_only) {
    if (sgn(t0) <= 0 || sgn(t1) <= 0) {
        throw std::domain_error("awspec::su2_berger_spectrum: need t0 > 0 and t1 > 0, got (" +
                                to_string(t0) + ", " + to_string(t1) + ")");
    }
    if (n1_max < 0) {
        throw std::domain_error("awspec::su2_berger_spectrum: need n1_max >= 0, got " +
                                std::to_string(n1_max));
    }
    std::vector<BergerEntry> entries;
    for (long long n1 = 0; n1 <= n1_max; ++n1) {
        if (so3_only && n1 % 2 != 0) continue;
        for (long long n2 = 0; n2 <= n1; ++n2) {
            const long long vertical = (n1 - 2 * n2) * (n1 - 2 * n2);
            BergerEntry entry;
            entry.n1 = n1;
            entry.n2 = n2;
            entry.eigenvalue =
                make_rational(n1 * (2 * n1 + 1) - vertical) / t0 + make_rational(vertical) / t1;
            entries.push_back(std::move(entry));
        }
    }
    return entries;
}

}  // namespace awspec
