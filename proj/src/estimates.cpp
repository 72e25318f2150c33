// estimates.cpp — parameter conversions, curvature regimes, and
// first-eigenvalue estimates.

#include "awspec/estimates.hpp"

#include <cmath>
#include <stdexcept>

namespace awspec {

namespace {

void check_n(long long n, const char* function) {
    if (n < 1) {
        throw std::domain_error(std::string(function) + ": need n >= 1, got " + std::to_string(n));
    }
}

void check_t1(const Rational& t1, const char* function) {
    if (sgn(t1) <= 0) {
        throw std::domain_error(std::string(function) + ": need t1 > 0, got " + to_string(t1));
    }
}

}  // namespace

void validate(const NormalParams& params) {
    if (sgn(params.r0) <= 0 || !(params.r1 > 0 || params.r1 < -params.r0)) {
        throw std::domain_error(
            "awspec::validate: normal parameters need r0 > 0 and r1 > 0 or r1 < -r0, got r0 = " +
            to_string(params.r0) + ", r1 = " + to_string(params.r1));
    }
}

void validate(const SasakiParams& params) {
    if (sgn(params.alpha * params.delta) <= 0) {
        throw std::domain_error("awspec::validate: need alpha*delta > 0, got alpha = " +
                                to_string(params.alpha) + ", delta = " + to_string(params.delta));
    }
}

MetricParams convert_r_to_t(const NormalParams& params) {
    validate(params);
    MetricParams t;
    t.t0 = params.r0;
    t.t1 = params.r0 * params.r1 / (params.r0 + params.r1);
    return t;
}

NormalParams convert_t_to_r(const MetricParams& params) {
    validate(params);
    if (params.t1 == params.t0) {
        throw std::domain_error(
            "awspec::convert_t_to_r: t1 == t0 is the parallel/normal point; r1 is undefined "
            "(infinite)");
    }
    NormalParams r;
    r.r0 = params.t0;
    r.r1 = params.t0 * params.t1 / (params.t0 - params.t1);
    return r;
}

MetricParams convert_sasaki_to_t(const SasakiParams& params) {
    validate(params);
    MetricParams t;
    t.t0 = make_rational(1, 2) / (params.alpha * params.delta);
    t.t1 = make_rational(1) / (params.delta * params.delta);
    return t;
}

SasakiParams convert_t_to_sasaki(const MetricParams& params) {
    validate(params);
    Rational delta;
    if (!rational_sqrt(make_rational(1) / params.t1, delta)) {
        throw std::domain_error("awspec::convert_t_to_sasaki: 1/t1 = " +
                                to_string(make_rational(1) / params.t1) +
                                " is not the square of a rational; delta = 1/sqrt(t1) is "
                                "irrational (no exact representation)");
    }
    SasakiParams sasaki;
    sasaki.delta = delta;  // positive representative
    sasaki.alpha = make_rational(1, 2) / (params.t0 * delta);
    return sasaki;
}

CurvatureRegime curvature_regime(const MetricParams& params) {
    validate(params);
    if (params.t1 < params.t0) return CurvatureRegime::positive_normal;
    if (params.t1 == params.t0) return CurvatureRegime::parallel;
    return CurvatureRegime::naturally_reductive_only;
}

Rational basic_lower_bound(SymmetricBaseFamily family, long long n, const Rational& alpha,
                           const Rational& delta) {
    check_n(n, "awspec::basic_lower_bound");
    const Rational product = alpha * delta;
    if (sgn(product) <= 0) {
        throw std::domain_error("awspec::basic_lower_bound: need alpha*delta > 0, got alpha = " +
                                to_string(alpha) + ", delta = " + to_string(delta));
    }
    long long constant = 0;
    switch (family) {
        case SymmetricBaseFamily::su_so_even: constant = 4 * (n + 2); break;
        case SymmetricBaseFamily::so_odd_sp: constant = 4 * (n + 1); break;
        case SymmetricBaseFamily::e6: constant = 48; break;
        case SymmetricBaseFamily::e7: constant = 72; break;
        case SymmetricBaseFamily::e8: constant = 120; break;
        case SymmetricBaseFamily::f4: constant = 32; break;
        case SymmetricBaseFamily::g2: constant = 12; break;
    }
    return 2 * product * make_rational(constant);
}

Rational f1(const Rational& t1, long long n) {
    check_n(n, "awspec::f1");
    check_t1(t1, "awspec::f1");
    if (t1 >= 1) {
        return 8 * (make_rational(n) + make_rational(1) / t1);
    }
    return make_rational(8 * (n + 1));
}

F2Result f2(const Rational& t1, long long n) {
    check_n(n, "awspec::f2");
    check_t1(t1, "awspec::f2");
    F2Result result;
    result.valid = t1 < make_rational(2 * n + 4, 3);
    if (t1 >= 1 || t1 <= make_rational(1, 2 * n + 3)) {
        result.value = make_rational(4 * n + 3) * (make_rational(2 * n + 4) - 3 * t1) /
                       make_rational(2 * n + 1);
    } else {
        result.value = (make_rational(2 * n * (4 * n + 3)) * t1 * t1 + make_rational(4 * n + 3)) /
                       (t1 * make_rational(2 * n + 1));
    }
    return result;
}

Rational volume_factor(const MetricParams& params) {
    validate(params);
    const Rational& t0 = params.t0;
    const Rational& t1 = params.t1;
    return t0 * t0 * t0 * t0 * t1 * t1 * t1;
}

double volume_normalized_eigenvalue(const MetricParams& params) {
    const Rational eta1 = first_eigenvalue(params).value;
    return to_double(eta1) * std::pow(to_double(volume_factor(params)), 1.0 / 7.0);
}

MetricParams constant_volume_params(const Rational& s) {
    if (sgn(s) <= 0) {
        throw std::domain_error("awspec::constant_volume_params: need s > 0, got " + to_string(s));
    }
    MetricParams params;
    params.t0 = make_rational(1) / (s * s * s);
    params.t1 = s * s * s * s;
    return params;
}

}  // namespace awspec
