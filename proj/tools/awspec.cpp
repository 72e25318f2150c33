// awspec — command line front end for the exact Laplace-spectrum library
// of the homogeneous 7-manifold SU(3)/S^1.
//
// Subcommands:
//   table     contributing triples (z1,z2,z3) with their eigenvalue split
//   spectrum  exact spectrum at metric parameters (t0, t1)
//   first     smallest nonzero eigenvalue for any parameterization
//   curves    eigenvalue branches swept over t1 (or a constant-volume arc)
//   check     self-verification suites (exit 0 iff all pass)
//   convert   exact conversions between the three parameterizations
//
// Output formats: csv (default), json, pretty.  Rationals print exactly as
// "p" or "p/q"; --decimals D switches csv/pretty output to fixed-point
// decimals (json always stays exact).  Exit codes: 0 success, 1 domain or
// verification failure, 2 usage error.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "awspec/aloff_wallach.hpp"
#include "awspec/branching.hpp"
#include "awspec/casimir.hpp"
#include "awspec/estimates.hpp"
#include "awspec/rational.hpp"
#include "awspec/sp2_sphere.hpp"
#include "awspec/spectrum.hpp"

namespace {

using awspec::Rational;
using nlohmann::json;

constexpr const char* kSchemaTag = "awspec/1";

/// Command line misuse distinct from mathematical domain errors: exits 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { csv, json, pretty };

struct RenderOptions {
    Format format = Format::csv;
    int decimals = -1;  // -1: exact "p/q"; >= 0: fixed-point decimals
};

Format parse_format(const std::string& name) {
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    if (name == "pretty") return Format::pretty;
    throw UsageError("unknown format '" + name + "' (expected csv, json, or pretty)");
}

Rational parse_cli_rational(const std::string& text, const char* flag) {
    try {
        return awspec::parse_rational(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

std::string render(const Rational& q, const RenderOptions& render_options) {
    if (render_options.decimals >= 0) {
        return awspec::to_decimal_string(q, render_options.decimals);
    }
    return awspec::to_string(q);
}

json rational_json(const Rational& q) {
    return json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

std::string triple_token(const awspec::SphericalTriple& triple) {
    return std::to_string(triple.z1) + ":" + std::to_string(triple.z2) + ":" +
           std::to_string(triple.z3);
}

std::string triples_field(const std::vector<awspec::SphericalTriple>& triples) {
    std::string field;
    for (const auto& triple : triples) {
        if (!field.empty()) field += ' ';
        field += triple_token(triple);
    }
    return field;
}

json triples_json(const std::vector<awspec::SphericalTriple>& triples) {
    json array = json::array();
    for (const auto& triple : triples) {
        array.push_back(json::array({triple.z1, triple.z2, triple.z3}));
    }
    return array;
}

std::string regime_name(awspec::CurvatureRegime regime) {
    switch (regime) {
        case awspec::CurvatureRegime::positive_normal: return "positive_normal";
        case awspec::CurvatureRegime::parallel: return "parallel";
        case awspec::CurvatureRegime::naturally_reductive_only: return "naturally_reductive_only";
    }
    return "";
}

/// Print a simple aligned table for the pretty format.
void print_pretty_table(const std::vector<std::string>& header,
                        const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    const auto print_row = [&width](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) std::cout << "  ";
            std::cout << row[i] << std::string(width[i] - row[i].size(), ' ');
        }
        std::cout << '\n';
    };
    print_row(header);
    std::size_t total = 0;
    for (std::size_t i = 0; i < width.size(); ++i) total += width[i] + (i > 0 ? 2 : 0);
    std::cout << std::string(total, '-') << '\n';
    for (const auto& row : rows) print_row(row);
}

void print_csv(const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    const auto print_row = [](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) std::cout << ',';
            std::cout << row[i];
        }
        std::cout << '\n';
    };
    print_row(header);
    for (const auto& row : rows) print_row(row);
}

// ---------------------------------------------------------------------------
// table
// ---------------------------------------------------------------------------

/// Contributing triples in lexicographic (z1, z2, z3) order: all with
/// z1 <= z_max (limit < 0), or the first `limit` of them (z_max < 0).
std::vector<awspec::SphericalTriple> table_rows(long long z_max, long long limit) {
    std::vector<awspec::SphericalTriple> rows;
    for (long long z1 = 0; (z_max >= 0 ? z1 <= z_max : true); ++z1) {
        for (long long z2 = 0; z2 <= z1; ++z2) {
            if ((z1 + z2) % 3 != 0) continue;
            const Rational c = awspec::su3_casimir(z1, z2);
            for (long long z3 = 0; awspec::so3_casimir(z3) <= c; ++z3) {
                if (awspec::multiplicity_m(z1, z2, z3) == 0) continue;
                rows.push_back(awspec::make_spherical_triple(z1, z2, z3));
                if (limit >= 0 && static_cast<long long>(rows.size()) == limit) return rows;
            }
        }
    }
    return rows;
}

void run_table(long long z_max, long long limit, const RenderOptions& render_options) {
    const std::vector<awspec::SphericalTriple> rows = table_rows(z_max, limit);
    if (render_options.format == Format::json) {
        json doc{{"schema", kSchemaTag}, {"command", "table"}};
        json array = json::array();
        for (const auto& row : rows) {
            const awspec::EigenPair pair = awspec::eigen_pair(row.z1, row.z2, row.z3);
            array.push_back(json{{"z1", row.z1},
                                 {"z2", row.z2},
                                 {"z3", row.z3},
                                 {"h", rational_json(pair.h)},
                                 {"v", rational_json(pair.v)},
                                 {"mult", row.total_mult}});
        }
        doc["rows"] = array;
        std::cout << doc.dump(2) << '\n';
        return;
    }
    const std::vector<std::string> header{"z1", "z2", "z3", "h", "v", "mult"};
    std::vector<std::vector<std::string>> cells;
    cells.reserve(rows.size());
    for (const auto& row : rows) {
        const awspec::EigenPair pair = awspec::eigen_pair(row.z1, row.z2, row.z3);
        cells.push_back({std::to_string(row.z1), std::to_string(row.z2), std::to_string(row.z3),
                         render(pair.h, render_options), render(pair.v, render_options),
                         std::to_string(row.total_mult)});
    }
    if (render_options.format == Format::csv) {
        print_csv(header, cells);
    } else {
        print_pretty_table(header, cells);
    }
}

// ---------------------------------------------------------------------------
// spectrum
// ---------------------------------------------------------------------------

void run_spectrum(const awspec::MetricParams& params, const awspec::SpectrumRequest& request,
                  const RenderOptions& render_options) {
    const awspec::Spectrum spectrum = awspec::build_spectrum(params, request);
    if (render_options.format == Format::json) {
        json doc{{"schema", kSchemaTag},
                 {"command", "spectrum"},
                 {"params", json{{"t0", rational_json(params.t0)}, {"t1", rational_json(params.t1)}}},
                 {"bound", rational_json(spectrum.bound)}};
        json array = json::array();
        for (const auto& entry : spectrum.entries) {
            array.push_back(json{{"eigenvalue", rational_json(entry.eigenvalue)},
                                 {"mult", entry.multiplicity},
                                 {"triples", triples_json(entry.triples)}});
        }
        doc["entries"] = array;
        std::cout << doc.dump(2) << '\n';
        return;
    }
    const std::vector<std::string> header{"eigenvalue", "mult", "triples"};
    std::vector<std::vector<std::string>> cells;
    for (const auto& entry : spectrum.entries) {
        cells.push_back({render(entry.eigenvalue, render_options),
                         std::to_string(entry.multiplicity), triples_field(entry.triples)});
    }
    if (render_options.format == Format::csv) {
        print_csv(header, cells);
    } else {
        print_pretty_table(header, cells);
    }
}

// ---------------------------------------------------------------------------
// first
// ---------------------------------------------------------------------------

void run_first(const awspec::MetricParams& params, const RenderOptions& render_options) {
    const awspec::FirstEigenvalue first = awspec::first_eigenvalue(params);
    const std::string regime = regime_name(awspec::curvature_regime(params));
    if (render_options.format == Format::json) {
        json doc{{"schema", kSchemaTag},
                 {"command", "first"},
                 {"params", json{{"t0", rational_json(params.t0)}, {"t1", rational_json(params.t1)}}},
                 {"eta1", rational_json(first.value)},
                 {"triples", triples_json(first.triples)},
                 {"regime", regime}};
        std::cout << doc.dump(2) << '\n';
        return;
    }
    if (render_options.format == Format::csv) {
        print_csv({"eta1", "triples", "regime"},
                  {{render(first.value, render_options), triples_field(first.triples), regime}});
        return;
    }
    std::cout << "eta1 = " << render(first.value, render_options) << '\n';
    std::cout << "realized by:";
    for (const auto& triple : first.triples) {
        std::cout << " (" << triple.z1 << "," << triple.z2 << "," << triple.z3 << ")";
    }
    std::cout << '\n' << "regime: " << regime << '\n';
}

// ---------------------------------------------------------------------------
// curves
// ---------------------------------------------------------------------------

enum class CurveMode { raw, constant_volume, estimates };

CurveMode parse_curve_mode(const std::string& name) {
    if (name == "raw") return CurveMode::raw;
    if (name == "constant_volume") return CurveMode::constant_volume;
    if (name == "estimates") return CurveMode::estimates;
    throw UsageError("unknown curves mode '" + name +
                     "' (expected raw, constant_volume, or estimates)");
}

void run_curves(const std::optional<Rational>& t0, const std::string& range_text,
                long long samples, CurveMode mode, const RenderOptions& render_options) {
    const auto colon = range_text.find(':');
    if (colon == std::string::npos) {
        throw UsageError("--t1-range expects 'lo:hi' with rational endpoints, got '" + range_text +
                         "'");
    }
    const Rational lo = parse_cli_rational(range_text.substr(0, colon), "--t1-range");
    const Rational hi = parse_cli_rational(range_text.substr(colon + 1), "--t1-range");
    if (lo > hi) {
        throw UsageError("--t1-range is empty: lo = " + awspec::to_string(lo) + " > hi = " +
                         awspec::to_string(hi));
    }
    if (samples < 1) {
        throw UsageError("--samples must be >= 1, got " + std::to_string(samples));
    }
    if (mode != CurveMode::constant_volume && !t0.has_value()) {
        throw UsageError("curves: --t0 is required for modes raw and estimates");
    }

    // Branches: the first 18 contributing triples in lexicographic order
    // (complete through z1 == 6).
    const std::vector<awspec::SphericalTriple> branches = table_rows(-1, 18);

    std::vector<std::string> header;
    if (mode == CurveMode::constant_volume) {
        header = {"s", "t1", "t0"};
    } else {
        header = {"t1"};
    }
    for (const auto& branch : branches) {
        header.push_back("e_" + std::to_string(branch.z1) + "_" + std::to_string(branch.z2) + "_" +
                         std::to_string(branch.z3));
    }
    if (mode == CurveMode::estimates) {
        header.push_back("eta1");
        header.push_back("f1");
        header.push_back("f2");
    }

    std::vector<std::vector<std::string>> cells;
    json json_rows = json::array();
    for (long long k = 0; k < samples; ++k) {
        // Exact affine sample points across [lo, hi].
        const Rational x =
            samples == 1 ? lo
                         : lo + (hi - lo) * awspec::make_rational(k, samples - 1);
        awspec::MetricParams params;
        std::vector<std::string> row;
        json json_row = json::array();
        if (mode == CurveMode::constant_volume) {
            if (sgn(x) <= 0) {
                throw std::domain_error("curves: constant-volume parameter s must be positive, "
                                        "got " + awspec::to_string(x));
            }
            params = awspec::constant_volume_params(x);
            row.push_back(render(x, render_options));
            row.push_back(render(params.t1, render_options));
            row.push_back(render(params.t0, render_options));
            json_row.push_back(rational_json(x));
            json_row.push_back(rational_json(params.t1));
            json_row.push_back(rational_json(params.t0));
        } else {
            if (sgn(x) <= 0) {
                throw std::domain_error("curves: t1 sample " + awspec::to_string(x) +
                                        " is not positive; choose a positive --t1-range");
            }
            params.t0 = *t0;
            params.t1 = x;
            awspec::validate(params);
            row.push_back(render(x, render_options));
            json_row.push_back(rational_json(x));
        }
        for (const auto& branch : branches) {
            const Rational value =
                awspec::eigenvalue_at(branch.z1, branch.z2, branch.z3, params.t0, params.t1);
            row.push_back(render(value, render_options));
            json_row.push_back(rational_json(value));
        }
        if (mode == CurveMode::estimates) {
            const Rational eta1 = awspec::first_eigenvalue(params).value;
            const Rational upper = awspec::f1(params.t1, 1);
            const awspec::F2Result lower = awspec::f2(params.t1, 1);
            row.push_back(render(eta1, render_options));
            row.push_back(render(upper, render_options));
            row.push_back(lower.valid ? render(lower.value, render_options) : "");
            json_row.push_back(rational_json(eta1));
            json_row.push_back(rational_json(upper));
            json_row.push_back(lower.valid ? rational_json(lower.value) : json(nullptr));
        }
        cells.push_back(std::move(row));
        json_rows.push_back(std::move(json_row));
    }

    if (render_options.format == Format::json) {
        json doc{{"schema", kSchemaTag}, {"command", "curves"}, {"columns", header},
                 {"rows", json_rows}};
        std::cout << doc.dump(2) << '\n';
    } else if (render_options.format == Format::csv) {
        print_csv(header, cells);
    } else {
        print_pretty_table(header, cells);
    }
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

struct SuiteResult {
    std::string suite;
    bool pass = true;
    std::string counterexample;  // empty when pass
};

/// Intertwining multiplicities from the alternating-sum formula must match
/// the weight-diagram oracle for every triple with z1 <= depth.
SuiteResult check_oracle(long long depth) {
    SuiteResult result{"oracle", true, ""};
    for (long long z1 = 0; z1 <= depth && result.pass; ++z1) {
        for (long long z2 = 0; z2 <= z1 && result.pass; ++z2) {
            const std::map<long long, long long> content = awspec::so3_content(z1, z2);
            for (long long z3 = 0; z3 <= z1 + 2; ++z3) {
                const auto it = content.find(z3);
                const long long oracle = it == content.end() ? 0 : it->second;
                const long long formula = awspec::multiplicity_m(z1, z2, z3);
                if (oracle != formula) {
                    result.pass = false;
                    result.counterexample = std::to_string(z1) + ":" + std::to_string(z2) + ":" +
                                            std::to_string(z3) + " formula=" +
                                            std::to_string(formula) + " oracle=" +
                                            std::to_string(oracle);
                    break;
                }
            }
        }
    }
    return result;
}

/// Aggregated multiplicities of the lowest su(3) classes at the round
/// point must match the classical reference values.
SuiteResult check_urakawa() {
    SuiteResult result{"urakawa", true, ""};
    const std::vector<std::pair<std::pair<long long, long long>, long long>> expected{
        {{0, 0}, 1},   {{2, 1}, 32},  {{3, 0}, 30},  {{3, 3}, 30},
        {{4, 2}, 243}, {{5, 1}, 280}, {{5, 4}, 280}, {{6, 0}, 140}};
    for (const auto& [pair, value] : expected) {
        const long long got = awspec::aggregate_su3_multiplicity(pair.first, pair.second);
        if (got != value) {
            result.pass = false;
            result.counterexample = std::to_string(pair.first) + ":" + std::to_string(pair.second) +
                                    " got=" + std::to_string(got) + " want=" +
                                    std::to_string(value);
            break;
        }
    }
    return result;
}

/// The sphere presentation: spherical iff n1 == n3, and the closed-form
/// partition function must match its defining lattice count.
SuiteResult check_sp2(long long depth) {
    SuiteResult result{"sp2", true, ""};
    for (long long n1 = 0; n1 <= depth && result.pass; ++n1) {
        for (long long n2 = 0; n2 <= depth && result.pass; ++n2) {
            for (long long n3 = 0; n3 <= depth; ++n3) {
                if (awspec::is_sp1prime_spherical(n1, n2, n3) != (n1 == n3)) {
                    result.pass = false;
                    result.counterexample = std::to_string(n1) + ":" + std::to_string(n2) + ":" +
                                            std::to_string(n3) + " sphericity mismatch";
                    break;
                }
            }
        }
    }
    const long long box = std::max<long long>(4 * depth, 40);
    for (long long a0 = -box; a0 <= box && result.pass; ++a0) {
        for (long long a1 = -box; a1 <= box; ++a1) {
            // Doubled coordinates: a0 = m1 - m2, a1 = m1 + m2 + 2*m3
            // over nonnegative integers (m1, m2, m3).
            long long brute = 0;
            for (long long m1 = 0; m1 <= 2 * box; ++m1) {
                const long long m2 = m1 - a0;
                if (m2 < 0) continue;
                const long long rest = a1 - m1 - m2;
                if (rest < 0) break;  // m1 + m2 only grows from here on
                if (rest % 2 == 0) ++brute;
            }
            if (brute != awspec::sp2_partition(a0, a1)) {
                result.pass = false;
                result.counterexample = std::to_string(a0) + ":" + std::to_string(a1) + " got=" +
                                        std::to_string(awspec::sp2_partition(a0, a1)) + " want=" +
                                        std::to_string(brute);
                break;
            }
        }
    }
    return result;
}

/// The first eigenvalue must sit between the lower bound f2 and the upper
/// bound f1 on a grid of t1 values at t0 = 1/2, and both estimate
/// functions must be continuous across their breakpoints.
SuiteResult check_estimates() {
    SuiteResult result{"estimates", true, ""};
    const awspec::Rational t0 = awspec::make_rational(1, 2);
    for (long long k = 1; k <= 50; ++k) {
        const Rational t1 = awspec::make_rational(k, 10);
        const Rational eta1 = awspec::first_eigenvalue({t0, t1}).value;
        const Rational upper = awspec::f1(t1, 1);
        const awspec::F2Result lower = awspec::f2(t1, 1);
        if (eta1 < upper || (lower.valid && !(eta1 > lower.value))) {
            result.pass = false;
            result.counterexample = "t1=" + awspec::to_string(t1) + " eta1=" +
                                    awspec::to_string(eta1) + " f1=" + awspec::to_string(upper) +
                                    " f2=" + awspec::to_string(lower.value);
            return result;
        }
    }
    // Breakpoint continuity, exact: f2 evaluates its outer branch at both
    // breakpoints, so compare against the inner branch recomputed here;
    // f1 likewise evaluates its t1 >= 1 branch at t1 == 1.
    for (long long n = 1; n <= 3; ++n) {
        const Rational one = awspec::make_rational(1);
        const Rational breakpoint = awspec::make_rational(1, 2 * n + 3);
        const auto inner_branch = [n](const Rational& t1) -> Rational {
            const Rational c = awspec::make_rational(4 * n + 3);
            return (awspec::make_rational(2 * n) * t1 * t1 * c + c) /
                   (t1 * awspec::make_rational(2 * n + 1));
        };
        if (awspec::f2(one, n).value != inner_branch(one) ||
            awspec::f2(breakpoint, n).value != inner_branch(breakpoint) ||
            awspec::f1(one, n) != awspec::make_rational(8 * (n + 1))) {
            result.pass = false;
            result.counterexample = "breakpoint discontinuity at n=" + std::to_string(n);
            return result;
        }
    }
    return result;
}

int run_check(const std::string& suite, long long depth, const RenderOptions& render_options) {
    if (depth < 0) throw UsageError("--depth must be >= 0, got " + std::to_string(depth));
    std::vector<SuiteResult> results;
    const bool all = suite == "all";
    if (all || suite == "oracle") {
        if (depth > awspec::oracle_max_z1()) {
            throw UsageError("check: --depth " + std::to_string(depth) +
                             " exceeds the weight-diagram oracle bound " +
                             std::to_string(awspec::oracle_max_z1()) +
                             " (set AWSPEC_ORACLE_MAX_Z1 to raise it)");
        }
        results.push_back(check_oracle(depth));
    }
    if (all || suite == "urakawa") results.push_back(check_urakawa());
    if (all || suite == "sp2") results.push_back(check_sp2(depth));
    if (all || suite == "estimates") results.push_back(check_estimates());
    if (results.empty()) {
        throw UsageError("unknown check suite '" + suite +
                         "' (expected oracle, urakawa, sp2, estimates, or all)");
    }

    bool pass = true;
    if (render_options.format == Format::json) {
        json doc{{"schema", kSchemaTag}, {"command", "check"}};
        json array = json::array();
        for (const auto& result : results) {
            pass = pass && result.pass;
            array.push_back(json{{"suite", result.suite},
                                 {"status", result.pass ? "pass" : "fail"},
                                 {"counterexample", result.pass ? json(nullptr)
                                                                : json(result.counterexample)}});
        }
        doc["results"] = array;
        std::cout << doc.dump(2) << '\n';
    } else {
        std::vector<std::vector<std::string>> cells;
        for (const auto& result : results) {
            pass = pass && result.pass;
            cells.push_back({result.suite, result.pass ? "pass" : "fail", result.counterexample});
        }
        if (render_options.format == Format::csv) {
            print_csv({"suite", "status", "counterexample"}, cells);
        } else {
            print_pretty_table({"suite", "status", "counterexample"}, cells);
        }
    }
    return pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// convert
// ---------------------------------------------------------------------------

void run_convert(const std::string& from, const std::string& to,
                 const std::vector<std::string>& values, const RenderOptions& render_options) {
    const auto known = [](const std::string& name) {
        return name == "t" || name == "r" || name == "sasaki";
    };
    if (!known(from) || !known(to)) {
        throw UsageError("convert: --from/--to must be one of t, r, sasaki");
    }
    const Rational v0 = parse_cli_rational(values[0], "convert value 1");
    const Rational v1 = parse_cli_rational(values[1], "convert value 2");

    // Normalize the input to (t0, t1), validating its own range first.
    awspec::MetricParams params;
    if (from == "t") {
        params = awspec::MetricParams{v0, v1};
        awspec::validate(params);
    } else if (from == "r") {
        params = awspec::convert_r_to_t(awspec::NormalParams{v0, v1});
    } else {
        params = awspec::convert_sasaki_to_t(awspec::SasakiParams{v0, v1});
    }

    std::vector<std::string> names;
    std::vector<Rational> out;
    bool exact = true;
    double approx0 = 0.0, approx1 = 0.0;
    if (to == "t") {
        names = {"t0", "t1"};
        out = {params.t0, params.t1};
    } else if (to == "r") {
        const awspec::NormalParams r = awspec::convert_t_to_r(params);
        names = {"r0", "r1"};
        out = {r.r0, r.r1};
    } else {
        names = {"alpha", "delta"};
        try {
            const awspec::SasakiParams sasaki = awspec::convert_t_to_sasaki(params);
            out = {sasaki.alpha, sasaki.delta};
        } catch (const std::domain_error&) {
            // delta = 1/sqrt(t1) is irrational here.  With --decimals we can
            // still answer in fixed point; exact modes must refuse.
            if (render_options.decimals < 0 || render_options.format == Format::json) throw;
            exact = false;
            const double delta = 1.0 / std::sqrt(awspec::to_double(params.t1));
            approx1 = delta;
            approx0 = 1.0 / (2.0 * awspec::to_double(params.t0) * delta);
        }
    }

    std::vector<std::string> rendered(2);
    if (exact) {
        rendered[0] = render(out[0], render_options);
        rendered[1] = render(out[1], render_options);
    } else {
        char buffer[64];
        std::snprintf(buffer, sizeof buffer, "%.*f", render_options.decimals, approx0);
        rendered[0] = buffer;
        std::snprintf(buffer, sizeof buffer, "%.*f", render_options.decimals, approx1);
        rendered[1] = buffer;
    }

    if (render_options.format == Format::json) {
        json doc{{"schema", kSchemaTag}, {"command", "convert"}, {"from", from}, {"to", to},
                 {names[0], rational_json(out[0])}, {names[1], rational_json(out[1])}};
        std::cout << doc.dump(2) << '\n';
    } else if (render_options.format == Format::csv) {
        print_csv({names[0], names[1]}, {{rendered[0], rendered[1]}});
    } else {
        std::cout << names[0] << " = " << rendered[0] << '\n'
                  << names[1] << " = " << rendered[1] << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "awspec — exact Laplace spectra of the homogeneous 7-manifold SU(3)/S^1 in its\n"
        "two-parameter family of metrics, with estimates, parameter conversions, and the\n"
        "companion 7-sphere presentation (Sp(2) x Sp(1))/Sp(1)'."};
    app.require_subcommand(1);

    std::string format_name = "csv";
    int decimals = -1;
    app.add_option("--format", format_name, "Output format: csv, json, or pretty")
        ->default_str("csv");
    app.add_option("--decimals", decimals,
                   "Render rationals as fixed-point decimals with this many digits "
                   "(csv/pretty only; json always stays exact)");

    // table ------------------------------------------------------------
    auto* table_cmd = app.add_subcommand(
        "table", "Contributing triples (z1,z2,z3) with eigenvalue split h, v and multiplicity")->fallthrough();
    long long table_zmax = -1, table_first = -1;
    table_cmd->add_option("--zmax", table_zmax, "All rows with z1 <= zmax");
    table_cmd->add_option("--first", table_first, "Exactly the first N rows");

    // spectrum ----------------------------------------------------------
    auto* spectrum_cmd =
        app.add_subcommand("spectrum", "Exact spectrum at metric parameters (t0, t1)")->fallthrough();
    std::string spectrum_t0, spectrum_t1, spectrum_bound;
    long long spectrum_first = -1;
    spectrum_cmd->add_option("--t0", spectrum_t0, "Horizontal scale t0 > 0 (rational)")
        ->required();
    spectrum_cmd->add_option("--t1", spectrum_t1, "Vertical scale t1 > 0 (rational)")->required();
    spectrum_cmd->add_option("--bound", spectrum_bound, "All eigenvalues <= bound (rational)");
    spectrum_cmd->add_option("--first", spectrum_first, "First N distinct eigenvalues");

    // first ---------------------------------------------------------------
    auto* first_cmd = app.add_subcommand(
        "first", "Smallest nonzero eigenvalue; give exactly one parameter pair");
    first_cmd->fallthrough();
    std::string first_t0, first_t1, first_alpha, first_delta, first_r0, first_r1;
    first_cmd->add_option("--t0", first_t0, "t0 (with --t1)");
    first_cmd->add_option("--t1", first_t1, "t1 (with --t0)");
    first_cmd->add_option("--alpha", first_alpha, "alpha (with --delta)");
    first_cmd->add_option("--delta", first_delta, "delta (with --alpha)");
    first_cmd->add_option("--r0", first_r0, "r0 (with --r1)");
    first_cmd->add_option("--r1", first_r1, "r1 (with --r0)");

    // curves --------------------------------------------------------------
    auto* curves_cmd = app.add_subcommand(
        "curves", "Eigenvalue branches (first 18 triples) swept over t1 or a constant-volume arc")->fallthrough();
    std::string curves_t0, curves_range, curves_mode = "raw";
    long long curves_samples = 11;
    curves_cmd->add_option("--t0", curves_t0, "t0 (required for modes raw and estimates)");
    curves_cmd->add_option("--t1-range", curves_range,
                           "Sweep range 'lo:hi' (s-range for constant_volume)")
        ->required();
    curves_cmd->add_option("--samples", curves_samples, "Number of sample points (default 11)");
    curves_cmd->add_option("--mode", curves_mode, "raw, constant_volume, or estimates")
        ->default_str("raw");

    // check -----------------------------------------------------------------
    auto* check_cmd =
        app.add_subcommand("check", "Self-verification suites; exit 0 iff everything passes");
    check_cmd->fallthrough();
    std::string check_suite;
    long long check_depth = 8;
    check_cmd->add_option("--suite", check_suite, "oracle, urakawa, sp2, estimates, or all")
        ->required();
    check_cmd->add_option("--depth", check_depth,
                          "Search depth: max z1 for oracle, max n for sp2 (default 8)");

    // convert ---------------------------------------------------------------
    auto* convert_cmd = app.add_subcommand(
        "convert", "Convert between parameterizations t = (t0,t1), r = (r0,r1), sasaki = "
                   "(alpha,delta)")->fallthrough();
    std::string convert_from, convert_to;
    std::vector<std::string> convert_values;
    convert_cmd->add_option("--from", convert_from, "t, r, or sasaki")->required();
    convert_cmd->add_option("--to", convert_to, "t, r, or sasaki")->required();
    convert_cmd->add_option("values", convert_values, "The two parameter values (rationals)")
        ->expected(2);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        RenderOptions render_options;
        render_options.format = parse_format(format_name);
        render_options.decimals = decimals;
        if (decimals < -1) throw UsageError("--decimals must be >= 0");

        if (table_cmd->parsed()) {
            const bool has_zmax = table_cmd->count("--zmax") > 0;
            const bool has_first = table_cmd->count("--first") > 0;
            if (has_zmax == has_first) {
                throw UsageError("table: give exactly one of --zmax and --first");
            }
            if (has_zmax && table_zmax < 0) throw UsageError("table: --zmax must be >= 0");
            if (has_first && table_first < 1) throw UsageError("table: --first must be >= 1");
            run_table(has_zmax ? table_zmax : -1, has_first ? table_first : -1, render_options);
        } else if (spectrum_cmd->parsed()) {
            const bool has_bound = spectrum_cmd->count("--bound") > 0;
            const bool has_first = spectrum_cmd->count("--first") > 0;
            if (has_bound == has_first) {
                throw UsageError("spectrum: give exactly one of --bound and --first");
            }
            awspec::MetricParams params{parse_cli_rational(spectrum_t0, "--t0"),
                                        parse_cli_rational(spectrum_t1, "--t1")};
            awspec::SpectrumRequest request;
            if (has_bound) {
                request = awspec::SpectrumRequest::up_to(
                    parse_cli_rational(spectrum_bound, "--bound"));
            } else {
                if (spectrum_first < 1) throw UsageError("spectrum: --first must be >= 1");
                request = awspec::SpectrumRequest::first(static_cast<std::size_t>(spectrum_first));
            }
            run_spectrum(params, request, render_options);
        } else if (first_cmd->parsed()) {
            const bool has_t = first_cmd->count("--t0") + first_cmd->count("--t1") > 0;
            const bool has_sasaki =
                first_cmd->count("--alpha") + first_cmd->count("--delta") > 0;
            const bool has_r = first_cmd->count("--r0") + first_cmd->count("--r1") > 0;
            if (static_cast<int>(has_t) + static_cast<int>(has_sasaki) + static_cast<int>(has_r) !=
                1) {
                throw UsageError(
                    "first: give exactly one parameter pair (--t0/--t1, --alpha/--delta, or "
                    "--r0/--r1)");
            }
            awspec::MetricParams params;
            if (has_t) {
                if (first_cmd->count("--t0") == 0 || first_cmd->count("--t1") == 0) {
                    throw UsageError("first: --t0 and --t1 must be given together");
                }
                params = awspec::MetricParams{parse_cli_rational(first_t0, "--t0"),
                                              parse_cli_rational(first_t1, "--t1")};
                awspec::validate(params);
            } else if (has_sasaki) {
                if (first_cmd->count("--alpha") == 0 || first_cmd->count("--delta") == 0) {
                    throw UsageError("first: --alpha and --delta must be given together");
                }
                params = awspec::convert_sasaki_to_t(
                    awspec::SasakiParams{parse_cli_rational(first_alpha, "--alpha"),
                                         parse_cli_rational(first_delta, "--delta")});
            } else {
                if (first_cmd->count("--r0") == 0 || first_cmd->count("--r1") == 0) {
                    throw UsageError("first: --r0 and --r1 must be given together");
                }
                params = awspec::convert_r_to_t(
                    awspec::NormalParams{parse_cli_rational(first_r0, "--r0"),
                                         parse_cli_rational(first_r1, "--r1")});
            }
            run_first(params, render_options);
        } else if (curves_cmd->parsed()) {
            std::optional<Rational> t0;
            if (curves_cmd->count("--t0") > 0) {
                t0 = parse_cli_rational(curves_t0, "--t0");
            }
            run_curves(t0, curves_range, curves_samples, parse_curve_mode(curves_mode),
                       render_options);
        } else if (check_cmd->parsed()) {
            return run_check(check_suite, check_depth, render_options);
        } else if (convert_cmd->parsed()) {
            run_convert(convert_from, convert_to, convert_values, render_options);
        }
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "awspec: usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "awspec: usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "awspec: error: " << e.what() << '\n';
        return 1;
    }
}
