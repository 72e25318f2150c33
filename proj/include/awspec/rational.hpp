// rational.hpp — exact rational scalar type used throughout the library.
//
// Thin adapter over GMP's mpq_class.  Values are always kept in canonical
// form (lowest terms, positive denominator), arithmetic is exact and of
// arbitrary precision, and conversion to text round-trips losslessly.
// A strict "p/q" grammar is provided for parsing command line input, plus
// fixed-point decimal rendering for callers that opt out of exact output.

#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace awspec {

/// Exact rational number: canonical form (lowest terms, positive denominator)
/// is maintained by all GMP operations.
using Rational = mpq_class;

/// Build a rational from an integer numerator and denominator.
/// Throws std::domain_error if den == 0.
inline Rational make_rational(long long num, long long den = 1) {
    if (den == 0) {
        throw std::domain_error("awspec::make_rational: zero denominator");
    }
    Rational q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return q;
}

/// Parse a rational from the strict grammar
///     [+-]? digits ( '/' digits )?
/// with all digits base 10.  No whitespace, no exponents, no decimals.
/// Throws std::invalid_argument on any malformed input or a zero denominator.
inline Rational parse_rational(const std::string& text) {
    const auto fail = [&text]() {
        throw std::invalid_argument("awspec::parse_rational: malformed rational '" + text +
                                    "' (expected [+-]?digits or [+-]?digits/digits)");
    };
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    std::size_t digits_before = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        ++i;
        ++digits_before;
    }
    if (digits_before == 0) fail();
    if (i < text.size()) {
        if (text[i] != '/') fail();
        ++i;
        std::size_t digits_after = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            ++i;
            ++digits_after;
        }
        if (digits_after == 0 || i != text.size()) fail();
    }
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0) fail();
    if (q.get_den() == 0) {
        throw std::invalid_argument("awspec::parse_rational: zero denominator in '" + text + "'");
    }
    q.canonicalize();
    return q;
}

/// Render exactly: "p" when the denominator is 1, otherwise "p/q".
inline std::string to_string(const Rational& q) {
    return q.get_str();
}

/// Render as a fixed-point decimal with `digits` fractional digits,
/// rounded to nearest (ties away from zero).  digits == 0 yields a plain
/// rounded integer.  Throws std::domain_error if digits < 0.
inline std::string to_decimal_string(const Rational& q, int digits) {
    if (digits < 0) {
        throw std::domain_error("awspec::to_decimal_string: digits must be >= 0");
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10u, static_cast<unsigned long>(digits));
    const bool negative = sgn(q) < 0;
    mpz_class num = abs(q.get_num()) * scale;
    mpz_class den = q.get_den();
    mpz_class quot, rem;
    mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (2 * rem >= den) quot += 1;
    std::string body = quot.get_str();
    if (digits > 0) {
        const std::size_t d = static_cast<std::size_t>(digits);
        if (body.size() <= d) body.insert(0, d + 1 - body.size(), '0');
        body.insert(body.size() - d, ".");
    }
    if (negative && body.find_first_not_of("0.") != std::string::npos) body.insert(0, "-");
    return body;
}

/// Nearest double (GMP rounding).
inline double to_double(const Rational& q) {
    return q.get_d();
}

/// If q is the square of a rational, store that square root (nonnegative)
/// in `root` and return true; otherwise return false.  q must be >= 0.
inline bool rational_sqrt(const Rational& q, Rational& root) {
    if (sgn(q) < 0) {
        throw std::domain_error("awspec::rational_sqrt: negative argument");
    }
    const mpz_class& num = q.get_num();
    const mpz_class& den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) {
        return false;
    }
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    root = Rational(rn, rd);  // already in lowest terms since num/den was
    return true;
}

}  // namespace awspec
