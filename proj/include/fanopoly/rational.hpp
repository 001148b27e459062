// Exact rational scalar type and string round-tripping.
//
// All geometry, integration and verdicts in this library run on GMP
// rationals; doubles appear only in the Monte-Carlo oracle and in
// clearly-marked "~approx" output fields.

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace fanopoly {

using Rational = mpq_class;
using Integer = mpz_class;

// Bad user input (CLI exit 1).
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Broken internal invariant (CLI exit 2).
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw input_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p/q" or "p" (optionally signed). Result is canonical.
Rational rat_from_string(const std::string& s);

// Canonical form: lowest terms, positive denominator, "p" when integral.
std::string rat_to_string(const Rational& r);

// Approximate decimal rendering, prefixed with '~'. Deterministic.
std::string rat_to_approx_string(const Rational& r);

inline double rat_to_double(const Rational& r) { return r.get_d(); }

Integer factorial(unsigned n);

}  // namespace fanopoly
