#include "fanopoly/rational.hpp"

#include <cctype>
#include <cstdio>

namespace fanopoly {

Rational rat_from_string(const std::string& s) {
    if (s.empty()) throw input_error("empty rational literal");
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/' && c != '-' && c != '+')
            throw input_error("malformed rational literal: '" + s + "'");
    }
    Rational r;
    if (r.set_str(s, 10) != 0) throw input_error("malformed rational literal: '" + s + "'");
    if (r.get_den() == 0) throw input_error("rational with zero denominator: '" + s + "'");
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    return c.get_str();
}

std::string rat_to_approx_string(const Rational& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "~%.9g", r.get_d());
    return buf;
}

Integer factorial(unsigned n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

}  // namespace fanopoly
