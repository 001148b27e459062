#include "fanopoly/polynomial.hpp"

#include <cmath>

namespace fanopoly {

Polynomial Polynomial::constant(int nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Exp(static_cast<size_t>(nvars), 0), c);
    return p;
}

Polynomial Polynomial::linear(const Vec& coeffs) {
    Polynomial p(static_cast<int>(coeffs.size()));
    for (size_t k = 0; k < coeffs.size(); ++k) {
        Exp e(coeffs.size(), 0);
        e[k] = 1;
        p.add_term(e, coeffs[k]);
    }
    return p;
}

Polynomial Polynomial::coordinate(int nvars, int k) {
    Polynomial p(nvars);
    Exp e(static_cast<size_t>(nvars), 0);
    e[static_cast<size_t>(k)] = 1;
    p.add_term(e, Rational(1));
    return p;
}

void Polynomial::add_term(const Exp& e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars_) throw internal_error("polynomial arity mismatch");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw internal_error("polynomial arity mismatch");
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw internal_error("polynomial arity mismatch");
    Polynomial r(nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exp e(e1);
            for (size_t k = 0; k < e.size(); ++k) e[k] += e2[k];
            r.add_term(e, c1 * c2);
        }
    return r;
}

Polynomial Polynomial::scaled(const Rational& s) const {
    Polynomial r(nvars_);
    if (s == 0) return r;
    for (const auto& [e, c] : terms_) r.add_term(e, c * s);
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = constant(nvars_, Rational(1));
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

Rational Polynomial::eval(const Vec& y) const {
    if (static_cast<int>(y.size()) != nvars_) throw internal_error("polynomial eval arity");
    Rational s(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (size_t k = 0; k < e.size(); ++k)
            for (unsigned i = 0; i < e[k]; ++i) t *= y[k];
        s += t;
    }
    return s;
}

double Polynomial::eval_double(const std::vector<double>& y) const {
    double s = 0;
    for (const auto& [e, c] : terms_) {
        double t = c.get_d();
        for (size_t k = 0; k < e.size(); ++k) t *= std::pow(y[k], static_cast<int>(e[k]));
        s += t;
    }
    return s;
}

unsigned Polynomial::total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
        unsigned t = 0;
        for (unsigned x : e) t += x;
        d = std::max(d, t);
    }
    return d;
}

bool Polynomial::homogeneous() const {
    bool first = true;
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
        unsigned t = 0;
        for (unsigned x : e) t += x;
        if (first) {
            d = t;
            first = false;
        } else if (t != d) {
            return false;
        }
    }
    return true;
}

}  // namespace fanopoly
