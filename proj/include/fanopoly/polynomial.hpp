// Sparse exact-rational polynomials in a handful of variables.

#pragma once

#include <map>
#include <vector>

#include "fanopoly/linalg.hpp"

namespace fanopoly {

class Polynomial {
  public:
    using Exp = std::vector<unsigned>;

    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial constant(int nvars, const Rational& c);
    // The linear form sum_k coeffs[k] * y_k.
    static Polynomial linear(const Vec& coeffs);
    // The coordinate monomial y_k.
    static Polynomial coordinate(int nvars, int k);

    int nvars() const { return nvars_; }
    const std::map<Exp, Rational>& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Rational& s) const;
    Polynomial pow(unsigned e) const;

    Rational eval(const Vec& y) const;
    double eval_double(const std::vector<double>& y) const;

    unsigned total_degree() const;
    bool homogeneous() const;

    void add_term(const Exp& e, const Rational& c);

  private:
    int nvars_;
    std::map<Exp, Rational> terms_;  // lex order on exponents; no zero coeffs
};

}  // namespace fanopoly
