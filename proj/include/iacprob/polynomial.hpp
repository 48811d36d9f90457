#pragma once

#include "iacprob/rational.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace iacprob {

// Multivariate polynomial with Rational coefficients, stored sparsely as
// exponent vector -> coefficient. Zero coefficients are never stored.
class SparsePolynomial {
  public:
    using Exponents = std::vector<unsigned>;
    using TermMap = std::map<Exponents, Rational>;

    explicit SparsePolynomial(int vars = 0) : vars_(vars) {}

    static SparsePolynomial constant(int vars, const Rational& c);
    static SparsePolynomial variable(int vars, int index);
    static SparsePolynomial monomial(int vars, Exponents exps, const Rational& c);
    // C(N_index + k - 1, k - 1) expanded as a polynomial in variable `index`.
    static SparsePolynomial binomial_weight(int vars, int index, int k);

    int vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // Max total degree; -1 for the zero polynomial.
    int degree() const;

    SparsePolynomial& operator+=(const SparsePolynomial& other);
    SparsePolynomial& operator-=(const SparsePolynomial& other);
    SparsePolynomial operator+(const SparsePolynomial& other) const;
    SparsePolynomial operator-(const SparsePolynomial& other) const;
    SparsePolynomial operator*(const SparsePolynomial& other) const;
    SparsePolynomial operator*(const Rational& scalar) const;
    SparsePolynomial pow(unsigned e) const;

    bool operator==(const SparsePolynomial& other) const {
        return vars_ == other.vars_ && terms_ == other.terms_;
    }

    Rational eval(std::span<const Rational> point) const;

    // Sum of the terms of maximal total degree. Throws on the zero polynomial.
    SparsePolynomial leading_part() const;

    std::string to_string(const std::vector<std::string>& names) const;

  private:
    void add_term(const Exponents& e, const Rational& c);

    int vars_;
    TermMap terms_;
};

}  // namespace iacprob
