#pragma once

#include "iacprob/rational.hpp"

#include <string>
#include <vector>

namespace iacprob {

// Counting function that is polynomial on each residue class of n modulo a
// fixed period k.  Stored as k explicit coefficient lists; coeffs(r)[j] is the
// coefficient of n^j on the class n ≡ r (mod k).
class QuasiPolynomial {
public:
    QuasiPolynomial() : period_(1), coeffs_(1) {}
    QuasiPolynomial(int period, int degree);

    int period() const { return period_; }
    // Largest power with a nonzero coefficient in any class; -1 if identically zero.
    int degree() const;

    const std::vector<Rational>& coeffs(int residue) const;
    void set_coeff(int residue, int power, const Rational& value);
    Rational coeff(int residue, int power) const;

    Rational eval(const Integer& n) const;
    Rational leading_coefficient(int residue) const;

    // Equal period and identical coefficients class by class (trailing zeros ignored).
    bool operator==(const QuasiPolynomial& other) const;
    bool operator!=(const QuasiPolynomial& other) const { return !(*this == other); }

    // One line per residue class, e.g. "n = 0 (mod 2): 1/384*n^5 + ...".
    std::string to_residue_string() const;
    // Single expression with coefficients polynomial in { 1/k * n }, the
    // fractional part of n/k.
    std::string to_fractional_string() const;

private:
    int period_;
    std::vector<std::vector<Rational>> coeffs_;
};

Rational quasi_eval(const QuasiPolynomial& q, const Integer& n);

}  // namespace iacprob
