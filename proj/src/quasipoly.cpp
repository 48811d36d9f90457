#include "iacprob/quasipoly.hpp"

#include "iacprob/errors.hpp"

#include <algorithm>
#include <sstream>

namespace iacprob {

namespace {

void trim(std::vector<Rational>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

// Coefficients (index = power of u) of the unique degree-<k polynomial g with
// g(r/k) = values[r] for r = 0..k-1, by Lagrange interpolation.
std::vector<Rational> fit_in_fractional_part(const std::vector<Rational>& values, int k) {
    std::vector<Rational> g(static_cast<size_t>(k), Rational(0));
    for (int r = 0; r < k; ++r) {
        if (values[static_cast<size_t>(r)] == 0) continue;
        std::vector<Rational> basis{Rational(1)};
        Rational denom = 1;
        for (int s = 0; s < k; ++s) {
            if (s == r) continue;
            // multiply basis by (u - s/k)
            std::vector<Rational> next(basis.size() + 1, Rational(0));
            Rational shift = Rational(-s, k);
            for (size_t i = 0; i < basis.size(); ++i) {
                next[i] += basis[i] * shift;
                next[i + 1] += basis[i];
            }
            basis = std::move(next);
            denom *= Rational(r - s, k);
        }
        Rational scale = values[static_cast<size_t>(r)] / denom;
        for (size_t i = 0; i < basis.size(); ++i) g[i] += basis[i] * scale;
    }
    trim(g);
    return g;
}

std::string fractional_part_token(int k, unsigned power) {
    std::ostringstream out;
    out << "{ 1/" << k << " * n }";
    if (power > 1) out << "^" << power;
    return out.str();
}

}  // namespace

QuasiPolynomial::QuasiPolynomial(int period, int degree) : period_(period) {
    if (period < 1) throw InputError("quasi-polynomial period must be >= 1");
    if (degree < 0) throw InputError("quasi-polynomial degree must be >= 0");
    coeffs_.assign(static_cast<size_t>(period),
                   std::vector<Rational>(static_cast<size_t>(degree) + 1, Rational(0)));
}

int QuasiPolynomial::degree() const {
    int d = -1;
    for (const auto& poly : coeffs_)
        for (size_t j = 0; j < poly.size(); ++j)
            if (poly[j] != 0) d = std::max(d, static_cast<int>(j));
    return d;
}

const std::vector<Rational>& QuasiPolynomial::coeffs(int residue) const {
    return coeffs_.at(static_cast<size_t>(residue));
}

void QuasiPolynomial::set_coeff(int residue, int power, const Rational& value) {
    auto& poly = coeffs_.at(static_cast<size_t>(residue));
    if (static_cast<size_t>(power) >= poly.size()) poly.resize(static_cast<size_t>(power) + 1, Rational(0));
    poly[static_cast<size_t>(power)] = value;
}

Rational QuasiPolynomial::coeff(int residue, int power) const {
    const auto& poly = coeffs_.at(static_cast<size_t>(residue));
    if (static_cast<size_t>(power) >= poly.size()) return Rational(0);
    return poly[static_cast<size_t>(power)];
}

Rational QuasiPolynomial::eval(const Integer& n) const {
    if (n < 0) throw InputError("quasi-polynomial evaluated at negative n");
    int r = static_cast<int>(n % period_);
    const auto& poly = coeffs_.at(static_cast<size_t>(r));
    Rational value = 0;
    Rational x(n);
    for (size_t j = poly.size(); j-- > 0;) value = value * x + poly[j];
    return value;
}

Rational QuasiPolynomial::leading_coefficient(int residue) const {
    int d = degree();
    if (d < 0) return Rational(0);
    return coeff(residue, d);
}

bool QuasiPolynomial::operator==(const QuasiPolynomial& other) const {
    if (period_ != other.period_) return false;
    for (int r = 0; r < period_; ++r) {
        auto a = coeffs_[static_cast<size_t>(r)];
        auto b = other.coeffs_[static_cast<size_t>(r)];
        trim(a);
        trim(b);
        if (a != b) return false;
    }
    return true;
}

std::string QuasiPolynomial::to_residue_string() const {
    std::ostringstream out;
    for (int r = 0; r < period_; ++r) {
        if (r > 0) out << "\n";
        out << "n = " << r << " (mod " << period_ << "): ";
        const auto& poly = coeffs_[static_cast<size_t>(r)];
        bool first = true;
        for (size_t j = poly.size(); j-- > 0;) {
            if (poly[j] == 0) continue;
            if (!first) out << " + ";
            first = false;
            out << rational_to_string(poly[j]);
            if (j == 1) out << "*n";
            else if (j > 1) out << "*n^" << j;
        }
        if (first) out << "0";
    }
    return out.str();
}

std::string QuasiPolynomial::to_fractional_string() const {
    int d = degree();
    if (d < 0) return "0";
    std::ostringstream out;
    bool first = true;
    for (int j = d; j >= 0; --j) {
        std::vector<Rational> values;
        values.reserve(static_cast<size_t>(period_));
        for (int r = 0; r < period_; ++r) values.push_back(coeff(r, j));
        std::vector<Rational> g = fit_in_fractional_part(values, period_);
        if (g.empty()) continue;
        if (!first) out << "\n + ";
        first = false;
        bool needs_parens = g.size() > 1;
        if (needs_parens) out << "( ";
        bool first_u = true;
        for (size_t s = g.size(); s-- > 1;) {
            if (g[s] == 0) continue;
            if (!first_u) out << " + ";
            first_u = false;
            out << rational_to_string(g[s]) << " * " << fractional_part_token(period_, static_cast<unsigned>(s));
        }
        if (needs_parens) {
            if (!first_u) out << " + ";
            out << rational_to_string(g.empty() ? Rational(0) : g[0]) << " )";
        } else {
            out << rational_to_string(g[0]);
        }
        if (j == 1) out << " * n";
        else if (j > 1) out << " * n^" << j;
    }
    if (first) return "0";
    return out.str();
}

Rational quasi_eval(const QuasiPolynomial& q, const Integer& n) { return q.eval(n); }

}  // namespace iacprob
