#include "iacprob/polynomial.hpp"

#include "iacprob/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace iacprob {

namespace {
unsigned total_degree(const SparsePolynomial::Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0u);
}
}  // namespace

SparsePolynomial SparsePolynomial::constant(int vars, const Rational& c) {
    SparsePolynomial p(vars);
    p.add_term(Exponents(static_cast<size_t>(vars), 0u), c);
    return p;
}

SparsePolynomial SparsePolynomial::variable(int vars, int index) {
    Exponents e(static_cast<size_t>(vars), 0u);
    e.at(static_cast<size_t>(index)) = 1;
    return monomial(vars, std::move(e), Rational(1));
}

SparsePolynomial SparsePolynomial::monomial(int vars, Exponents exps, const Rational& c) {
    if (static_cast<int>(exps.size()) != vars)
        throw InputError("monomial: exponent vector length mismatch");
    SparsePolynomial p(vars);
    p.add_term(exps, c);
    return p;
}

SparsePolynomial SparsePolynomial::binomial_weight(int vars, int index, int k) {
    // C(N + k - 1, k - 1) = (N + 1)(N + 2)...(N + k - 1) / (k - 1)!
    SparsePolynomial p = constant(vars, Rational(1));
    for (int j = 1; j <= k - 1; ++j)
        p = p * (variable(vars, index) + constant(vars, Rational(j)));
    return p * Rational(Integer(1), factorial(static_cast<unsigned>(k - 1)));
}

int SparsePolynomial::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(total_degree(e)));
    return d;
}

void SparsePolynomial::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& other) {
    if (vars_ != other.vars_) throw InputError("polynomial arity mismatch");
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& other) {
    if (vars_ != other.vars_) throw InputError("polynomial arity mismatch");
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& other) const {
    SparsePolynomial r = *this;
    r += other;
    return r;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& other) const {
    SparsePolynomial r = *this;
    r -= other;
    return r;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& other) const {
    if (vars_ != other.vars_) throw InputError("polynomial arity mismatch");
    SparsePolynomial r(vars_);
    Exponents e(static_cast<size_t>(vars_));
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : other.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

SparsePolynomial SparsePolynomial::operator*(const Rational& scalar) const {
    SparsePolynomial r(vars_);
    if (scalar == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * scalar);
    return r;
}

SparsePolynomial SparsePolynomial::pow(unsigned e) const {
    SparsePolynomial r = constant(vars_, Rational(1));
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

Rational SparsePolynomial::eval(std::span<const Rational> point) const {
    if (static_cast<int>(point.size()) != vars_)
        throw InputError("polynomial eval: point arity mismatch");
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (size_t i = 0; i < e.size(); ++i)
            for (unsigned j = 0; j < e[i]; ++j) t *= point[i];
        sum += t;
    }
    return sum;
}

SparsePolynomial SparsePolynomial::leading_part() const {
    if (is_zero()) throw InputError("leading_part of the zero polynomial");
    unsigned top = static_cast<unsigned>(degree());
    SparsePolynomial r(vars_);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) == top) r.terms_.emplace(e, c);
    return r;
}

std::string SparsePolynomial::to_string(const std::vector<std::string>& names) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    // highest degree first, then map order
    std::vector<const TermMap::value_type*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) {
        return total_degree(a->first) > total_degree(b->first);
    });
    for (const auto* t : order) {
        const auto& [e, c] = *t;
        if (!first) out << (c > 0 ? " + " : " - ");
        else if (c < 0) out << "-";
        first = false;
        Rational a = abs(c);
        bool has_var = total_degree(e) > 0;
        if (a != 1 || !has_var) out << rational_to_string(a) << (has_var ? "*" : "");
        bool first_var = true;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!first_var) out << "*";
            first_var = false;
            out << names.at(i);
            if (e[i] > 1) out << "^" << e[i];
        }
    }
    return out.str();
}

}  // namespace iacprob
