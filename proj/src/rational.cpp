#include "iacprob/rational.hpp"

#include "iacprob/errors.hpp"

namespace iacprob {

Integer factorial(unsigned n) {
    Integer r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

Integer binomial(const Integer& n, unsigned k) {
    if (n < 0) throw InputError("binomial: negative upper index");
    if (n < k) return 0;
    Integer r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - (k - i);
        r /= i;  // exact: r is always an integer after this division
    }
    return r;
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw InputError("parse_rational: empty string");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) throw InputError("parse_rational: zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw InputError("parse_rational: malformed rational '" + text + "'");
    }
}

std::string rational_to_string(const Rational& value) {
    Integer den = denominator(value);
    if (den == 1) return numerator(value).str();
    return numerator(value).str() + "/" + den.str();
}

std::string rational_to_decimal(const Rational& value, int digits) {
    if (digits < 0) digits = 0;
    Integer num = numerator(value);
    Integer den = denominator(value);
    bool negative = num < 0;
    if (negative) num = -num;
    Integer scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Integer scaled = num * scale / den;  // truncation toward zero
    Integer whole = scaled / scale;
    Integer frac = scaled % scale;
    std::string out = (negative && scaled != 0) ? "-" : "";
    out += whole.str();
    if (digits > 0) {
        std::string f = frac.str();
        out += "." + std::string(static_cast<size_t>(digits) - f.size(), '0') + f;
    }
    return out;
}

}  // namespace iacprob
