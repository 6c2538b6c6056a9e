#include "momilp/rational.hpp"

#include "momilp/errors.hpp"

namespace momilp {

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw InputError("rational with zero denominator");
    }
    Rational r(num);
    r /= Rational(den);
    return r;
}

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(BigInt(text));
        }
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        return make_rational(num, den);
    } catch (const std::runtime_error&) {
        throw InputError("malformed rational literal: '" + text + "'");
    }
}

std::string rational_to_string(const Rational& value) {
    if (denominator(value) == 1) {
        return numerator(value).str();
    }
    return numerator(value).str() + "/" + denominator(value).str();
}

double rational_to_double(const Rational& value) {
    return value.convert_to<double>();
}

BigInt rational_floor(const Rational& value) {
    BigInt q = numerator(value) / denominator(value);
    if (value < 0 && q * denominator(value) != numerator(value)) {
        --q;
    }
    return q;
}

BigInt rational_ceil(const Rational& value) {
    return -rational_floor(-value);
}

bool is_integer(const Rational& value) {
    return denominator(value) == 1;
}

} // namespace momilp
