#include "qwz/numbers.hpp"

#include "qwz/errors.hpp"

#include <mpfr.h>

namespace qwz {

unsigned set_real_precision(unsigned digits10) {
    unsigned prev = Real::default_precision();
    Real::default_precision(digits10);
    return prev;
}

Real real_pi() {
    Real p;
    mpfr_const_pi(p.backend().data(), MPFR_RNDN);
    return p;
}

Rational rational_pow(const Rational& x, long e) {
    if (e == 0)
        return Rational(1);
    if (x == 0) {
        if (e < 0)
            throw division_by_zero("rational_pow: 0 raised to negative power");
        return Rational(0);
    }
    Rational base = e > 0 ? x : Rational(1) / x;
    unsigned long n = e > 0 ? static_cast<unsigned long>(e)
                            : static_cast<unsigned long>(-e);
    Rational acc(1);
    while (n) {
        if (n & 1)
            acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

BigInt bigint_pow(const BigInt& x, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.backend().data(), x.backend().data(), e);
    return r;
}

Rational parse_rational(const std::string& text) {
    if (text.empty())
        throw std::invalid_argument("parse_rational: empty string");
    std::string::size_type slash = text.find('/');
    auto check_int = [](const std::string& s) {
        if (s.empty())
            return false;
        std::string::size_type i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size())
            return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!check_int(text))
            throw std::invalid_argument("parse_rational: malformed integer '" +
                                        text + "'");
        return Rational(BigInt(text));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!check_int(num) || !check_int(den))
        throw std::invalid_argument("parse_rational: malformed rational '" +
                                    text + "'");
    BigInt d(den);
    if (d == 0)
        throw std::invalid_argument("parse_rational: zero denominator in '" +
                                    text + "'");
    return Rational(BigInt(num)) / Rational(d);
}

std::string to_string(const Rational& x) {
    if (denominator(x) == 1)
        return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

bool abs_less_than_pow10(const Rational& x, int digits) {
    // |num/den| < 10^-digits  <=>  |num| * 10^digits < den  (digits >= 0)
    BigInt n = abs(numerator(x));
    BigInt d = denominator(x);
    if (digits >= 0)
        return n * bigint_pow(BigInt(10), static_cast<unsigned long>(digits)) <
               d;
    return n < d * bigint_pow(BigInt(10), static_cast<unsigned long>(-digits));
}

} // namespace qwz
