#include "qwz/pochhammer.hpp"

namespace qwz {

Monom poch_argument(const PochSpec& spec, const Monom& a_val) {
    if (spec.a_power < -1 || spec.a_power > 1)
        throw std::invalid_argument("poch_argument: a_power must be -1, 0, 1");
    Monom arg;
    arg.sign = spec.sign * (spec.a_power == 0 ? 1 : a_val.sign);
    arg.e = spec.offset + spec.a_power * a_val.e;
    return arg;
}

ExtTerm qpochhammer(const PochSpec& spec, const Monom& a_val, long len) {
    Monom arg = poch_argument(spec, a_val);
    return QProduct::qpochhammer(arg.sign, arg.e, spec.base, len).expand();
}

ExtRational pochhammer(const Rational& x, long len) {
    QProduct p = QProduct::pochhammer_classical(x, len);
    return ExtRational{p.zero_order(), p.coeff()};
}

namespace {

// Exact truncated product with a rigorous tail bound: J is grown until
//   2 * sum_{j>J} |A| R^(b j) / (1 - R^b) < 10^-digits,  R = |q0|,
// which bounds |prod_{j>J}(1 - A q0^(b j)) - 1| whenever the sum is < 1/2.
Rational truncated_infinite_poch(int arg_sign, long arg_e, long base,
                                 const Rational& q0, unsigned digits) {
    if (q0 == 0)
        return Rational(1);
    Rational R = abs(q0);
    if (R >= 1)
        throw divergent_product("qpoch_infinite: |q0| >= 1");
    if (arg_e <= 0)
        throw divergent_product(
            "qpoch_infinite: argument exponent must be positive after "
            "substitution, got " +
            std::to_string(arg_e));
    Rational Rb = rational_pow(R, base);
    Rational one_minus_Rb = Rational(1) - Rb;
    // tail(J) = R^(arg_e + b(J+1)) / (1 - R^b)
    long J = 0;
    Rational tail = rational_pow(R, arg_e + base) / one_minus_Rb;
    while (!abs_less_than_pow10(2 * tail / one_minus_Rb,
                                static_cast<int>(digits))) {
        ++J;
        tail *= Rb;
    }
    Rational prod(1);
    Rational qb = rational_pow(q0, base);
    Rational term = rational_pow(q0, arg_e);
    for (long j = 0; j <= J; ++j) {
        prod *= Rational(1) - Rational(arg_sign) * term;
        term *= qb;
    }
    return prod;
}

} // namespace

Real qpoch_infinite(const PochSpec& spec, const Monom& a_val,
                    const Rational& q0, unsigned precision_digits) {
    Monom arg = poch_argument(spec, a_val);
    return Real(
        truncated_infinite_poch(arg.sign, arg.e, spec.base, q0,
                                precision_digits + 10));
}

Real eval_infinite_product(const InfiniteProductSpec& spec, const Monom& a_val,
                           const Rational& q0, unsigned precision_digits) {
    Rational num(1), den(1);
    for (const auto& f : spec.numerator) {
        Monom arg = poch_argument(f, a_val);
        num *= truncated_infinite_poch(arg.sign, arg.e, f.base, q0,
                                       precision_digits + 10);
    }
    for (const auto& f : spec.denominator) {
        Monom arg = poch_argument(f, a_val);
        den *= truncated_infinite_poch(arg.sign, arg.e, f.base, q0,
                                       precision_digits + 10);
    }
    if (den == 0)
        throw division_by_zero("eval_infinite_product: zero denominator");
    return Real(num) / Real(den);
}

} // namespace qwz
