#pragma once

#include "qwz/ext.hpp"

#include <map>
#include <vector>

namespace qwz {

// Internal factored form of a q-hypergeometric building block:
//     coeff * q^shift * prod (1 - sign*q^e)^mult * 0^zero_order
// with e >= 1 and coeff != 0.  Literal zero factors (1 - q^0) are counted in
// zero_order instead of being multiplied in, and factors with e <= 0 are
// normalized to positive exponents on insertion.  Because every binomial
// (1 +- q^e) is an exact product of cyclotomics, this form expands to a
// canonical rational function without any polynomial gcd.
class QProduct {
  public:
    struct Factor {
        long e;   // exponent, >= 1
        int sign; // factor is (1 - sign * q^e)
        friend auto operator<=>(const Factor&, const Factor&) = default;
    };

    QProduct() = default; // the constant 1
    static QProduct from_rational(const Rational& c); // c = 0 -> exact zero
    static QProduct monomial(long e);                 // q^e, any sign of e
    static QProduct sign_pow(long e);                 // (-1)^e
    // (1 - sign*q^e), any integer e
    static QProduct binomial(int sign, long e);
    // q-integer [m] = (1 - q^m)/(1 - q) for any integer m ([0] = 0)
    static QProduct qbracket_term(long m);
    // (arg_sign * q^arg_e ; q^base)_len with the negative-length extension
    static QProduct qpochhammer(int arg_sign, long arg_e, long base, long len);
    // classical rising factorial (x)_len with the negative-length extension
    static QProduct pochhammer_classical(const Rational& x, long len);

    int zero_order() const { return zero_order_; }
    const Rational& coeff() const { return coeff_; }
    long shift() const { return shift_; }
    const std::map<Factor, int>& factors() const { return factors_; }

    QProduct& operator*=(const QProduct& o);
    QProduct& operator*=(const Rational& c);
    friend QProduct operator*(QProduct a, const QProduct& b) { return a *= b; }
    friend QProduct operator*(QProduct a, const Rational& c) { return a *= c; }
    QProduct reciprocal() const;
    friend QProduct operator/(const QProduct& a, const QProduct& b) {
        return a * b.reciprocal();
    }
    QProduct operator-() const;
    QProduct pow(long e) const;

    // Exact evaluation at rational q0 (zero factors of the evaluated
    // binomials fold into the zero order, e.g. at q0 = 1).
    Ext<Rational> eval(const Rational& q0) const;

    // Canonical expansion via the cyclotomic factorization of each binomial.
    ExtTerm expand() const;

    void insert_factor(int sign, long e, int mult);

  private:
    int zero_order_ = 0;
    Rational coeff_ = Rational(1);
    long shift_ = 0;
    std::map<Factor, int> factors_;
};

// Formal sum of factored products; the shared symbolic representation of
// every summand and WZ-pair entry.  Sums stay factored until a caller asks
// for a numeric value, a canonical expansion, or a zero test.
class TermValue {
  public:
    TermValue() = default; // exact zero (empty sum)
    TermValue(QProduct p); // implicit on purpose: products are term values

    const std::vector<QProduct>& parts() const { return parts_; }

    TermValue& operator+=(const TermValue& o);
    TermValue& operator-=(const TermValue& o);
    TermValue operator-() const;
    friend TermValue operator+(TermValue a, const TermValue& b) {
        return a += b;
    }
    friend TermValue operator-(TermValue a, const TermValue& b) {
        return a -= b;
    }
    // Distributes over the formal sum.
    friend TermValue operator*(const TermValue& a, const TermValue& b);
    friend TermValue operator/(const TermValue& a, const QProduct& b);

    // Exact numeric value at q0; pole parts (zero_order < 0 after
    // evaluation) raise pole_error unless the whole sum is a single part.
    Ext<Rational> eval(const Rational& q0) const;

    // Canonical expansion (single reduction at the end, no term-wise
    // rounding or modular shortcuts).
    ExtTerm expand() const;

    // Exact zero test without producing the canonical form: puts the sum
    // over the factor-multiset common denominator and tests the numerator.
    bool is_exact_zero() const;

    // lim_{q->1} computed on the factored form: the denominator's (q-1)
    // multiplicity is read off the factor multiset, the numerator's by
    // synthetic division.  Raises pole_at_one on a genuine pole.
    Rational limit_q1() const;

    // Numerator over the common factor-multiset denominator:
    // value = num / prod (1 - sign*q^e)^mult.  Pole parts raise pole_error;
    // zero parts are dropped.
    struct Fraction {
        LaurentQ num;
        std::map<QProduct::Factor, int> den; // multiplicities >= 1
    };
    Fraction to_fraction() const;

  private:
    std::vector<QProduct> parts_;
};

// Expands coeff * q^shift * prod factors^mult (all mults >= 0) into a
// Laurent polynomial by repeated binomial multiplication.
LaurentQ expand_binomials(const Rational& coeff, long shift,
                          const std::map<QProduct::Factor, int>& factors);

// Canonicalizes num / prod(den) by exact trial division of the numerator by
// the cyclotomic factors of den (den multiplicities >= 1).
RatFuncQ reduce_over_factor_den(const LaurentQ& num,
                                const std::map<QProduct::Factor, int>& den);

} // namespace qwz
