#pragma once

#include "qwz/errors.hpp"
#include "qwz/ratfunc.hpp"

namespace qwz {

// A value together with the multiplicity of literal zero factors collected
// while building it.  The represented quantity is
//     0        when zero_order > 0,
//     value    when zero_order = 0,
//     a pole   when zero_order < 0 (value holds the nonzero residual part).
// Multiplication adds zero orders; addition is defined only when every
// addend has zero_order >= 0 (a pole addend raises pole_error).
template <class T> struct Ext {
    int zero_order = 0;
    T value = T(Rational(1));

    static Ext zero() { return {1, T(Rational(1))}; }
    static Ext one() { return {0, T(Rational(1))}; }

    bool is_zero() const {
        return zero_order > 0 || (zero_order == 0 && value == T());
    }
    bool is_pole() const { return zero_order < 0; }

    Ext reciprocal() const {
        if (value == T())
            throw division_by_zero("Ext::reciprocal: zero value part");
        return {-zero_order, T(Rational(1)) / value};
    }

    Ext operator-() const { return {zero_order, -value}; }

    friend Ext operator*(const Ext& a, const Ext& b) {
        return {a.zero_order + b.zero_order, a.value * b.value};
    }
    friend Ext operator/(const Ext& a, const Ext& b) {
        return a * b.reciprocal();
    }
    friend Ext operator+(const Ext& a, const Ext& b) {
        if (a.zero_order < 0 || b.zero_order < 0)
            throw pole_error("Ext: addition with a pole addend");
        if (a.zero_order > 0)
            return b;
        if (b.zero_order > 0)
            return a;
        return {0, a.value + b.value};
    }
    friend Ext operator-(const Ext& a, const Ext& b) { return a + (-b); }
    friend bool operator==(const Ext& a, const Ext& b) = default;
};

// Extended term over canonical rational functions (the public surface of the
// q-Pochhammer layer) and its analogue over plain rationals.
using ExtTerm = Ext<RatFuncQ>;
using ExtRational = Ext<Rational>;

} // namespace qwz
