#pragma once

#include "qwz/numbers.hpp"

#include <vector>

namespace qwz {

// Dense univariate polynomial in q over the rationals.  Invariant: the
// coefficient vector has no trailing zeros (zero polynomial = empty vector).
class QPoly {
  public:
    QPoly() = default;
    explicit QPoly(Rational constant);
    explicit QPoly(std::vector<Rational> coeffs);

    static QPoly one() { return QPoly(Rational(1)); }
    // c * q^e, e >= 0
    static QPoly monomial(const Rational& c, long e);

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const Rational& leading_coeff() const;
    // Coefficient of q^e (zero outside the stored range).
    const Rational& coeff(long e) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    // Multiplicity of q = 0 as a root (0 for nonzero constant term);
    // -1 for the zero polynomial.
    long low_order() const;

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const QPoly& o);
    QPoly& operator*=(const Rational& c);
    QPoly operator-() const;

    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend QPoly operator*(QPoly a, const Rational& c) { return a *= c; }
    friend QPoly operator*(const Rational& c, QPoly a) { return a *= c; }
    friend bool operator==(const QPoly& a, const QPoly& b) = default;

    // In-place mutation of one coefficient (renormalizes trailing zeros).
    void set_coeff(long e, const Rational& c);

    // Multiply by q^e (e >= 0).
    QPoly shifted(long e) const;

    QPoly pow(unsigned long e) const;

    Rational eval(const Rational& q0) const;
    Real eval_real(const Real& q0) const;

    std::string str() const;

  private:
    void normalize();
    std::vector<Rational> coeffs_;
};

// Quotient and remainder over Q[q]; divisor must be nonzero
// (division_by_zero otherwise).
struct DivRem {
    QPoly quot;
    QPoly rem;
};
DivRem divrem(const QPoly& a, const QPoly& b);

// Exact quotient; raises division_by_zero for b = 0 and std::invalid_argument
// when b does not divide a.
QPoly exact_divide(const QPoly& a, const QPoly& b);

// true iff b | a (b nonzero).
bool divides_poly(const QPoly& b, const QPoly& a);

// Monic gcd over Q[q] (gcd(0,0) = 0).  Computed by a small-prime modular
// algorithm whose result is certified by exact trial division, so unlucky
// primes can only cost time, never correctness.
QPoly poly_gcd(const QPoly& a, const QPoly& b);

// Exact quotient a / (q-1)^k together with the multiplicity check; raises
// std::invalid_argument when (q-1)^k does not divide a.
QPoly divide_out_q_minus_1(const QPoly& a, long k);

// Multiplicity of q = 1 as a root of a (0 when a(1) != 0); -1 for a = 0.
long multiplicity_at_one(const QPoly& a);

} // namespace qwz
