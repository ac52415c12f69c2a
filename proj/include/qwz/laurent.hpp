#pragma once

#include "qwz/qpoly.hpp"

namespace qwz {

// Laurent polynomial q^shift * body.  Invariant: body has a nonzero
// constant term; the zero value is stored as shift = 0, body = 0.
class LaurentQ {
  public:
    LaurentQ() = default;
    explicit LaurentQ(QPoly body);        // shift extracted from body
    LaurentQ(long shift, QPoly body);     // normalized on construction
    explicit LaurentQ(Rational constant);

    static LaurentQ monomial(const Rational& c, long e);

    bool is_zero() const { return body_.is_zero(); }
    long shift() const { return shift_; }
    const QPoly& body() const { return body_; }
    // Degree of q^shift * body as a Laurent polynomial (top exponent).
    long top_exponent() const { return shift_ + body_.degree(); }

    LaurentQ& operator+=(const LaurentQ& o);
    LaurentQ& operator-=(const LaurentQ& o);
    LaurentQ& operator*=(const LaurentQ& o);
    LaurentQ& operator*=(const Rational& c);
    LaurentQ operator-() const;

    friend LaurentQ operator+(LaurentQ a, const LaurentQ& b) { return a += b; }
    friend LaurentQ operator-(LaurentQ a, const LaurentQ& b) { return a -= b; }
    friend LaurentQ operator*(LaurentQ a, const LaurentQ& b) { return a *= b; }
    friend LaurentQ operator*(LaurentQ a, const Rational& c) { return a *= c; }
    friend bool operator==(const LaurentQ& a, const LaurentQ& b) = default;

    // Exact evaluation; q0 = 0 with negative exponents present raises
    // division_by_zero.
    Rational eval(const Rational& q0) const;
    Real eval_real(const Real& q0) const;

    std::string str() const;

  private:
    void normalize();
    long shift_ = 0;
    QPoly body_;
};

} // namespace qwz
