#include "qwz/ratfunc.hpp"

#include "qwz/errors.hpp"

#include <sstream>

namespace qwz {

RatFuncQ::RatFuncQ(Rational constant) : num_(LaurentQ(std::move(constant))) {}

RatFuncQ::RatFuncQ(const QPoly& p) : num_(LaurentQ(p)) {}

RatFuncQ::RatFuncQ(const LaurentQ& p) : num_(p) {}

RatFuncQ::RatFuncQ(const LaurentQ& num, const QPoly& den)
    : num_(num), den_(den) {
    reduce();
}

RatFuncQ RatFuncQ::monomial(const Rational& c, long e) {
    RatFuncQ f;
    f.num_ = LaurentQ::monomial(c, e);
    return f;
}

RatFuncQ RatFuncQ::from_canonical(LaurentQ num, QPoly den) {
    RatFuncQ f;
    f.num_ = std::move(num);
    f.den_ = std::move(den);
    return f;
}

void RatFuncQ::reduce() {
    if (den_.is_zero())
        throw division_by_zero("RatFuncQ: zero denominator");
    if (num_.is_zero()) {
        den_ = QPoly::one();
        return;
    }
    // pull the q-power of the denominator into the shift
    long low = den_.low_order();
    if (low > 0) {
        std::vector<Rational> c(den_.coeffs().begin() + low,
                                den_.coeffs().end());
        den_ = QPoly(std::move(c));
        num_ = LaurentQ(num_.shift() - low, num_.body());
    }
    if (den_.degree() > 0) {
        QPoly g = poly_gcd(num_.body(), den_);
        if (g.degree() > 0) {
            QPoly nb = exact_divide(num_.body(), g);
            den_ = exact_divide(den_, g);
            num_ = LaurentQ(num_.shift(), std::move(nb));
        }
    }
    Rational lc = den_.leading_coeff();
    if (lc != 1) {
        den_ *= Rational(1) / lc;
        num_ *= Rational(1) / lc;
    }
}

RatFuncQ& RatFuncQ::operator+=(const RatFuncQ& o) {
    if (o.is_zero())
        return *this;
    if (is_zero()) {
        *this = o;
        return *this;
    }
    if (den_ == o.den_) {
        LaurentQ n = num_ + o.num_;
        *this = RatFuncQ(n, den_);
        return *this;
    }
    QPoly g = poly_gcd(den_, o.den_);
    QPoly da = den_;
    QPoly db_red = exact_divide(o.den_, g);
    LaurentQ n = num_ * LaurentQ(db_red) + o.num_ * LaurentQ(exact_divide(den_, g));
    QPoly d = da * db_red;
    *this = RatFuncQ(n, d);
    return *this;
}

RatFuncQ& RatFuncQ::operator-=(const RatFuncQ& o) { return *this += -o; }

RatFuncQ& RatFuncQ::operator*=(const RatFuncQ& o) {
    if (is_zero() || o.is_zero()) {
        *this = RatFuncQ();
        return *this;
    }
    // cross-reduce before multiplying to keep intermediates small
    QPoly g1 = poly_gcd(num_.body(), o.den_);
    QPoly g2 = poly_gcd(o.num_.body(), den_);
    LaurentQ n1(num_.shift(), g1.degree() > 0
                                  ? exact_divide(num_.body(), g1)
                                  : num_.body());
    LaurentQ n2(o.num_.shift(), g2.degree() > 0
                                    ? exact_divide(o.num_.body(), g2)
                                    : o.num_.body());
    QPoly d1 = g2.degree() > 0 ? exact_divide(den_, g2) : den_;
    QPoly d2 = g1.degree() > 0 ? exact_divide(o.den_, g1) : o.den_;
    LaurentQ n = n1 * n2;
    QPoly d = d1 * d2;
    // factors were pairwise coprime, so only the monic scaling remains
    Rational lc = d.leading_coeff();
    if (lc != 1) {
        d *= Rational(1) / lc;
        n *= Rational(1) / lc;
    }
    num_ = std::move(n);
    den_ = std::move(d);
    return *this;
}

RatFuncQ RatFuncQ::reciprocal() const {
    if (is_zero())
        throw division_by_zero("RatFuncQ::reciprocal: zero");
    RatFuncQ f;
    f.num_ = LaurentQ(-num_.shift(), den_);
    f.den_ = num_.body();
    // re-normalize to monic denominator
    Rational lc = f.den_.leading_coeff();
    if (lc != 1) {
        f.den_ *= Rational(1) / lc;
        f.num_ *= Rational(1) / lc;
    }
    return f;
}

RatFuncQ& RatFuncQ::operator/=(const RatFuncQ& o) {
    return *this *= o.reciprocal();
}

RatFuncQ RatFuncQ::operator-() const {
    RatFuncQ f;
    f.num_ = -num_;
    f.den_ = den_;
    return f;
}

RatFuncQ RatFuncQ::pow(long e) const {
    if (e == 0)
        return RatFuncQ(Rational(1));
    RatFuncQ base = e > 0 ? *this : reciprocal();
    unsigned long n = e > 0 ? static_cast<unsigned long>(e)
                            : static_cast<unsigned long>(-e);
    RatFuncQ acc(Rational(1));
    while (n) {
        if (n & 1)
            acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

Rational RatFuncQ::eval(const Rational& q0) const {
    Rational d = den_.eval(q0);
    if (d == 0)
        throw division_by_zero("RatFuncQ::eval: pole at q = " + to_string(q0));
    return num_.eval(q0) / d;
}

Real RatFuncQ::eval_real(const Real& q0) const {
    Real d = den_.eval_real(q0);
    if (d == 0)
        throw division_by_zero("RatFuncQ::eval_real: pole");
    return num_.eval_real(q0) / d;
}

Rational RatFuncQ::limit_q1() const {
    if (is_zero())
        return Rational(0);
    Rational d = den_.eval(Rational(1));
    if (d == 0)
        throw pole_at_one("limit_q1: pole at q = 1");
    // q^shift -> 1
    return num_.body().eval(Rational(1)) / d;
}

std::string RatFuncQ::str(long max_degree) const {
    auto render = [max_degree](const QPoly& p) {
        if (max_degree >= 0 && p.degree() > max_degree)
            return std::string("... (degree ") + std::to_string(p.degree()) +
                   ")";
        return p.str();
    };
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool unit_den = den_.degree() == 0;
    if (num_.shift() != 0)
        os << "q^" << num_.shift() << " * ";
    if (unit_den) {
        os << "(" << render(num_.body()) << ")";
    } else {
        os << "(" << render(num_.body()) << ") / (" << render(den_) << ")";
    }
    return os.str();
}

bool divides(const QPoly& modulus, const RatFuncQ& f) {
    if (modulus.is_zero() || modulus.coeff(0) == 0)
        throw std::invalid_argument(
            "divides: modulus must have a nonzero constant term");
    if (modulus.degree() == 0)
        return true;
    if (f.is_zero())
        return true;
    QPoly g = poly_gcd(f.den(), modulus);
    if (g.degree() > 0)
        throw non_invertible_denominator(
            "divides: denominator shares the factor (" + g.str() +
            ") with the modulus");
    return divides_poly(modulus, f.num().body());
}

} // namespace qwz
