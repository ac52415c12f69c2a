#include "qwz/laurent.hpp"

#include "qwz/errors.hpp"

#include <sstream>

namespace qwz {

LaurentQ::LaurentQ(QPoly body) : body_(std::move(body)) { normalize(); }

LaurentQ::LaurentQ(long shift, QPoly body)
    : shift_(shift), body_(std::move(body)) {
    normalize();
}

LaurentQ::LaurentQ(Rational constant) : body_(QPoly(std::move(constant))) {}

LaurentQ LaurentQ::monomial(const Rational& c, long e) {
    return LaurentQ(e, QPoly(c));
}

void LaurentQ::normalize() {
    if (body_.is_zero()) {
        shift_ = 0;
        return;
    }
    long low = body_.low_order();
    if (low > 0) {
        std::vector<Rational> c(body_.coeffs().begin() + low,
                                body_.coeffs().end());
        body_ = QPoly(std::move(c));
        shift_ += low;
    }
}

LaurentQ& LaurentQ::operator+=(const LaurentQ& o) {
    if (o.is_zero())
        return *this;
    if (is_zero()) {
        *this = o;
        return *this;
    }
    long s = std::min(shift_, o.shift_);
    QPoly sum = body_.shifted(shift_ - s) + o.body_.shifted(o.shift_ - s);
    shift_ = s;
    body_ = std::move(sum);
    normalize();
    return *this;
}

LaurentQ& LaurentQ::operator-=(const LaurentQ& o) { return *this += -o; }

LaurentQ& LaurentQ::operator*=(const LaurentQ& o) {
    body_ *= o.body_;
    shift_ += o.shift_;
    if (body_.is_zero())
        shift_ = 0;
    return *this;
}

LaurentQ& LaurentQ::operator*=(const Rational& c) {
    body_ *= c;
    if (body_.is_zero())
        shift_ = 0;
    return *this;
}

LaurentQ LaurentQ::operator-() const { return LaurentQ(shift_, -body_); }

Rational LaurentQ::eval(const Rational& q0) const {
    if (is_zero())
        return Rational(0);
    if (q0 == 0) {
        if (shift_ < 0)
            throw division_by_zero("LaurentQ::eval: negative power at q = 0");
        return shift_ > 0 ? Rational(0) : body_.coeff(0);
    }
    return body_.eval(q0) * rational_pow(q0, shift_);
}

Real LaurentQ::eval_real(const Real& q0) const {
    if (is_zero())
        return Real(0);
    if (q0 == 0) {
        if (shift_ < 0)
            throw division_by_zero(
                "LaurentQ::eval_real: negative power at q = 0");
        return shift_ > 0 ? Real(0) : Real(body_.coeff(0));
    }
    Real p = pow(q0, static_cast<long long>(shift_));
    return body_.eval_real(q0) * p;
}

std::string LaurentQ::str() const {
    if (is_zero())
        return "0";
    if (shift_ == 0)
        return body_.str();
    std::ostringstream os;
    if (shift_ > 0 && body_.degree() == 0) {
        // plain monomial with positive exponent
        const Rational& c = body_.coeff(0);
        if (c != 1)
            os << to_string(c) << "*";
        os << "q";
        if (shift_ != 1)
            os << "^" << shift_;
        return os.str();
    }
    os << "q^" << shift_ << "*(" << body_.str() << ")";
    return os.str();
}

} // namespace qwz
