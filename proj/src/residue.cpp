#include "qwz/residue.hpp"

#include "qwz/errors.hpp"

namespace qwz {

namespace {

BigInt nonneg_mod(const BigInt& a, const BigInt& m) {
    BigInt r;
    mpz_fdiv_r(r.backend().data(), a.backend().data(), m.backend().data());
    return r;
}

} // namespace

ResidueClass::ResidueClass(BigInt value, BigInt modulus)
    : modulus_(std::move(modulus)) {
    if (modulus_ < 2)
        throw std::invalid_argument("ResidueClass: modulus must be >= 2");
    value_ = nonneg_mod(value, modulus_);
}

void ResidueClass::check_same_modulus(const ResidueClass& o) const {
    if (modulus_ != o.modulus_)
        throw modulus_mismatch("ResidueClass: mixed moduli " + modulus_.str() +
                               " and " + o.modulus_.str());
}

ResidueClass& ResidueClass::operator+=(const ResidueClass& o) {
    check_same_modulus(o);
    value_ = nonneg_mod(value_ + o.value_, modulus_);
    return *this;
}

ResidueClass& ResidueClass::operator-=(const ResidueClass& o) {
    check_same_modulus(o);
    value_ = nonneg_mod(value_ - o.value_, modulus_);
    return *this;
}

ResidueClass& ResidueClass::operator*=(const ResidueClass& o) {
    check_same_modulus(o);
    value_ = nonneg_mod(value_ * o.value_, modulus_);
    return *this;
}

ResidueClass ResidueClass::inverse() const {
    BigInt inv;
    int ok = mpz_invert(inv.backend().data(), value_.backend().data(),
                        modulus_.backend().data());
    if (!ok)
        throw non_invertible_denominator(
            "ResidueClass: " + value_.str() + " is not invertible mod " +
            modulus_.str());
    return ResidueClass(inv, modulus_);
}

ResidueClass mod_reduce(const Rational& x, const BigInt& modulus) {
    ResidueClass num(numerator(x), modulus);
    ResidueClass den(denominator(x), modulus);
    return num * den.inverse();
}

int jacobi(const BigInt& a, const BigInt& m) {
    if (m <= 0 || m % 2 == 0)
        throw std::invalid_argument(
            "jacobi: modulus must be odd and positive, got " + m.str());
    return mpz_jacobi(a.backend().data(), m.backend().data());
}

BigInt sign_power_exponent(const BigInt& m) {
    if (m <= 0 || m % 2 == 0)
        throw std::invalid_argument(
            "sign_power_exponent: m must be odd and positive, got " + m.str());
    return (m - 1) * (m - 3) / 8;
}

bool is_prime(const BigInt& n) {
    if (n < 2)
        return false;
    if (n < 4)
        return true;
    if (n % 2 == 0)
        return false;
    for (BigInt d = 3; d * d <= n; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

} // namespace qwz
