#include "qwz/qpoly.hpp"

#include "qwz/errors.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace qwz {

namespace {
const Rational kZero(0);
}

QPoly::QPoly(Rational constant) {
    if (constant != 0)
        coeffs_.push_back(std::move(constant));
}

QPoly::QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

QPoly QPoly::monomial(const Rational& c, long e) {
    if (e < 0)
        throw std::invalid_argument("QPoly::monomial: negative exponent");
    if (c == 0)
        return QPoly();
    std::vector<Rational> v(static_cast<size_t>(e) + 1, Rational(0));
    v.back() = c;
    QPoly p;
    p.coeffs_ = std::move(v);
    return p;
}

void QPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

const Rational& QPoly::leading_coeff() const {
    if (coeffs_.empty())
        return kZero;
    return coeffs_.back();
}

const Rational& QPoly::coeff(long e) const {
    if (e < 0 || e >= static_cast<long>(coeffs_.size()))
        return kZero;
    return coeffs_[static_cast<size_t>(e)];
}

long QPoly::low_order() const {
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            return static_cast<long>(i);
    return -1;
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (coeffs_.size() < o.coeffs_.size())
        coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (coeffs_.size() < o.coeffs_.size())
        coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero())
        return QPoly();
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1,
                              Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            if (b.coeffs_[j] != 0)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    QPoly p;
    p.coeffs_ = std::move(out);
    p.normalize();
    return p;
}

QPoly& QPoly::operator*=(const QPoly& o) {
    *this = *this * o;
    return *this;
}

QPoly& QPoly::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_)
        x *= c;
    return *this;
}

QPoly QPoly::operator-() const {
    QPoly p(*this);
    for (auto& x : p.coeffs_)
        x = -x;
    return p;
}

void QPoly::set_coeff(long e, const Rational& c) {
    if (e < 0)
        throw std::invalid_argument("QPoly::set_coeff: negative exponent");
    if (e >= static_cast<long>(coeffs_.size())) {
        if (c == 0)
            return;
        coeffs_.resize(static_cast<size_t>(e) + 1, Rational(0));
    }
    coeffs_[static_cast<size_t>(e)] = c;
    normalize();
}

QPoly QPoly::shifted(long e) const {
    if (e < 0)
        throw std::invalid_argument("QPoly::shifted: negative shift");
    if (is_zero() || e == 0)
        return *this;
    std::vector<Rational> v(static_cast<size_t>(e), Rational(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    QPoly p;
    p.coeffs_ = std::move(v);
    return p;
}

QPoly QPoly::pow(unsigned long e) const {
    QPoly acc = QPoly::one();
    QPoly base = *this;
    while (e) {
        if (e & 1)
            acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Rational QPoly::eval(const Rational& q0) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * q0 + *it;
    return acc;
}

Real QPoly::eval_real(const Real& q0) const {
    Real acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * q0 + Real(*it);
    return acc;
}

std::string QPoly::str() const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0)
            continue;
        if (first) {
            if (c < 0)
                os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Rational a = abs(c);
        if (i == 0) {
            os << to_string(a);
        } else {
            if (a != 1)
                os << to_string(a) << "*";
            os << "q";
            if (i != 1)
                os << "^" << i;
        }
    }
    return os.str();
}

DivRem divrem(const QPoly& a, const QPoly& b) {
    if (b.is_zero())
        throw division_by_zero("divrem: division by zero polynomial");
    if (a.degree() < b.degree())
        return {QPoly(), a};
    std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
    long db = b.degree();
    const Rational& lb = b.leading_coeff();
    std::vector<Rational> quot(static_cast<size_t>(a.degree() - db) + 1,
                               Rational(0));
    for (long i = a.degree(); i >= db; --i) {
        Rational c = rem[static_cast<size_t>(i)];
        if (c == 0)
            continue;
        Rational f = c / lb;
        quot[static_cast<size_t>(i - db)] = f;
        for (long j = 0; j <= db; ++j)
            rem[static_cast<size_t>(i - db + j)] -=
                f * b.coeff(j);
    }
    return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly exact_divide(const QPoly& a, const QPoly& b) {
    DivRem dr = divrem(a, b);
    if (!dr.rem.is_zero())
        throw std::invalid_argument("exact_divide: division is not exact");
    return dr.quot;
}

bool divides_poly(const QPoly& b, const QPoly& a) {
    if (b.is_zero())
        return a.is_zero();
    if (a.is_zero())
        return true;
    if (a.degree() < b.degree())
        return false;
    return divrem(a, b).rem.is_zero();
}

namespace {

// ---- modular gcd over Z[x] ------------------------------------------------

using ZPoly = std::vector<BigInt>; // dense, no trailing zeros

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

// Clears denominators and integer content; result is primitive with positive
// leading coefficient.
ZPoly primitive_part(const QPoly& p) {
    ZPoly out;
    if (p.is_zero())
        return out;
    BigInt lcm_den(1);
    for (const auto& c : p.coeffs())
        if (c != 0)
            lcm_den = lcm(lcm_den, denominator(c));
    out.reserve(p.coeffs().size());
    BigInt content(0);
    for (const auto& c : p.coeffs()) {
        BigInt z = numerator(c) * (lcm_den / denominator(c));
        content = gcd(content, z);
        out.push_back(std::move(z));
    }
    if (out.back() < 0)
        content = -content;
    for (auto& z : out)
        z /= content;
    return out;
}

// Primes just below 2^61 (products of two residues fit in __int128).
constexpr std::array<uint64_t, 24> kGcdPrimes = {
    2305843009213693951ull, 2305843009213693921ull, 2305843009213693907ull,
    2305843009213693723ull, 2305843009213693693ull, 2305843009213693669ull,
    2305843009213693613ull, 2305843009213693561ull, 2305843009213693549ull,
    2305843009213693487ull, 2305843009213693421ull, 2305843009213693373ull,
    2305843009213693277ull, 2305843009213693193ull, 2305843009213693153ull,
    2305843009213693133ull, 2305843009213693123ull, 2305843009213693109ull,
    2305843009213693093ull, 2305843009213693013ull, 2305843009213692967ull,
    2305843009213692937ull, 2305843009213692799ull, 2305843009213692757ull};

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>(
        static_cast<unsigned __int128>(a) * b % p);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

uint64_t invmod(uint64_t a, uint64_t p) { return powmod(a, p - 2, p); }

uint64_t reduce_coeff(const BigInt& z, uint64_t p) {
    return mpz_fdiv_ui(z.backend().data(), p);
}

std::vector<uint64_t> reduce_poly(const ZPoly& z, uint64_t p) {
    std::vector<uint64_t> out(z.size());
    for (size_t i = 0; i < z.size(); ++i)
        out[i] = reduce_coeff(z[i], p);
    while (!out.empty() && out.back() == 0)
        out.pop_back();
    return out;
}

// Monic gcd in F_p[x].
std::vector<uint64_t> gcd_mod_p(std::vector<uint64_t> a,
                                std::vector<uint64_t> b, uint64_t p) {
    while (!b.empty()) {
        // a mod b
        uint64_t inv_lb = invmod(b.back(), p);
        while (a.size() >= b.size()) {
            uint64_t f = mulmod(a.back(), inv_lb, p);
            size_t off = a.size() - b.size();
            if (f != 0)
                for (size_t j = 0; j < b.size(); ++j) {
                    uint64_t t = mulmod(f, b[j], p);
                    uint64_t& c = a[off + j];
                    c = (c >= t) ? c - t : c + p - t;
                }
            while (!a.empty() && a.back() == 0)
                a.pop_back();
            if (a.empty())
                break;
        }
        std::swap(a, b);
    }
    if (!a.empty() && a.back() != 1) {
        uint64_t inv = invmod(a.back(), p);
        for (auto& c : a)
            c = mulmod(c, inv, p);
    }
    return a;
}

bool zdivides(const ZPoly& d, const ZPoly& a) {
    // Exact division test in Z[x]; valid because d is primitive (Gauss).
    if (d.empty())
        return a.empty();
    if (a.size() < d.size())
        return a.empty();
    ZPoly rem = a;
    const BigInt& ld = d.back();
    while (rem.size() >= d.size()) {
        BigInt qc;
        BigInt r;
        mpz_tdiv_qr(qc.backend().data(), r.backend().data(),
                    rem.back().backend().data(), ld.backend().data());
        if (r != 0)
            return false;
        size_t off = rem.size() - d.size();
        for (size_t j = 0; j < d.size(); ++j)
            rem[off + j] -= qc * d[j];
        ztrim(rem);
        if (rem.empty())
            return true;
        if (rem.size() < d.size())
            return false;
    }
    return rem.empty();
}

QPoly monic_from_z(const ZPoly& z) {
    std::vector<Rational> c;
    c.reserve(z.size());
    Rational lead(z.back());
    for (const auto& x : z)
        c.push_back(Rational(x) / lead);
    return QPoly(std::move(c));
}

} // namespace

QPoly poly_gcd(const QPoly& a, const QPoly& b) {
    if (a.is_zero() && b.is_zero())
        return QPoly();
    if (a.is_zero())
        return monic_from_z(primitive_part(b));
    if (b.is_zero())
        return monic_from_z(primitive_part(a));
    ZPoly za = primitive_part(a);
    ZPoly zb = primitive_part(b);
    if (za.size() == 1 || zb.size() == 1)
        return QPoly::one();

    BigInt gamma = gcd(za.back(), zb.back());

    // CRT accumulation of gamma * monic-gcd mod p; certified by division.
    ZPoly acc;        // symmetric-range lift
    BigInt acc_mod(0);
    size_t best_deg = SIZE_MAX;
    for (uint64_t p : kGcdPrimes) {
        if (za.back() % p == 0 || zb.back() % p == 0)
            continue;
        auto gp = gcd_mod_p(reduce_poly(za, p), reduce_poly(zb, p), p);
        if (gp.size() == 1)
            return QPoly::one();
        if (gp.size() > best_deg)
            continue; // unlucky prime
        if (gp.size() < best_deg) {
            best_deg = gp.size();
            acc.clear();
            acc_mod = 0;
        }
        uint64_t gm = reduce_coeff(gamma, p);
        BigInt bp(p);
        if (acc_mod == 0) {
            acc.assign(gp.size(), BigInt(0));
            for (size_t i = 0; i < gp.size(); ++i)
                acc[i] = BigInt(mulmod(gp[i], gm, p));
            acc_mod = bp;
        } else {
            // combine: x = acc + acc_mod * t, t = (target - acc) / acc_mod mod p
            BigInt inv_acc;
            mpz_invert(inv_acc.backend().data(), acc_mod.backend().data(),
                       bp.backend().data());
            for (size_t i = 0; i < acc.size(); ++i) {
                uint64_t target = mulmod(gp[i], gm, p);
                BigInt diff = BigInt(target) - acc[i];
                BigInt t = ((diff * inv_acc) % bp + bp) % bp;
                acc[i] += acc_mod * t;
            }
            acc_mod *= bp;
        }
        // symmetric lift + primitive part
        ZPoly cand = acc;
        BigInt half = acc_mod / 2;
        for (auto& c : cand)
            if (c > half)
                c -= acc_mod;
        ztrim(cand);
        if (cand.empty() || cand.size() != best_deg)
            continue;
        BigInt content(0);
        for (const auto& c : cand)
            content = gcd(content, c);
        if (cand.back() < 0)
            content = -content;
        for (auto& c : cand)
            c /= content;
        if (zdivides(cand, za) && zdivides(cand, zb))
            return monic_from_z(cand);
    }
    throw error("poly_gcd: prime pool exhausted"); // practically unreachable
}

long multiplicity_at_one(const QPoly& a) {
    if (a.is_zero())
        return -1;
    long mult = 0;
    QPoly cur = a;
    while (cur.eval(Rational(1)) == 0) {
        // synthetic division by (q - 1)
        const auto& c = cur.coeffs();
        std::vector<Rational> quot(c.size() - 1);
        Rational carry(0);
        for (size_t i = c.size(); i-- > 1;) {
            carry += c[i];
            quot[i - 1] = carry;
        }
        cur = QPoly(std::move(quot));
        ++mult;
    }
    return mult;
}

QPoly divide_out_q_minus_1(const QPoly& a, long k) {
    if (a.is_zero())
        throw std::invalid_argument("divide_out_q_minus_1: zero polynomial");
    QPoly cur = a;
    for (long i = 0; i < k; ++i) {
        if (cur.eval(Rational(1)) != 0)
            throw std::invalid_argument(
                "divide_out_q_minus_1: multiplicity less than requested");
        const auto& c = cur.coeffs();
        std::vector<Rational> quot(c.size() - 1);
        Rational carry(0);
        for (size_t i2 = c.size(); i2-- > 1;) {
            carry += c[i2];
            quot[i2 - 1] = carry;
        }
        cur = QPoly(std::move(quot));
    }
    return cur;
}

} // namespace qwz
