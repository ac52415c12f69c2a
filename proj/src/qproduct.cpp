#include "qwz/qproduct.hpp"

#include "qwz/cyclotomic.hpp"

#include <algorithm>

namespace qwz {

QProduct QProduct::from_rational(const Rational& c) {
    QProduct p;
    if (c == 0) {
        p.zero_order_ = 1;
        return p;
    }
    p.coeff_ = c;
    return p;
}

QProduct QProduct::monomial(long e) {
    QProduct p;
    p.shift_ = e;
    return p;
}

QProduct QProduct::sign_pow(long e) {
    QProduct p;
    if (e % 2 != 0)
        p.coeff_ = Rational(-1);
    return p;
}

QProduct QProduct::binomial(int sign, long e) {
    QProduct p;
    p.insert_factor(sign, e, 1);
    return p;
}

QProduct QProduct::qbracket_term(long m) {
    QProduct p;
    if (m == 0) {
        p.zero_order_ = 1;
        return p;
    }
    p.insert_factor(+1, m, 1);
    p.insert_factor(+1, 1, -1);
    return p;
}

QProduct QProduct::qpochhammer(int arg_sign, long arg_e, long base, long len) {
    if (base < 1)
        throw std::invalid_argument("qpochhammer: base exponent must be >= 1");
    QProduct p;
    if (len >= 0) {
        for (long j = 0; j < len; ++j)
            p.insert_factor(arg_sign, arg_e + base * j, 1);
        return p;
    }
    for (long j = 1; j <= -len; ++j)
        p.insert_factor(arg_sign, arg_e - base * j, -1);
    return p;
}

QProduct QProduct::pochhammer_classical(const Rational& x, long len) {
    QProduct p;
    if (len >= 0) {
        for (long j = 0; j < len; ++j) {
            Rational f = x + j;
            if (f == 0)
                p.zero_order_ += 1;
            else
                p.coeff_ *= f;
        }
        return p;
    }
    for (long j = 1; j <= -len; ++j) {
        Rational f = x - j;
        if (f == 0)
            p.zero_order_ -= 1;
        else
            p.coeff_ /= f;
    }
    return p;
}

void QProduct::insert_factor(int sign, long e, int mult) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("QProduct: factor sign must be +-1");
    if (mult == 0)
        return;
    if (e == 0) {
        if (sign == 1) {
            zero_order_ += mult; // (1 - q^0) = 0
        } else {
            coeff_ *= rational_pow(Rational(2), mult); // (1 + q^0) = 2
        }
        return;
    }
    if (e < 0) {
        // (1 - q^-t) = -q^-t (1 - q^t);  (1 + q^-t) = q^-t (1 + q^t)
        if (sign == 1 && mult % 2 != 0)
            coeff_ = -coeff_;
        shift_ += e * mult;
        e = -e;
    }
    auto it = factors_.find(Factor{e, sign});
    if (it == factors_.end()) {
        factors_.emplace(Factor{e, sign}, mult);
    } else {
        it->second += mult;
        if (it->second == 0)
            factors_.erase(it);
    }
}

QProduct& QProduct::operator*=(const QProduct& o) {
    zero_order_ += o.zero_order_;
    coeff_ *= o.coeff_;
    shift_ += o.shift_;
    for (const auto& [f, m] : o.factors_) {
        auto it = factors_.find(f);
        if (it == factors_.end()) {
            factors_.emplace(f, m);
        } else {
            it->second += m;
            if (it->second == 0)
                factors_.erase(it);
        }
    }
    return *this;
}

QProduct& QProduct::operator*=(const Rational& c) {
    if (c == 0) {
        *this = QProduct();
        zero_order_ = 1;
        return *this;
    }
    coeff_ *= c;
    return *this;
}

QProduct QProduct::reciprocal() const {
    QProduct p;
    p.zero_order_ = -zero_order_;
    p.coeff_ = Rational(1) / coeff_;
    p.shift_ = -shift_;
    for (const auto& [f, m] : factors_)
        p.factors_.emplace(f, -m);
    return p;
}

QProduct QProduct::operator-() const {
    QProduct p(*this);
    p.coeff_ = -p.coeff_;
    return p;
}

QProduct QProduct::pow(long e) const {
    if (e == 0)
        return QProduct();
    QProduct base = e > 0 ? *this : reciprocal();
    long n = e > 0 ? e : -e;
    QProduct acc;
    for (long i = 0; i < n; ++i)
        acc *= base; // factor maps merge, so repeated multiply is cheap
    return acc;
}

Ext<Rational> QProduct::eval(const Rational& q0) const {
    Ext<Rational> r{zero_order_, coeff_};
    if (q0 == 0) {
        if (shift_ > 0)
            r.zero_order += 1;
        else if (shift_ < 0)
            r.zero_order -= 1;
        return r; // every binomial factor evaluates to 1
    }
    r.value *= rational_pow(q0, shift_);
    for (const auto& [f, m] : factors_) {
        Rational v = Rational(1) - Rational(f.sign) * rational_pow(q0, f.e);
        if (v == 0)
            r.zero_order += m;
        else
            r.value *= rational_pow(v, m);
    }
    return r;
}

namespace {

// binomial (1 - sign*q^e) -> cyclotomic indices, with the sign convention
// (1 - q^e) = -prod_{d | e} Phi_d,  (1 + q^e) = prod_{d | 2e, d !| e} Phi_d.
void add_cyclotomic_indices(const QProduct::Factor& f, int mult,
                            std::map<long, long>& cyc, bool& negate) {
    if (f.sign == 1) {
        for (long d : divisors(f.e))
            cyc[d] += mult;
        if (mult % 2 != 0)
            negate = !negate;
    } else {
        for (long d : divisors(2 * f.e))
            if (f.e % d != 0)
                cyc[d] += mult;
    }
}

QPoly expand_cyclotomic_product(const std::map<long, long>& cyc, bool num_side) {
    QPoly acc = QPoly::one();
    for (const auto& [d, m] : cyc) {
        long mm = num_side ? m : -m;
        if (mm <= 0)
            continue;
        acc *= cyclotomic(d).pow(static_cast<unsigned long>(mm));
    }
    return acc;
}

} // namespace

ExtTerm QProduct::expand() const {
    std::map<long, long> cyc;
    bool negate = false;
    for (const auto& [f, m] : factors_)
        add_cyclotomic_indices(f, m, cyc, negate);
    QPoly num = expand_cyclotomic_product(cyc, true);
    QPoly den = expand_cyclotomic_product(cyc, false);
    Rational c = negate ? -coeff_ : coeff_;
    LaurentQ n(shift_, num * c);
    return ExtTerm{zero_order_, RatFuncQ::from_canonical(std::move(n), std::move(den))};
}

// ---- TermValue --------------------------------------------------------------

TermValue::TermValue(QProduct p) { parts_.push_back(std::move(p)); }

TermValue& TermValue::operator+=(const TermValue& o) {
    parts_.insert(parts_.end(), o.parts_.begin(), o.parts_.end());
    return *this;
}

TermValue& TermValue::operator-=(const TermValue& o) {
    for (const auto& p : o.parts_)
        parts_.push_back(-p);
    return *this;
}

TermValue TermValue::operator-() const {
    TermValue t;
    t.parts_.reserve(parts_.size());
    for (const auto& p : parts_)
        t.parts_.push_back(-p);
    return t;
}

TermValue operator*(const TermValue& a, const TermValue& b) {
    TermValue t;
    t.parts_.reserve(a.parts_.size() * b.parts_.size());
    for (const auto& pa : a.parts_)
        for (const auto& pb : b.parts_)
            t.parts_.push_back(pa * pb);
    return t;
}

TermValue operator/(const TermValue& a, const QProduct& b) {
    QProduct inv = b.reciprocal();
    TermValue t;
    t.parts_.reserve(a.parts_.size());
    for (const auto& pa : a.parts_)
        t.parts_.push_back(pa * inv);
    return t;
}

Ext<Rational> TermValue::eval(const Rational& q0) const {
    if (parts_.empty())
        return Ext<Rational>{0, Rational(0)};
    if (parts_.size() == 1)
        return parts_[0].eval(q0);
    Ext<Rational> acc = Ext<Rational>::zero();
    for (const auto& p : parts_)
        acc = acc + p.eval(q0);
    return acc;
}

LaurentQ expand_binomials(const Rational& coeff, long shift,
                          const std::map<QProduct::Factor, int>& factors) {
    // degree-ordered accumulation keeps the schoolbook passes short
    std::vector<QProduct::Factor> fs;
    for (const auto& [f, m] : factors) {
        if (m < 0)
            throw std::invalid_argument(
                "expand_binomials: negative multiplicity");
        for (int i = 0; i < m; ++i)
            fs.push_back(f);
    }
    std::sort(fs.begin(), fs.end(),
              [](const auto& a, const auto& b) { return a.e < b.e; });
    std::vector<Rational> c{coeff};
    for (const auto& f : fs) {
        size_t old = c.size();
        c.resize(old + static_cast<size_t>(f.e), Rational(0));
        // multiply by (1 - sign*q^e): c[i+e] -= sign*c[i], downward pass
        for (size_t i = old; i-- > 0;) {
            if (c[i] == 0)
                continue;
            if (f.sign == 1)
                c[i + static_cast<size_t>(f.e)] -= c[i];
            else
                c[i + static_cast<size_t>(f.e)] += c[i];
        }
    }
    return LaurentQ(shift, QPoly(std::move(c)));
}

TermValue::Fraction TermValue::to_fraction() const {
    Fraction out;
    // common denominator = factor-wise max of the parts' negative powers
    for (const auto& p : parts_) {
        if (p.zero_order() < 0)
            throw pole_error("TermValue: pole part in a sum");
        if (p.zero_order() > 0)
            continue;
        for (const auto& [f, m] : p.factors())
            if (m < 0) {
                int need = -m;
                auto it = out.den.find(f);
                if (it == out.den.end())
                    out.den.emplace(f, need);
                else
                    it->second = std::max(it->second, need);
            }
    }
    for (const auto& p : parts_) {
        if (p.zero_order() > 0)
            continue;
        std::map<QProduct::Factor, int> numf;
        for (const auto& [f, m] : p.factors())
            if (m > 0)
                numf.emplace(f, m);
        for (const auto& [f, need] : out.den) {
            int have = 0;
            auto it = p.factors().find(f);
            if (it != p.factors().end() && it->second < 0)
                have = -it->second;
            if (need > have)
                numf[f] += need - have;
        }
        out.num += expand_binomials(p.coeff(), p.shift(), numf);
    }
    return out;
}

bool TermValue::is_exact_zero() const {
    return to_fraction().num.is_zero();
}

RatFuncQ reduce_over_factor_den(const LaurentQ& num,
                                const std::map<QProduct::Factor, int>& den) {
    if (num.is_zero())
        return RatFuncQ();
    // denominator as net cyclotomic exponents
    std::map<long, long> cyc;
    bool negate = false;
    for (const auto& [f, m] : den)
        add_cyclotomic_indices(f, m, cyc, negate);
    QPoly nbody = num.body();
    Rational c = negate ? Rational(-1) : Rational(1);
    QPoly dpoly = QPoly::one();
    for (const auto& [d, m] : cyc) {
        if (m <= 0)
            continue; // cannot happen for a pure denominator, kept for safety
        QPoly phi = cyclotomic(d);
        long left = m;
        while (left > 0) {
            DivRem dr = divrem(nbody, phi);
            if (!dr.rem.is_zero())
                break;
            nbody = std::move(dr.quot);
            --left;
        }
        if (left > 0)
            dpoly *= phi.pow(static_cast<unsigned long>(left));
    }
    LaurentQ n(num.shift(), nbody * c);
    return RatFuncQ::from_canonical(std::move(n), std::move(dpoly));
}

ExtTerm TermValue::expand() const {
    if (parts_.empty())
        return ExtTerm{0, RatFuncQ()};
    if (parts_.size() == 1)
        return parts_[0].expand();
    bool all_zero = true;
    for (const auto& p : parts_)
        if (p.zero_order() <= 0)
            all_zero = false;
    if (all_zero)
        return ExtTerm::zero();
    Fraction fr = to_fraction();
    return ExtTerm{0, reduce_over_factor_den(fr.num, fr.den)};
}

Rational TermValue::limit_q1() const {
    Fraction fr = to_fraction();
    if (fr.num.is_zero())
        return Rational(0);
    // multiplicity of (q - 1) in the denominator, and its reduced value at 1
    long den_mult = 0;
    Rational den_red(1);
    for (const auto& [f, m] : fr.den) {
        if (f.sign == 1) {
            den_mult += m;
            den_red *= rational_pow(Rational(-f.e), m);
        } else {
            den_red *= rational_pow(Rational(2), m);
        }
    }
    long num_mult = multiplicity_at_one(fr.num.body());
    if (num_mult < den_mult)
        throw pole_at_one("TermValue::limit_q1: pole at q = 1");
    QPoly reduced = divide_out_q_minus_1(fr.num.body(), den_mult);
    return reduced.eval(Rational(1)) / den_red;
}

} // namespace qwz
