#include "qwz/identities.hpp"

#include "qwz/errors.hpp"

#include <map>
#include <stdexcept>

namespace qwz {

namespace {

QProduct poch(int arg_sign, long arg_e, long base, long len) {
    return QProduct::qpochhammer(arg_sign, arg_e, base, len);
}

QProduct poch(const PochSpec& spec, const Monom& a, long len) {
    Monom arg = poch_argument(spec, a);
    return QProduct::qpochhammer(arg.sign, arg.e, spec.base, len);
}

// (1 - sign * a^a_power * q^offset) under the substitution a = a_val
QProduct abinomial(const Monom& a, int a_power, long offset, int sign = 1) {
    Monom arg = poch_argument(PochSpec{sign, offset, a_power, 1}, a);
    return QProduct::binomial(arg.sign, arg.e);
}

QProduct cpoch(const Rational& x, long len) {
    return QProduct::pochhammer_classical(x, len);
}

Rational half() { return Rational(1) / 2; }

// ---- q summands ------------------------------------------------------

TermValue rama1_q(long n, const Monom&) {
    QProduct p = QProduct::sign_pow(n);
    p *= QProduct::monomial(3 * n * n);
    p *= QProduct::qbracket_term(6 * n + 1);
    p *= poch(1, 1, 2, n).pow(3);
    p *= poch(1, 4, 4, n).pow(3).reciprocal();
    return p;
}

QProduct new_level1_prefix(long n) {
    QProduct p = QProduct::sign_pow(n);
    p *= QProduct::monomial(7 * n * n);
    p *= poch(1, 1, 2, 3 * n);
    p *= poch(1, 1, 2, n).pow(2);
    p *= poch(1, 4, 4, 2 * n).pow(2).reciprocal();
    p *= poch(1, 4, 4, n).reciprocal();
    return p;
}

TermValue new_level1_q(long n, const Monom&) {
    QProduct pre = new_level1_prefix(n);
    QProduct ratio = QProduct::qbracket_term(6 * n + 1) *
                     QProduct::qbracket_term(4 * n + 4).reciprocal() *
                     QProduct::binomial(-1, 2 * n + 1).pow(2).reciprocal() *
                     QProduct::binomial(-1, 4 * n + 2).pow(2).reciprocal();
    TermValue t = pre * ratio * QProduct::qbracket_term(6 * n + 3) *
                  QProduct::monomial(14 * n + 7);
    t -= pre * ratio * QProduct::qbracket_term(10 * n + 7) *
         QProduct::monomial(10 * n + 3);
    t += pre * QProduct::qbracket_term(10 * n + 1);
    return t;
}

// the same summand in the partial-sum congruence form, with the ratio
// written over [4n+4][8n+4]^2
TermValue new_level1_q_cong(long n, const Monom&) {
    QProduct pre = new_level1_prefix(n);
    QProduct ratio = QProduct::qbracket_term(2 * n + 1).pow(2) *
                     QProduct::qbracket_term(6 * n + 1) *
                     QProduct::qbracket_term(4 * n + 4).reciprocal() *
                     QProduct::qbracket_term(8 * n + 4).pow(2).reciprocal();
    TermValue t = pre * ratio * QProduct::qbracket_term(6 * n + 3) *
                  QProduct::monomial(14 * n + 7);
    t -= pre * ratio * QProduct::qbracket_term(10 * n + 7) *
         QProduct::monomial(10 * n + 3);
    t += pre * QProduct::qbracket_term(10 * n + 1);
    return t;
}

TermValue level1_q_a(long n, const Monom& a) {
    QProduct pre = QProduct::sign_pow(n);
    pre *= QProduct::monomial(7 * n * n);
    pre *= poch(1, 1, 2, 3 * n);
    pre *= poch(PochSpec{1, 1, 1, 2}, a, n);
    pre *= poch(PochSpec{1, 1, -1, 2}, a, n);
    pre *= poch(1, 4, 4, n).reciprocal();
    pre *= poch(PochSpec{1, 4, 1, 4}, a, 2 * n).reciprocal();
    pre *= poch(PochSpec{1, 4, -1, 4}, a, 2 * n).reciprocal();
    QProduct ratio = abinomial(a, 1, 2 * n + 1) * abinomial(a, -1, 2 * n + 1) *
                     abinomial(a, 1, 8 * n + 4).reciprocal() *
                     abinomial(a, -1, 8 * n + 4).reciprocal() *
                     QProduct::qbracket_term(6 * n + 1) *
                     QProduct::qbracket_term(4 * n + 4).reciprocal();
    TermValue t = pre * ratio * QProduct::qbracket_term(6 * n + 3) *
                  QProduct::monomial(14 * n + 7);
    t -= pre * ratio * QProduct::qbracket_term(10 * n + 7) *
         QProduct::monomial(10 * n + 3);
    t += pre * QProduct::qbracket_term(10 * n + 1);
    return t;
}

TermValue gz_thm44_input(long n, const Monom& a) {
    QProduct p = QProduct::sign_pow(n);
    p *= QProduct::monomial(3 * n * n);
    p *= QProduct::qbracket_term(6 * n + 1);
    p *= poch(1, 1, 2, n);
    p *= poch(PochSpec{1, 1, 1, 2}, a, n);
    p *= poch(PochSpec{1, 1, -1, 2}, a, n);
    p *= poch(1, 4, 4, n).reciprocal();
    p *= poch(PochSpec{1, 4, 1, 4}, a, n).reciprocal();
    p *= poch(PochSpec{1, 4, -1, 4}, a, n).reciprocal();
    return p;
}

TermValue guo_zud_8n1_q(long n, const Monom&) {
    QProduct p = QProduct::monomial(2 * n * n);
    p *= QProduct::qbracket_term(8 * n + 1);
    p *= poch(1, 1, 2, n).pow(2);
    p *= poch(1, 1, 2, 2 * n);
    p *= poch(1, 6, 6, n).pow(2).reciprocal();
    p *= poch(1, 2, 2, 2 * n).reciprocal();
    return p;
}

QProduct q28n3_prefix(long n) {
    QProduct p = QProduct::sign_pow(n);
    p *= QProduct::monomial(5 * n * n);
    p *= poch(1, 1, 2, 2 * n).pow(2);
    p *= poch(1, 1, 2, n);
    p *= poch(1, 3, 6, n);
    p *= poch(1, 6, 6, n).pow(2).reciprocal();
    p *= poch(1, 2, 2, 4 * n).reciprocal();
    return p;
}

TermValue q28n3(long n, const Monom&) {
    QProduct pre = q28n3_prefix(n);
    TermValue t = pre * QProduct::monomial(8 * n + 2) *
                  QProduct::qbracket_term(4 * n + 1) *
                  QProduct::binomial(-1, 2 * n + 1).reciprocal() *
                  QProduct::binomial(-1, 4 * n + 1).reciprocal() *
                  QProduct::binomial(-1, 4 * n + 2).reciprocal();
    t += pre * QProduct::qbracket_term(10 * n + 1);
    return t;
}

TermValue q28n3_cong(long n, const Monom&) {
    QProduct pre = q28n3_prefix(n);
    TermValue t = pre * QProduct::monomial(8 * n + 2) *
                  QProduct::qbracket_term(4 * n + 1).pow(2) *
                  QProduct::binomial(-1, 2 * n + 1).reciprocal() *
                  QProduct::binomial(-1, 4 * n + 2).reciprocal() *
                  QProduct::qbracket_term(8 * n + 2).reciprocal();
    t += pre * QProduct::qbracket_term(10 * n + 1);
    return t;
}

TermValue q28n3_a(long n, const Monom& a) {
    QProduct pre = QProduct::sign_pow(n);
    pre *= QProduct::monomial(5 * n * n);
    pre *= poch(PochSpec{1, 1, 1, 2}, a, 2 * n);
    pre *= poch(PochSpec{1, 1, -1, 2}, a, 2 * n);
    pre *= poch(1, 1, 2, n);
    pre *= poch(1, 3, 6, n);
    pre *= poch(PochSpec{1, 6, 1, 6}, a, n).reciprocal();
    pre *= poch(PochSpec{1, 6, -1, 6}, a, n).reciprocal();
    pre *= poch(1, 2, 2, 4 * n).reciprocal();
    TermValue t = pre * abinomial(a, 1, 4 * n + 1) *
                  abinomial(a, -1, 4 * n + 1) *
                  QProduct::binomial(1, 1).pow(2).reciprocal() *
                  QProduct::monomial(8 * n + 2) *
                  QProduct::qbracket_term(8 * n + 2).reciprocal() *
                  QProduct::binomial(-1, 2 * n + 1).reciprocal() *
                  QProduct::binomial(-1, 4 * n + 2).reciprocal();
    t += pre * QProduct::qbracket_term(10 * n + 1);
    return t;
}

// ---- classical summands ----------------------------------------------

TermValue rama_level4(long n, const Monom&) {
    QProduct p = QProduct::sign_pow(n);
    p *= cpoch(half(), n).pow(3);
    p *= cpoch(Rational(1), n).pow(3).reciprocal();
    p *= QProduct::from_rational(Rational(6 * n + 1) *
                                 rational_pow(half(), 3 * n));
    return p;
}

TermValue rama_level1(long n, const Monom&) {
    QProduct p = cpoch(half(), n);
    p *= cpoch(Rational(1) / 6, n);
    p *= cpoch(Rational(5) / 6, n);
    p *= cpoch(Rational(1), n).pow(3).reciprocal();
    p *= QProduct::from_rational(Rational(154 * n + 15) *
                                 rational_pow(Rational(-27, 512), n));
    return p;
}

TermValue rama_level2_8n1(long n, const Monom&) {
    QProduct p = cpoch(half(), n);
    p *= cpoch(Rational(1) / 4, n);
    p *= cpoch(Rational(3) / 4, n);
    p *= cpoch(Rational(1), n).pow(3).reciprocal();
    p *= QProduct::from_rational(Rational(8 * n + 1) *
                                 rational_pow(Rational(1, 9), n));
    return p;
}

TermValue rama_level2_28n3(long n, const Monom&) {
    QProduct p = cpoch(half(), n);
    p *= cpoch(Rational(1) / 4, n);
    p *= cpoch(Rational(3) / 4, n);
    p *= cpoch(Rational(1), n).pow(3).reciprocal();
    p *= QProduct::from_rational(Rational(28 * n + 3) *
                                 rational_pow(Rational(-1, 48), n));
    return p;
}

// ---- registry ---------------------------------------------------------

std::map<std::string, IdentitySpec> build_registry() {
    std::map<std::string, IdentitySpec> reg;
    auto add = [&reg](IdentitySpec spec) {
        std::string id = spec.id;
        reg.emplace(std::move(id), std::move(spec));
    };

    InfiniteProductSpec rhs_level1;
    rhs_level1.numerator = {PochSpec{1, 3, 0, 4}, PochSpec{1, 5, 0, 4}};
    rhs_level1.denominator = {PochSpec{1, 4, 0, 4}, PochSpec{1, 4, 0, 4}};

    InfiniteProductSpec rhs_level1_a;
    rhs_level1_a.numerator = {PochSpec{1, 3, 0, 4}, PochSpec{1, 5, 0, 4}};
    rhs_level1_a.denominator = {PochSpec{1, 4, 1, 4}, PochSpec{1, 4, -1, 4}};

    InfiniteProductSpec rhs_level2;
    rhs_level2.numerator = {PochSpec{1, 3, 0, 2}, PochSpec{1, 3, 0, 6}};
    rhs_level2.denominator = {PochSpec{1, 2, 0, 2}, PochSpec{1, 6, 0, 6}};

    InfiniteProductSpec rhs_level2_a;
    rhs_level2_a.numerator = {PochSpec{1, 5, 0, 6}, PochSpec{1, 7, 0, 6},
                              PochSpec{1, 3, 1, 6}, PochSpec{1, 3, -1, 6}};
    rhs_level2_a.denominator = {PochSpec{1, 2, 0, 6}, PochSpec{1, 4, 0, 6},
                                PochSpec{1, 6, 1, 6}, PochSpec{1, 6, -1, 6}};

    add({"rama1-q", true, false, rama1_q, rhs_level1, {}, "rama-level4",
         Rational(1)});
    add({"rama-level4", false, false, rama_level4, {},
         ClosedConstant{Rational(2), 2}, "", Rational(1)});
    add({"new-level1-q", true, false, new_level1_q, rhs_level1, {},
         "rama-level1", Rational(1, 16)});
    add({"new-level1-q.cong", true, false, new_level1_q_cong, rhs_level1, {},
         "rama-level1", Rational(1, 16)});
    add({"rama-level1", false, false, rama_level1, {},
         ClosedConstant{Rational(32), 2}, "", Rational(1)});
    add({"level1-q-a", true, true, level1_q_a, rhs_level1_a, {}, "",
         Rational(1)});
    add({"gz-thm44-input", true, true, gz_thm44_input, rhs_level1_a, {}, "",
         Rational(1)});
    add({"guo-zud-8n1-q", true, false, guo_zud_8n1_q, rhs_level2, {},
         "rama-level2-8n1", Rational(1)});
    add({"rama-level2-8n1", false, false, rama_level2_8n1, {},
         ClosedConstant{Rational(2), 3}, "", Rational(1)});
    add({"28n3-q", true, false, q28n3, rhs_level2, {}, "rama-level2-28n3",
         Rational(3, 8)});
    add({"28n3-q.cong", true, false, q28n3_cong, rhs_level2, {},
         "rama-level2-28n3", Rational(3, 8)});
    add({"rama-level2-28n3", false, false, rama_level2_28n3, {},
         ClosedConstant{Rational(16, 3), 3}, "", Rational(1)});
    add({"28n3-q-a", true, true, q28n3_a, rhs_level2_a, {}, "", Rational(1)});
    return reg;
}

const std::map<std::string, IdentitySpec>& registry() {
    static const std::map<std::string, IdentitySpec> reg = build_registry();
    return reg;
}

} // namespace

const IdentitySpec& identity(const std::string& id) {
    auto it = registry().find(id);
    if (it == registry().end())
        throw std::invalid_argument("identity: unknown id \"" + id + "\"");
    return it->second;
}

const std::vector<std::string>& identity_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& [id, spec] : registry())
            v.push_back(id);
        return v;
    }();
    return ids;
}

Rational exact_partial_sum(const std::string& id, const Monom& a_subst,
                           const Rational& q0, long n_terms) {
    if (n_terms < 0)
        throw std::invalid_argument("exact_partial_sum: negative n_terms");
    const IdentitySpec& spec = identity(id);
    ExtRational acc = ExtRational::zero();
    for (long n = 0; n < n_terms; ++n)
        acc = acc + spec.summand(n, a_subst).eval(q0);
    return acc.is_zero() ? Rational(0) : acc.value;
}

Real verify_numeric(const std::string& id, const Monom& a_subst,
                    const Rational& q0, long n_terms, unsigned precision) {
    const IdentitySpec& spec = identity(id);
    if (!spec.is_q)
        throw std::invalid_argument("verify_numeric: \"" + id +
                                    "\" is a classical series");
    if (abs(q0) >= 1)
        throw std::invalid_argument("verify_numeric: need |q0| < 1");
    set_real_precision(precision + 10);
    Rational lhs = exact_partial_sum(id, a_subst, q0, n_terms);
    Real rhs = eval_infinite_product(spec.rhs, a_subst, q0, precision);
    return abs(Real(lhs) - rhs);
}

std::vector<LimitCheck> verify_limit_terms(const std::string& id,
                                           long n_max) {
    const IdentitySpec& spec = identity(id);
    if (spec.classical_companion.empty())
        throw std::invalid_argument("verify_limit_terms: \"" + id +
                                    "\" has no classical companion");
    const IdentitySpec& cls = identity(spec.classical_companion);
    std::vector<LimitCheck> checks;
    for (long n = 0; n <= n_max; ++n) {
        LimitCheck c;
        c.n = n;
        ExtRational term = cls.summand(n, kAOne).eval(Rational(0));
        c.classical_scaled =
            spec.limit_scale * (term.is_zero() ? Rational(0) : term.value);
        try {
            c.q_limit = spec.summand(n, kAOne).limit_q1();
            c.ok = c.q_limit == c.classical_scaled;
        } catch (const pole_at_one&) {
            c.q_limit = 0;
            c.ok = false;
        }
        checks.push_back(std::move(c));
    }
    return checks;
}

Real classical_value(const std::string& id, long n_terms,
                     unsigned precision) {
    const IdentitySpec& spec = identity(id);
    if (spec.is_q)
        throw std::invalid_argument("classical_value: \"" + id +
                                    "\" is a q-identity");
    set_real_precision(precision + 10);
    Rational sum = exact_partial_sum(id, kAOne, Rational(0), n_terms);
    Real closed = Real(spec.closed.coeff) *
                  sqrt(Real(spec.closed.sqrt_arg)) / real_pi();
    return abs(Real(sum) - closed);
}

bool summand_form_equivalence(const std::string& id_a,
                              const std::string& id_b, long n_max,
                              const Monom& a_subst) {
    const IdentitySpec& a = identity(id_a);
    const IdentitySpec& b = identity(id_b);
    for (long n = 0; n <= n_max; ++n) {
        TermValue diff = a.summand(n, a_subst) - b.summand(n, a_subst);
        if (!diff.is_exact_zero())
            return false;
    }
    return true;
}

} // namespace qwz
