#include "qwz/wz.hpp"

#include "qwz/errors.hpp"

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

QProduct cpoch(const Rational& x, long len) {
    return QProduct::pochhammer_classical(x, len);
}

Rational half() { return Rational(1) / 2; }

// (F-Guo, G-Guo)
TermValue guo_F(long n, long k) {
    QProduct p = QProduct::sign_pow(n + k);
    p *= QProduct::monomial((n + k) * (3 * n - k));
    p *= poch(1, 1, 2, n - k - 1);
    p *= poch(1, 1, 2, n + k).pow(2);
    p *= poch(1, 4, 4, n - 1).pow(2).reciprocal();
    p *= poch(1, 4, 4, n + k).reciprocal();
    p *= QProduct::binomial(1, 1).reciprocal();
    return p;
}

TermValue guo_G(long n, long k) {
    QProduct p = QProduct::sign_pow(n + k);
    p *= QProduct::monomial((n + k) * (3 * n - k));
    p *= poch(1, 1, 2, n - k);
    p *= poch(1, 1, 2, n + k).pow(2);
    p *= poch(1, 4, 4, n).pow(2).reciprocal();
    p *= poch(1, 4, 4, n + k).reciprocal();
    p *= QProduct::qbracket_term(6 * n + 2 * k + 1);
    return p;
}

// a-generalized version of (F-Guo, G-Guo)
TermValue guo_a_F(long n, long k, const Monom& a) {
    QProduct p = QProduct::sign_pow(n + k);
    p *= QProduct::monomial((n + k) * (3 * n - k));
    p *= poch(1, 1, 2, n - k - 1);
    p *= poch(PochSpec{1, 1, 1, 2}, a, n + k);
    p *= poch(PochSpec{1, 1, -1, 2}, a, n + k);
    p *= poch(1, 4, 4, n + k).reciprocal();
    p *= poch(PochSpec{1, 4, 1, 4}, a, n - 1).reciprocal();
    p *= poch(PochSpec{1, 4, -1, 4}, a, n - 1).reciprocal();
    p *= QProduct::binomial(1, 1).reciprocal();
    return p;
}

TermValue guo_a_G(long n, long k, const Monom& a) {
    QProduct p = QProduct::sign_pow(n + k);
    p *= QProduct::monomial((n + k) * (3 * n - k));
    p *= poch(1, 1, 2, n - k);
    p *= poch(PochSpec{1, 1, 1, 2}, a, n + k);
    p *= poch(PochSpec{1, 1, -1, 2}, a, n + k);
    p *= poch(1, 4, 4, n + k).reciprocal();
    p *= poch(PochSpec{1, 4, 1, 4}, a, n).reciprocal();
    p *= poch(PochSpec{1, 4, -1, 4}, a, n).reciprocal();
    p *= QProduct::qbracket_term(6 * n + 2 * k + 1);
    return p;
}

// classical pair behind (F-Guo, G-Guo), in the supercongruence-friendly form
TermValue pair32_F(long n, long k) {
    QProduct p = QProduct::from_rational(Rational(8));
    p *= QProduct::sign_pow(n + k);
    p *= QProduct::from_rational(rational_pow(half(), 3 * n + k));
    p *= cpoch(half(), n - k - 1);
    p *= cpoch(half(), n + k).pow(2);
    p *= cpoch(Rational(1), n - 1).pow(2).reciprocal();
    p *= cpoch(Rational(1), n + k).reciprocal();
    return p;
}

TermValue pair32_G(long n, long k) {
    QProduct p = QProduct::sign_pow(n + k);
    p *= QProduct::from_rational(rational_pow(half(), 3 * n + k));
    p *= cpoch(half(), n - k);
    p *= cpoch(half(), n + k).pow(2);
    p *= cpoch(Rational(1), n).pow(2).reciprocal();
    p *= cpoch(Rational(1), n + k).reciprocal();
    p *= QProduct::from_rational(Rational(6 * n + 2 * k + 1));
    return p;
}

// (F-8n1, G-8n1)
TermValue pair7_F(long n, long k) {
    QProduct p = QProduct::from_rational(Rational(18));
    p *= QProduct::sign_pow(k);
    p *= QProduct::from_rational(rational_pow(Rational(3), k - 2 * n));
    p *= cpoch(half(), n + k).pow(2);
    p *= cpoch(half(), 2 * n - k - 1);
    p *= cpoch(half(), k);
    p *= cpoch(Rational(1), n - 1).pow(2).reciprocal();
    p *= cpoch(Rational(1), 2 * n + 2 * k).reciprocal();
    return p;
}

TermValue pair7_G(long n, long k) {
    QProduct p = QProduct::sign_pow(k);
    p *= QProduct::from_rational(rational_pow(Rational(3), k - 2 * n));
    p *= cpoch(half(), n + k).pow(2);
    p *= cpoch(half(), 2 * n - k);
    p *= cpoch(half(), k);
    p *= cpoch(Rational(1), n).pow(2).reciprocal();
    p *= cpoch(Rational(1), 2 * n + 2 * k).reciprocal();
    p *= QProduct::from_rational(Rational(8 * n + 2 * k + 1));
    return p;
}

// (F1-q-8n1, G1-q-8n1)
TermValue pair7q_F(long n, long k) {
    QProduct p = QProduct::sign_pow(k);
    p *= QProduct::monomial(2 * n * n + 4 * n * k - k * k);
    p *= poch(1, 1, 2, n + k).pow(2);
    p *= poch(1, 1, 2, 2 * n - k - 1);
    p *= poch(1, 3, 6, k);
    p *= poch(1, 6, 6, n - 1).pow(2).reciprocal();
    p *= poch(1, 2, 2, 2 * n + 2 * k).reciprocal();
    p *= QProduct::binomial(1, 1).reciprocal();
    return p;
}

TermValue pair7q_G(long n, long k) {
    QProduct p = QProduct::sign_pow(k);
    p *= QProduct::monomial(2 * n * n + 4 * n * k - k * k);
    p *= poch(1, 1, 2, n + k).pow(2);
    p *= poch(1, 1, 2, 2 * n - k);
    p *= poch(1, 3, 6, k);
    p *= poch(1, 6, 6, n).pow(2).reciprocal();
    p *= poch(1, 2, 2, 2 * n + 2 * k).reciprocal();
    p *= QProduct::qbracket_term(8 * n + 2 * k + 1);
    return p;
}

// (F1-q-8n1-a, G1-q-8n1-a)
TermValue pair7qa_F(long n, long k, const Monom& a) {
    QProduct p = QProduct::sign_pow(k);
    p *= QProduct::monomial(2 * n * n + 4 * n * k - k * k);
    p *= poch(PochSpec{1, 1, 1, 2}, a, n + k);
    p *= poch(PochSpec{1, 1, -1, 2}, a, n + k);
    p *= poch(1, 1, 2, 2 * n - k - 1);
    p *= poch(1, 3, 6, k);
    p *= poch(PochSpec{1, 6, 1, 6}, a, n - 1).reciprocal();
    p *= poch(PochSpec{1, 6, -1, 6}, a, n - 1).reciprocal();
    p *= poch(1, 2, 2, 2 * n + 2 * k).reciprocal();
    p *= QProduct::binomial(1, 1).reciprocal();
    return p;
}

TermValue pair7qa_G(long n, long k, const Monom& a) {
    QProduct p = QProduct::sign_pow(k);
    p *= QProduct::monomial(2 * n * n + 4 * n * k - k * k);
    p *= poch(PochSpec{1, 1, 1, 2}, a, n + k);
    p *= poch(PochSpec{1, 1, -1, 2}, a, n + k);
    p *= poch(1, 1, 2, 2 * n - k);
    p *= poch(1, 3, 6, k);
    p *= poch(PochSpec{1, 6, 1, 6}, a, n).reciprocal();
    p *= poch(PochSpec{1, 6, -1, 6}, a, n).reciprocal();
    p *= poch(1, 2, 2, 2 * n + 2 * k).reciprocal();
    p *= QProduct::qbracket_term(8 * n + 2 * k + 1);
    return p;
}

} // namespace

const std::vector<std::string>& wz_pair_ids() {
    static const std::vector<std::string> ids = {
        "guo", "guo-a", "pair3.2", "pair7", "pair7-q", "pair7-q-a"};
    return ids;
}

WZPair wz_pair(const std::string& id, const Monom& a_subst) {
    WZPair p;
    p.id = id;
    p.F.a_subst = a_subst;
    p.G.a_subst = a_subst;
    if (id == "guo") {
        p.F.eval = guo_F;
        p.G.eval = guo_G;
        p.F.description = "alternating q-pair, exponent (n+k)(3n-k)";
    } else if (id == "guo-a") {
        p.F.eval = [a_subst](long n, long k) { return guo_a_F(n, k, a_subst); };
        p.G.eval = [a_subst](long n, long k) { return guo_a_G(n, k, a_subst); };
        p.F.description = "a-generalized alternating q-pair";
    } else if (id == "pair3.2") {
        p.F.eval = pair32_F;
        p.G.eval = pair32_G;
        p.F.description = "classical pair with G carrying (6n+2k+1)/2^(3n+k)";
    } else if (id == "pair7") {
        p.F.eval = pair7_F;
        p.G.eval = pair7_G;
        p.F.description = "classical pair with G carrying (8n+2k+1)3^(k-2n)";
    } else if (id == "pair7-q") {
        p.F.eval = pair7q_F;
        p.G.eval = pair7q_G;
        p.F.description = "q-pair with exponent 2n^2+4nk-k^2";
    } else if (id == "pair7-q-a") {
        p.F.eval = [a_subst](long n, long k) {
            return pair7qa_F(n, k, a_subst);
        };
        p.G.eval = [a_subst](long n, long k) {
            return pair7qa_G(n, k, a_subst);
        };
        p.F.description = "a-generalized q-pair with exponent 2n^2+4nk-k^2";
    } else {
        throw std::invalid_argument("wz_pair: unknown id \"" + id + "\"");
    }
    p.G.description = p.F.description;
    return p;
}

TermValue wz_residual_value(const WZPair& pair, long n, long k) {
    TermValue r = pair.F(n + 1, k);
    r -= pair.F(n, k);
    r -= pair.G(n, k + 1);
    r += pair.G(n, k);
    return r;
}

namespace {

[[noreturn]] void rethrow_in_relation(const std::string& what,
                                      const std::string& id, long n, long k,
                                      const pole_error& e) {
    throw pole_in_relation(what + "(" + id + ", n=" + std::to_string(n) +
                           ", k=" + std::to_string(k) + "): " + e.what());
}

} // namespace

ExtTerm wz_residual(const WZPair& pair, long n, long k) {
    try {
        return wz_residual_value(pair, n, k).expand();
    } catch (const pole_error& e) {
        rethrow_in_relation("wz_residual", pair.id, n, k, e);
    }
}

GridReport check_grid(const WZPair& pair, long n_max, long k_max) {
    if (n_max < 0 || k_max < 0)
        throw std::invalid_argument("check_grid: negative grid bounds");
    GridReport report;
    for (long n = 0; n <= n_max; ++n) {
        for (long k = 0; k <= k_max; ++k) {
            ++report.cells;
            try {
                TermValue r = wz_residual_value(pair, n, k);
                if (!r.is_exact_zero())
                    report.failures.push_back(
                        {n, k, r.expand().value.str(40)});
            } catch (const pole_error& e) {
                rethrow_in_relation("check_grid", pair.id, n, k, e);
            }
        }
    }
    return report;
}

WZPair transform_p1(const WZPair& pair) {
    auto F1 = pair.F.eval;
    auto G1 = pair.G.eval;
    WZPair out;
    out.id = pair.id + "+p1";
    out.F.a_subst = pair.F.a_subst;
    out.G.a_subst = pair.G.a_subst;
    out.F.description = pair.F.description + ", diagonal shift";
    out.G.description = out.F.description;
    out.F.eval = [F1](long n, long k) { return F1(n, k + n); };
    out.G.eval = [F1, G1](long n, long k) {
        return F1(n + 1, k + n) + G1(n, k + n);
    };
    return out;
}

WZPair transform_p2(const WZPair& pair) {
    auto F1 = pair.F.eval;
    auto G1 = pair.G.eval;
    WZPair out;
    out.id = pair.id + "+p2";
    out.F.a_subst = pair.F.a_subst;
    out.G.a_subst = pair.G.a_subst;
    out.F.description = pair.F.description + ", backward diagonal shift";
    out.G.description = out.F.description;
    out.F.eval = [F1](long n, long k) { return F1(n, k - n); };
    out.G.eval = [F1, G1](long n, long k) {
        return -F1(n + 1, k - n - 1) + G1(n, k - n);
    };
    return out;
}

WZPair transform_p3(const WZPair& pair) {
    auto F1 = pair.F.eval;
    auto G1 = pair.G.eval;
    WZPair out;
    out.id = pair.id + "+p3";
    out.F.a_subst = pair.F.a_subst;
    out.G.a_subst = pair.G.a_subst;
    out.F.description = pair.F.description + ", index doubling";
    out.G.description = out.F.description;
    out.F.eval = [F1](long n, long k) { return F1(2 * n, k); };
    out.G.eval = [G1](long n, long k) {
        return G1(2 * n, k) + G1(2 * n + 1, k);
    };
    return out;
}

WZPair transform_p2p3(const WZPair& pair) {
    auto F1 = pair.F.eval;
    auto G1 = pair.G.eval;
    WZPair out;
    out.id = pair.id + "+p2p3";
    out.F.a_subst = pair.F.a_subst;
    out.G.a_subst = pair.G.a_subst;
    out.F.description = pair.F.description + ", doubled backward diagonal";
    out.G.description = out.F.description;
    out.F.eval = [F1](long n, long k) { return F1(2 * n, k - n); };
    out.G.eval = [F1, G1](long n, long k) {
        return -F1(2 * n + 2, k - n - 1) + G1(2 * n, k - n) +
               G1(2 * n + 1, k - n);
    };
    return out;
}

ExtTerm telescope_check(const WZPair& pair, long N, long k) {
    if (N < 0)
        throw std::invalid_argument("telescope_check: negative N");
    try {
        TermValue acc;
        for (long n = 0; n < N; ++n) {
            acc += pair.G(n, k + 1);
            acc -= pair.G(n, k);
        }
        acc -= pair.F(N, k);
        acc += pair.F(0, k);
        return acc.expand();
    } catch (const pole_error& e) {
        rethrow_in_relation("telescope_check", pair.id, N, k, e);
    }
}

TermValue summand_of_derived_value(const std::string& base_id, long n,
                                   const Monom& a_subst) {
    if (n < 0)
        throw std::invalid_argument("summand_of_derived_value: negative n");
    if (base_id == "guo" || base_id == "guo-a") {
        WZPair derived = transform_p2p3(wz_pair(base_id, a_subst));
        return derived.G(n, 0);
    }
    if (base_id == "pair7-q" || base_id == "pair7-q-a") {
        WZPair derived = transform_p1(wz_pair(base_id, a_subst));
        return derived.G(n, 0);
    }
    throw std::invalid_argument(
        "summand_of_derived_value: no derived identity for \"" + base_id +
        "\"");
}

ExtTerm summand_of_derived_identity(const std::string& base_id, long n,
                                    const Monom& a_subst) {
    try {
        return summand_of_derived_value(base_id, n, a_subst).expand();
    } catch (const pole_error& e) {
        rethrow_in_relation("summand_of_derived_identity", base_id, n, 0, e);
    }
}

Rational decay_sample(const WZPair& pair, long N, long k,
                      const Rational& q0) {
    try {
        ExtRational v = pair.F(N, k).eval(q0);
        if (v.is_pole())
            throw pole_error("decay_sample: pole value");
        return v.is_zero() ? Rational(0) : abs(v.value);
    } catch (const pole_error& e) {
        rethrow_in_relation("decay_sample", pair.id, N, k, e);
    }
}

Rational partial_sum_G(const WZPair& pair, long N, long k,
                       const Rational& q0) {
    if (N < 0)
        throw std::invalid_argument("partial_sum_G: negative N");
    try {
        ExtRational acc = ExtRational::zero();
        for (long n = 0; n < N; ++n)
            acc = acc + pair.G(n, k).eval(q0);
        return acc.is_zero() ? Rational(0) : acc.value;
    } catch (const pole_error& e) {
        rethrow_in_relation("partial_sum_G", pair.id, N, k, e);
    }
}

WZPair corrupt_pair(const WZPair& pair) {
    auto G = pair.G.eval;
    WZPair out = pair;
    out.id = pair.id + "+corrupt";
    out.G.description = pair.G.description + ", G scaled by q";
    out.G.eval = [G](long n, long k) {
        return TermValue(QProduct::monomial(1)) * G(n, k);
    };
    return out;
}

} // namespace qwz
