#include "qwz/congruences.hpp"

#include "qwz/errors.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qwz {

namespace {

bool level1_family(const std::string& id) {
    return id == "new-level1-q" || id == "new-level1-q.cong" ||
           id == "level1-q-a";
}

std::string monom_str(const Monom& a) {
    std::ostringstream out;
    if (a.sign < 0)
        out << "-";
    if (a.e == 0)
        out << "1";
    else if (a.e == 1)
        out << "q";
    else
        out << "q^" << a.e;
    return out.str();
}

// remainder of the numerator body modulo the modulus (shift and denominator
// are units mod any polynomial with nonzero constant term)
std::string remainder_witness(const QPoly& modulus, const RatFuncQ& f) {
    QPoly body = f.num().body();
    auto [quot, rem] = divrem(body, modulus);
    (void)quot;
    return "remainder " + RatFuncQ(rem).str(40);
}

CongruenceResult error_result(CongruenceResult r, const char* kind,
                              const std::string& what) {
    r.status = CheckStatus::error;
    r.witness = std::string(kind) + ": " + what;
    return r;
}

// Multiplicity of phi in f: how often phi divides the numerator body minus
// how often it divides the denominator (the q-power unit carries no
// cyclotomic factor).  -1 for f == 0, where every multiplicity holds.
long phi_multiplicity(const QPoly& phi, const RatFuncQ& f) {
    if (f.is_zero())
        return -1;
    long mult = 0;
    QPoly num = f.num().body();
    while (divides_poly(phi, num)) {
        num = exact_divide(num, phi);
        ++mult;
    }
    QPoly den = f.den();
    while (divides_poly(phi, den)) {
        den = exact_divide(den, phi);
        --mult;
    }
    return mult;
}

std::string theorem_truncation_witness(const CongruenceResult& res,
                                       const std::string& weak_name) {
    std::ostringstream out;
    for (const TruncationOutcome& t : res.truncations) {
        if (&t != &res.truncations.front())
            out << "; ";
        out << "upper=" << t.upper << ": claimed modulus "
            << (t.claimed_ok ? "holds" : "fails") << " (Phi-multiplicity "
            << t.phi_multiplicity << "), mod " << weak_name << " "
            << (t.weak_ok ? "holds" : "fails");
    }
    return out.str();
}

template <class Fn>
CongruenceResult guarded(CongruenceResult r, Fn&& fn) {
    try {
        return fn(std::move(r));
    } catch (const pole_in_term& e) {
        return error_result(std::move(r), "pole-in-term", e.what());
    } catch (const non_invertible_denominator& e) {
        return error_result(std::move(r), "non-invertible-denominator",
                            e.what());
    } catch (const error& e) {
        return error_result(std::move(r), "domain-error", e.what());
    }
}

} // namespace

std::string to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass:
        return "pass";
    case CheckStatus::fail:
        return "fail";
    default:
        return "error";
    }
}

PartialSumExact partial_sum(const std::string& id, const Monom& a_subst,
                            long upper) {
    if (upper < 0)
        throw std::invalid_argument("partial_sum: negative upper index");
    const IdentitySpec& spec = identity(id);
    TermValue acc;
    for (long n = 0; n <= upper; ++n) {
        TermValue term = spec.summand(n, a_subst);
        for (const QProduct& part : term.parts())
            if (part.zero_order() < 0)
                throw pole_in_term("partial_sum: pole in term n=" +
                                       std::to_string(n) + " of \"" + id +
                                       "\"",
                                   n);
        acc += term;
    }
    ExtTerm e = acc.expand();
    PartialSumExact out{id, a_subst, upper, RatFuncQ()};
    if (e.zero_order == 0)
        out.value = e.value;
    else if (e.zero_order < 0)
        throw pole_in_term("partial_sum: aggregated sum is a pole", -1);
    return out;
}

RatFuncQ terminating_closed_form(const std::string& id, long m) {
    if (id == "level1-q-a") {
        if (m <= 0 || m % 2 == 0)
            throw std::invalid_argument(
                "terminating_closed_form: need odd m > 0");
        long e = (m - 1) * (m - 3) / 8;
        Rational sign = (e % 2 != 0) ? Rational(-1) : Rational(1);
        return RatFuncQ::monomial(sign, e) * RatFuncQ(qbracket(m));
    }
    if (id == "28n3-q-a") {
        if (m <= 0 || std::gcd(m, 6L) != 1)
            throw std::invalid_argument(
                "terminating_closed_form: need m > 0 coprime to 6");
        int j = jacobi(BigInt(-3), BigInt(m));
        return RatFuncQ::monomial(Rational(j), -(m - 1) / 2) *
               RatFuncQ(qbracket(m));
    }
    throw std::invalid_argument(
        "terminating_closed_form: no terminating family \"" + id + "\"");
}

CongruenceResult terminating_evaluation_check(const std::string& id, long m) {
    CongruenceResult r;
    r.name = "terminating-evaluation";
    r.params = "id=" + id + " m=" + std::to_string(m);
    r.modulus = "exact equality";
    return guarded(std::move(r), [&](CongruenceResult res) {
        RatFuncQ closed = terminating_closed_form(id, m);
        for (const Monom a : {Monom{1, m}, Monom{1, -m}}) {
            for (const long upper : {(m - 1) / 2, m - 1}) {
                RatFuncQ sum = partial_sum(id, a, upper).value;
                if (sum != closed) {
                    res.status = CheckStatus::fail;
                    res.witness = "a=" + monom_str(a) +
                                  " upper=" + std::to_string(upper) +
                                  " sum " + sum.str(40) + " != " +
                                  closed.str(40);
                    return res;
                }
            }
        }
        res.status = CheckStatus::pass;
        res.witness = "all four sums = " + closed.str(40);
        return res;
    });
}

CongruenceResult cyclotomic_congruence_check(const std::string& id, long m,
                                             long upper) {
    if (m <= 1 || m % 2 == 0)
        throw std::invalid_argument(
            "cyclotomic_congruence_check: need odd m > 1");
    if (!level1_family(id))
        throw std::invalid_argument("cyclotomic_congruence_check: \"" + id +
                                    "\" is outside the level-1 family");
    CongruenceResult r;
    r.name = "cyclotomic-congruence";
    r.params = "id=" + id + " m=" + std::to_string(m) +
               " upper=" + std::to_string(upper);
    r.modulus = "[" + std::to_string(m) + "]";
    return guarded(std::move(r), [&](CongruenceResult res) {
        QPoly modulus = qbracket(m);
        RatFuncQ sum = partial_sum(id, kAOne, upper).value;
        if (divides(modulus, sum)) {
            res.status = CheckStatus::pass;
            res.witness = "sum == 0 (mod [" + std::to_string(m) + "])";
        } else {
            res.status = CheckStatus::fail;
            res.witness = remainder_witness(modulus, sum);
        }
        return res;
    });
}

CongruenceResult theorem1_check(long m) {
    if (m <= 1 || m % 2 == 0)
        throw std::invalid_argument("theorem1_check: need odd m > 1");
    CongruenceResult r;
    r.name = "theorem1";
    r.params = "m=" + std::to_string(m);
    r.modulus = "[" + std::to_string(m) + "]*Phi_" + std::to_string(m) + "^2";
    return guarded(std::move(r), [&](CongruenceResult res) {
        QPoly phi = cyclotomic(m);
        QPoly bracket = qbracket(m);
        QPoly claimed = bracket * phi * phi;
        RatFuncQ rhs = terminating_closed_form("level1-q-a", m);
        bool all_claimed = true;
        for (const long upper : {(m - 1) / 2, m - 1}) {
            RatFuncQ diff =
                partial_sum("new-level1-q.cong", kAOne, upper).value - rhs;
            TruncationOutcome t;
            t.upper = upper;
            t.claimed_ok = divides(claimed, diff);
            t.weak_ok = divides(bracket, diff);
            t.phi_multiplicity = phi_multiplicity(phi, diff);
            t.detail = t.claimed_ok ? "remainder 0"
                                    : remainder_witness(claimed, diff);
            all_claimed = all_claimed && t.claimed_ok;
            res.truncations.push_back(std::move(t));
        }
        res.status = all_claimed ? CheckStatus::pass : CheckStatus::fail;
        res.witness = theorem_truncation_witness(
            res, "[" + std::to_string(m) + "]");
        return res;
    });
}

CongruenceResult theorem2_check(long m, bool strong_modulus) {
    if (m <= 1 || std::gcd(m, 6L) != 1)
        throw std::invalid_argument(
            "theorem2_check: need m > 1 coprime to 6");
    CongruenceResult r;
    r.name = "theorem2";
    r.params = "m=" + std::to_string(m);
    r.modulus = "Phi_" + std::to_string(m) + "^2";
    return guarded(std::move(r), [&](CongruenceResult res) {
        QPoly phi = cyclotomic(m);
        QPoly claimed = phi * phi;
        RatFuncQ rhs = terminating_closed_form("28n3-q-a", m);
        // q^((m-1)/2) clears the Laurent shift of the difference; it is a
        // unit modulo Phi_m, so divisibility is unaffected.
        RatFuncQ unit = RatFuncQ::monomial(Rational(1), (m - 1) / 2);
        bool all_claimed = true;
        bool strong_ok = strong_modulus;
        for (const long upper : {(m - 1) / 2, m - 1}) {
            RatFuncQ diff =
                (partial_sum("28n3-q.cong", kAOne, upper).value - rhs) * unit;
            TruncationOutcome t;
            t.upper = upper;
            t.claimed_ok = divides(claimed, diff);
            t.weak_ok = divides(phi, diff);
            t.phi_multiplicity = phi_multiplicity(phi, diff);
            t.detail = t.claimed_ok ? "remainder 0"
                                    : remainder_witness(claimed, diff);
            all_claimed = all_claimed && t.claimed_ok;
            res.truncations.push_back(std::move(t));
            if (strong_modulus && !divides(qbracket(m) * claimed, diff))
                strong_ok = false;
        }
        res.status = all_claimed ? CheckStatus::pass : CheckStatus::fail;
        res.witness = theorem_truncation_witness(
            res, "Phi_" + std::to_string(m));
        if (strong_modulus)
            res.witness += strong_ok
                               ? "; exploratory modulus [m]*Phi^2 also holds"
                               : "; exploratory modulus [m]*Phi^2 fails";
        return res;
    });
}

CongruenceResult supercongruence_check(
    const std::string& series_id, long p, int k,
    const std::map<long, ResidueClass>& rhs) {
    if (!is_prime(BigInt(p)))
        throw std::invalid_argument("supercongruence_check: p must be prime");
    if (k < 1)
        throw std::invalid_argument("supercongruence_check: need k >= 1");
    auto it = rhs.find(p);
    if (it == rhs.end())
        throw std::invalid_argument(
            "supercongruence_check: no right-hand side for p=" +
            std::to_string(p));
    BigInt modulus = bigint_pow(BigInt(p), static_cast<unsigned long>(k));
    if (it->second.modulus() != modulus)
        throw modulus_mismatch("supercongruence_check: rhs modulus " +
                               it->second.modulus().str() + " != p^k");
    CongruenceResult r;
    r.name = "supercongruence";
    r.params = "id=" + series_id + " p=" + std::to_string(p) +
               " k=" + std::to_string(k);
    r.modulus = modulus.str();
    return guarded(std::move(r), [&](CongruenceResult res) {
        bool all_ok = true;
        std::ostringstream wit;
        for (const long upper : {(p - 1) / 2, p - 1}) {
            Rational sum = exact_partial_sum(series_id, kAOne, Rational(0),
                                             upper + 1);
            ResidueClass got = mod_reduce(sum, modulus);
            TruncationOutcome t;
            t.upper = upper;
            t.claimed_ok = (got == it->second);
            t.detail = "sum == " + got.value().str() + ", expected " +
                       it->second.value().str() + " (mod " + modulus.str() +
                       ")";
            if (!wit.str().empty())
                wit << "; ";
            wit << "upper=" << upper << " "
                << (t.claimed_ok ? "== " + got.value().str()
                                 : t.detail);
            all_ok = all_ok && t.claimed_ok;
            res.truncations.push_back(std::move(t));
        }
        res.status = all_ok ? CheckStatus::pass : CheckStatus::fail;
        res.witness = wit.str() + " (mod " + modulus.str() + ")";
        return res;
    });
}

std::map<long, ResidueClass> level1_super_rhs(const std::vector<long>& ps) {
    std::map<long, ResidueClass> out;
    for (long p : ps) {
        BigInt modulus = bigint_pow(BigInt(p), 3);
        BigInt v = BigInt(15) * p * jacobi(BigInt(-2), BigInt(p));
        out.emplace(p, mod_reduce(Rational(v), modulus));
    }
    return out;
}

std::map<long, ResidueClass> level2_super_rhs(const std::vector<long>& ps) {
    std::map<long, ResidueClass> out;
    for (long p : ps) {
        BigInt modulus = bigint_pow(BigInt(p), 2);
        BigInt v = BigInt(3) * p * jacobi(BigInt(-3), BigInt(p));
        out.emplace(p, mod_reduce(Rational(v), modulus));
    }
    return out;
}

} // namespace qwz
