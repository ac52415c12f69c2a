#include "qwz/cyclotomic.hpp"

#include "qwz/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace qwz {

std::vector<long> divisors(long n) {
    if (n <= 0)
        throw std::invalid_argument("divisors: argument must be positive");
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d)
                large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

namespace {

QPoly q_pow_minus_1(long n) {
    // q^n - 1
    QPoly p = QPoly::monomial(Rational(1), n);
    p.set_coeff(0, Rational(-1));
    return p;
}

const QPoly& cyclotomic_impl(long d, std::map<long, QPoly>& cache) {
    auto it = cache.find(d);
    if (it != cache.end())
        return it->second;
    QPoly p;
    if (d == 1) {
        p = QPoly::monomial(Rational(1), 1);
        p.set_coeff(0, Rational(-1));
    } else {
        p = q_pow_minus_1(d);
        for (long e : divisors(d))
            if (e < d)
                p = exact_divide(p, cyclotomic_impl(e, cache));
    }
    return cache.emplace(d, std::move(p)).first->second;
}

std::mutex cyclo_mutex;

} // namespace

QPoly cyclotomic(long d) {
    if (d < 1)
        throw std::invalid_argument("cyclotomic: index must be >= 1");
    std::lock_guard<std::mutex> lock(cyclo_mutex);
    static std::map<long, QPoly> cache;
    return cyclotomic_impl(d, cache);
}

QPoly qbracket(long n) {
    if (n < 0)
        throw std::invalid_argument("qbracket: negative index");
    std::vector<Rational> c(static_cast<size_t>(n), Rational(1));
    return QPoly(std::move(c));
}

Rational cyclotomic_at_one(long d) {
    if (d < 1)
        throw std::invalid_argument("cyclotomic_at_one: index must be >= 1");
    if (d == 1)
        return Rational(0);
    // d = p^j  =>  value p; otherwise 1.
    long m = d;
    long p = 0;
    for (long f = 2; f * f <= m; ++f) {
        if (m % f == 0) {
            p = f;
            while (m % f == 0)
                m /= f;
            break;
        }
    }
    if (p == 0)
        return Rational(d); // d itself prime
    return m == 1 ? Rational(p) : Rational(1);
}

} // namespace qwz
