#pragma once

#include "qwz/pochhammer.hpp"

#include <functional>
#include <string>
#include <vector>

namespace qwz {

// Closed constant of a classical series: coeff * sqrt(sqrt_arg) / pi.
struct ClosedConstant {
    Rational coeff;
    long sqrt_arg = 1;
};

// One registered series identity: a q-series with an infinite-product
// right-hand side, or a classical series with a closed 1/pi constant.
struct IdentitySpec {
    std::string id;
    bool is_q = true;
    bool uses_a = false;
    // n-th summand; the Monom is the free-parameter substitution and is
    // ignored by identities without the parameter.
    std::function<TermValue(long, const Monom&)> summand;
    InfiniteProductSpec rhs;          // q identities
    ClosedConstant closed;            // classical identities
    std::string classical_companion;  // optional; q identities only
    Rational limit_scale = Rational(1);
};

const IdentitySpec& identity(const std::string& id);
const std::vector<std::string>& identity_ids();

// Exact partial sum over n < n_terms at rational q0 (for classical series
// q0 is ignored).
Rational exact_partial_sum(const std::string& id, const Monom& a_subst,
                           const Rational& q0, long n_terms);

// |exact partial sum - infinite-product right-hand side| in high precision.
Real verify_numeric(const std::string& id, const Monom& a_subst,
                    const Rational& q0, long n_terms, unsigned precision);

// Term-by-term limit q -> 1: limit(summand(n)) vs limit_scale * classical
// companion summand, as exact rationals.
struct LimitCheck {
    long n;
    Rational q_limit;
    Rational classical_scaled;
    bool ok;
};
std::vector<LimitCheck> verify_limit_terms(const std::string& id, long n_max);

// |exact classical partial sum - closed constant|, pi taken with guard
// digits beyond the requested precision.
Real classical_value(const std::string& id, long n_terms, unsigned precision);

// Exact equality of two registered summand forms for 0 <= n <= n_max.
bool summand_form_equivalence(const std::string& id_a, const std::string& id_b,
                              long n_max, const Monom& a_subst = kAOne);

} // namespace qwz
