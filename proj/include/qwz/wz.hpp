#pragma once

#include "qwz/pochhammer.hpp"

#include <functional>
#include <string>
#include <vector>

namespace qwz {

// Total term function on Z x Z; negative arguments resolve through the
// Pochhammer extension, so every (n, k) yields a value, a symbolic zero or
// a tracked pole.
struct TermFunction {
    std::function<TermValue(long, long)> eval;
    std::string description;
    Monom a_subst = kAOne;

    TermValue operator()(long n, long k) const { return eval(n, k); }
};

struct WZPair {
    std::string id;
    TermFunction F;
    TermFunction G;
};

// Registered pairs by stable identifier: "guo", "guo-a", "pair3.2",
// "pair7", "pair7-q", "pair7-q-a".  The -a pairs substitute the free
// parameter with the monomial a_subst; the others ignore it.
WZPair wz_pair(const std::string& id, const Monom& a_subst = kAOne);
const std::vector<std::string>& wz_pair_ids();

// F(n+1,k) - F(n,k) - G(n,k+1) + G(n,k) as an unevaluated formal sum.
TermValue wz_residual_value(const WZPair& pair, long n, long k);
// Same, canonically expanded (expected to be an exact zero).
ExtTerm wz_residual(const WZPair& pair, long n, long k);

struct GridFailure {
    long n;
    long k;
    std::string witness;
};

struct GridReport {
    long cells = 0;
    std::vector<GridFailure> failures;
    bool ok() const { return failures.empty(); }
};

// Exact residual test over 0 <= n <= n_max, 0 <= k <= k_max, row-major.
GridReport check_grid(const WZPair& pair, long n_max, long k_max);

// Pair transformations; each output satisfies the relation whenever the
// input does.
WZPair transform_p1(const WZPair& pair); // F2(n,k) = F1(n, k+n)
WZPair transform_p2(const WZPair& pair); // F2(n,k) = F1(n, k-n)
WZPair transform_p3(const WZPair& pair); // F2(n,k) = F1(2n, k)
// p2 after p3, fused: F2(n,k) = F1(2n, k-n)
WZPair transform_p2p3(const WZPair& pair);

// sum_{n=0}^{N-1} (G(n,k+1) - G(n,k)) - (F(N,k) - F(0,k)), expected 0.
ExtTerm telescope_check(const WZPair& pair, long N, long k);

// G2(n, 0) of the derived pair: base "guo" via the fused p2∘p3 pattern,
// base "pair7-q" via p1.  This is the n-th summand of the corresponding
// derived series identity.
TermValue summand_of_derived_value(const std::string& base_id, long n,
                                   const Monom& a_subst = kAOne);
ExtTerm summand_of_derived_identity(const std::string& base_id, long n,
                                    const Monom& a_subst = kAOne);

// |F(N, k)| at q0: the numeric stand-in for vanishing at infinity.
Rational decay_sample(const WZPair& pair, long N, long k, const Rational& q0);

// Exact partial sum of G(n, k) over n < N at q0.
Rational partial_sum_G(const WZPair& pair, long N, long k, const Rational& q0);

// Negative control: returns the pair with G scaled by q (breaks the
// relation everywhere while keeping all terms finite).
WZPair corrupt_pair(const WZPair& pair);

} // namespace qwz
