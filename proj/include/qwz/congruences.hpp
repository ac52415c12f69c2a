#pragma once

#include "qwz/cyclotomic.hpp"
#include "qwz/identities.hpp"
#include "qwz/residue.hpp"

#include <map>
#include <string>
#include <vector>

namespace qwz {

// Exact truncated sum sum_{n=0}^{upper} summand(n) under a_subst: terms are
// accumulated as one formal sum and canonicalized once at the end (never
// reduced term by term).
struct PartialSumExact {
    std::string id;
    Monom a_subst;
    long upper = 0; // inclusive
    RatFuncQ value;
};

PartialSumExact partial_sum(const std::string& id, const Monom& a_subst,
                            long upper);

enum class CheckStatus { pass, fail, error };
std::string to_string(CheckStatus s);

// What actually happened at one truncation bound of a two-truncation check.
// claimed_ok is the congruence exactly as claimed; for the theorem checks
// weak_ok is the congruence with the modulus lowered by one power of
// Phi_m(q) (the strongest version these sums satisfy at every tested m),
// and phi_multiplicity is the measured multiplicity of Phi_m(q) in the
// difference (-1 when not applicable).  detail carries the residue or a
// truncated remainder for reports.
struct TruncationOutcome {
    long upper = 0;
    bool claimed_ok = false;
    bool weak_ok = false;
    long phi_multiplicity = -1;
    std::string detail;
};

// Outcome of one congruence check.  status reflects the claim being checked
// (pass only if it holds at every required truncation); status == error
// carries the cause in witness (a pole inside a term, or a denominator
// sharing a factor with the modulus); such results are reported, never
// silently skipped.
struct CongruenceResult {
    std::string name;
    std::string params;
    std::string modulus;
    CheckStatus status = CheckStatus::error;
    std::string witness;
    std::vector<TruncationOutcome> truncations;
    bool ok() const { return status == CheckStatus::pass; }
};

// Closed form of the terminating sums at a = q^{+-m}:
//   "level1-q-a": (-q)^((m-1)(m-3)/8) [m]          (m odd > 0)
//   "28n3-q-a":   q^(-(m-1)/2) [m] jacobi(-3, m)   (gcd(m, 6) = 1, m > 0)
RatFuncQ terminating_closed_form(const std::string& id, long m);

// All four terminating sums (upper = (m-1)/2 and m-1, at a = q^m and q^-m)
// equal the closed form exactly.
CongruenceResult terminating_evaluation_check(const std::string& id, long m);

// [m] divides the exact partial sum at a = 1 (level-1 family only; the
// other family's terms have root-of-unity poles before aggregation).
CongruenceResult cyclotomic_congruence_check(const std::string& id, long m,
                                             long upper);

// Claim: both truncated sums of the level-1 series at a = 1 are congruent
// to (-q)^((m-1)(m-3)/8) [m] modulo [m] Phi_m(q)^2, for odd m > 1.
//
// Exact computation refutes this modulus: the difference carries Phi_m(q)
// to the first power only (measured per truncation and reported), so the
// check fails while the weakened congruence modulo [m] holds.  The a-case
// congruence behind the claim does hold, but its quotient has a
// Phi_m(q)^2 denominator at a = 1, which is where the stated modulus
// breaks down.
CongruenceResult theorem1_check(long m);

// Claim: both truncated sums of the 28n+3 series at a = 1 are congruent to
// q^(-(m-1)/2) [m] jacobi(-3, m) modulo Phi_m(q)^2, for gcd(m, 6) = 1,
// m > 1.  Refuted the same way as theorem1_check: multiplicity one, so the
// weakened congruence modulo Phi_m(q) holds and the claim fails.  With
// strong_modulus the still stronger modulus [m] Phi_m(q)^2 is also tried
// and the outcome reported in the witness without affecting status.
CongruenceResult theorem2_check(long m, bool strong_modulus = false);

// Claim: both truncated classical sums (upper = (p-1)/2 and p-1) reduce to
// rhs.at(p) modulo p^k.  For the level-1 series this holds at the full
// truncation for every tested p but fails at the half truncation for
// p >= 5; for the 28n+3 series both truncations hold.  Residues for both
// truncations are always reported.
CongruenceResult supercongruence_check(const std::string& series_id, long p,
                                       int k,
                                       const std::map<long, ResidueClass>& rhs);

// Claimed right-hand sides: 15p jacobi(-2,p) mod p^3 for the level-1
// series, 3p jacobi(-3,p) mod p^2 for the 28n+3 series.
std::map<long, ResidueClass> level1_super_rhs(const std::vector<long>& ps);
std::map<long, ResidueClass> level2_super_rhs(const std::vector<long>& ps);

} // namespace qwz
