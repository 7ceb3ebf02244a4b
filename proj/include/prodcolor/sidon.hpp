#pragma once

#include <optional>
#include <vector>

#include "prodcolor/budget.hpp"
#include "prodcolor/rational.hpp"

namespace prodcolor {

// A set S of positive integers is k-multiplicative when a*x = b*y with
// a, b in [1,k] and x, y in S forces a = b and x = y. Equivalently: distinct
// x, y in S never satisfy max(x,y)/gcd(x,y) <= k.

struct SidonSet {
    int k = 1;
    std::vector<long long> elements;  // strictly increasing
};

// x split against the primes p <= k: exponents of those primes in x plus the
// leftover factor coprime to all of them.
struct FactorProfile {
    std::vector<int> small_prime_exponents;  // parallel to primes_up_to(k)
    long long coprime_part = 1;
};

std::vector<long long> primes_up_to(long long k);
FactorProfile factor_profile(long long x, int k);

struct MultiplicativeViolation {
    long long a, b, x, y;  // a*x == b*y, (a,x) != (b,y)
};

// Quadruple scan straight from the definition: all x, y in S and a, b <= k.
// Quadratic in |S|*k, kept as the reference implementation.
std::optional<MultiplicativeViolation> find_violation_naive(
    const std::vector<long long>& elements, int k);

// Same answer via the pair characterization: distinct x < y collide iff
// y/gcd(x,y) <= k and x/gcd(x,y) <= k. Scans pairs in the same order as the
// naive version so both report the identical first witness.
std::optional<MultiplicativeViolation> find_violation(
    const std::vector<long long>& elements, int k);

bool is_k_multiplicative(const std::vector<long long>& elements, int k);
bool is_k_multiplicative_naive(const std::vector<long long>& elements, int k);

// The three constructions. Membership predicates are exposed so generators,
// tables and tests share one definition.
bool in_coprime_set(long long x, int k);           // gcd(x, prod of primes <= k) == 1
bool in_exponent_multiple_set(long long x, int k); // every small-prime exponent of x
                                                   // is a multiple of floor(log_p k)+1

SidonSet generate_R(int k, int count);              // first `count` of {x : x = 1 mod k}
SidonSet generate_S(int k, long long limit);        // coprime set up to limit
SidonSet generate_T(int k, long long limit);        // exponent-multiple set up to limit
SidonSet first_n_S(int k, int count);
SidonSet first_n_T(int k, int count);

Rational density_R(int k);  // 1/k
Rational density_S(int k);  // prod (1 - 1/p) over primes p <= k
Rational density_T(int k);  // density_S(k) * prod (1 + 1/(p^alpha - 1))

// Connected components of the auxiliary graph on [1,n] whose edges are the
// pairs x != y with a*x = b*y for some a, b <= k. Components are exactly the
// classes of equal coprime part; seed = that coprime part.
struct AuxGraphComponent {
    long long seed = 1;
    std::vector<long long> members;  // increasing
};
std::vector<AuxGraphComponent> aux_graph_components(long long n, int k);

// Exact maximum k-multiplicative subset of [1,n]: per-component maximum
// independent sets via branch and bound, then the lexicographically smallest
// witness. When the budget runs out the best set found so far is returned
// with optimal = false; it is always a valid k-multiplicative set.
struct MaxSidonResult {
    SidonSet set;
    bool optimal = true;
};
MaxSidonResult max_sidon_subset(long long n, int k, SearchBudget* budget = nullptr);

// Checks that in every component of the auxiliary graph with at least k
// vertices, every member has a closed neighbourhood of at least
// floor(sqrt(k)) vertices.
bool min_neighbourhood_check(long long n, int k);

}  // namespace prodcolor
