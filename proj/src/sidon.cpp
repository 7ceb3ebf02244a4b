#include "prodcolor/sidon.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace prodcolor {

namespace {

void check_k(int k) {
    if (k < 1) throw std::invalid_argument("need k >= 1");
}

void check_elements(const std::vector<long long>& elements) {
    for (long long x : elements)
        if (x < 1) throw std::invalid_argument("set elements must be positive");
}

// floor(log_p k) + 1: the smallest e with p^e > k.
int exponent_modulus(long long p, int k) {
    int e = 0;
    long long pw = 1;
    while (pw <= k) {
        pw *= p;
        ++e;
    }
    return e;
}

long long isqrt_floor(long long k) {
    long long r = 0;
    while ((r + 1) * (r + 1) <= k) ++r;
    return r;
}

// Set semantics regardless of input order or duplicates; also fixes the
// witness scan order for both violation finders.
std::vector<long long> normalized_elements(std::vector<long long> elements) {
    check_elements(elements);
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    return elements;
}

}  // namespace

std::vector<long long> primes_up_to(long long k) {
    std::vector<long long> primes;
    for (long long p = 2; p <= k; ++p) {
        bool prime = true;
        for (long long q = 2; q * q <= p; ++q)
            if (p % q == 0) {
                prime = false;
                break;
            }
        if (prime) primes.push_back(p);
    }
    return primes;
}

FactorProfile factor_profile(long long x, int k) {
    if (x < 1) throw std::invalid_argument("factor_profile: need x >= 1");
    check_k(k);
    FactorProfile fp;
    auto primes = primes_up_to(k);
    fp.small_prime_exponents.assign(primes.size(), 0);
    for (std::size_t i = 0; i < primes.size(); ++i)
        while (x % primes[i] == 0) {
            x /= primes[i];
            ++fp.small_prime_exponents[i];
        }
    fp.coprime_part = x;
    return fp;
}

std::optional<MultiplicativeViolation> find_violation_naive(
    const std::vector<long long>& elements, int k) {
    check_k(k);
    auto els = normalized_elements(elements);
    // a*x = b*y over all pairs, straight from the definition.
    for (std::size_t i = 0; i < els.size(); ++i)
        for (std::size_t j = i; j < els.size(); ++j) {
            long long x = els[i], y = els[j];
            for (long long a = 1; a <= k; ++a)
                for (long long b = 1; b <= k; ++b) {
                    if (x == y && a == b) continue;
                    if (a * x == b * y) return MultiplicativeViolation{a, b, x, y};
                }
        }
    return std::nullopt;
}

std::optional<MultiplicativeViolation> find_violation(
    const std::vector<long long>& elements, int k) {
    check_k(k);
    auto els = normalized_elements(elements);
    for (std::size_t i = 0; i < els.size(); ++i)
        for (std::size_t j = i + 1; j < els.size(); ++j) {
            long long x = els[i], y = els[j];
            long long g = std::gcd(x, y);
            // a*x = b*y has a solution with a,b <= k iff the smallest
            // solution a = y/g, b = x/g fits. That minimal pair is exactly
            // what the naive scan reports first.
            if (y / g <= k && x / g <= k)
                return MultiplicativeViolation{y / g, x / g, x, y};
        }
    return std::nullopt;
}

bool is_k_multiplicative(const std::vector<long long>& elements, int k) {
    return !find_violation(elements, k).has_value();
}

bool is_k_multiplicative_naive(const std::vector<long long>& elements, int k) {
    return !find_violation_naive(elements, k).has_value();
}

bool in_coprime_set(long long x, int k) {
    if (x < 1) throw std::invalid_argument("need x >= 1");
    check_k(k);
    for (long long p : primes_up_to(k))
        if (x % p == 0) return false;
    return true;
}

bool in_exponent_multiple_set(long long x, int k) {
    if (x < 1) throw std::invalid_argument("need x >= 1");
    check_k(k);
    auto primes = primes_up_to(k);
    for (std::size_t i = 0; i < primes.size(); ++i) {
        int e = 0;
        long long v = x;
        while (v % primes[i] == 0) {
            v /= primes[i];
            ++e;
        }
        if (e % exponent_modulus(primes[i], k) != 0) return false;
    }
    return true;
}

SidonSet generate_R(int k, int count) {
    check_k(k);
    if (count < 0) throw std::invalid_argument("generate_R: need count >= 0");
    SidonSet s;
    s.k = k;
    for (int i = 0; i < count; ++i) s.elements.push_back(1 + (long long)i * k);
    return s;
}

SidonSet generate_S(int k, long long limit) {
    check_k(k);
    SidonSet s;
    s.k = k;
    for (long long x = 1; x <= limit; ++x)
        if (in_coprime_set(x, k)) s.elements.push_back(x);
    return s;
}

SidonSet generate_T(int k, long long limit) {
    check_k(k);
    SidonSet s;
    s.k = k;
    for (long long x = 1; x <= limit; ++x)
        if (in_exponent_multiple_set(x, k)) s.elements.push_back(x);
    return s;
}

SidonSet first_n_S(int k, int count) {
    check_k(k);
    SidonSet s;
    s.k = k;
    for (long long x = 1; (int)s.elements.size() < count; ++x)
        if (in_coprime_set(x, k)) s.elements.push_back(x);
    return s;
}

SidonSet first_n_T(int k, int count) {
    check_k(k);
    SidonSet s;
    s.k = k;
    for (long long x = 1; (int)s.elements.size() < count; ++x)
        if (in_exponent_multiple_set(x, k)) s.elements.push_back(x);
    return s;
}

Rational density_R(int k) {
    check_k(k);
    return Rational(1, k);
}

Rational density_S(int k) {
    check_k(k);
    Rational d(1);
    for (long long p : primes_up_to(k)) d = d * Rational(p - 1, p);
    return d;
}

Rational density_T(int k) {
    check_k(k);
    Rational d = density_S(k);
    for (long long p : primes_up_to(k)) {
        long long pw = 1;
        for (int e = 0; e < exponent_modulus(p, k); ++e) pw *= p;
        d = d * Rational(pw, pw - 1);
    }
    return d;
}

std::vector<AuxGraphComponent> aux_graph_components(long long n, int k) {
    if (n < 1) throw std::invalid_argument("aux_graph_components: need n >= 1");
    check_k(k);
    // a*x = b*y forces equal coprime parts, and within one coprime class the
    // chain s, 2s, ... keeps the class connected, so classes = components.
    std::map<long long, std::vector<long long>> by_seed;
    for (long long x = 1; x <= n; ++x)
        by_seed[factor_profile(x, k).coprime_part].push_back(x);
    std::vector<AuxGraphComponent> comps;
    comps.reserve(by_seed.size());
    for (auto& [seed, members] : by_seed)
        comps.push_back(AuxGraphComponent{seed, std::move(members)});
    return comps;
}

namespace {

// Adjacency of one auxiliary-graph component: distinct members x < y are
// adjacent iff both x/gcd and y/gcd are at most k.
struct CompGraph {
    std::vector<long long> vals;          // increasing
    std::vector<std::vector<int>> adj;    // indices into vals
};

CompGraph build_comp_graph(const std::vector<long long>& members, int k) {
    CompGraph cg;
    cg.vals = members;
    cg.adj.assign(members.size(), {});
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            long long g = std::gcd(members[i], members[j]);
            if (members[j] / g <= k && members[i] / g <= k) {
                cg.adj[i].push_back((int)j);
                cg.adj[j].push_back((int)i);
            }
        }
    return cg;
}

// Branch and bound for the maximum independent set size within `cand`
// (index set, increasing). Branches on the highest-degree candidate; prunes
// when even taking every candidate cannot beat `best`.
int mis_size(const CompGraph& cg, std::vector<int> cand, int cur, int& best,
             SearchBudget& budget, bool& aborted) {
    if (!budget.spend()) {
        aborted = true;
        return 0;
    }
    if (cand.empty()) {
        best = std::max(best, cur);
        return 0;
    }
    if (cur + (int)cand.size() <= best) return 0;

    std::vector<char> in_cand(cg.vals.size(), 0);
    for (int v : cand) in_cand[v] = 1;
    int pick = cand[0], pick_deg = -1;
    for (int v : cand) {
        int d = 0;
        for (int w : cg.adj[v]) d += in_cand[w];
        if (d > pick_deg) {
            pick = v;
            pick_deg = d;
        }
    }

    std::vector<int> without;
    without.reserve(cand.size());
    for (int v : cand)
        if (v != pick) without.push_back(v);

    std::vector<int> with;
    with.reserve(without.size());
    for (int v : without)
        if (!std::binary_search(cg.adj[pick].begin(), cg.adj[pick].end(), v))
            with.push_back(v);

    mis_size(cg, std::move(with), cur + 1, best, budget, aborted);
    if (aborted) return 0;
    if (pick_deg > 0)  // excluding an isolated candidate never helps
        mis_size(cg, std::move(without), cur, best, budget, aborted);
    return 0;
}

int mis_size_of(const CompGraph& cg, const std::vector<int>& cand,
                SearchBudget& budget, bool& aborted) {
    int best = 0;
    mis_size(cg, cand, 0, best, budget, aborted);
    return best;
}

// Lexicographically smallest maximum independent set of the component, by
// value: fix the smallest feasible element, restrict to larger non-adjacent
// candidates, repeat.
std::vector<long long> mis_lex_smallest(const CompGraph& cg, SearchBudget& budget,
                                        bool& aborted) {
    std::vector<int> all(cg.vals.size());
    std::iota(all.begin(), all.end(), 0);
    int target = mis_size_of(cg, all, budget, aborted);
    if (aborted) return {};

    std::vector<long long> out;
    std::vector<int> cand = all;
    int need = target;
    while (need > 0 && !aborted) {
        bool advanced = false;
        for (std::size_t idx = 0; idx < cand.size() && !advanced; ++idx) {
            int v = cand[idx];
            std::vector<int> rest;
            for (std::size_t j = idx + 1; j < cand.size(); ++j) {
                int w = cand[j];
                if (!std::binary_search(cg.adj[v].begin(), cg.adj[v].end(), w))
                    rest.push_back(w);
            }
            int sub = mis_size_of(cg, rest, budget, aborted);
            if (aborted) break;
            if (1 + sub == need) {
                out.push_back(cg.vals[v]);
                cand = std::move(rest);
                --need;
                advanced = true;
            }
        }
        if (!advanced) break;  // only reachable after an abort
    }
    if (aborted) {
        // Best effort: pad the partial answer greedily; stays independent.
        std::vector<char> blocked(cg.vals.size(), 0);
        for (int v : cand) {
            if (blocked[v]) continue;
            out.push_back(cg.vals[v]);
            for (int w : cg.adj[v]) blocked[w] = 1;
        }
        std::sort(out.begin(), out.end());
    }
    return out;
}

// Greedy fallback once the budget is gone: smallest member, drop its
// neighbours, repeat. Independent, not necessarily maximum.
std::vector<long long> greedy_independent(const CompGraph& cg) {
    std::vector<char> dead(cg.vals.size(), 0);
    std::vector<long long> out;
    for (std::size_t i = 0; i < cg.vals.size(); ++i) {
        if (dead[i]) continue;
        out.push_back(cg.vals[i]);
        for (int w : cg.adj[i]) dead[w] = 1;
    }
    return out;
}

}  // namespace

MaxSidonResult max_sidon_subset(long long n, int k, SearchBudget* budget) {
    if (n < 1) throw std::invalid_argument("max_sidon_subset: need n >= 1");
    check_k(k);
    SearchBudget local(kDefaultSidonBudget);
    SearchBudget& b = budget ? *budget : local;

    MaxSidonResult res;
    res.set.k = k;
    bool aborted = false;
    for (const auto& comp : aux_graph_components(n, k)) {
        CompGraph cg = build_comp_graph(comp.members, k);
        std::vector<long long> chosen;
        if (!aborted) {
            chosen = mis_lex_smallest(cg, b, aborted);
            if (aborted && chosen.empty()) chosen = greedy_independent(cg);
        } else {
            chosen = greedy_independent(cg);
        }
        res.set.elements.insert(res.set.elements.end(), chosen.begin(), chosen.end());
    }
    std::sort(res.set.elements.begin(), res.set.elements.end());
    res.optimal = !aborted;
    return res;
}

bool min_neighbourhood_check(long long n, int k) {
    if (n < 1) throw std::invalid_argument("min_neighbourhood_check: need n >= 1");
    check_k(k);
    long long want = isqrt_floor(k);
    for (const auto& comp : aux_graph_components(n, k)) {
        if ((long long)comp.members.size() < k) continue;
        for (long long x : comp.members) {
            long long closed = 0;
            for (long long y : comp.members) {
                if (y == x) {
                    ++closed;
                    continue;
                }
                long long g = std::gcd(x, y);
                if (x / g <= k && y / g <= k) ++closed;
            }
            if (closed < want) return false;
        }
    }
    return true;
}

}  // namespace prodcolor
