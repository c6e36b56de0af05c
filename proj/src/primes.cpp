#include <confcause/primes.hpp>

#include <confcause/errors.hpp>

#include "bdd_store.hpp"

#include <algorithm>
#include <unordered_map>

namespace confcause {

namespace {

struct cube64 {
    std::uint64_t support;
    std::uint64_t values;
};

// semantics(q) subseteq semantics(p)
bool cube_covers(const cube64& p, const cube64& q)
{
    return (q.support & p.support) == p.support &&
           ((q.values ^ p.values) & p.support) == 0;
}

bool covered_by_any(const std::vector<cube64>& primes, const cube64& q)
{
    for (const auto& p : primes)
        if (cube_covers(p, q))
            return true;
    return false;
}

// Shannon-style prime computation. For a node testing x with cofactors f0/f1:
// the primes not mentioning x are exactly the primes of f0 & f1, and a prime
// q of f0 (resp. f1) yields the prime !x & q (resp. x & q) iff q is not
// already an implicant of f0 & f1. A cube is an implicant of a set iff some
// prime of the set covers it, so the consensus filter runs on cubes alone.
const std::vector<cube64>& primes_rec(
    detail::bdd_store& store, std::uint32_t n,
    std::unordered_map<std::uint32_t, std::vector<cube64>>& memo)
{
    if (auto it = memo.find(n); it != memo.end())
        return it->second;

    std::vector<cube64> result;
    if (n == detail::bdd_store::terminal_true) {
        result.push_back({0, 0});
    } else if (n != detail::bdd_store::terminal_false) {
        const int var = store.var_of(n);
        const std::uint64_t var_bit = std::uint64_t{1} << var;
        const std::uint32_t f0 = store.lo_of(n);
        const std::uint32_t f1 = store.hi_of(n);
        const std::uint32_t both = store.apply_and(f0, f1);

        // Copy: recursive calls may rehash the memo map.
        const std::vector<cube64> shared = primes_rec(store, both, memo);
        const std::vector<cube64> p0 = primes_rec(store, f0, memo);
        const std::vector<cube64> p1 = primes_rec(store, f1, memo);

        result = shared;
        for (const auto& q : p0)
            if (!covered_by_any(shared, q))
                result.push_back({q.support | var_bit, q.values});
        for (const auto& q : p1)
            if (!covered_by_any(shared, q))
                result.push_back({q.support | var_bit, q.values | var_bit});
    }
    return memo.emplace(n, std::move(result)).first->second;
}

} // namespace

bool is_implicant(const partial_config& p, const config_set& t)
{
    return semantics(p).is_subset_of(t);
}

bool is_prime(const partial_config& p, const config_set& t)
{
    if (!is_implicant(p, t))
        return false;
    for (const auto& [feature, value] : p.literals())
        if (is_implicant(p.expanded(feature), t))
            return false;
    return true;
}

std::vector<partial_config> prime_implicants(const config_set& t)
{
    auto& store = t.space().store();
    std::unordered_map<std::uint32_t, std::vector<cube64>> memo;
    const auto& cubes = primes_rec(store, t.root(), memo);

    std::vector<partial_config> out;
    out.reserve(cubes.size());
    for (const auto& c : cubes) {
        partial_config p(t.space());
        for (int f = 0; f < t.space().size(); ++f)
            if (c.support & (std::uint64_t{1} << f))
                p = p.with(f, (c.values >> f) & 1);
        out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end(), partial_config::canonical_less);
    return out;
}

std::vector<partial_config> prime_implicants_brute(const config_set& t)
{
    const int n = t.space().size();
    if (n > 16)
        throw error("oracle-too-large: brute-force primes limited to 16 features");

    std::vector<partial_config> out;
    // Depth-first over all 3^n partial assignments.
    auto enumerate = [&](auto&& self, const partial_config& p, int next) -> void {
        if (next == n) {
            if (is_prime(p, t))
                out.push_back(p);
            return;
        }
        self(self, p, next + 1);
        self(self, p.with(next, false), next + 1);
        self(self, p.with(next, true), next + 1);
    };
    enumerate(enumerate, partial_config(t.space()), 0);
    std::sort(out.begin(), out.end(), partial_config::canonical_less);
    return out;
}

} // namespace confcause
