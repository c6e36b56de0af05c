#include "bdd_store.hpp"

#include <bit>
#include <limits>
#include <stdexcept>

namespace confcause::detail {

namespace {

constexpr int inf_distance = std::numeric_limits<int>::max() / 2;

std::uint64_t bit(int i)
{
    return std::uint64_t{1} << i;
}

} // namespace

bdd_store::bdd_store(int num_vars) : num_vars_(num_vars)
{
    assert(num_vars >= 1 && num_vars <= 64);
    // Terminals carry the past-the-end variable so ordering tests stay uniform.
    nodes_.push_back({static_cast<std::uint8_t>(num_vars), terminal_false, terminal_false});
    nodes_.push_back({static_cast<std::uint8_t>(num_vars), terminal_true, terminal_true});
}

std::uint32_t bdd_store::make(int var, std::uint32_t lo, std::uint32_t hi)
{
    if (lo == hi)
        return lo;
    assert(var >= 0 && var < num_vars_);
    assert(nodes_[lo].var > var && nodes_[hi].var > var);
    if (lo >= (1u << 28) || hi >= (1u << 28))
        throw std::logic_error("decision diagram exceeds the node budget");
    const std::uint64_t key = (std::uint64_t(var) << 56) | (std::uint64_t(lo) << 28) | hi;
    auto [it, fresh] = unique_.try_emplace(key, static_cast<std::uint32_t>(nodes_.size()));
    if (fresh)
        nodes_.push_back({static_cast<std::uint8_t>(var), lo, hi});
    return it->second;
}

std::uint32_t bdd_store::cube(std::uint64_t support, std::uint64_t values)
{
    std::uint32_t acc = terminal_true;
    for (int v = num_vars_ - 1; v >= 0; --v) {
        if (!(support & bit(v)))
            continue;
        acc = (values & bit(v)) ? make(v, terminal_false, acc) : make(v, acc, terminal_false);
    }
    return acc;
}

std::uint32_t bdd_store::minterm(std::uint64_t bits)
{
    const std::uint64_t full =
        num_vars_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << num_vars_) - 1;
    return cube(full, bits & full);
}

std::uint32_t bdd_store::apply(op_kind op, std::uint32_t a, std::uint32_t b)
{
    switch (op) {
    case op_and:
        if (a == terminal_false || b == terminal_false)
            return terminal_false;
        if (a == terminal_true)
            return b;
        if (b == terminal_true)
            return a;
        if (a == b)
            return a;
        if (a > b)
            std::swap(a, b);
        break;
    case op_or:
        if (a == terminal_true || b == terminal_true)
            return terminal_true;
        if (a == terminal_false)
            return b;
        if (b == terminal_false)
            return a;
        if (a == b)
            return a;
        if (a > b)
            std::swap(a, b);
        break;
    case op_diff:
        if (a == terminal_false || b == terminal_true || a == b)
            return terminal_false;
        if (b == terminal_false)
            return a;
        break;
    }

    assert(a < (1u << 30) && b < (1u << 30));
    const std::uint64_t key = (std::uint64_t(op) << 60) | (std::uint64_t(a) << 30) | b;
    if (auto it = op_cache_.find(key); it != op_cache_.end())
        return it->second;

    // Copy the node records: make() below may grow (and reallocate) nodes_.
    const node na = nodes_[a];
    const node nb = nodes_[b];
    const int v = std::min<int>(na.var, nb.var);
    const std::uint32_t a0 = na.var == v ? na.lo : a;
    const std::uint32_t a1 = na.var == v ? na.hi : a;
    const std::uint32_t b0 = nb.var == v ? nb.lo : b;
    const std::uint32_t b1 = nb.var == v ? nb.hi : b;

    const std::uint32_t result = make(v, apply(op, a0, b0), apply(op, a1, b1));
    op_cache_.emplace(key, result);
    return result;
}

bool bdd_store::contains(std::uint32_t root, std::uint64_t bits) const
{
    std::uint32_t n = root;
    while (!is_terminal(n)) {
        const node& nd = nodes_[n];
        n = (bits & bit(nd.var)) ? nd.hi : nd.lo;
    }
    return n == terminal_true;
}

const big_int& bdd_store::count_rec(std::uint32_t n)
{
    auto it = count_cache_.find(n);
    if (it != count_cache_.end())
        return it->second;
    big_int value;
    if (n == terminal_false) {
        value = 0;
    } else if (n == terminal_true) {
        value = 1;
    } else {
        const node nd = nodes_[n];
        const big_int lo = count_rec(nd.lo) << (nodes_[nd.lo].var - nd.var - 1);
        const big_int hi = count_rec(nd.hi) << (nodes_[nd.hi].var - nd.var - 1);
        value = lo + hi;
    }
    return count_cache_.emplace(n, std::move(value)).first->second;
}

big_int bdd_store::count(std::uint32_t root)
{
    return count_rec(root) << var_of(root);
}

void bdd_store::enumerate_rec(int depth, std::uint32_t n, std::uint64_t prefix,
                              std::vector<std::uint64_t>& out) const
{
    if (n == terminal_false)
        return;
    if (depth == num_vars_) {
        out.push_back(prefix);
        return;
    }
    const node& nd = nodes_[n];
    if (nd.var == depth) {
        enumerate_rec(depth + 1, nd.lo, prefix, out);
        enumerate_rec(depth + 1, nd.hi, prefix | bit(depth), out);
    } else {
        enumerate_rec(depth + 1, n, prefix, out);
        enumerate_rec(depth + 1, n, prefix | bit(depth), out);
    }
}

void bdd_store::enumerate(std::uint32_t root, std::vector<std::uint64_t>& out) const
{
    enumerate_rec(0, root, 0, out);
}

std::optional<std::uint64_t> bdd_store::least(std::uint32_t root) const
{
    if (root == terminal_false)
        return std::nullopt;
    std::uint64_t bits = 0;
    std::uint32_t n = root;
    while (!is_terminal(n)) {
        const node& nd = nodes_[n];
        if (nd.lo != terminal_false) {
            n = nd.lo;
        } else {
            bits |= bit(nd.var);
            n = nd.hi;
        }
    }
    return bits;
}

int bdd_store::switch_distance(std::uint32_t n, std::uint64_t origin,
                               std::unordered_map<std::uint32_t, int>& memo) const
{
    if (n == terminal_false)
        return inf_distance;
    if (n == terminal_true)
        return 0;
    if (auto it = memo.find(n); it != memo.end())
        return it->second;
    const node& nd = nodes_[n];
    const int lo_weight = (origin & bit(nd.var)) ? 1 : 0;
    const int lo = switch_distance(nd.lo, origin, memo) + lo_weight;
    const int hi = switch_distance(nd.hi, origin, memo) + (1 - lo_weight);
    const int best = std::min(lo, hi);
    memo.emplace(n, best);
    return best;
}

std::optional<bdd_store::switch_hit> bdd_store::min_switch(std::uint32_t target,
                                                           std::uint64_t origin)
{
    if (target == terminal_false)
        return std::nullopt;
    std::unordered_map<std::uint32_t, int> memo;
    const int distance = switch_distance(target, origin, memo);
    if (distance >= inf_distance)
        return std::nullopt;

    // Walk the argmin path; features skipped by the diagram keep their origin
    // value (any flip there would cost extra), and ties prefer the false
    // branch, which yields the lexicographically least witness.
    std::uint64_t witness = origin;
    std::uint32_t n = target;
    while (!is_terminal(n)) {
        const node& nd = nodes_[n];
        const int lo_weight = (origin & bit(nd.var)) ? 1 : 0;
        const int via_lo = switch_distance(nd.lo, origin, memo) + lo_weight;
        const int here = switch_distance(n, origin, memo);
        if (via_lo == here) {
            witness &= ~bit(nd.var);
            n = nd.lo;
        } else {
            witness |= bit(nd.var);
            n = nd.hi;
        }
    }
    return switch_hit{distance, witness};
}

} // namespace confcause::detail
