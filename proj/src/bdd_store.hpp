#pragma once

#include <confcause/rational.hpp>

#include <cassert>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace confcause::detail {

/// Reduced ordered binary decision diagram over variables 0..num_vars-1.
/// Nodes 0 and 1 are the terminals; every other node tests one variable with
/// lo = false branch, hi = true branch, and children testing strictly larger
/// variables. Hash-consing makes the representation canonical: equal roots
/// iff equal sets. One store per feature space, confined to one session.
class bdd_store {
public:
    static constexpr std::uint32_t terminal_false = 0;
    static constexpr std::uint32_t terminal_true = 1;

    explicit bdd_store(int num_vars);

    int num_vars() const noexcept { return num_vars_; }
    std::size_t size() const noexcept { return nodes_.size(); }

    int var_of(std::uint32_t n) const { return nodes_[n].var; }
    std::uint32_t lo_of(std::uint32_t n) const { return nodes_[n].lo; }
    std::uint32_t hi_of(std::uint32_t n) const { return nodes_[n].hi; }
    bool is_terminal(std::uint32_t n) const { return n <= terminal_true; }

    std::uint32_t make(int var, std::uint32_t lo, std::uint32_t hi);

    /// Conjunction of literals: support bit set selects the variable, the
    /// matching values bit gives its polarity.
    std::uint32_t cube(std::uint64_t support, std::uint64_t values);
    std::uint32_t minterm(std::uint64_t bits);

    std::uint32_t apply_and(std::uint32_t a, std::uint32_t b) { return apply(op_and, a, b); }
    std::uint32_t apply_or(std::uint32_t a, std::uint32_t b) { return apply(op_or, a, b); }
    std::uint32_t apply_diff(std::uint32_t a, std::uint32_t b) { return apply(op_diff, a, b); }
    std::uint32_t complement(std::uint32_t a) { return apply(op_diff, terminal_true, a); }

    bool is_subset(std::uint32_t a, std::uint32_t b) { return apply_diff(a, b) == terminal_false; }
    bool contains(std::uint32_t root, std::uint64_t bits) const;

    big_int count(std::uint32_t root);
    void enumerate(std::uint32_t root, std::vector<std::uint64_t>& out) const;
    std::optional<std::uint64_t> least(std::uint32_t root) const;

    struct switch_hit {
        int distance;
        std::uint64_t witness;
    };

    /// Minimum number of bits of `origin` to flip to land in `target`, with
    /// the lexicographically least witness among minimum-distance members.
    std::optional<switch_hit> min_switch(std::uint32_t target, std::uint64_t origin);

private:
    struct node {
        std::uint8_t var;
        std::uint32_t lo;
        std::uint32_t hi;
    };

    enum op_kind : std::uint8_t { op_and = 0, op_or = 1, op_diff = 2 };

    std::uint32_t apply(op_kind op, std::uint32_t a, std::uint32_t b);
    void enumerate_rec(int depth, std::uint32_t n, std::uint64_t prefix,
                       std::vector<std::uint64_t>& out) const;
    const big_int& count_rec(std::uint32_t n);
    int switch_distance(std::uint32_t n, std::uint64_t origin,
                        std::unordered_map<std::uint32_t, int>& memo) const;

    int num_vars_;
    std::vector<node> nodes_;
    std::unordered_map<std::uint64_t, std::uint32_t> unique_;
    std::unordered_map<std::uint64_t, std::uint32_t> op_cache_;
    std::unordered_map<std::uint32_t, big_int> count_cache_;
};

} // namespace confcause::detail
