#pragma once

#include <confcause/config_set.hpp>

#include <memory>
#include <string>
#include <vector>

namespace confcause {

/// Propositional formula over feature indices. Negation occurs only inside
/// literals; conjunction and disjunction nodes carry two or more children.
/// Formula length: constants and literals of positive polarity count 1, a
/// negative literal counts 2, and an n-ary connective adds n-1 (the left fold
/// of the binary rule).
class formula {
public:
    enum class kind { truth, falsity, literal, conjunction, disjunction };

    static formula truth();
    static formula falsity();
    static formula make_literal(int feature, bool positive);
    /// Flattens nested conjunctions; 0 children yield truth, 1 child itself.
    static formula conjunction_of(std::vector<formula> children);
    /// Flattens nested disjunctions; 0 children yield falsity, 1 child itself.
    static formula disjunction_of(std::vector<formula> children);

    kind node_kind() const noexcept { return kind_; }
    int feature() const;       // literal only
    bool positive() const;     // literal only
    const std::vector<formula>& children() const; // connectives only

    int length() const;
    std::string render(const feature_space& space) const;
    config_set evaluate(const feature_space& space) const;

    friend bool operator==(const formula& a, const formula& b);

private:
    formula(kind k) : kind_(k) {}
    static formula nary(kind k, std::vector<formula> children);

    kind kind_;
    int feature_ = -1;
    bool positive_ = true;
    std::vector<formula> children_;
};

} // namespace confcause
