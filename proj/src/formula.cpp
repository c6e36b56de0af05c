#include <confcause/formula.hpp>

#include <confcause/errors.hpp>

namespace confcause {

formula formula::truth()
{
    return formula(kind::truth);
}

formula formula::falsity()
{
    return formula(kind::falsity);
}

formula formula::make_literal(int feature, bool positive)
{
    formula f(kind::literal);
    f.feature_ = feature;
    f.positive_ = positive;
    return f;
}

formula formula::nary(kind k, std::vector<formula> children)
{
    std::vector<formula> flat;
    for (auto& child : children) {
        if (child.node_kind() == k) {
            for (const auto& grand : child.children())
                flat.push_back(grand);
        } else {
            flat.push_back(std::move(child));
        }
    }
    if (flat.empty())
        return k == kind::conjunction ? truth() : falsity();
    if (flat.size() == 1)
        return flat.front();
    formula f(k);
    f.children_ = std::move(flat);
    return f;
}

formula formula::conjunction_of(std::vector<formula> children)
{
    return nary(kind::conjunction, std::move(children));
}

formula formula::disjunction_of(std::vector<formula> children)
{
    return nary(kind::disjunction, std::move(children));
}

int formula::feature() const
{
    if (kind_ != kind::literal)
        throw std::logic_error("feature() on a non-literal formula node");
    return feature_;
}

bool formula::positive() const
{
    if (kind_ != kind::literal)
        throw std::logic_error("positive() on a non-literal formula node");
    return positive_;
}

const std::vector<formula>& formula::children() const
{
    return children_;
}

int formula::length() const
{
    switch (kind_) {
    case kind::truth:
    case kind::falsity:
        return 1;
    case kind::literal:
        return positive_ ? 1 : 2;
    case kind::conjunction:
    case kind::disjunction: {
        int total = static_cast<int>(children_.size()) - 1;
        for (const auto& child : children_)
            total += child.length();
        return total;
    }
    }
    return 0;
}

std::string formula::render(const feature_space& space) const
{
    switch (kind_) {
    case kind::truth:
        return "true";
    case kind::falsity:
        return "false";
    case kind::literal:
        return (positive_ ? "" : "!") + space.name(feature_);
    case kind::conjunction: {
        std::string out;
        for (const auto& child : children_) {
            if (!out.empty())
                out += " & ";
            if (child.node_kind() == kind::disjunction)
                out += "(" + child.render(space) + ")";
            else
                out += child.render(space);
        }
        return out;
    }
    case kind::disjunction: {
        std::string out;
        for (const auto& child : children_) {
            if (!out.empty())
                out += " | ";
            out += child.render(space);
        }
        return out;
    }
    }
    return {};
}

config_set formula::evaluate(const feature_space& space) const
{
    switch (kind_) {
    case kind::truth:
        return config_set::universe(space);
    case kind::falsity:
        return config_set::empty(space);
    case kind::literal:
        return semantics(partial_config(space).with(feature_, positive_));
    case kind::conjunction: {
        config_set acc = config_set::universe(space);
        for (const auto& child : children_)
            acc = acc & child.evaluate(space);
        return acc;
    }
    case kind::disjunction: {
        config_set acc = config_set::empty(space);
        for (const auto& child : children_)
            acc = acc | child.evaluate(space);
        return acc;
    }
    }
    return config_set::empty(space);
}

bool operator==(const formula& a, const formula& b)
{
    if (a.kind_ != b.kind_)
        return false;
    switch (a.kind_) {
    case formula::kind::truth:
    case formula::kind::falsity:
        return true;
    case formula::kind::literal:
        return a.feature_ == b.feature_ && a.positive_ == b.positive_;
    default:
        return a.children_ == b.children_;
    }
}

} // namespace confcause
