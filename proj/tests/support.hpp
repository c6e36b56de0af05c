#pragma once

#include <confcause/causes.hpp>
#include <confcause/config_set.hpp>
#include <confcause/ingest.hpp>

#include <cstdio>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace testsupport {

using namespace confcause;

inline std::string fixture_path(const std::string& name)
{
    return std::string(CONFCAUSE_FIXTURE_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name)
{
    FILE* f = std::fopen(fixture_path(name).c_str(), "rb");
    if (!f)
        throw std::runtime_error("missing fixture " + name);
    std::string out;
    char buffer[4096];
    std::size_t n;
    while ((n = std::fread(buffer, 1, sizeof buffer, f)) > 0)
        out.append(buffer, n);
    std::fclose(f);
    return out;
}

// The running example: email system over m s e c a r with exactly one
// encryption method when encryption is selected.
struct email_fixture {
    model m;
    config_set effects;

    email_fixture()
        : m(parse_model("features: m s e c a r\n"
                        "valid: m & (e <-> (c | a | r)) & !(c & a) & !(c & r) & !(a & r)\n")),
          effects(parse_expression("a | r", m.space).evaluate(m.space) & m.valid)
    {
    }

    analysis_session session() const { return analysis_session(m.valid, effects); }

    total_config config(const std::string& selected) const
    {
        std::uint64_t bits = 0;
        for (char c : selected) {
            auto idx = m.space.index_of(std::string(1, c));
            if (!idx)
                throw std::runtime_error("bad email config name");
            bits |= std::uint64_t{1} << *idx;
        }
        return total_config(m.space, bits);
    }

    partial_config partial(const std::vector<std::pair<std::string, bool>>& lits) const
    {
        return partial_config::from_names(m.space, lits);
    }
};

// Uniformly random subset of the full configuration space, as a minterm union.
inline config_set random_subset(const feature_space& space, std::mt19937_64& rng,
                                double density = 0.5)
{
    std::bernoulli_distribution keep(density);
    config_set out = config_set::empty(space);
    const std::uint64_t total = std::uint64_t{1} << space.size();
    for (std::uint64_t bits = 0; bits < total; ++bits)
        if (keep(rng))
            out = out | config_set::point(total_config(space, bits));
    return out;
}

inline config_set random_subset_of(const config_set& super, std::mt19937_64& rng,
                                   double density = 0.5)
{
    std::bernoulli_distribution keep(density);
    config_set out = config_set::empty(super.space());
    for (const auto& config : super.enumerate())
        if (keep(rng))
            out = out | config_set::point(config);
    return out;
}

inline feature_space small_space(int n)
{
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
        names.push_back("x" + std::to_string(i));
    return feature_space::create(names);
}

// A session over a fresh random space; V is non-empty, E a random subset of V
// (possibly empty).
inline analysis_session random_session(int features, std::mt19937_64& rng,
                                       double valid_density = 0.5,
                                       double effect_density = 0.5)
{
    const feature_space space = small_space(features);
    config_set valid = random_subset(space, rng, valid_density);
    while (valid.is_empty())
        valid = random_subset(space, rng, valid_density);
    const config_set effect = random_subset_of(valid, rng, effect_density);
    return analysis_session(valid, effect);
}

} // namespace testsupport
