#pragma once

#include <confcause/config_set.hpp>

#include <vector>

namespace confcause {

/// semantics(p) subseteq t.
bool is_implicant(const partial_config& p, const config_set& t);

/// Implicant whose every single-feature expansion leaves t.
bool is_prime(const partial_config& p, const config_set& t);

/// All prime implicants of t, in canonical order (support size ascending, then
/// lexicographic literal sequence). The empty set has none; the universe has
/// exactly the empty-support prime.
std::vector<partial_config> prime_implicants(const config_set& t);

/// Exhaustive 3^|F| oracle, independent of the recursive enumeration above.
/// Throws error("oracle-too-large") beyond 16 features.
std::vector<partial_config> prime_implicants_brute(const config_set& t);

} // namespace confcause
