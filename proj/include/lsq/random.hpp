#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lsq/error.hpp"
#include "lsq/monomial.hpp"

namespace lsq {

/**
 * A minimally generated square-free ideal (m_1, ..., m_q) in x1..x_nvars with
 * m_1 | lcm(m_2, ..., m_s). m_2..m_q are uniform random non-empty supports;
 * m_1 is a random non-empty subset of supp(m_2) + ... + supp(m_s). Draws
 * that are not minimal are rejected.
 */
inline MonomialIdeal random_ideal_with_relation(unsigned q, unsigned s, unsigned nvars, std::mt19937_64& rng)
{
    if (s < 3 || s > q) throw InputError("need 3 <= s <= q");
    if (nvars < 2 || nvars > 30) throw InputError("nvars must lie in 2..30");
    std::vector<std::string> names;
    for (unsigned k = 1; k <= nvars; ++k) names.push_back("x" + std::to_string(k));
    auto ring = make_variables(std::move(names));

    std::uniform_int_distribution<std::uint32_t> any(1, (std::uint32_t{1} << nvars) - 1);
    auto to_monomial = [&](std::uint32_t bits) {
        std::vector<Monomial::Exponent> e(nvars, 0);
        for (unsigned k = 0; k < nvars; ++k) e[k] = (bits >> k) & 1u;
        return Monomial(ring, std::move(e));
    };

    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::vector<std::uint32_t> supp(q + 1, 0);
        std::uint32_t cover = 0;
        for (unsigned k = 2; k <= q; ++k) {
            supp[k] = any(rng);
            if (k <= s) cover |= supp[k];
        }
        // uniform non-empty subset of `cover`
        std::uint32_t m1 = 0;
        while (m1 == 0) {
            m1 = any(rng) & cover;
        }
        supp[1] = m1;
        std::vector<Monomial> gens;
        for (unsigned k = 1; k <= q; ++k) gens.push_back(to_monomial(supp[k]));
        MonomialIdeal ideal(ring, std::move(gens));
        if (ideal.is_minimal()) return ideal;
    }
    throw InvariantError("could not draw a minimal ideal; increase nvars");
}

} // namespace lsq
