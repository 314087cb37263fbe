#pragma once

/**
 * D-extremal ideals.
 *
 * Q(D) collects the non-empty A in [q] such that every (b, B) in D has
 * b not in A or A meeting B. The generator eps_i is the product of y_A over
 * A in Q(D) containing i. Variables y_A are ordered by |A|, then
 * lexicographically on the sorted members of A.
 */

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "lsq/error.hpp"
#include "lsq/monomial.hpp"
#include "lsq/relation.hpp"

namespace lsq {

inline constexpr unsigned kMaxExtremalQ = 16;

/// Non-empty subset of [q] as a bit pattern (bit i-1 <-> element i).
class SubsetIndex {
public:
    constexpr SubsetIndex() = default;
    constexpr explicit SubsetIndex(std::uint32_t bits) : bits_(bits) {}

    constexpr std::uint32_t bits() const noexcept { return bits_; }
    constexpr bool contains(unsigned i) const noexcept { return (bits_ >> (i - 1)) & 1u; }
    constexpr unsigned size() const noexcept { return static_cast<unsigned>(std::popcount(bits_)); }

    std::vector<unsigned> members() const
    {
        std::vector<unsigned> out;
        for (auto b = bits_; b; b &= b - 1) out.push_back(static_cast<unsigned>(std::countr_zero(b)) + 1);
        return out;
    }

    /// y_{134}; members are comma separated once any of them has two digits.
    std::string variable_name() const
    {
        auto ms = members();
        bool wide = !ms.empty() && ms.back() >= 10;
        std::string out = "y_{";
        for (std::size_t k = 0; k < ms.size(); ++k) {
            if (wide && k > 0) out += ",";
            out += std::to_string(ms[k]);
        }
        return out + "}";
    }

    constexpr bool operator==(const SubsetIndex&) const = default;

    /// Canonical order: cardinality, then lexicographic on sorted members.
    friend bool operator<(SubsetIndex a, SubsetIndex b) noexcept
    {
        if (a.size() != b.size()) return a.size() < b.size();
        auto diff = a.bits_ ^ b.bits_;
        if (diff == 0) return false;
        return (a.bits_ & (diff & (~diff + 1))) != 0;
    }

private:
    std::uint32_t bits_ = 0;
};

namespace detail {

inline void check_relations(unsigned q, const DivSet& d)
{
    if (q < 1) throw InputError("q must be at least 1");
    require_capacity(q <= kMaxExtremalQ, "q", q, kMaxExtremalQ);
    for (const auto& r : d) {
        if (r.b < 1 || r.b > q || r.B.empty() || r.B.max() > q) {
            throw InputError("relation " + to_string(r) + " has an index outside 1.." + std::to_string(q));
        }
    }
}

} // namespace detail

inline std::vector<SubsetIndex> q_of_D(unsigned q, const DivSet& d)
{
    detail::check_relations(q, d);
    std::vector<SubsetIndex> out;
    for (std::uint32_t a = 1; a < (std::uint32_t{1} << q); ++a) {
        bool ok = std::all_of(d.begin(), d.end(), [a](const DivRel& r) {
            bool b_in = (a >> (r.b - 1)) & 1u;
            bool meets = (a & static_cast<std::uint32_t>(r.B.bits())) != 0;
            return !b_in || meets;
        });
        if (ok) out.emplace_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// E_{q,D} over the ring { y_A : A in Q(D) }.
inline MonomialIdeal extremal_generators(unsigned q, const DivSet& d)
{
    auto subsets = q_of_D(q, d);
    std::vector<std::string> names;
    names.reserve(subsets.size());
    for (auto a : subsets) names.push_back(a.variable_name());
    auto ring = make_variables(std::move(names));

    std::vector<Monomial> gens;
    for (unsigned i = 1; i <= q; ++i) {
        std::vector<Monomial::Exponent> e(subsets.size(), 0);
        for (std::size_t k = 0; k < subsets.size(); ++k) e[k] = subsets[k].contains(i) ? 1 : 0;
        gens.emplace_back(ring, std::move(e));
    }
    return MonomialIdeal(ring, std::move(gens));
}

/// Multisets i_1 <= ... <= i_r over [q] in lexicographic order (N^r_q).
inline std::vector<std::vector<unsigned>> exponent_multisets(unsigned q, unsigned r)
{
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur(r, 1);
    if (r == 0 || q == 0) return out;
    while (true) {
        out.push_back(cur);
        int k = static_cast<int>(r) - 1;
        while (k >= 0 && cur[static_cast<std::size_t>(k)] == q) --k;
        if (k < 0) break;
        auto v = cur[static_cast<std::size_t>(k)] + 1;
        for (auto t = static_cast<std::size_t>(k); t < r; ++t) cur[t] = v;
    }
    return out;
}

/// Generators eps^a of E_{q,D}^r, one per a in N^r_q, in multiset-lexicographic order.
inline MonomialIdeal power_generators(unsigned q, const DivSet& d, unsigned r)
{
    if (r < 1) throw InputError("power must be at least 1");
    for (const auto& rel : d) {
        if (rel.B.size() < 2) {
            throw InputError("relation " + to_string(rel) + " has |B| < 2; generators need not be minimal");
        }
    }
    auto base = extremal_generators(q, d);
    std::vector<Monomial> gens;
    for (const auto& ms : exponent_multisets(q, r)) {
        Monomial m(base.ring());
        for (auto i : ms) m = product(m, base.generator(i));
        gens.push_back(std::move(m));
    }
    std::set<Monomial> distinct(gens.begin(), gens.end());
    if (distinct.size() != gens.size()) {
        throw InvariantError("E_{q,D}^r has coinciding generators; minimal generation fails");
    }
    return MonomialIdeal(base.ring(), std::move(gens));
}

} // namespace lsq
