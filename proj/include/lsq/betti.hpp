#pragma once

/**
 * Graded Betti numbers of monomial ideals from lcm-lattice homology.
 *
 * beta_{i,m}(I) = dim H~_{i-1}(T_{<m}), where T_{<m} is the set of Taylor
 * faces F with lcm(F) a proper divisor of m (the empty face included).
 * The same numbers come out of the order complex of the open interval
 * (1, m) of the lcm lattice; both are available for cross-checking.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lsq/error.hpp"
#include "lsq/face.hpp"
#include "lsq/homology.hpp"
#include "lsq/monomial.hpp"

namespace lsq {

inline constexpr std::size_t kMaxBettiGenerators = 15;

namespace detail {

/// Degree first, then exponent vectors lexicographically (x_1 largest).
struct LatticeOrder {
    bool operator()(const Monomial& a, const Monomial& b) const
    {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        auto ea = a.exponents(), eb = b.exponents();
        return std::lexicographical_compare(eb.begin(), eb.end(), ea.begin(), ea.end());
    }
};

inline void check_betti_input(const MonomialIdeal& ideal)
{
    if (ideal.size() == 0) throw InputError("the zero ideal has no resolution to measure");
    require_capacity(ideal.size() <= kMaxBettiGenerators, "generator count", static_cast<long long>(ideal.size()),
                     kMaxBettiGenerators);
    if (!ideal.is_minimal()) {
        throw InputError("generators are not minimal (one divides another); call minimalize() first");
    }
}

} // namespace detail

class LcmLattice {
public:
    /// Closure of the generators under pairwise lcm, plus the bottom element 1.
    explicit LcmLattice(const MonomialIdeal& ideal) : ring_(ideal.ring())
    {
        std::unordered_map<Monomial, std::size_t, MonomialHash> seen;
        std::vector<Monomial> work{Monomial(ring_)};
        seen.emplace(work.front(), 0);
        for (const auto& g : ideal.generators()) {
            if (seen.emplace(g, work.size()).second) work.push_back(g);
        }
        // every new element is joined with each generator; lcm-closure follows by induction
        for (std::size_t k = 1; k < work.size(); ++k) {
            for (const auto& g : ideal.generators()) {
                Monomial l = lcm(work[k], g);
                if (seen.emplace(l, work.size()).second) work.push_back(l);
            }
        }
        elements_ = std::move(work);
        std::sort(elements_.begin(), elements_.end(), detail::LatticeOrder{});
        for (std::size_t k = 0; k < elements_.size(); ++k) index_.emplace(elements_[k], k);
    }

    const std::vector<Monomial>& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    const Monomial& bottom() const { return elements_.front(); }

    std::optional<std::size_t> index_of(const Monomial& m) const
    {
        auto it = index_.find(m);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    bool leq(std::size_t a, std::size_t b) const { return divides(elements_.at(a), elements_.at(b)); }

private:
    VariableSetPtr ring_;
    std::vector<Monomial> elements_;
    std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

struct BettiEntry {
    unsigned degree;   ///< homological degree i
    Monomial multidegree;
    std::size_t value;
};

struct BettiTable {
    Field field = Field::gf2;
    std::vector<BettiEntry> entries; ///< non-zero entries, by multidegree in lattice order, then degree

    /// (beta_0, beta_1, ...), trailing zeros removed.
    std::vector<std::size_t> totals() const
    {
        std::vector<std::size_t> out;
        for (const auto& e : entries) {
            if (out.size() <= e.degree) out.resize(e.degree + 1, 0);
            out[e.degree] += e.value;
        }
        return out;
    }
};

enum class BettiMethod { lower_taylor, lattice_interval };

namespace detail {

/// lattice index of lcm(F) for every subset F of the generators.
inline std::vector<std::uint32_t> subset_lcm_ids(const MonomialIdeal& ideal, const LcmLattice& lattice)
{
    const std::size_t g = ideal.size();
    std::vector<std::uint32_t> id(std::size_t{1} << g, 0);
    std::vector<Monomial> value(std::size_t{1} << g, Monomial(ideal.ring()));
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g); ++mask) {
        auto low = static_cast<std::size_t>(std::countr_zero(mask));
        value[mask] = lcm(value[mask & (mask - 1)], ideal.generators()[low]);
        auto k = lattice.index_of(value[mask]);
        if (!k) throw InvariantError("subset lcm missing from the lcm lattice");
        id[mask] = static_cast<std::uint32_t>(*k);
    }
    return id;
}

inline std::vector<std::size_t> lower_taylor_homology(const MonomialIdeal& ideal,
                                                      const std::vector<std::uint32_t>& ids, std::size_t m,
                                                      const Monomial& target, Field field)
{
    std::uint64_t below = 0;
    for (std::size_t k = 0; k < ideal.size(); ++k)
        if (divides(ideal.generators()[k], target)) below |= std::uint64_t{1} << k;
    std::vector<Face> fs{Face{}};
    for (std::uint64_t sub = below; sub; sub = (sub - 1) & below) {
        if (ids[sub] != m) fs.emplace_back(sub);
    }
    return reduced_homology_dims(fs, field, std::size_t{1} << kMaxBettiGenerators);
}

inline std::vector<std::size_t> interval_homology(const LcmLattice& lattice, std::size_t m, Field field)
{
    std::vector<std::size_t> inside;
    for (std::size_t k = 1; k < lattice.size(); ++k)
        if (k != m && lattice.leq(k, m)) inside.push_back(k);

    // chains x_1 < x_2 < ... listed by length; elements are indices into `inside`
    using Chain = std::vector<std::uint32_t>;
    std::vector<std::vector<std::uint32_t>> above(inside.size());
    for (std::size_t a = 0; a < inside.size(); ++a)
        for (std::size_t b = 0; b < inside.size(); ++b)
            if (a != b && lattice.leq(inside[a], inside[b])) above[a].push_back(static_cast<std::uint32_t>(b));

    std::vector<std::vector<Chain>> by_size{{Chain{}}};
    std::size_t total = 1;
    if (!inside.empty()) {
        by_size.emplace_back();
        for (std::uint32_t a = 0; a < inside.size(); ++a) by_size[1].push_back({a});
        total += inside.size();
    }
    while (by_size.back().size() > 0 && by_size.size() > 1) {
        std::vector<Chain> next;
        for (const auto& c : by_size.back()) {
            for (auto b : above[c.back()]) {
                Chain d = c;
                d.push_back(b);
                next.push_back(std::move(d));
            }
        }
        total += next.size();
        require_capacity(total <= kMaxHomologyFaces, "order complex size", static_cast<long long>(total),
                         static_cast<long long>(kMaxHomologyFaces));
        if (next.empty()) break;
        by_size.push_back(std::move(next));
    }
    struct ChainHash {
        std::size_t operator()(const Chain& c) const noexcept
        {
            std::size_t h = 1469598103934665603ull;
            for (auto x : c) h = (h ^ x) * 1099511628211ull;
            return h;
        }
    };
    auto boundary = [](const Chain& c, auto&& emit) {
        int sign = 1;
        for (std::size_t k = 0; k < c.size(); ++k) {
            Chain d;
            d.reserve(c.size() - 1);
            for (std::size_t t = 0; t < c.size(); ++t)
                if (t != k) d.push_back(c[t]);
            emit(d, sign);
            sign = -sign;
        }
    };
    return reduced_homology_by_size<Chain, ChainHash>(by_size, boundary, field);
}

} // namespace detail

inline BettiTable graded_betti(const MonomialIdeal& ideal, Field field = Field::gf2,
                               BettiMethod method = BettiMethod::lower_taylor)
{
    detail::check_betti_input(ideal);
    LcmLattice lattice(ideal);
    std::vector<std::uint32_t> ids;
    if (method == BettiMethod::lower_taylor) ids = detail::subset_lcm_ids(ideal, lattice);

    BettiTable table{field, {}};
    for (std::size_t m = 1; m < lattice.size(); ++m) {
        const auto& target = lattice.elements()[m];
        auto h = method == BettiMethod::lower_taylor ? detail::lower_taylor_homology(ideal, ids, m, target, field)
                                                     : detail::interval_homology(lattice, m, field);
        for (std::size_t k = 0; k < h.size(); ++k) {
            // h[k] = H~_{k-1}, which is beta_k
            if (h[k] != 0) table.entries.push_back({static_cast<unsigned>(k), target, h[k]});
        }
    }
    return table;
}

inline std::vector<std::size_t> total_betti(const MonomialIdeal& ideal, Field field = Field::gf2,
                                            BettiMethod method = BettiMethod::lower_taylor)
{
    return graded_betti(ideal, field, method).totals();
}

inline unsigned projective_dimension(const MonomialIdeal& ideal, Field field = Field::gf2)
{
    auto t = total_betti(ideal, field);
    return static_cast<unsigned>(t.size() - 1);
}

/// (pd E_{q,D}, pd E_{q,D}^2) for D = {(1, {2..s})}.
inline std::pair<unsigned, unsigned> pd_formula(unsigned q, unsigned s)
{
    if (s < 3 || s > q) throw InputError("pd_formula needs 3 <= s <= q");
    unsigned c = q * (q - 1) / 2;
    return {q - 2, q > s ? c - (q - s + 2) : c - 1};
}

} // namespace lsq
