#pragma once

/**
 * Divisibility relations on an ideal and on the square of an extremal ideal.
 *
 * Brute-force detection runs over generator subsets as bit masks. For a
 * fixed b, m_b | lcm(B) iff for every variable x of m_b some generator in B
 * has x-exponent at least that of m_b; the generators qualifying for x form
 * a "cover mask", so the test is one AND per variable of m_b.
 */

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lsq/complex.hpp"
#include "lsq/error.hpp"
#include "lsq/extremal.hpp"
#include "lsq/monomial.hpp"
#include "lsq/relation.hpp"

namespace lsq {

inline constexpr unsigned kMaxRelationGenerators = 20;

/// Cover masks for fast "m_b divides lcm of a generator subset" queries.
class DivisibilityIndex {
public:
    explicit DivisibilityIndex(const std::vector<Monomial>& gens) : n_(static_cast<unsigned>(gens.size()))
    {
        require_capacity(n_ <= 64, "generator count", n_, 64);
        covers_.resize(n_);
        for (unsigned b = 0; b < n_; ++b) {
            auto eb = gens[b].exponents();
            for (std::size_t x = 0; x < eb.size(); ++x) {
                if (eb[x] == 0) continue;
                std::uint64_t mask = 0;
                for (unsigned i = 0; i < n_; ++i) {
                    detail::check_ring(gens[b], gens[i]);
                    if (gens[i].exponents()[x] >= eb[x]) mask |= std::uint64_t{1} << i;
                }
                covers_[b].push_back(mask);
            }
        }
    }

    unsigned size() const noexcept { return n_; }

    /// 0-based b; `subset` bit i <-> generator i (0-based).
    bool divides_lcm(unsigned b, std::uint64_t subset) const noexcept
    {
        for (auto c : covers_[b]) {
            if ((c & subset) == 0) return false;
        }
        return true;
    }

private:
    unsigned n_;
    std::vector<std::vector<std::uint64_t>> covers_;
};

inline bool relation_holds(const MonomialIdeal& ideal, const DivRel& rel)
{
    auto q = static_cast<unsigned>(ideal.size());
    if (rel.b < 1 || rel.b > q || rel.B.empty() || rel.B.max() > q) {
        throw InputError("relation " + to_string(rel) + " has an index outside 1.." + std::to_string(q));
    }
    Monomial l(ideal.ring());
    for (auto i : rel.B.members()) l = lcm(l, ideal.generator(i));
    return divides(ideal.generator(rel.b), l);
}

struct RelationReport {
    std::vector<DivRel> all;     ///< every held (b, B), B non-empty, trivial ones included
    std::vector<DivRel> minimal; ///< non-trivial and extending no other held relation
    std::size_t trivial_count = 0;
};

enum class ListAll { no, yes };

/// Enumerates b x (2^[q] \ {emptyset}). `all` is filled only when requested.
inline RelationReport all_relations(const MonomialIdeal& ideal, ListAll list_all = ListAll::yes)
{
    auto q = static_cast<unsigned>(ideal.size());
    require_capacity(q <= kMaxRelationGenerators, "generator count", q, kMaxRelationGenerators);
    DivisibilityIndex idx(ideal.generators());
    RelationReport rep;
    const std::uint64_t top = std::uint64_t{1} << q;
    for (unsigned b = 0; b < q; ++b) {
        const std::uint64_t self = std::uint64_t{1} << b;
        for (std::uint64_t s = 1; s < top; ++s) {
            if (s & self) {
                ++rep.trivial_count;
                if (list_all == ListAll::yes) rep.all.push_back({b + 1, IndexSet(s)});
                continue;
            }
            if (!idx.divides_lcm(b, s)) continue;
            if (list_all == ListAll::yes) rep.all.push_back({b + 1, IndexSet(s)});
            // monotone in the subset, so checking one-smaller subsets suffices
            bool minimal = true;
            for (auto t = s; t && minimal; t &= t - 1) {
                auto smaller = s & ~(t & (~t + 1));
                if (smaller != 0 && idx.divides_lcm(b, smaller)) minimal = false;
            }
            if (minimal) rep.minimal.push_back({b + 1, IndexSet(s)});
        }
    }
    std::sort(rep.minimal.begin(), rep.minimal.end());
    return rep;
}

inline std::vector<DivRel> minimal_relations(const MonomialIdeal& ideal)
{
    return all_relations(ideal, ListAll::no).minimal;
}

// ---------------------------------------------------------------------------
// Relations on the square, indexed by the canonical order of N^2_q.

enum class SquareRelationType { t1, t2, t3a, t3b, t4a, t4b };

inline std::string to_string(SquareRelationType t)
{
    switch (t) {
    case SquareRelationType::t1: return "1";
    case SquareRelationType::t2: return "2";
    case SquareRelationType::t3a: return "3a";
    case SquareRelationType::t3b: return "3b";
    case SquareRelationType::t4a: return "4a";
    case SquareRelationType::t4b: return "4b";
    }
    return "?";
}

struct PredictedRelation {
    DivRel rel;
    SquareRelationType type;
    std::vector<unsigned> t; ///< t_2..t_s for types 3 and 4, empty otherwise
};

namespace detail {

/// 1-based generator index of m_i m_j among the q(q+1)/2 generators of I^2.
inline unsigned sq(unsigned q, unsigned i, unsigned j) { return pair_index(q, i, j) + 1; }

inline void check_qs(unsigned q, std::optional<unsigned> s)
{
    if (q < 1) throw InputError("q must be at least 1");
    require_capacity(pair_count(q) <= 64, "|N^2_q|", pair_count(q), 64);
    if (s && (*s < 3 || *s > q)) {
        throw InputError("s = " + std::to_string(*s) + " must satisfy 3 <= s <= q = " + std::to_string(q));
    }
}

/// Calls fn(t) for every t = (t_2, ..., t_s) with t_k drawn from choices(k).
template <class Choices, class Fn>
void for_each_t(unsigned s, Choices&& choices, Fn&& fn)
{
    std::vector<std::vector<unsigned>> opts;
    for (unsigned k = 2; k <= s; ++k) opts.push_back(choices(k));
    for (const auto& o : opts) {
        if (o.empty()) return;
    }
    std::vector<std::size_t> pos(opts.size(), 0);
    std::vector<unsigned> t(opts.size());
    while (true) {
        for (std::size_t k = 0; k < opts.size(); ++k) t[k] = opts[k][pos[k]];
        fn(t);
        std::size_t k = 0;
        while (k < opts.size() && ++pos[k] == opts[k].size()) pos[k++] = 0;
        if (k == opts.size()) break;
    }
}

inline std::vector<unsigned> distinct(std::initializer_list<unsigned> xs)
{
    std::vector<unsigned> out;
    for (auto x : xs)
        if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    return out;
}

} // namespace detail

/**
 * Relations of types (1) and (2) for every q, plus (3a), (3b), (4a), (4b)
 * when `s` is given (meaning m_1 | lcm(m_2, ..., m_s)). Duplicates keep the
 * first emitted type. Output sorted by (b, B).
 */
inline std::vector<PredictedRelation> predicted_square_relations(unsigned q, std::optional<unsigned> s)
{
    detail::check_qs(q, s);
    using detail::sq;
    std::map<DivRel, PredictedRelation> out;
    auto emit = [&](DivRel r, SquareRelationType type, std::vector<unsigned> t = {}) {
        out.emplace(r, PredictedRelation{r, type, std::move(t)});
    };

    for (unsigned i = 1; i <= q; ++i) {
        for (unsigned j = i + 1; j <= q; ++j) {
            for (unsigned a = 1; a <= q; ++a) {
                if (a == i || a == j) continue;
                emit({sq(q, i, j), IndexSet{sq(q, j, j), sq(q, i, a)}}, SquareRelationType::t1);
            }
            for (unsigned b = 1; b <= q; ++b) {
                if (b == i) continue;
                emit({sq(q, i, j), IndexSet{sq(q, i, i), sq(q, j, b)}}, SquareRelationType::t2);
            }
        }
    }
    if (!s) {
        std::vector<PredictedRelation> v;
        for (auto& [k, p] : out) v.push_back(std::move(p));
        return v;
    }
    const unsigned S = *s;
    auto lcm_set = [&](const std::vector<unsigned>& t) {
        IndexSet B;
        for (unsigned k = 2; k <= S; ++k) B.insert(sq(q, k, t[k - 2]));
        return B;
    };

    // (3) t_k in {1, j, k}; (3a) j = 1, (3b) j > s and j among the t_k.
    detail::for_each_t(S, [](unsigned k) { return std::vector<unsigned>{1, k}; },
                       [&](const std::vector<unsigned>& t) {
                           emit({sq(q, 1, 1), lcm_set(t)}, SquareRelationType::t3a, t);
                       });
    for (unsigned j = S + 1; j <= q; ++j) {
        detail::for_each_t(S, [j](unsigned k) { return detail::distinct({1, j, k}); },
                           [&](const std::vector<unsigned>& t) {
                               if (std::find(t.begin(), t.end(), j) == t.end()) return;
                               emit({sq(q, 1, j), lcm_set(t)}, SquareRelationType::t3b, t);
                           });
    }
    // (4a) j > s, u > s, j != u, t_k in {1, k}.
    for (unsigned j = S + 1; j <= q; ++j) {
        for (unsigned u = S + 1; u <= q; ++u) {
            if (u == j) continue;
            detail::for_each_t(S, [](unsigned k) { return std::vector<unsigned>{1, k}; },
                               [&](const std::vector<unsigned>& t) {
                                   auto B = lcm_set(t);
                                   B.insert(sq(q, u, j));
                                   emit({sq(q, 1, j), B}, SquareRelationType::t4a, t);
                               });
        }
    }
    // (4b) j = u > 1, t_k > 1.
    for (unsigned j = 2; j <= q; ++j) {
        detail::for_each_t(S,
                           [q](unsigned) {
                               std::vector<unsigned> v;
                               for (unsigned t = 2; t <= q; ++t) v.push_back(t);
                               return v;
                           },
                           [&](const std::vector<unsigned>& t) {
                               auto B = lcm_set(t);
                               B.insert(sq(q, j, j));
                               emit({sq(q, 1, j), B}, SquareRelationType::t4b, t);
                           });
    }
    std::vector<PredictedRelation> v;
    for (auto& [k, p] : out) v.push_back(std::move(p));
    return v;
}

// ---------------------------------------------------------------------------
// Face-level characterizations of eps_i eps_j | lcm(sigma), sigma over N^2_q.

namespace detail {

struct PairFace {
    unsigned q;
    Face f;
    bool has(unsigned a, unsigned b) const { return f.contains(pair_index(q, a, b)); }
};

/// D empty: (1) e_jj, e_ia in sigma with a not in {i,j}; (2) e_ii, e_jb in sigma with b != i.
inline bool predicts_empty(const PairFace& p, unsigned i, unsigned j)
{
    if (i == j) return false;
    bool c1 = false, c2 = false;
    for (unsigned a = 1; a <= p.q; ++a) {
        if (a != i && a != j && p.has(j, j) && p.has(i, a)) c1 = true;
        if (a != i && p.has(i, i) && p.has(j, a)) c2 = true;
    }
    return c1 || c2;
}

/// D = {(1,{2..s})}, sigma any subset of N^2_q.
inline bool predicts_taylor(const PairFace& p, unsigned s, unsigned i, unsigned j)
{
    const unsigned q = p.q;
    if (predicts_empty(p, i, j)) return true;
    if (i != 1) return false;
    // (3) every k has e_{k t} with t in {1, j, k}
    bool all3 = true;
    bool some_kj = false;
    for (unsigned k = 2; k <= s; ++k) {
        bool ok = p.has(k, 1) || p.has(k, j) || p.has(k, k);
        all3 = all3 && ok;
        some_kj = some_kj || p.has(k, j);
    }
    if (all3 && (j == 1 || (j > s && some_kj))) return true;
    // (4) e_uj in sigma and
    for (unsigned u = 1; u <= q; ++u) {
        if (!p.has(u, j)) continue;
        if (j > s && u > s && j != u) {
            bool ok = true;
            for (unsigned k = 2; k <= s && ok; ++k) ok = p.has(k, 1) || p.has(k, k);
            if (ok) return true;
        }
        if (j == u && j > 1) {
            bool ok = true;
            for (unsigned k = 2; k <= s && ok; ++k) {
                bool any = false;
                for (unsigned t = 2; t <= q && !any; ++t) any = p.has(k, t);
                ok = any;
            }
            if (ok) return true;
        }
    }
    return false;
}

/// D = {(1,{2..s})}, sigma with sigma + e_ij a face of L^2_q.
inline bool predicts_l2(const PairFace& p, unsigned s, unsigned i, unsigned j)
{
    if (i != 1) return false;
    const unsigned q = p.q;
    // (i)
    bool all = true;
    for (unsigned k = 2; k <= s && all; ++k) all = p.has(k, j);
    if (all) return true;
    if (j <= s) return false;
    // (ii) some t in {1,j}^{s-1} using both values
    bool found = false;
    for_each_t(s, [](unsigned) { return std::vector<unsigned>{0, 1}; }, [&](const std::vector<unsigned>& pick) {
        if (found) return;
        bool one = false, jj = false, ok = true;
        for (unsigned k = 2; k <= s && ok; ++k) {
            unsigned t = pick[k - 2] ? j : 1;
            ok = p.has(k, t);
            (t == 1 ? one : jj) = true;
        }
        if (ok && one && jj) found = true;
    });
    if (found) return true;
    // (iii)
    bool col1 = true;
    for (unsigned k = 2; k <= s && col1; ++k) col1 = p.has(k, 1);
    if (!col1) return false;
    for (unsigned u = s + 1; u <= q; ++u) {
        if (u != j && p.has(j, u)) return true;
    }
    return false;
}

} // namespace detail

enum class CharacterizationScope { taylor, l2 };

struct CharacterizationCounterexample {
    Face sigma;
    unsigned i, j;
    bool divides;
    bool predicted;
};

struct CharacterizationReport {
    unsigned q;
    std::optional<unsigned> s;
    CharacterizationScope scope;
    std::size_t pairs_checked = 0;
    std::size_t divisible_pairs = 0;
    std::size_t counterexample_count = 0;
    std::vector<CharacterizationCounterexample> counterexamples; ///< first few only

    bool passed() const noexcept { return counterexample_count == 0; }
};

/**
 * Checks eps_i eps_j | lcm(sigma) against the predicted characterization
 * for every sigma in scope and e_ij not in sigma. Taylor scope takes every
 * subset of N^2_q (q <= 5); l2 scope takes sigma with sigma + e_ij in L^2_q (q <= 6).
 */
inline CharacterizationReport verify_square_characterization(unsigned q, std::optional<unsigned> s,
                                                             CharacterizationScope scope,
                                                             std::size_t keep_counterexamples = 16)
{
    detail::check_qs(q, s);
    const unsigned cap = scope == CharacterizationScope::taylor ? 5 : 6;
    require_capacity(q <= cap, "q", q, cap);

    DivSet d = s ? single_relation(*s) : DivSet{};
    auto ideal = power_generators(q, d, 2);
    DivisibilityIndex idx(ideal.generators());
    const unsigned n = pair_count(q);

    CharacterizationReport rep{q, s, scope, 0, 0, 0, {}};
    auto check = [&](Face sigma, unsigned i, unsigned j) {
        detail::PairFace p{q, sigma};
        bool actual = idx.divides_lcm(pair_index(q, i, j), sigma.bits());
        bool predicted = !s                                     ? detail::predicts_empty(p, i, j)
                         : scope == CharacterizationScope::taylor ? detail::predicts_taylor(p, *s, i, j)
                                                                  : detail::predicts_l2(p, *s, i, j);
        ++rep.pairs_checked;
        if (actual) ++rep.divisible_pairs;
        if (actual != predicted) {
            ++rep.counterexample_count;
            if (rep.counterexamples.size() < keep_counterexamples) {
                rep.counterexamples.push_back({sigma, i, j, actual, predicted});
            }
        }
    };

    if (scope == CharacterizationScope::taylor) {
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
            Face sigma(bits);
            for (unsigned i = 1; i <= q; ++i)
                for (unsigned j = i; j <= q; ++j)
                    if (!sigma.contains(pair_index(q, i, j))) check(sigma, i, j);
        }
    } else {
        auto complex = l2(q);
        for (auto face : faces(complex, -2, EmptyFace::include)) {
            face.for_each_vertex([&](unsigned v) {
                auto e = complex.vertices()[v];
                check(face.without(v), e.i, e.j);
            });
        }
    }
    return rep;
}

struct MinimalityAudit {
    unsigned q, s;
    std::vector<DivRel> brute_force;                 ///< minimal relations of E_{q,D}^2
    std::vector<PredictedRelation> predicted;        ///< types 1, 2, 3, 4a and surviving 4b
    std::vector<PredictedRelation> filtered_4b;      ///< 4b relations extending another 4b or a 3b
    std::vector<DivRel> missing;                     ///< predicted but not brute-force minimal
    std::vector<DivRel> unexpected;                  ///< brute-force minimal but not predicted

    bool passed() const noexcept { return missing.empty() && unexpected.empty(); }
};

inline MinimalityAudit minimality_audit(unsigned q, unsigned s)
{
    if (s < 3 || s > q || q > 5) {
        throw InputError("minimality_audit needs 3 <= s <= q <= 5 (got q=" + std::to_string(q) +
                         ", s=" + std::to_string(s) + ")");
    }
    MinimalityAudit audit{q, s, {}, {}, {}, {}, {}};
    audit.brute_force = minimal_relations(power_generators(q, single_relation(s), 2));

    auto all = predicted_square_relations(q, s);
    std::vector<DivRel> extenders;
    for (const auto& p : all) {
        if (p.type == SquareRelationType::t3b || p.type == SquareRelationType::t4b) extenders.push_back(p.rel);
    }
    for (const auto& p : all) {
        if (p.type != SquareRelationType::t4b) {
            audit.predicted.push_back(p);
            continue;
        }
        bool extends_other = std::any_of(extenders.begin(), extenders.end(), [&](const DivRel& r) {
            return r != p.rel && p.rel.extends(r);
        });
        (extends_other ? audit.filtered_4b : audit.predicted).push_back(p);
    }

    std::set<DivRel> brute(audit.brute_force.begin(), audit.brute_force.end());
    std::set<DivRel> pred;
    for (const auto& p : audit.predicted) pred.insert(p.rel);
    std::set_difference(pred.begin(), pred.end(), brute.begin(), brute.end(), std::back_inserter(audit.missing));
    std::set_difference(brute.begin(), brute.end(), pred.begin(), pred.end(), std::back_inserter(audit.unexpected));
    return audit;
}

} // namespace lsq
