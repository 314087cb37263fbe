#pragma once

/**
 * Discrete Morse matchings on face sets.
 *
 * The generic engine takes a totally ordered family N of faces and a choice
 * omega(sigma) of a vertex outside each sigma. Every cell containing some
 * member of N joins the block of the largest such member; inside a block
 * the matching pairs tau' with tau' \ {omega}. Specific instances: the
 * pruning of the Taylor simplex for m_1 | lcm(m_2..m_s), and the matching
 * M_{q,delta} on L^2_q.
 */

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "lsq/complex.hpp"
#include "lsq/error.hpp"
#include "lsq/face.hpp"
#include "lsq/monomial.hpp"

namespace lsq {

/// A set of cells with constant-time membership.
class CellSet {
public:
    CellSet() = default;

    explicit CellSet(std::vector<Face> cells) : cells_(std::move(cells))
    {
        std::sort(cells_.begin(), cells_.end(), FaceOrder{});
        cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
        index_.reserve(cells_.size());
        for (std::size_t k = 0; k < cells_.size(); ++k) index_.emplace(cells_[k], k);
    }

    /// Non-empty faces of `c`.
    static CellSet of(const SimplicialComplex& c) { return CellSet(faces(c)); }

    const std::vector<Face>& cells() const noexcept { return cells_; }
    std::size_t size() const noexcept { return cells_.size(); }
    bool contains(Face f) const { return index_.count(f) != 0; }

    std::optional<std::size_t> index_of(Face f) const
    {
        auto it = index_.find(f);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

private:
    std::vector<Face> cells_;
    std::unordered_map<Face, std::size_t, FaceHash> index_;
};

struct MatchingSpec {
    std::vector<Face> order;     ///< N, ascending in the total order
    std::vector<unsigned> omega; ///< omega[k] is the vertex assigned to order[k]
};

struct MatchedEdge {
    Face upper; ///< tau'
    Face lower; ///< tau = tau' minus one vertex

    bool operator==(const MatchedEdge&) const = default;
};

class Matching {
public:
    Matching() = default;

    explicit Matching(std::vector<MatchedEdge> edges) : edges_(std::move(edges))
    {
        for (const auto& e : edges_) {
            if (!e.upper.contains(e.lower) || e.upper.size() != e.lower.size() + 1) {
                throw StructuralError("matched pair is not a codimension-one inclusion");
            }
            if (!partner_.emplace(e.upper, e.lower).second || !partner_.emplace(e.lower, e.upper).second) {
                throw StructuralError("a cell occurs in more than one matched edge");
            }
        }
    }

    const std::vector<MatchedEdge>& edges() const noexcept { return edges_; }
    std::size_t size() const noexcept { return edges_.size(); }
    bool matched(Face f) const { return partner_.count(f) != 0; }

    std::optional<Face> partner(Face f) const
    {
        auto it = partner_.find(f);
        if (it == partner_.end()) return std::nullopt;
        return it->second;
    }

    /// The larger cell matched with `f`, if `f` is the lower end of an edge.
    std::optional<Face> up_partner(Face f) const
    {
        auto p = partner(f);
        if (p && p->size() > f.size()) return p;
        return std::nullopt;
    }

private:
    std::vector<MatchedEdge> edges_;
    std::unordered_map<Face, Face, FaceHash> partner_;
};

namespace detail {

inline void check_spec(const MatchingSpec& spec)
{
    if (spec.order.size() != spec.omega.size()) {
        throw InputError("matching spec needs one omega value per member of N");
    }
    for (std::size_t k = 0; k < spec.order.size(); ++k) {
        if (spec.order[k].contains(spec.omega[k])) {
            throw InputError("omega(sigma) lies in sigma for member " + std::to_string(k) + " of N");
        }
    }
}

/// Block of each cell: index into spec.order of the largest member it contains, or -1.
inline std::vector<long> blocks(const CellSet& y, const MatchingSpec& spec)
{
    std::vector<long> out(y.size(), -1);
    for (std::size_t c = 0; c < y.size(); ++c) {
        for (auto k = static_cast<long>(spec.order.size()) - 1; k >= 0; --k) {
            if (y.cells()[c].contains(spec.order[static_cast<std::size_t>(k)])) {
                out[c] = k;
                break;
            }
        }
    }
    return out;
}

} // namespace detail

inline Matching build_matching(const CellSet& y, const MatchingSpec& spec)
{
    detail::check_spec(spec);
    auto block = detail::blocks(y, spec);
    std::vector<MatchedEdge> edges;
    for (std::size_t c = 0; c < y.size(); ++c) {
        if (block[c] < 0) continue;
        Face upper = y.cells()[c];
        auto w = spec.omega[static_cast<std::size_t>(block[c])];
        if (!upper.contains(w)) continue;
        Face lower = upper.without(w);
        auto lc = y.index_of(lower);
        if (lc && block[*lc] == block[c]) edges.push_back({upper, lower});
    }
    return Matching(std::move(edges));
}

/// (Y \ Y_N) together with every tau in Y_sigma whose union with omega(sigma) leaves Y_sigma.
inline std::vector<Face> critical_cells(const CellSet& y, const MatchingSpec& spec)
{
    detail::check_spec(spec);
    auto block = detail::blocks(y, spec);
    std::vector<Face> out;
    for (std::size_t c = 0; c < y.size(); ++c) {
        if (block[c] < 0) {
            out.push_back(y.cells()[c]);
            continue;
        }
        auto k = static_cast<std::size_t>(block[c]);
        Face up = y.cells()[c].with(spec.omega[k]);
        auto uc = y.index_of(up);
        if (!uc || block[*uc] != block[c]) out.push_back(y.cells()[c]);
    }
    return out;
}

/// Cells of `y` not incident to any matched edge.
inline std::vector<Face> unmatched_cells(const CellSet& y, const Matching& m)
{
    std::vector<Face> out;
    for (auto f : y.cells())
        if (!m.matched(f)) out.push_back(f);
    return out;
}

/**
 * True iff reversing the matched edges in the codimension-one inclusion
 * digraph of `y` creates no directed cycle. A cycle cannot leave a pair of
 * adjacent cardinality layers (after going up along a matched edge the only
 * way on is down), so each layer pair is searched separately.
 */
inline bool is_acyclic(const CellSet& y, const Matching& m)
{
    for (const auto& e : m.edges()) {
        if (!y.contains(e.upper) || !y.contains(e.lower)) {
            throw StructuralError("matched edge leaves the cell set");
        }
    }
    enum : std::uint8_t { white, grey, black };
    std::vector<std::uint8_t> colour(y.size(), white);

    // successors inside the layer pair (low, low + 1)
    auto successors = [&](Face f, unsigned low, std::vector<Face>& out) {
        out.clear();
        if (f.size() == low) {
            if (auto up = m.up_partner(f)) out.push_back(*up);
            return;
        }
        auto p = m.partner(f);
        f.for_each_vertex([&](unsigned v) {
            Face lower = f.without(v);
            if (lower.empty() || !y.contains(lower)) return;
            if (p && *p == lower) return;
            out.push_back(lower);
        });
    };

    std::map<unsigned, std::vector<Face>> starts;
    for (const auto& e : m.edges()) starts[e.lower.size()].push_back(e.lower);

    struct Frame {
        Face face;
        std::vector<Face> next;
        std::size_t pos;
    };
    for (const auto& [low, roots] : starts) {
        std::fill(colour.begin(), colour.end(), white);
        for (auto root : roots) {
            if (colour[*y.index_of(root)] != white) continue;
            std::vector<Frame> stack;
            std::vector<Face> buf;
            successors(root, low, buf);
            stack.push_back({root, buf, 0});
            colour[*y.index_of(root)] = grey;
            while (!stack.empty()) {
                auto& top = stack.back();
                if (top.pos == top.next.size()) {
                    colour[*y.index_of(top.face)] = black;
                    stack.pop_back();
                    continue;
                }
                Face nxt = top.next[top.pos++];
                auto id = *y.index_of(nxt);
                if (colour[id] == grey) return false;
                if (colour[id] == black) continue;
                colour[id] = grey;
                successors(nxt, low, buf);
                stack.push_back({nxt, buf, 0});
            }
        }
    }
    return true;
}

/// Every matched edge joins cells with equal lcm labels.
inline bool is_homogeneous(const Matching& m, const LabeledComplex& labels)
{
    return std::all_of(m.edges().begin(), m.edges().end(),
                       [&](const MatchedEdge& e) { return labels.label(e.upper) == labels.label(e.lower); });
}

// ---------------------------------------------------------------------------
// First power: pruning the Taylor simplex with m_1 | lcm(m_2, ..., m_s).

struct FirstPowerPruning {
    unsigned q, s;
    SimplicialComplex gamma; ///< faces of the simplex not containing {e_2..e_s}
    CellSet cells;           ///< non-empty faces of the simplex
    MatchingSpec spec;       ///< N = {{e_2..e_s}}, omega = e_1
    Matching matching;
};

inline FirstPowerPruning prune_taylor_first_power(unsigned q, unsigned s)
{
    if (s < 3 || s > q) throw InputError("need 3 <= s <= q");
    auto simplex = taylor(q);
    Face sigma;
    for (unsigned k = 2; k <= s; ++k) sigma = sigma.with(k - 1);
    std::vector<Face> facets;
    for (unsigned k = 2; k <= s; ++k) facets.push_back(Face::prefix(q).without(k - 1));
    FirstPowerPruning p{q, s, SimplicialComplex(simplex.vertices(), std::move(facets)), CellSet::of(simplex),
                        MatchingSpec{{sigma}, {0}}, {}};
    p.matching = build_matching(p.cells, p.spec);
    return p;
}

// ---------------------------------------------------------------------------
// Second power: the matching M_{q,delta} on L^2_q for delta = (1, {2..s}).

enum class NType { i = 1, ii = 2, iii = 3 };

struct L2Matching {
    unsigned q, s;
    SimplicialComplex complex;
    CellSet cells; ///< non-empty faces of L^2_q
    MatchingSpec spec;
    std::vector<NType> types; ///< type of each member of spec.order
    Matching matching;
};

namespace detail {

inline Face pair_face(unsigned q, const std::vector<std::pair<unsigned, unsigned>>& ps)
{
    Face f;
    for (auto [a, b] : ps) f = f.with(pair_index(q, a, b));
    return f;
}

inline void check_l2_qs(unsigned q, unsigned s)
{
    if (s < 3 || s > q) {
        throw InputError("s = " + std::to_string(s) + " must satisfy 3 <= s <= q = " + std::to_string(q));
    }
    require_capacity(pair_count(q) <= Face::kMaxVertices, "|N^2_q|", pair_count(q), Face::kMaxVertices);
}

} // namespace detail

/**
 * N consists of
 *   (i)   {e_2j, ..., e_sj}                         for j in [q],
 *   (ii)  {e_2t_2, ..., e_st_s}, {t_k} = {1, j}     for j > s,
 *   (iii) {e_21, ..., e_s1, e_ju}                   for j > u > s,
 * ordered (i) < (ii) < (iii); within a type lexicographically on the sorted
 * vertex list unless `shuffle_seed` asks for a random same-type order.
 * omega(sigma) = e_1j.
 */
inline L2Matching matching_L2(unsigned q, unsigned s, std::optional<std::uint64_t> shuffle_seed = std::nullopt)
{
    detail::check_l2_qs(q, s);
    using detail::pair_face;
    std::vector<std::pair<Face, unsigned>> type_i, type_ii, type_iii;

    for (unsigned j = 1; j <= q; ++j) {
        std::vector<std::pair<unsigned, unsigned>> ps;
        for (unsigned k = 2; k <= s; ++k) ps.emplace_back(k, j);
        type_i.emplace_back(pair_face(q, ps), pair_index(q, 1, j));
    }
    for (unsigned j = s + 1; j <= q; ++j) {
        const unsigned n = s - 1;
        for (std::uint32_t pick = 1; pick + 1 < (std::uint32_t{1} << n); ++pick) {
            std::vector<std::pair<unsigned, unsigned>> ps;
            for (unsigned k = 2; k <= s; ++k) ps.emplace_back(k, ((pick >> (k - 2)) & 1u) ? j : 1);
            type_ii.emplace_back(pair_face(q, ps), pair_index(q, 1, j));
        }
    }
    for (unsigned j = s + 2; j <= q; ++j) {
        for (unsigned u = s + 1; u < j; ++u) {
            std::vector<std::pair<unsigned, unsigned>> ps;
            for (unsigned k = 2; k <= s; ++k) ps.emplace_back(k, 1);
            ps.emplace_back(j, u);
            type_iii.emplace_back(pair_face(q, ps), pair_index(q, 1, j));
        }
    }

    std::mt19937_64 rng(shuffle_seed.value_or(0));
    auto arrange = [&](auto& group) {
        std::sort(group.begin(), group.end(), [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
        if (shuffle_seed) std::shuffle(group.begin(), group.end(), rng);
    };
    arrange(type_i);
    arrange(type_ii);
    arrange(type_iii);

    L2Matching m{q, s, l2(q), {}, {}, {}, {}};
    m.cells = CellSet::of(m.complex);
    auto append = [&](const auto& group, NType t) {
        for (const auto& [face, w] : group) {
            m.spec.order.push_back(face);
            m.spec.omega.push_back(w);
            m.types.push_back(t);
        }
    };
    append(type_i, NType::i);
    append(type_ii, NType::ii);
    append(type_iii, NType::iii);
    m.matching = build_matching(m.cells, m.spec);
    return m;
}

enum class CriticalType { none, a, b };

namespace detail {

struct L2Shape {
    unsigned q, s;
    bool has(Face f, unsigned a, unsigned b) const { return f.contains(pair_index(q, a, b)); }

    /// Contains {e_2t_2..e_st_s} with {t_k} = {j} for some j, or = {1, j} for some j > s.
    bool contains_n_face(Face f) const
    {
        for (unsigned j = 1; j <= q; ++j) {
            bool all = true;
            for (unsigned k = 2; k <= s && all; ++k) all = has(f, k, j);
            if (all) return true;
        }
        // {t_k} = {1, j} is realisable iff every row offers 1 or j and the rows do not all force one value
        for (unsigned j = s + 1; j <= q; ++j) {
            bool cover = true, all_only1 = true, all_onlyj = true;
            for (unsigned k = 2; k <= s && cover; ++k) {
                bool h1 = has(f, k, 1), hj = has(f, k, j);
                cover = h1 || hj;
                all_only1 = all_only1 && h1 && !hj;
                all_onlyj = all_onlyj && hj && !h1;
            }
            if (cover && !all_only1 && !all_onlyj) return true;
        }
        return false;
    }

    Face column1() const
    {
        Face f;
        for (unsigned k = 2; k <= s; ++k) f = f.with(pair_index(q, 1, k));
        return f;
    }

    /// { e_ik : 1 < i < k <= s }.
    Face inner() const
    {
        Face f;
        for (unsigned i = 2; i <= s; ++i)
            for (unsigned k = i + 1; k <= s; ++k) f = f.with(pair_index(q, i, k));
        return f;
    }

    /// { e_1k : s < k <= q }.
    Face tail() const
    {
        Face f;
        for (unsigned k = s + 1; k <= q; ++k) f = f.with(pair_index(q, 1, k));
        return f;
    }

    CriticalType classify(Face tau) const
    {
        if (!contains_n_face(tau)) return CriticalType::a;
        Face c1 = column1();
        if (!tau.contains(c1)) return CriticalType::none;
        Face rest = tau - c1;
        Face gamma = rest & inner();
        Face gamma_tail = rest & tail();
        if (!gamma.empty() && (gamma | gamma_tail) == rest) return CriticalType::b;
        return CriticalType::none;
    }
};

} // namespace detail

/// Critical type of a face of L^2_q under M_{q,delta}, computed from the closed form.
inline CriticalType critical_type_L2(unsigned q, unsigned s, Face tau)
{
    detail::check_l2_qs(q, s);
    return detail::L2Shape{q, s}.classify(tau);
}

/// Type (a) and type (b) faces of L^2_q, non-empty, in FaceOrder.
inline std::vector<Face> critical_closed_form_L2(unsigned q, unsigned s)
{
    detail::check_l2_qs(q, s);
    detail::L2Shape shape{q, s};
    std::vector<Face> out;
    for (auto f : faces(l2(q))) {
        if (shape.classify(f) != CriticalType::none) out.push_back(f);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Gradient paths and the cell order.

/**
 * Reachability along gradient paths tau = s_0 -> s_1 <- ... in the digraph
 * with matched edges reversed: alternate a codimension-one inclusion step
 * with a step up a matched edge. Results are memoized per source cell.
 */
class GradientPaths {
public:
    GradientPaths(const CellSet& y, const Matching& m) : y_(&y), m_(&m) {}

    /// Critical cells one dimension below `tau` reachable from `tau`.
    const std::unordered_set<Face, FaceHash>& reachable(Face tau)
    {
        auto it = memo_.find(tau);
        if (it != memo_.end()) return it->second;
        std::unordered_set<Face, FaceHash> found;
        std::unordered_set<Face, FaceHash> seen_upper{tau};
        std::unordered_set<Face, FaceHash> seen_lower;
        std::deque<Face> queue{tau};
        while (!queue.empty()) {
            Face upper = queue.front();
            queue.pop_front();
            auto skip = m_->partner(upper);
            upper.for_each_vertex([&](unsigned v) {
                Face lower = upper.without(v);
                if (lower.empty() || !y_->contains(lower)) return;
                if (skip && *skip == lower) return;
                if (!seen_lower.insert(lower).second) return;
                if (!m_->matched(lower)) {
                    found.insert(lower);
                    return;
                }
                if (auto up = m_->up_partner(lower); up && seen_upper.insert(*up).second) queue.push_back(*up);
            });
        }
        return memo_.emplace(tau, std::move(found)).first->second;
    }

private:
    const CellSet* y_;
    const Matching* m_;
    std::unordered_map<Face, std::unordered_set<Face, FaceHash>, FaceHash> memo_;
};

inline bool gradient_path_exists(const CellSet& y, const Matching& m, Face tau, Face sigma)
{
    if (!y.contains(tau) || !y.contains(sigma) || m.matched(tau) || m.matched(sigma)) {
        throw InputError("gradient path endpoints must be critical cells");
    }
    if (sigma.size() + 1 != tau.size()) throw InputError("gradient path endpoints must differ by one dimension");
    GradientPaths paths(y, m);
    return paths.reachable(tau).count(sigma) != 0;
}

/**
 * sigma_A <= tau_A for critical cells of M_{q,delta} with |sigma| = |tau| - 1:
 * inclusion, or (tau of type (b) with a single inner vertex gamma)
 * sigma = ((tau \ gamma) + e_11) \ e_1l for some 2 <= l <= s.
 */
inline bool cell_order_closed_form(unsigned q, unsigned s, Face sigma, Face tau)
{
    detail::check_l2_qs(q, s);
    detail::L2Shape shape{q, s};
    auto ts = shape.classify(tau);
    if (ts == CriticalType::none || shape.classify(sigma) == CriticalType::none || sigma.empty()) {
        throw InputError("cell order is defined on critical faces only");
    }
    if (sigma.size() + 1 != tau.size()) throw InputError("cell order compares faces one dimension apart");
    if (tau.contains(sigma)) return true;
    if (ts == CriticalType::a) return false;
    Face gamma = tau & shape.inner();
    if (gamma.size() != 1) return false;
    Face base = (tau - gamma).with(pair_index(q, 1, 1));
    for (unsigned l = 2; l <= s; ++l) {
        if (sigma == base.without(pair_index(q, 1, l))) return true;
    }
    return false;
}

struct MorseComplex {
    unsigned q, s;
    std::vector<std::vector<Face>> cells; ///< cells[d] = critical faces of dimension d
    std::vector<std::pair<Face, Face>> order; ///< (sigma, tau) with sigma_A <= tau_A, adjacent dimensions

    std::vector<std::size_t> counts() const
    {
        std::vector<std::size_t> out;
        for (const auto& c : cells) out.push_back(c.size());
        return out;
    }
};

enum class CrossCheck { off, on };

/// Cells from the closed form; order from the closed form, optionally checked against gradient paths.
inline MorseComplex morse_complex(unsigned q, unsigned s, CrossCheck cross = CrossCheck::off, bool with_order = true)
{
    detail::check_l2_qs(q, s);
    require_capacity(q <= 6, "q", q, 6);
    detail::L2Shape shape{q, s};
    MorseComplex mc{q, s, {}, {}};
    std::unordered_set<Face, FaceHash> critical;
    for (auto f : critical_closed_form_L2(q, s)) {
        auto d = static_cast<std::size_t>(f.dim());
        if (mc.cells.size() <= d) mc.cells.resize(d + 1);
        mc.cells[d].push_back(f);
        critical.insert(f);
    }
    if (!with_order) return mc;

    std::optional<L2Matching> engine;
    std::optional<GradientPaths> paths;
    if (cross == CrossCheck::on) {
        engine.emplace(matching_L2(q, s));
        paths.emplace(engine->cells, engine->matching);
    }
    for (std::size_t d = 1; d < mc.cells.size(); ++d) {
        for (auto tau : mc.cells[d]) {
            std::vector<Face> below;
            tau.for_each_vertex([&](unsigned v) {
                Face f = tau.without(v);
                if (critical.count(f)) below.push_back(f);
            });
            if (shape.classify(tau) == CriticalType::b && (tau & shape.inner()).size() == 1) {
                Face base = (tau - (tau & shape.inner())).with(pair_index(q, 1, 1));
                for (unsigned l = 2; l <= s; ++l) {
                    Face f = base.without(pair_index(q, 1, l));
                    if (critical.count(f)) below.push_back(f);
                }
            }
            std::sort(below.begin(), below.end(), FaceOrder{});
            below.erase(std::unique(below.begin(), below.end()), below.end());
            if (paths) {
                const auto& reach = paths->reachable(tau);
                std::unordered_set<Face, FaceHash> mine(below.begin(), below.end());
                if (mine != reach) {
                    throw InvariantError("closed-form cell order disagrees with gradient paths");
                }
            }
            for (auto f : below) mc.order.emplace_back(f, tau);
        }
    }
    return mc;
}

} // namespace lsq
