#pragma once

/**
 * Simplicial complexes given by facets over an indexed vertex list.
 *
 * Vertices are exponent vectors of the generators of I (first power,
 * e_i) or I^2 (second power, e_ij = e_i + e_j). The vertex list of l2(q)
 * is N^2_q in lexicographic pair order (1,1),(1,2),...,(1,q),(2,2),...
 * so vertex k of l2(q) is also generator k of the squared ideal.
 */

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "lsq/error.hpp"
#include "lsq/face.hpp"
#include "lsq/monomial.hpp"

namespace lsq {

/// e_i when `j == 0`, otherwise e_ij with 1 <= i <= j.
struct Vertex {
    unsigned i = 0;
    unsigned j = 0;

    bool is_pair() const noexcept { return j != 0; }
    auto operator<=>(const Vertex&) const = default;
};

inline std::string to_string(Vertex v)
{
    return v.is_pair() ? std::to_string(v.i) + std::to_string(v.j) : std::to_string(v.i);
}

/// Number of vertices of N^2_q.
constexpr unsigned pair_count(unsigned q) noexcept { return q * (q + 1) / 2; }

/// 0-based position of e_ij (i <= j after sorting) in the canonical order of N^2_q.
constexpr unsigned pair_index(unsigned q, unsigned i, unsigned j) noexcept
{
    if (i > j) std::swap(i, j);
    // rows 1..i-1 hold q, q-1, ..., q-i+2 entries
    return (i - 1) * q - (i - 1) * (i - 2) / 2 + (j - i);
}

inline std::vector<Vertex> pair_vertices(unsigned q)
{
    std::vector<Vertex> out;
    for (unsigned i = 1; i <= q; ++i)
        for (unsigned j = i; j <= q; ++j) out.push_back({i, j});
    return out;
}

class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Facets are reduced to an inclusion antichain; duplicates and contained faces are dropped.
    SimplicialComplex(std::vector<Vertex> vertices, std::vector<Face> generating_faces) : vertices_(std::move(vertices))
    {
        if (vertices_.size() > Face::kMaxVertices) {
            throw CapacityError("complex has " + std::to_string(vertices_.size()) + " vertices; the limit is 64");
        }
        auto all = Face::prefix(static_cast<unsigned>(vertices_.size()));
        for (auto f : generating_faces) {
            if (!all.contains(f)) throw StructuralError("facet uses a vertex outside the vertex list");
        }
        std::sort(generating_faces.begin(), generating_faces.end(), [](Face a, Face b) {
            return a.size() != b.size() ? a.size() > b.size() : lex_less(a, b);
        });
        for (auto f : generating_faces) {
            bool covered = std::any_of(facets_.begin(), facets_.end(), [f](Face g) { return g.contains(f); });
            if (!covered) facets_.push_back(f);
        }
        std::sort(facets_.begin(), facets_.end(), FaceOrder{});
    }

    const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
    const std::vector<Face>& facets() const noexcept { return facets_; }
    unsigned vertex_count() const noexcept { return static_cast<unsigned>(vertices_.size()); }

    std::optional<unsigned> vertex_index(Vertex v) const
    {
        auto it = std::find(vertices_.begin(), vertices_.end(), v);
        if (it == vertices_.end()) return std::nullopt;
        return static_cast<unsigned>(it - vertices_.begin());
    }

    Face face_of(const std::vector<Vertex>& vs) const
    {
        Face f;
        for (auto v : vs) {
            auto k = vertex_index(v);
            if (!k) throw InputError("vertex " + to_string(v) + " is not in the complex");
            f = f.with(*k);
        }
        return f;
    }

    std::vector<Vertex> vertices_of(Face f) const
    {
        std::vector<Vertex> out;
        f.for_each_vertex([&](unsigned k) { out.push_back(vertices_.at(k)); });
        return out;
    }

    int dimension() const
    {
        int d = -1;
        for (auto f : facets_) d = std::max(d, f.dim());
        return d;
    }

private:
    std::vector<Vertex> vertices_;
    std::vector<Face> facets_;
};

/// The simplex on q vertices e_1..e_q.
inline SimplicialComplex taylor(unsigned q)
{
    if (q < 1) throw InputError("taylor requires q >= 1");
    std::vector<Vertex> vs;
    for (unsigned i = 1; i <= q; ++i) vs.push_back({i, 0});
    return SimplicialComplex(std::move(vs), {Face::prefix(q)});
}

/// The facet B = { e_ij : i < j } of l2(q).
inline Face l2_square_free_facet(unsigned q)
{
    Face b;
    for (unsigned i = 1; i <= q; ++i)
        for (unsigned j = i + 1; j <= q; ++j) b = b.with(pair_index(q, i, j));
    return b;
}

/// G_i = { e_ij : 1 <= j <= q }.
inline Face l2_star_facet(unsigned q, unsigned i)
{
    Face g;
    for (unsigned j = 1; j <= q; ++j) g = g.with(pair_index(q, i, j));
    return g;
}

/// L^2_q = < B, G_1, ..., G_q > on vertex set N^2_q.
inline SimplicialComplex l2(unsigned q)
{
    if (q < 1) throw InputError("l2 requires q >= 1");
    require_capacity(pair_count(q) <= Face::kMaxVertices, "|N^2_q|", pair_count(q), Face::kMaxVertices);
    std::vector<Face> gens{l2_square_free_facet(q)};
    for (unsigned i = 1; i <= q; ++i) gens.push_back(l2_star_facet(q, i));
    return SimplicialComplex(pair_vertices(q), std::move(gens));
}

inline bool is_face(const SimplicialComplex& c, Face f)
{
    if (f.empty()) return true;
    return std::any_of(c.facets().begin(), c.facets().end(), [f](Face g) { return g.contains(f); });
}

enum class EmptyFace { exclude, include };

/**
 * Every face exactly once, sorted by cardinality then lexicographically.
 * `dim` < -1 means all dimensions.
 */
inline std::vector<Face> faces(const SimplicialComplex& c, int dim = -2, EmptyFace empty = EmptyFace::exclude)
{
    constexpr unsigned kMaxFacetSize = 26;
    std::unordered_set<Face, FaceHash> seen;
    for (auto facet : c.facets()) {
        require_capacity(facet.size() <= kMaxFacetSize, "facet size", facet.size(), kMaxFacetSize);
        // enumerate submasks of the facet
        auto full = facet.bits();
        for (std::uint64_t sub = full;; sub = (sub - 1) & full) {
            Face f(sub);
            if (dim < -1 || f.dim() == dim) seen.insert(f);
            if (sub == 0) break;
        }
    }
    if (empty == EmptyFace::exclude || c.facets().empty()) seen.erase(Face{});
    std::vector<Face> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), FaceOrder{});
    return out;
}

/// (f_0, f_1, ..., f_{d+1}) with f_0 = 1 and f_i the number of faces of cardinality i.
inline std::vector<std::size_t> f_vector(const SimplicialComplex& c)
{
    std::vector<std::size_t> f(static_cast<std::size_t>(c.dimension() + 2), 0);
    f[0] = 1;
    for (auto face : faces(c)) ++f[face.size()];
    return f;
}

/// Counts faces by cardinality in an arbitrary face list (index k = cardinality k).
inline std::vector<std::size_t> cardinality_counts(const std::vector<Face>& fs)
{
    std::vector<std::size_t> out;
    for (auto f : fs) {
        if (out.size() <= f.size()) out.resize(f.size() + 1, 0);
        ++out[f.size()];
    }
    return out;
}

/// A complex whose vertex k carries the monomial `labels[k]`; faces carry lcms.
class LabeledComplex {
public:
    LabeledComplex(SimplicialComplex complex, std::vector<Monomial> labels, VariableSetPtr ring)
        : complex_(std::move(complex)), labels_(std::move(labels)), ring_(std::move(ring))
    {
        if (labels_.size() != complex_.vertex_count()) {
            throw StructuralError("need one label per vertex: " + std::to_string(labels_.size()) + " labels for " +
                                  std::to_string(complex_.vertex_count()) + " vertices");
        }
    }

    /// Vertex k labeled by generator k+1 of `ideal` (the squared ideal for l2(q)).
    LabeledComplex(SimplicialComplex complex, const MonomialIdeal& ideal)
        : LabeledComplex(std::move(complex), ideal.generators(), ideal.ring())
    {
    }

    const SimplicialComplex& complex() const noexcept { return complex_; }
    const std::vector<Monomial>& labels() const noexcept { return labels_; }

    Monomial label(Face f) const
    {
        Monomial acc(ring_);
        f.for_each_vertex([&](unsigned k) { acc = lcm(acc, labels_.at(k)); });
        return acc;
    }

private:
    SimplicialComplex complex_;
    std::vector<Monomial> labels_;
    VariableSetPtr ring_;
};

} // namespace lsq
