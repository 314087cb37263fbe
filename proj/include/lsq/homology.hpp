#pragma once

/**
 * Reduced simplicial homology over GF(2) or Q.
 *
 * Results are indexed from dimension -1: out[k] = dim H~_{k-1}. The void
 * complex (no faces, not even the empty one) has no homology; the complex
 * {emptyset} has H~_{-1} of dimension 1.
 */

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lsq/complex.hpp"
#include "lsq/error.hpp"
#include "lsq/face.hpp"

namespace lsq {

enum class Field { gf2, rational };

inline const char* to_string(Field f) { return f == Field::gf2 ? "GF2" : "QQ"; }

/// Default cap on the number of faces handed to one homology computation.
inline constexpr std::size_t kMaxHomologyFaces = std::size_t{1} << 17;

/// A matrix of small integers given row by row as (column, value) lists.
struct SparseRows {
    std::size_t columns = 0;
    std::vector<std::vector<std::pair<std::size_t, int>>> rows;
};

namespace detail {

inline std::size_t rank_gf2(const SparseRows& m)
{
    const std::size_t words = (m.columns + 63) / 64;
    std::unordered_map<std::size_t, std::vector<std::uint64_t>> pivots;
    std::vector<std::uint64_t> row(words);
    for (const auto& r : m.rows) {
        std::fill(row.begin(), row.end(), 0);
        for (auto [c, v] : r)
            if (v & 1) row[c / 64] ^= std::uint64_t{1} << (c % 64);
        while (true) {
            std::size_t w = 0;
            while (w < words && row[w] == 0) ++w;
            if (w == words) break;
            std::size_t lead = w * 64 + static_cast<std::size_t>(std::countr_zero(row[w]));
            auto it = pivots.find(lead);
            if (it == pivots.end()) {
                pivots.emplace(lead, row);
                break;
            }
            for (std::size_t k = w; k < words; ++k) row[k] ^= it->second[k];
        }
    }
    return pivots.size();
}

struct Overflow {};

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
}

inline boost::multiprecision::cpp_int checked_mul(const boost::multiprecision::cpp_int& a,
                                                  const boost::multiprecision::cpp_int& b)
{
    return a * b;
}

inline boost::multiprecision::cpp_int checked_sub(const boost::multiprecision::cpp_int& a,
                                                  const boost::multiprecision::cpp_int& b)
{
    return a - b;
}

inline std::int64_t abs_value(std::int64_t a) { return a < 0 ? -a : a; }
inline boost::multiprecision::cpp_int abs_value(const boost::multiprecision::cpp_int& a) { return abs(a); }
inline std::int64_t gcd_value(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
inline boost::multiprecision::cpp_int gcd_value(const boost::multiprecision::cpp_int& a,
                                                const boost::multiprecision::cpp_int& b)
{
    return boost::multiprecision::gcd(a, b);
}

/// Fraction-free row reduction; every reduced row is divided by the gcd of its entries.
template <class T>
std::size_t rank_integer(const SparseRows& m)
{
    using Row = std::vector<std::pair<std::size_t, T>>; // sorted by column, non-zero entries
    std::unordered_map<std::size_t, Row> pivots;        // leading column -> row
    for (const auto& r : m.rows) {
        Row row;
        for (auto [c, v] : r)
            if (v != 0) row.emplace_back(c, T(v));
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        while (!row.empty()) {
            auto it = pivots.find(row.front().first);
            if (it == pivots.end()) {
                pivots.emplace(row.front().first, std::move(row));
                break;
            }
            const Row& p = it->second;
            T a = p.front().second;   // pivot entry
            T b = row.front().second; // entry to clear
            Row next;
            std::size_t x = 0, y = 0;
            while (x < row.size() || y < p.size()) {
                std::size_t c;
                T v;
                if (y == p.size() || (x < row.size() && row[x].first < p[y].first)) {
                    c = row[x].first;
                    v = checked_mul(a, row[x].second);
                    ++x;
                } else if (x == row.size() || p[y].first < row[x].first) {
                    c = p[y].first;
                    v = checked_sub(T(0), checked_mul(b, p[y].second));
                    ++y;
                } else {
                    c = row[x].first;
                    v = checked_sub(checked_mul(a, row[x].second), checked_mul(b, p[y].second));
                    ++x;
                    ++y;
                }
                if (v != 0) next.emplace_back(c, v);
            }
            T g(0);
            for (const auto& e : next) g = gcd_value(g, abs_value(e.second));
            if (g > 1)
                for (auto& e : next) e.second /= g;
            row = std::move(next);
        }
    }
    return pivots.size();
}

} // namespace detail

/// Rank of an integer matrix over the given field; rational ranks use exact arithmetic.
inline std::size_t matrix_rank(const SparseRows& m, Field field)
{
    if (field == Field::gf2) return detail::rank_gf2(m);
    try {
        return detail::rank_integer<std::int64_t>(m);
    } catch (const detail::Overflow&) {
        return detail::rank_integer<boost::multiprecision::cpp_int>(m);
    }
}

/**
 * Reduced homology of an abstract complex listed by cardinality:
 * by_size[k] holds the faces with k vertices (by_size[0] is {emptyset} or
 * empty for the void complex). `boundary(face, emit)` calls emit(subface, sign)
 * for each codimension-one subface.
 */
template <class Key, class Hash, class Boundary>
std::vector<std::size_t> reduced_homology_by_size(const std::vector<std::vector<Key>>& by_size, Boundary boundary,
                                                  Field field, std::size_t max_faces = kMaxHomologyFaces)
{
    std::size_t total = 0;
    for (const auto& layer : by_size) total += layer.size();
    require_capacity(total <= max_faces, "face count", total, max_faces);
    if (total == 0) return {};

    std::vector<std::unordered_map<Key, std::size_t, Hash>> index(by_size.size());
    for (std::size_t k = 0; k < by_size.size(); ++k)
        for (std::size_t t = 0; t < by_size[k].size(); ++t) index[k].emplace(by_size[k][t], t);

    // rank[k] = rank of the boundary from cardinality k to k - 1
    std::vector<std::size_t> rank(by_size.size() + 1, 0);
    for (std::size_t k = 1; k < by_size.size(); ++k) {
        SparseRows m;
        m.columns = by_size[k - 1].size();
        for (const auto& f : by_size[k]) {
            std::vector<std::pair<std::size_t, int>> row;
            boundary(f, [&](const Key& sub, int sign) {
                auto it = index[k - 1].find(sub);
                if (it == index[k - 1].end()) throw StructuralError("face list is not closed under taking subfaces");
                row.emplace_back(it->second, sign);
            });
            m.rows.push_back(std::move(row));
        }
        rank[k] = matrix_rank(m, field);
    }
    std::vector<std::size_t> out(by_size.size(), 0);
    for (std::size_t k = 0; k < by_size.size(); ++k) out[k] = by_size[k].size() - rank[k] - rank[k + 1];
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

/// Faces as vertex masks. The empty face is added whenever the list is non-empty.
inline std::vector<std::size_t> reduced_homology_dims(const std::vector<Face>& face_list, Field field,
                                                      std::size_t max_faces = kMaxHomologyFaces)
{
    if (face_list.empty()) return {};
    std::vector<std::vector<Face>> by_size(1, std::vector<Face>{Face{}});
    for (auto f : face_list) {
        if (f.empty()) continue;
        if (by_size.size() <= f.size()) by_size.resize(f.size() + 1);
        by_size[f.size()].push_back(f);
    }
    for (auto& layer : by_size) {
        std::sort(layer.begin(), layer.end(), FaceOrder{});
        layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
    }
    auto boundary = [](Face f, auto&& emit) {
        int sign = 1;
        f.for_each_vertex([&](unsigned v) {
            emit(f.without(v), sign);
            sign = -sign;
        });
    };
    return reduced_homology_by_size<Face, FaceHash>(by_size, boundary, field, max_faces);
}

inline std::vector<std::size_t> reduced_homology_dims(const SimplicialComplex& c, Field field)
{
    if (c.facets().empty()) return {};
    return reduced_homology_dims(faces(c, -2, EmptyFace::include), field);
}

} // namespace lsq
