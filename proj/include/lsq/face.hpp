#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

#include "lsq/error.hpp"

namespace lsq {

/// A set of vertex indices (0-based, < 64) stored as a bit mask.
class Face {
public:
    static constexpr unsigned kMaxVertices = 64;

    constexpr Face() = default;
    constexpr explicit Face(std::uint64_t bits) : bits_(bits) {}

    static Face of(std::initializer_list<unsigned> vertices)
    {
        Face f;
        for (auto v : vertices) f = f.with(v);
        return f;
    }

    static Face of(const std::vector<unsigned>& vertices)
    {
        Face f;
        for (auto v : vertices) f = f.with(v);
        return f;
    }

    /// The full face on the first `n` vertices.
    static Face prefix(unsigned n)
    {
        if (n > kMaxVertices) {
            throw CapacityError("face width " + std::to_string(n) + " exceeds 64 vertices");
        }
        return Face(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const noexcept { return bits_; }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    constexpr unsigned size() const noexcept { return static_cast<unsigned>(std::popcount(bits_)); }
    constexpr int dim() const noexcept { return static_cast<int>(size()) - 1; }

    constexpr bool contains(unsigned v) const noexcept { return (bits_ >> v) & 1u; }
    constexpr bool contains(Face other) const noexcept { return (bits_ & other.bits_) == other.bits_; }
    constexpr bool subset_of(Face other) const noexcept { return other.contains(*this); }
    constexpr bool intersects(Face other) const noexcept { return (bits_ & other.bits_) != 0; }

    constexpr Face with(unsigned v) const noexcept { return Face(bits_ | (std::uint64_t{1} << v)); }
    constexpr Face without(unsigned v) const noexcept { return Face(bits_ & ~(std::uint64_t{1} << v)); }

    constexpr Face operator|(Face o) const noexcept { return Face(bits_ | o.bits_); }
    constexpr Face operator&(Face o) const noexcept { return Face(bits_ & o.bits_); }
    constexpr Face operator-(Face o) const noexcept { return Face(bits_ & ~o.bits_); }

    std::vector<unsigned> vertices() const
    {
        std::vector<unsigned> out;
        out.reserve(size());
        for (auto b = bits_; b; b &= b - 1) out.push_back(static_cast<unsigned>(std::countr_zero(b)));
        return out;
    }

    template <class F>
    void for_each_vertex(F&& fn) const
    {
        for (auto b = bits_; b; b &= b - 1) fn(static_cast<unsigned>(std::countr_zero(b)));
    }

    constexpr bool operator==(const Face&) const = default;

private:
    std::uint64_t bits_ = 0;
};

/// Cardinality first, then lexicographic on the sorted vertex list.
struct FaceOrder {
    bool operator()(Face a, Face b) const noexcept
    {
        if (a.size() != b.size()) return a.size() < b.size();
        auto diff = a.bits() ^ b.bits();
        if (diff == 0) return false;
        return (a.bits() & (diff & (~diff + 1))) != 0;
    }
};

/// Lexicographic on the sorted vertex list, ignoring cardinality.
inline bool lex_less(Face a, Face b) noexcept
{
    auto diff = a.bits() ^ b.bits();
    if (diff == 0) return false;
    auto low = diff & (~diff + 1);
    // Whichever face owns the lowest differing vertex is smaller, unless the
    // other face has no vertex left beyond the common prefix.
    if (a.bits() & low) return true;
    // b owns `low`; a is smaller only if it is a proper prefix of b, i.e. a has no bits above low
    return (a.bits() & ~(low - 1)) == 0;
}

struct FaceHash {
    std::size_t operator()(Face f) const noexcept { return std::hash<std::uint64_t>{}(f.bits() * 0x9E3779B97F4A7C15ull); }
};

} // namespace lsq
