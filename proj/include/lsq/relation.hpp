#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "lsq/error.hpp"

namespace lsq {

/// A set of 1-based generator indices (1..64).
class IndexSet {
public:
    constexpr IndexSet() = default;
    constexpr explicit IndexSet(std::uint64_t bits) : bits_(bits) {}

    IndexSet(std::initializer_list<unsigned> indices)
    {
        for (auto i : indices) insert(i);
    }

    static IndexSet of(const std::vector<unsigned>& indices)
    {
        IndexSet s;
        for (auto i : indices) s.insert(i);
        return s;
    }

    /// {lo, lo+1, ..., hi}; empty when lo > hi.
    static IndexSet range(unsigned lo, unsigned hi)
    {
        IndexSet s;
        for (unsigned i = lo; i <= hi; ++i) s.insert(i);
        return s;
    }

    void insert(unsigned i)
    {
        if (i < 1 || i > 64) throw InputError("index " + std::to_string(i) + " outside 1..64");
        bits_ |= std::uint64_t{1} << (i - 1);
    }

    constexpr bool contains(unsigned i) const noexcept { return i >= 1 && i <= 64 && ((bits_ >> (i - 1)) & 1u); }
    constexpr bool subset_of(IndexSet o) const noexcept { return (bits_ & ~o.bits_) == 0; }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    constexpr unsigned size() const noexcept { return static_cast<unsigned>(std::popcount(bits_)); }
    constexpr std::uint64_t bits() const noexcept { return bits_; }

    /// Largest member, 0 when empty.
    constexpr unsigned max() const noexcept { return bits_ ? 64u - static_cast<unsigned>(std::countl_zero(bits_)) : 0u; }

    std::vector<unsigned> members() const
    {
        std::vector<unsigned> out;
        for (auto b = bits_; b; b &= b - 1) out.push_back(static_cast<unsigned>(std::countr_zero(b)) + 1);
        return out;
    }

    constexpr auto operator<=>(const IndexSet&) const = default;

private:
    std::uint64_t bits_ = 0;
};

/// "generator b divides the lcm of the generators indexed by B".
struct DivRel {
    unsigned b = 0;
    IndexSet B;

    bool trivial() const noexcept { return B.contains(b); }

    /// (c, C) extends (b, B) iff c == b and B is a subset of C.
    bool extends(const DivRel& other) const noexcept { return b == other.b && other.B.subset_of(B); }

    auto operator<=>(const DivRel&) const = default;
};

using DivSet = std::vector<DivRel>;

inline std::string to_string(const DivRel& r)
{
    std::string out = "(" + std::to_string(r.b) + ",{";
    bool first = true;
    for (auto i : r.B.members()) {
        if (!first) out += ",";
        out += std::to_string(i);
        first = false;
    }
    return out + "})";
}

/// Parses "1:2,3" into (1, {2,3}).
inline DivRel parse_relation(const std::string& text)
{
    auto colon = text.find(':');
    if (colon == std::string::npos) throw InputError("relation '" + text + "' must look like b:i,j,...");
    DivRel r;
    try {
        r.b = static_cast<unsigned>(std::stoul(text.substr(0, colon)));
        std::size_t pos = colon + 1;
        while (pos < text.size()) {
            auto comma = text.find(',', pos);
            auto token = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            r.B.insert(static_cast<unsigned>(std::stoul(token)));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    } catch (const std::logic_error&) {
        throw InputError("relation '" + text + "' must look like b:i,j,...");
    }
    if (r.B.empty()) throw InputError("relation '" + text + "' has an empty index set");
    return r;
}

/// {(1, {2, ..., s})}.
inline DivSet single_relation(unsigned s)
{
    return {DivRel{1, IndexSet::range(2, s)}};
}

} // namespace lsq
