#pragma once

/**
 * Exact monomial arithmetic over a finite, named, ordered set of variables.
 *
 * A Monomial is an exponent vector tied to a shared VariableSet. All
 * arithmetic is componentwise: lcm is max, product is sum, divisibility is
 * the componentwise partial order.
 */

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lsq/error.hpp"

namespace lsq {

class VariableSet {
public:
    VariableSet() = default;

    explicit VariableSet(std::vector<std::string> names) : names_(std::move(names))
    {
        for (std::size_t k = 0; k < names_.size(); ++k) {
            if (names_[k].empty()) {
                throw InputError("variable names must be non-empty");
            }
            if (!index_.emplace(names_[k], k).second) {
                throw InputError("duplicate variable name '" + names_[k] + "'");
            }
        }
    }

    std::size_t size() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name(std::size_t k) const { return names_.at(k); }

    std::optional<std::size_t> index_of(std::string_view name) const
    {
        auto it = index_.find(std::string(name));
        if (it == index_.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    friend bool operator==(const VariableSet& a, const VariableSet& b) { return a.names_ == b.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
};

using VariableSetPtr = std::shared_ptr<const VariableSet>;

inline VariableSetPtr make_variables(std::vector<std::string> names)
{
    return std::make_shared<const VariableSet>(std::move(names));
}

inline bool same_ring(const VariableSetPtr& a, const VariableSetPtr& b)
{
    return a == b || (a && b && *a == *b);
}

class Monomial {
public:
    using Exponent = std::uint16_t;

    /// The monomial 1 over `vars`.
    explicit Monomial(VariableSetPtr vars) : vars_(std::move(vars)), exps_(vars_->size(), 0) {}

    Monomial(VariableSetPtr vars, std::vector<Exponent> exps) : vars_(std::move(vars)), exps_(std::move(exps))
    {
        if (exps_.size() != vars_->size()) {
            throw StructuralError("exponent vector length " + std::to_string(exps_.size()) +
                                  " does not match variable count " + std::to_string(vars_->size()));
        }
    }

    const VariableSetPtr& ring() const noexcept { return vars_; }
    std::span<const Exponent> exponents() const noexcept { return exps_; }
    Exponent operator[](std::size_t k) const { return exps_.at(k); }

    bool is_one() const
    {
        return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
    }

    bool is_square_free() const
    {
        return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
    }

    unsigned degree() const
    {
        unsigned d = 0;
        for (auto e : exps_) d += e;
        return d;
    }

    friend bool operator==(const Monomial& a, const Monomial& b)
    {
        return same_ring(a.vars_, b.vars_) && a.exps_ == b.exps_;
    }

    friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps_ < b.exps_; }

private:
    VariableSetPtr vars_;
    std::vector<Exponent> exps_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept
    {
        std::size_t h = 1469598103934665603ull;
        for (auto e : m.exponents()) {
            h = (h ^ e) * 1099511628211ull;
        }
        return h;
    }
};

namespace detail {

inline void check_ring(const Monomial& a, const Monomial& b)
{
    if (!same_ring(a.ring(), b.ring())) {
        throw StructuralError("monomials belong to different variable sets");
    }
}

} // namespace detail

inline bool divides(const Monomial& a, const Monomial& b)
{
    detail::check_ring(a, b);
    auto ea = a.exponents();
    auto eb = b.exponents();
    for (std::size_t k = 0; k < ea.size(); ++k) {
        if (ea[k] > eb[k]) return false;
    }
    return true;
}

inline Monomial lcm(const Monomial& a, const Monomial& b)
{
    detail::check_ring(a, b);
    std::vector<Monomial::Exponent> out(a.exponents().begin(), a.exponents().end());
    auto eb = b.exponents();
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = std::max(out[k], eb[k]);
    return Monomial(a.ring(), std::move(out));
}

/// lcm of an empty list is 1 in `ring`.
inline Monomial lcm_of(std::span<const Monomial> ms, const VariableSetPtr& ring)
{
    Monomial acc(ring);
    for (const auto& m : ms) acc = lcm(acc, m);
    return acc;
}

inline Monomial lcm_of(std::span<const Monomial> ms)
{
    if (ms.empty()) {
        throw StructuralError("lcm_of an empty list needs an explicit variable set");
    }
    return lcm_of(ms, ms.front().ring());
}

inline Monomial product(const Monomial& a, const Monomial& b)
{
    detail::check_ring(a, b);
    std::vector<Monomial::Exponent> out(a.exponents().begin(), a.exponents().end());
    auto eb = b.exponents();
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = static_cast<Monomial::Exponent>(out[k] + eb[k]);
    return Monomial(a.ring(), std::move(out));
}

/**
 * Parse juxtaposed variable names with optional `^k`, e.g. "ab", "x^2y",
 * "y_{12}y_{134}^2". Names are matched greedily (longest declared name
 * first). "1" denotes the unit monomial; '*' and whitespace are ignored.
 */
inline Monomial parse_monomial(std::string_view text, const VariableSetPtr& ring)
{
    std::vector<Monomial::Exponent> exps(ring->size(), 0);
    std::size_t longest = 0;
    for (const auto& n : ring->names()) longest = std::max(longest, n.size());

    std::string_view rest = text;
    auto skip = [&] {
        while (!rest.empty() && (rest.front() == '*' || std::isspace(static_cast<unsigned char>(rest.front())))) {
            rest.remove_prefix(1);
        }
    };
    skip();
    if (rest == "1") {
        return Monomial(ring, std::move(exps));
    }
    while (!rest.empty()) {
        std::optional<std::size_t> hit;
        std::size_t hit_len = 0;
        for (std::size_t len = std::min(longest, rest.size()); len > 0; --len) {
            if (auto k = ring->index_of(rest.substr(0, len))) {
                hit = k;
                hit_len = len;
                break;
            }
        }
        if (!hit) {
            throw InputError("cannot parse monomial '" + std::string(text) + "' at '" + std::string(rest) + "'");
        }
        rest.remove_prefix(hit_len);
        unsigned power = 1;
        if (!rest.empty() && rest.front() == '^') {
            rest.remove_prefix(1);
            std::size_t digits = 0;
            while (digits < rest.size() && std::isdigit(static_cast<unsigned char>(rest[digits]))) ++digits;
            if (digits == 0) {
                throw InputError("missing exponent after '^' in '" + std::string(text) + "'");
            }
            power = static_cast<unsigned>(std::stoul(std::string(rest.substr(0, digits))));
            rest.remove_prefix(digits);
        }
        exps[*hit] = static_cast<Monomial::Exponent>(exps[*hit] + power);
        skip();
    }
    return Monomial(ring, std::move(exps));
}

inline std::string to_string(const Monomial& m)
{
    std::string out;
    auto e = m.exponents();
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        out += m.ring()->name(k);
        if (e[k] > 1) out += "^" + std::to_string(e[k]);
    }
    return out.empty() ? "1" : out;
}

class MonomialIdeal {
public:
    MonomialIdeal(VariableSetPtr ring, std::vector<Monomial> generators)
        : ring_(std::move(ring)), gens_(std::move(generators))
    {
        for (const auto& g : gens_) {
            if (!same_ring(g.ring(), ring_)) {
                throw StructuralError("generator is not over the ideal's variable set");
            }
        }
    }

    const VariableSetPtr& ring() const noexcept { return ring_; }
    const std::vector<Monomial>& generators() const noexcept { return gens_; }
    std::size_t size() const noexcept { return gens_.size(); }

    /// 1-based access, matching the index convention of divisibility relations.
    const Monomial& generator(std::size_t index) const
    {
        if (index < 1 || index > gens_.size()) {
            throw InputError("generator index " + std::to_string(index) + " outside 1.." +
                             std::to_string(gens_.size()));
        }
        return gens_[index - 1];
    }

    /// True iff no generator divides another (duplicates count as divisibility).
    bool is_minimal() const
    {
        for (std::size_t a = 0; a < gens_.size(); ++a) {
            for (std::size_t b = 0; b < gens_.size(); ++b) {
                if (a != b && divides(gens_[a], gens_[b])) return false;
            }
        }
        return true;
    }

    /// Drops duplicates and every generator divisible by another, keeping first-seen order.
    MonomialIdeal minimalize() const
    {
        std::vector<Monomial> kept;
        for (std::size_t a = 0; a < gens_.size(); ++a) {
            bool redundant = false;
            for (std::size_t b = 0; b < gens_.size() && !redundant; ++b) {
                if (a == b || !divides(gens_[b], gens_[a])) continue;
                // equal generators: keep the first occurrence only
                redundant = !(gens_[a] == gens_[b]) || b < a;
            }
            if (!redundant) kept.push_back(gens_[a]);
        }
        return MonomialIdeal(ring_, std::move(kept));
    }

    /// Generators m_i m_j for 1 <= i <= j <= q in lexicographic pair order.
    MonomialIdeal square() const
    {
        std::vector<Monomial> out;
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            for (std::size_t j = i; j < gens_.size(); ++j) out.push_back(product(gens_[i], gens_[j]));
        }
        return MonomialIdeal(ring_, std::move(out));
    }

private:
    VariableSetPtr ring_;
    std::vector<Monomial> gens_;
};

inline MonomialIdeal parse_ideal(std::vector<std::string> variables, const std::vector<std::string>& generators)
{
    auto ring = make_variables(std::move(variables));
    std::vector<Monomial> gens;
    gens.reserve(generators.size());
    for (const auto& g : generators) gens.push_back(parse_monomial(g, ring));
    return MonomialIdeal(ring, std::move(gens));
}

} // namespace lsq
