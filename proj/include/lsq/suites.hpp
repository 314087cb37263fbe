#pragma once

/**
 * Verification suites shared by the command-line tool and the test binaries.
 * Each check records what was expected and what was computed.
 */

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lsq/betti.hpp"
#include "lsq/complex.hpp"
#include "lsq/divrel.hpp"
#include "lsq/extremal.hpp"
#include "lsq/io.hpp"
#include "lsq/morse.hpp"
#include "lsq/random.hpp"

namespace lsq {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;

    bool passed() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
    }

    void add(std::string name, bool ok, std::string detail = {})
    {
        checks.push_back({std::move(name), ok, std::move(detail)});
    }

    /// One "PASS name  detail" line per check.
    std::string text() const
    {
        std::ostringstream out;
        for (const auto& c : checks) {
            out << (c.passed ? "PASS " : "FAIL ") << suite << "/" << c.name;
            if (!c.detail.empty()) out << "  " << c.detail;
            out << "\n";
        }
        return out.str();
    }

    json to_json() const
    {
        json j = document();
        j["suite"] = suite;
        j["passed"] = passed();
        j["checks"] = json::array();
        for (const auto& c : checks) j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        return j;
    }
};

template <class V>
std::string tuple_string(const V& v)
{
    std::string out = "(";
    for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
    return out + ")";
}

/// `v` padded with zeros (or truncated) to length n.
inline std::vector<std::size_t> padded(std::vector<std::size_t> v, std::size_t n)
{
    v.resize(n, 0);
    return v;
}

/// f-vector without f_0.
inline std::vector<std::size_t> f_tail(const SimplicialComplex& c)
{
    auto f = f_vector(c);
    return {f.begin() + 1, f.end()};
}

/// Critical cell counts of M_{q,delta} by cardinality 1, 2, ...
inline std::vector<std::size_t> critical_counts(unsigned q, unsigned s)
{
    auto counts = cardinality_counts(critical_closed_form_L2(q, s));
    return {counts.begin() + 1, counts.end()};
}

namespace detail {

inline void expect_vector(SuiteResult& r, std::string name, const std::vector<std::size_t>& got,
                          const std::vector<std::size_t>& want)
{
    bool ok = got == want;
    r.add(std::move(name), ok, "expected " + tuple_string(want) + ", got " + tuple_string(got));
}

/// Betti totals over both fields; a field disagreement is its own failed check.
inline void expect_betti(SuiteResult& r, const std::string& name, const MonomialIdeal& ideal,
                         const std::vector<std::size_t>& want)
{
    auto gf2 = padded(total_betti(ideal, Field::gf2), want.size());
    auto rat = padded(total_betti(ideal, Field::rational), want.size());
    expect_vector(r, name, gf2, want);
    r.add(name + " GF2 = QQ", gf2 == rat, "GF2 " + tuple_string(gf2) + ", QQ " + tuple_string(rat));
}

} // namespace detail

inline MonomialIdeal ideal_i1()
{
    return parse_ideal({"a", "b", "c", "d", "e", "f", "g"}, {"ab", "bcd", "aef", "cg"});
}

inline MonomialIdeal ideal_i2()
{
    return parse_ideal({"a", "b", "c", "d", "e", "f"}, {"ab", "bcd", "aef", "ce"});
}

/// {(1, {2,3}), (4, {2,3})}.
inline DivSet two_relations() { return {DivRel{1, IndexSet{2, 3}}, DivRel{4, IndexSet{2, 3}}}; }

inline SuiteResult suite_table1()
{
    SuiteResult r{"table1", {}};
    detail::expect_vector(r, "f(L2_4)", f_tail(l2(4)), {10, 27, 32, 19, 6, 1});
    detail::expect_vector(r, "critical cells of M_{4,delta}, s=3", padded(critical_counts(4, 3), 6),
                          {10, 21, 15, 3, 0, 0});
    return r;
}

/// f(L2_4) and the critical counts of M_{4,delta} as CSV, one column per cell dimension.
inline std::string table1_csv()
{
    auto f = f_tail(l2(4));
    auto c = padded(critical_counts(4, 3), f.size());
    std::ostringstream out;
    out << "complex";
    for (std::size_t i = 0; i < f.size(); ++i) out << "," << i;
    out << "\nL2_4";
    for (auto x : f) out << "," << x;
    out << "\nM_4_delta";
    for (auto x : c) out << "," << x;
    out << "\n";
    return out.str();
}

inline SuiteResult suite_examples()
{
    SuiteResult r{"examples", {}};
    detail::expect_betti(r, "I1^2", ideal_i1().square(), {10, 17, 9, 1});
    auto i2sq = ideal_i2().square().minimalize();
    r.add("I2^2 minimal generators", i2sq.size() == 9, "got " + std::to_string(i2sq.size()));
    detail::expect_betti(r, "I2^2", i2sq, {9, 14, 6, 0});
    detail::expect_betti(r, "E_{4,D'}^2", power_generators(4, two_relations(), 2), {10, 21, 14, 2});
    detail::expect_betti(r, "E_{4,D}^2", power_generators(4, single_relation(3), 2), {10, 21, 15, 3});
    detail::expect_betti(r, "E_{3,D}^2", power_generators(3, single_relation(3), 2), {6, 6, 1});
    detail::expect_betti(r, "E_3^2", power_generators(3, {}, 2), {6, 9, 4});
    detail::expect_betti(r, "I1", ideal_i1(), {4, 5, 2});
    detail::expect_betti(r, "I2", ideal_i2(), {4, 5, 2});
    return r;
}

/**
 * pd_formula against the largest critical cell for 3 <= s <= q <= qmax, and
 * against the Betti oracle for q in {3, 4}.
 */
inline SuiteResult suite_pd(unsigned qmax)
{
    SuiteResult r{"pd", {}};
    require_capacity(qmax <= 6, "qmax", qmax, 6);
    for (unsigned q = 3; q <= qmax; ++q) {
        for (unsigned s = 3; s <= q; ++s) {
            auto [pd1, pd2] = pd_formula(q, s);
            auto tag = "q=" + std::to_string(q) + " s=" + std::to_string(s);
            auto cells = critical_closed_form_L2(q, s);
            int top = -1;
            for (auto f : cells) top = std::max(top, f.dim());
            r.add("max critical dim " + tag, top == static_cast<int>(pd2),
                  "formula " + std::to_string(pd2) + ", cells " + std::to_string(top));
            auto gamma = prune_taylor_first_power(q, s).gamma;
            r.add("dim Gamma " + tag, gamma.dimension() == static_cast<int>(pd1),
                  "formula " + std::to_string(pd1) + ", Gamma " + std::to_string(gamma.dimension()));
            if (q <= 4) {
                auto e1 = projective_dimension(power_generators(q, single_relation(s), 1));
                auto e2 = projective_dimension(power_generators(q, single_relation(s), 2));
                r.add("pd E_{q,D} " + tag, e1 == pd1, "formula " + std::to_string(pd1) + ", oracle " + std::to_string(e1));
                r.add("pd E_{q,D}^2 " + tag, e2 == pd2,
                      "formula " + std::to_string(pd2) + ", oracle " + std::to_string(e2));
            }
        }
    }
    return r;
}

inline SuiteResult suite_characterization(unsigned qmax)
{
    SuiteResult r{"characterization", {}};
    require_capacity(qmax <= 6, "qmax", qmax, 6);
    auto report = [&](const CharacterizationReport& rep, const std::string& tag) {
        r.add(tag, rep.passed(),
              std::to_string(rep.pairs_checked) + " pairs, " + std::to_string(rep.divisible_pairs) + " divisible, " +
                  std::to_string(rep.counterexample_count) + " counterexamples");
    };
    for (unsigned q = 1; q <= std::min(qmax, 4u); ++q) {
        report(verify_square_characterization(q, std::nullopt, CharacterizationScope::taylor),
               "D empty, Taylor, q=" + std::to_string(q));
    }
    for (unsigned q = 3; q <= std::min(qmax, 5u); ++q) {
        for (unsigned s = 3; s <= q; ++s) {
            auto tag = "q=" + std::to_string(q) + " s=" + std::to_string(s);
            if (q <= 4) report(verify_square_characterization(q, s, CharacterizationScope::taylor), "Taylor, " + tag);
        }
    }
    for (unsigned q = 3; q <= qmax; ++q) {
        for (unsigned s = 3; s <= q; ++s) {
            report(verify_square_characterization(q, s, CharacterizationScope::l2),
                   "L2, q=" + std::to_string(q) + " s=" + std::to_string(s));
        }
    }
    for (unsigned q = 3; q <= std::min(qmax, 5u); ++q) {
        for (unsigned s = 3; s <= q; ++s) {
            auto a = minimality_audit(q, s);
            r.add("minimal relations q=" + std::to_string(q) + " s=" + std::to_string(s), a.passed(),
                  std::to_string(a.brute_force.size()) + " minimal, " + std::to_string(a.filtered_4b.size()) +
                      " (4b) filtered, " + std::to_string(a.missing.size()) + " missing, " +
                      std::to_string(a.unexpected.size()) + " unexpected");
        }
    }
    if (qmax >= 5) {
        // the two filtered (4b) relations worked out by hand
        auto filtered = [](unsigned q, unsigned s, DivRel rel) {
            auto a = minimality_audit(q, s);
            bool in_filtered = std::any_of(a.filtered_4b.begin(), a.filtered_4b.end(),
                                           [&](const PredictedRelation& p) { return p.rel == rel; });
            bool in_minimal = std::find(a.brute_force.begin(), a.brute_force.end(), rel) != a.brute_force.end();
            return in_filtered && !in_minimal;
        };
        auto e = [](unsigned i, unsigned j) { return pair_index(5, i, j) + 1; };
        r.add("(4b) e12 | lcm(e23,e34,e45,e22) is not minimal, q=s=5",
              filtered(5, 5, DivRel{e(1, 2), IndexSet{e(2, 3), e(3, 4), e(4, 5), e(2, 2)}}));
        r.add("(4b) e15 | lcm(e25,e33,e44,e55) is not minimal, q=5 s=4",
              filtered(5, 4, DivRel{e(1, 5), IndexSet{e(2, 5), e(3, 3), e(4, 4), e(5, 5)}}));
    }
    return r;
}

/**
 * Random square-free ideals on q = 4 generators with m_1 | lcm(m_2, m_3):
 * the matching M_{4,delta} is homogeneous under the labels of I^2 and the
 * critical cell counts bound the Betti numbers of I^2.
 */
inline SuiteResult suite_random(std::uint64_t seed, unsigned trials, unsigned nvars = 6)
{
    SuiteResult r{"random", {}};
    const unsigned q = 4, s = 3;
    auto m = matching_L2(q, s);
    auto bound = critical_counts(q, s);
    auto first = prune_taylor_first_power(q, s);
    auto gamma_bound = f_tail(first.gamma);
    std::mt19937_64 rng(seed);
    unsigned inhomogeneous = 0, violations = 0, first_violations = 0;
    std::string first_bad;
    for (unsigned t = 0; t < trials; ++t) {
        auto ideal = random_ideal_with_relation(q, s, nvars, rng);
        auto sq = ideal.square();
        if (!is_homogeneous(m.matching, LabeledComplex(m.complex, sq))) ++inhomogeneous;
        if (!is_homogeneous(first.matching, LabeledComplex(taylor(q), ideal))) ++inhomogeneous;
        auto betti = total_betti(sq.minimalize());
        auto b1 = total_betti(ideal);
        bool ok = betti.size() <= bound.size();
        for (std::size_t i = 0; ok && i < betti.size(); ++i) ok = betti[i] <= bound[i];
        if (!ok) {
            ++violations;
            if (first_bad.empty()) first_bad = "trial " + std::to_string(t) + ": " + tuple_string(betti);
        }
        bool ok1 = b1.size() <= gamma_bound.size();
        for (std::size_t i = 0; ok1 && i < b1.size(); ++i) ok1 = b1[i] <= gamma_bound[i];
        if (!ok1) ++first_violations;
    }
    auto tag = std::to_string(trials) + " ideals, seed " + std::to_string(seed);
    r.add("homogeneous matchings", inhomogeneous == 0, tag + ", " + std::to_string(inhomogeneous) + " failures");
    r.add("beta(I^2) <= critical cells " + tuple_string(bound), violations == 0,
          tag + ", " + std::to_string(violations) + " violations" + (first_bad.empty() ? "" : ", first " + first_bad));
    r.add("beta(I) <= f(Gamma) " + tuple_string(gamma_bound), first_violations == 0,
          tag + ", " + std::to_string(first_violations) + " violations");
    return r;
}

} // namespace lsq
